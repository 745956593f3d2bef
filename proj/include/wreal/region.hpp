#pragma once

#include "wreal/creal.hpp"
#include "wreal/rat.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace wreal {

class CFunc;

/// Three-valued membership with margin at truncation level e:
///   in_core  => a lies in O_e,
///   out      => a lies outside O_alpha(e) (in fact |a| > e or margin < 1/(4e)),
///   in_hull  => the zone between; A_e := {a : result != out} satisfies
///               O_e cap Q^N  subset  A_e  subset  O_alpha(e).
enum class Member { in_core, in_hull, out };

/// The decidable rational skeleton A_e of an open set, with its alpha.
struct ApproximableSet {
    int dim = 1;
    std::function<bool(const RatVec& a, const Int& e)> member;
    std::function<Int(const Int& e)> alpha;
};

/// Effort-bounded search placing a point inside some truncation; sound,
/// not complete.
struct Locator {
    std::function<std::optional<Int>(const CRealVec& x, int effort)> find;
};

/// Open-set descriptor. Immutable, cheap to copy.
/// Truncations: O|e = {x in O : |x| <= e} (max norm),
///              O_e  = {x in O|e : dist(x, complement) >= 1/e}.
class Region {
public:
    Region() = default;

    static Region full(int dim);
    /// 1-D open interval; either endpoint may be absent (unbounded).
    static Region interval(std::optional<CReal> lo, std::optional<CReal> hi);
    static Region box(std::vector<std::pair<std::optional<CReal>, std::optional<CReal>>> coords);
    /// {x : x_i > t} (greater=true) or {x : x_i < t}.
    static Region half_space(int dim, int coord, bool greater, CReal threshold);
    /// C minus the closed ray (-inf, 0], as R^2.
    static Region slit_plane();
    /// Euclidean disc in R^2.
    static Region disc(CRealVec center, CReal radius);
    /// {r_in < |x - c| < r_out}, Euclidean for dim 2, absolute value for
    /// dim 1; r_in may be zero/absent (punctured/full), r_out absent = unbounded.
    static Region annulus(int dim, CRealVec center, std::optional<CReal> r_in,
                          std::optional<CReal> r_out);
    /// {(x,y) : x in base, lower(x) < y < upper(x)}; absent side = unbounded.
    static Region cell_over(Region base, std::shared_ptr<const CFunc> lower,
                            std::shared_ptr<const CFunc> upper);
    static Region intersect(std::vector<Region> parts);
    static Region product(std::vector<Region> factors);

    int dim() const;
    bool valid() const { return node_ != nullptr; }

    Member member_margin(const RatVec& a, const Int& e) const;
    Int alpha(const Int& e) const;
    ApproximableSet approx_set() const;

    /// Probes e = 1, 2, 4, ... testing approx(x, 4e) with margin; a result
    /// Found(e*) guarantees x in O_{e*}.
    std::optional<Int> locate(const CRealVec& x, int effort = kDefaultEffort) const;
    Locator locator() const;

    /// Rational box enclosing A_e, for grid enumeration. Already clamped
    /// to [-e, e] per coordinate.
    std::vector<std::pair<Rat, Rat>> hull_bounds(const Int& e) const;

    struct Node;
    explicit Region(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    const Node& node() const { return *node_; }

private:
    std::shared_ptr<const Node> node_;
};

/// Union carrying its glue data: (A cup B)_e subset A_{u(e)} cup B_{u(e)}.
Region region_union(Region a, Region b, std::function<Int(const Int&)> glue_u);

}  // namespace wreal
