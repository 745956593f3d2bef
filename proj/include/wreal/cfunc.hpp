#pragma once

#include "wreal/cost.hpp"
#include "wreal/creal.hpp"
#include "wreal/rat.hpp"
#include "wreal/region.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace wreal {

/// |F(x)| <= beta(e) for x in O_e (or O|e when uniform).
struct BoundWitness {
    std::function<Rat(const Int& e)> beta;
    bool uniform = false;
};

/// F(O_e) subset target_{gamma(e)}.
struct CompactnessWitness {
    std::function<Int(const Int& e)> gamma;
    Region target;
};

/// (U cup V)_e subset U_{u(e)} cup V_{u(e)}.
struct GlueWitness {
    std::function<Int(const Int& e)> u;
};

/// A witnessed function on an open region: modulus d and approximant f with
///   x in O_e (O|e when uniform), |x - a| < 1/d(e)  =>  |F(x) - f(a,e)| < 1/e.
/// When compact_domain is set the contract ranges over all x in the
/// (compact) domain with no truncation.
class CFunc {
public:
    using DFn = std::function<Int(const Int& e)>;
    using FFn = std::function<RatVec(const RatVec& a, const Int& e)>;

    CFunc() = default;
    CFunc(Region domain, int cod_dim, DFn d, FFn f, bool uniform);

    const Region& domain() const { return impl_->domain; }
    int dom_dim() const { return impl_->dom_dim; }
    int cod_dim() const { return impl_->cod_dim; }
    bool uniform() const { return impl_->uniform; }
    bool compact_domain() const { return impl_->compact_domain; }

    Int d(const Int& e) const { return impl_->d(e); }
    RatVec f(const RatVec& a, const Int& e) const { return impl_->f(a, e); }
    /// Scalar convenience for cod_dim == 1.
    Rat f1(const RatVec& a, const Int& e) const { return impl_->f(a, e).at(0); }

    const std::optional<BoundWitness>& beta() const { return impl_->beta; }
    const std::optional<CompactnessWitness>& gamma() const { return impl_->gamma; }

    CFunc with_beta(BoundWitness b) const;
    CFunc with_gamma(CompactnessWitness g) const;
    CFunc with_compact_domain() const;
    /// Same witness on a subregion (sound: sub subset O gives sub_e subset O_e).
    CFunc restricted(Region sub) const;

private:
    struct Impl {
        Region domain;
        int dom_dim = 0, cod_dim = 1;
        DFn d;
        FFn f;
        bool uniform = false;
        bool compact_domain = false;
        std::optional<BoundWitness> beta;
        std::optional<CompactnessWitness> gamma;
    };
    std::shared_ptr<const Impl> impl_;
    explicit CFunc(std::shared_ptr<Impl> i) : impl_(std::move(i)) {}
    std::shared_ptr<Impl> clone() const { return std::make_shared<Impl>(*impl_); }
};

/// Lemma-3.4 evaluation: locate x, take e = max(k, e_located), feed
/// approx(x, d(e)) to the approximant. Each component of the result is a
/// valid CReal witness.
CRealVec eval_at(const CFunc& F, const CRealVec& x, const Int& k_hint = 1,
                 int effort = kDefaultEffort);
/// Scalar convenience.
CReal eval_at1(const CFunc& F, const CReal& x, int effort = kDefaultEffort);

/// The guaranteed uniform-continuity pair on O_e: |x-x'| < 2/d(e) implies
/// |F(x)-F(x')| < 2/e.
std::pair<Rat, Rat> modulus(const CFunc& F, const Int& e);

/// Upper bound for the oscillation of scalar F over any max-norm ball of
/// radius r whose points all lie in O_m: splitting the segment into
/// ceil(r*d(q)/2) steps of length < 2/d(q) gives osc <= (r*d(q) + 2)/q;
/// minimized over a doubling schedule of q >= m.
Rat osc_bound(const CFunc& F, const Rat& r, const Int& m);

enum class ComposeMode { uniform_outer, compact_inner };

/// Composite G . F per the composition lemma: UniformOuter needs G uniform
/// and a bound witness on F (clamped so beta(e) >= e); CompactInner needs a
/// compactness witness on F with target inside G's domain.
///   d(e) = d_F(d_G(m(e))),  f(a,e) = g(f_F(a, d_G(m(e))), m(e)),
/// with m = beta (resp. gamma). The composite's domain is F's (caller
/// asserts F maps it into G's domain).
CFunc compose(const CFunc& F, const CFunc& G, ComposeMode mode);

/// Glue two witnesses for the same function on U cup V (Remark-style union
/// witness; the combined modulus is derived, see the proof in cfunc.cpp).
CFunc glue(const CFunc& FU, const CFunc& FV, const GlueWitness& u,
           const ApproximableSet& AU, const ApproximableSet& AV);

/// Bound witness by grid enumeration: beta(e) = 1 + max |f(a,e)| over the
/// truncated-zone grid a in (1/D)Z^N, D = max(d(e), 4e), |a| <= e, margin
/// hull accepted. Lazy per e, memoized; dom_dim <= 3; grid cost-guarded.
BoundWitness derive_bound(const CFunc& F, const Int& e_max);

// --- primitive catalog (hand-derived witnesses; proofs in cfunc.cpp) ---
namespace prim {

CFunc constant(const CReal& value, int dom_dim);        // uniform, d(e)=e+1
CFunc constant_vec(const CRealVec& value, int dom_dim);
CFunc coordinate(int dom_dim, int i);                   // uniform, d(e)=2e
CFunc add();                                            // R^2, uniform, d(e)=2e
CFunc sub();                                            // R^2, uniform, d(e)=2e
CFunc neg(int dim = 1);                                 // uniform, d(e)=2e
CFunc min2();                                           // R^2, uniform, d(e)=2e
CFunc max2();                                           // R^2, uniform, d(e)=2e
CFunc abs1();                                           // R,  uniform, d(e)=2e
CFunc mul();                                            // R^2, d(e)=2e(e+2)
CFunc div_xy();                                         // R x (R\{0}), d(e)=8e^4
CFunc recip_pos();                                      // (0,inf), d(e)=4e^3, gamma(e)=e
CFunc sqrt_pos();                                       // (0,inf), d(e)=e*ceil(sqrt e)
CFunc ipow(unsigned n);                                 // R, d(e)=2en(e+1)^(n-1)
CFunc poly(const CRealVec& coeffs);                     // R, see cfunc.cpp
/// Complex (R^2-identified) multiplication, d(e) = 4e(e+2).
CFunc cmul();

}  // namespace prim

}  // namespace wreal
