#pragma once

#include "wreal/error.hpp"
#include "wreal/rat.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <vector>

namespace wreal {

inline constexpr int kDefaultEffort = 48;  // doubling searches go up to 2^effort

/// A computable real: k |-> rational within 1/k, k >= 1, with a
/// monotonically improving (k, value) cache. Shareable across threads;
/// any cached witness serves all coarser requests.
class CReal {
public:
    using ApproxFn = std::function<Rat(const Int& k)>;

    CReal() : CReal(Rat(0)) {}
    explicit CReal(ApproxFn fn) : st_(std::make_shared<State>(std::move(fn))) {}
    explicit CReal(const Rat& q);
    CReal(long n) : CReal(Rat(n)) {}

    static CReal from_rat(const Rat& q) { return CReal(q); }

    /// |x - approx(k)| < 1/k. k >= 1 required.
    Rat approx(const Int& k) const;

    /// Exact rational payload when this real was built from one.
    const Rat* exact() const { return st_->exact ? &st_->exact_val : nullptr; }

private:
    struct State {
        explicit State(ApproxFn f) : fn(std::move(f)) {}
        ApproxFn fn;
        std::mutex mu;
        Int best_k{0};
        Rat best_val;
        bool exact = false;
        Rat exact_val;
    };
    std::shared_ptr<State> st_;
};

using CRealVec = std::vector<CReal>;

RatVec approx_vec(const CRealVec& v, const Int& k);

CReal operator+(const CReal& x, const CReal& y);
CReal operator-(const CReal& x, const CReal& y);
CReal operator-(const CReal& x);
CReal operator*(const CReal& x, const CReal& y);
CReal abs(const CReal& x);
CReal min(const CReal& x, const CReal& y);
CReal max(const CReal& x, const CReal& y);

/// Exact-scalar variants (error scales through the rational exactly).
CReal mul_rat(const CReal& x, const Rat& q);
CReal add_rat(const CReal& x, const Rat& q);

/// 1/x and x/y need x (resp. y) apart from zero; the apartness search is
/// effort-bounded and raises insufficient_effort past 2^effort.
CReal recip(const CReal& x, int effort = kDefaultEffort);
CReal operator/(const CReal& x, const CReal& y);
CReal sqrt_creal(const CReal& x, int effort = kDefaultEffort);

/// |x| <= result, cheap (one coarse approximation).
Int magnitude_bound(const CReal& x);

/// Certified lower bound 0 < result <= |x|, or insufficient_effort.
Rat apart_zero(const CReal& x, int effort = kDefaultEffort);

enum class Cmp { less, greater, within };

/// less => x < y; greater => x > y; within => |x - y| <= 2/k.
/// Compares approx(.,2k) with margin 1/k.
Cmp compare_apart(const CReal& x, const CReal& y, const Int& k);

/// approx at k = 2*10^places, rendered with error bound 10^-places
/// (which then also bounds the distance to the real itself).
DecimalRendering creal_to_decimal(const CReal& x, unsigned places);

}  // namespace wreal
