#include "wreal/creal.hpp"

namespace wreal {

CReal::CReal(const Rat& q) : st_(std::make_shared<State>(ApproxFn{})) {
    st_->exact = true;
    st_->exact_val = q;
}

Rat CReal::approx(const Int& k) const {
    if (k < 1) throw std::invalid_argument("CReal::approx: k must be >= 1");
    State& st = *st_;
    if (st.exact) return st.exact_val;
    {
        std::lock_guard<std::mutex> lk(st.mu);
        if (st.best_k >= k) return st.best_val;
    }
    Rat v = st.fn(k);  // computed outside the lock; reentrant
    std::lock_guard<std::mutex> lk(st.mu);
    if (k > st.best_k) {
        st.best_k = k;
        st.best_val = v;
        return v;
    }
    return st.best_val;  // someone cached better meanwhile; still a witness
}

RatVec approx_vec(const CRealVec& v, const Int& k) {
    RatVec out;
    out.reserve(v.size());
    for (const CReal& x : v) out.push_back(x.approx(k));
    return out;
}

CReal operator+(const CReal& x, const CReal& y) {
    if (x.exact() && y.exact()) return CReal(*x.exact() + *y.exact());
    return CReal([x, y](const Int& k) { Int k2 = 2 * k; return x.approx(k2) + y.approx(k2); });
}

CReal operator-(const CReal& x) {
    if (x.exact()) return CReal(-*x.exact());
    return CReal([x](const Int& k) { return -x.approx(k); });
}

CReal operator-(const CReal& x, const CReal& y) { return x + (-y); }

Int magnitude_bound(const CReal& x) {
    return ceil_int(abs(x.approx(Int(1)))) + 1;
}

CReal operator*(const CReal& x, const CReal& y) {
    if (x.exact()) return mul_rat(y, *x.exact());
    if (y.exact()) return mul_rat(x, *y.exact());
    return CReal([x, y](const Int& k) {
        // |xy - ab| <= |x||y-b| + |b||x-a| <= (Bx + By + 1)/k' <= 3m/(4km) < 1/k
        Int m = std::max(std::max(magnitude_bound(x), magnitude_bound(y)), Int(1));
        Int kp = 4 * k * m;
        return x.approx(kp) * y.approx(kp);
    });
}

CReal mul_rat(const CReal& x, const Rat& q) {
    if (q.is_zero()) return CReal(Rat(0));
    if (x.exact()) return CReal(*x.exact() * q);
    return CReal([x, q](const Int& k) {
        Int kp = k * ceil_pos(abs(q));
        return x.approx(kp) * q;
    });
}

CReal add_rat(const CReal& x, const Rat& q) {
    if (x.exact()) return CReal(*x.exact() + q);
    return CReal([x, q](const Int& k) { return x.approx(k) + q; });
}

CReal abs(const CReal& x) {
    if (x.exact()) return CReal(abs(*x.exact()));
    return CReal([x](const Int& k) { return abs(x.approx(k)); });
}

CReal min(const CReal& x, const CReal& y) {
    return CReal([x, y](const Int& k) { return min(x.approx(k), y.approx(k)); });
}

CReal max(const CReal& x, const CReal& y) {
    return CReal([x, y](const Int& k) { return max(x.approx(k), y.approx(k)); });
}

Rat apart_zero(const CReal& x, int effort) {
    if (const Rat* q = x.exact()) {
        if (q->is_zero()) fail(ErrKind::insufficient_effort, "apart_zero: value is exactly zero");
        return abs(*q);
    }
    Int k = 1;
    for (int j = 0; j <= effort; ++j, k *= 2) {
        Rat a = x.approx(k);
        Rat margin = Rat(2, k);
        if (abs(a) > margin) return abs(a) - inv(k);  // |x| > |a| - 1/k > 1/k
    }
    fail(ErrKind::insufficient_effort, "apart_zero: no separation from 0 within effort");
}

CReal recip(const CReal& x, int effort) {
    if (const Rat* q = x.exact()) {
        if (q->is_zero()) fail(ErrKind::domain, "recip of exact zero");
        return CReal(Rat(1) / *q);
    }
    return CReal([x, effort](const Int& k) {
        Rat lo = apart_zero(x, effort);  // 0 < lo <= |x|
        // |1/x - 1/a| = |x-a|/(|x||a|); k' >= 2/lo keeps |a| >= lo/2
        Int kp = ceil_pos(max(Rat(2) / lo, Rat(Int(4 * k)) / (lo * lo)));
        Rat a = x.approx(kp);
        return Rat(1) / a;
    });
}

CReal operator/(const CReal& x, const CReal& y) { return x * recip(y); }

CReal sqrt_creal(const CReal& x, int effort) {
    return CReal([x, effort](const Int& k) {
        Rat lo = apart_zero(x, effort);  // 0 < lo <= |x|; x < 0 is caught below
        // floor(sqrt(p*q))/q <= sqrt(p/q): a positive lower bound on sqrt(x)
        Rat sq_lo(sqrt(Int(lo.num() * lo.den())), lo.den());
        // |sqrt x - sqrt a| = |x-a|/(sqrt x + sqrt a) <= |x-a|/sq_lo <= 1/(4k)
        Int kp = ceil_pos(Rat(Int(4 * k)) / sq_lo);
        Rat a = x.approx(kp);
        if (a.sign() <= 0) fail(ErrKind::domain, "sqrt_creal: argument not positive");
        // floor sqrt at denominator K: v <= sqrt(a) < v + 1/K
        Int K = 4 * k;
        Int root = sqrt(Int(a.num() * a.den() * K * K));
        return Rat(root, a.den() * K);
    });
}

Cmp compare_apart(const CReal& x, const CReal& y, const Int& k) {
    if (k < 1) throw std::invalid_argument("compare_apart: k must be >= 1");
    Int k2 = 2 * k;
    Rat ax = x.approx(k2), ay = y.approx(k2);
    Rat margin = inv(k);
    if (ax - ay > margin) return Cmp::greater;
    if (ay - ax > margin) return Cmp::less;
    return Cmp::within;
}

DecimalRendering creal_to_decimal(const CReal& x, unsigned places) {
    Int k = 2 * pow10(places);
    Rat r = x.approx(k);
    return to_decimal(r, inv(k), places);
}

}  // namespace wreal
