// Test-only reference oracle: interval evaluation of the classical
// functions through MPFR with directed rounding, converted back to exact
// rationals. Independent of the library's computation paths (which never
// use floating point).
#pragma once

#include <mpfr.h>

#include "wreal/rat.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace oracle {

using wreal::Int;
using wreal::Rat;

struct Interval {
    Rat lo, hi;
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) * Rat(1, 2); }
};

using Unary = int (*)(mpfr_t, const mpfr_t, mpfr_rnd_t);

inline Rat to_rat(const mpfr_t x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rat r{mpq_class(q)};
    mpq_clear(q);
    return r;
}

inline Interval apply(Unary fn, const Rat& x, int prec = 320) {
    mpfr_t in, lo, hi;
    mpfr_inits2(prec, in, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(in, x.raw().get_mpq_t(), MPFR_RNDN);
    if (mpfr_cmp_q(in, x.raw().get_mpq_t()) != 0) {
        // input didn't fit exactly; widen via two-sided input rounding
        mpfr_t in2;
        mpfr_init2(in2, prec);
        mpfr_set_q(in, x.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(in2, x.raw().get_mpq_t(), MPFR_RNDU);
        mpfr_t a, b;
        mpfr_inits2(prec, a, b, static_cast<mpfr_ptr>(nullptr));
        fn(a, in, MPFR_RNDD);
        fn(b, in2, MPFR_RNDD);
        mpfr_min(lo, a, b, MPFR_RNDD);
        fn(a, in, MPFR_RNDU);
        fn(b, in2, MPFR_RNDU);
        mpfr_max(hi, a, b, MPFR_RNDU);
        Interval out{to_rat(lo), to_rat(hi)};
        mpfr_clears(in, in2, a, b, lo, hi, static_cast<mpfr_ptr>(nullptr));
        return out;
    }
    fn(lo, in, MPFR_RNDD);
    fn(hi, in, MPFR_RNDU);
    Interval out{to_rat(lo), to_rat(hi)};
    mpfr_clears(in, lo, hi, static_cast<mpfr_ptr>(nullptr));
    return out;
}

inline Interval atan(const Rat& x) { return apply(mpfr_atan, x); }
inline Interval asin(const Rat& x) { return apply(mpfr_asin, x); }
inline Interval log(const Rat& x) { return apply(mpfr_log, x); }
inline Interval exp(const Rat& x) { return apply(mpfr_exp, x); }
inline Interval sin(const Rat& x) { return apply(mpfr_sin, x); }
inline Interval cos(const Rat& x) { return apply(mpfr_cos, x); }
inline Interval sqrt(const Rat& x) { return apply(mpfr_sqrt, x); }
inline Interval gamma(const Rat& x) { return apply(mpfr_gamma, x); }
inline Interval zeta(const Rat& x) { return apply(mpfr_zeta, x); }
inline Interval cbrt(const Rat& x) { return apply(mpfr_cbrt, x); }

inline Interval pi(int prec = 320) {
    mpfr_t lo, hi;
    mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_const_pi(hi, MPFR_RNDU);
    Interval out{to_rat(lo), to_rat(hi)};
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    return out;
}

/// |candidate - f(x)| < tol, certified through the bracket.
inline bool within(const Interval& iv, const Rat& candidate, const Rat& tol) {
    return wreal::abs(candidate - iv.lo) < tol && wreal::abs(candidate - iv.hi) < tol;
}

}  // namespace oracle
