#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wreal {

using Int = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Canonical zero is 0/1. All arithmetic stays canonical
/// (GMP mpq invariant); constructors normalize.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(const Int& n) : q_(n) {}
    // disambiguates GMP integer expression templates (e.g. Rat(2 * k))
    template <class U>
    Rat(const __gmp_expr<mpz_t, U>& e) : q_(Int(e)) {}
    Rat(const Int& num, const Int& den) : q_(num, den) { q_.canonicalize(); }
    Rat(long num, long den) : q_(num, den) { q_.canonicalize(); }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat operator-() const { return Rat::wrap(-q_); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { q_ /= o.q_; return *this; }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    std::string str() const;      // "p/q", or "p" when integral
    double to_double() const { return q_.get_d(); }

    // Exact parse of "p/q", "-3", "2.75", "1e-3". Throws std::invalid_argument.
    static Rat parse(const std::string& s);

private:
    static Rat wrap(mpq_class q) { Rat r; r.q_ = std::move(q); return r; }
    mpq_class q_;
};

using RatVec = std::vector<Rat>;

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Reciprocal of a positive integer, 1/k.
inline Rat inv(const Int& k) { return Rat(1, k); }

Int floor_int(const Rat& a);
Int ceil_int(const Rat& a);

/// Smallest n with n >= a, as a plain Int; a must be finite (always is).
inline Int ceil_pos(const Rat& a) { Int c = ceil_int(a); return c < 1 ? Int(1) : c; }

/// h(a) = max(|num|, den) for a in lowest terms; >= 1 always.
Int height(const Rat& a);
Int height(std::span<const Rat> v);

/// Integer n with |n/k - r| < 1/k (in fact <= 1/(2k)): nearest integer to
/// r*k, ties to even. Requires k >= 1.
Int round_num(const Rat& r, const Int& k);

/// Sum of g(0..y) rounded onto denominator (y+1)*k; result within 1/k of
/// the exact sum and its denominator divides (y+1)*k. Exact integer
/// accumulation of the rounded terms; no intermediate blowup.
Rat sum_approx(const std::function<Rat(std::int64_t)>& g, std::int64_t y, const Int& k);

/// Decimal rendering of a rational with an explicit error bar. Shows only
/// digits the error bound justifies: |value_shown - target| <= error_bound.
struct DecimalRendering {
    bool negative = false;
    std::string int_digits = "0";
    std::string frac_digits;     // exactly `places` digits, possibly empty
    Rat shown;                   // the rational actually displayed
    Rat error_bound;             // >= the err passed in
    std::string str() const;     // "3.14 ± 0.01"
};

/// err > 0 required. Picks the largest p <= max_places with 10^-p >= err,
/// rounds the target to p fractional digits (ties to even) and reports
/// error_bound 10^-p (or ceil of err when err > 1).
DecimalRendering to_decimal(const Rat& r, const Rat& err, unsigned max_places);

Int pow10(unsigned p);

}  // namespace wreal
