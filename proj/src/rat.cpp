#include "wreal/rat.hpp"

#include <sstream>
#include <stdexcept>

namespace wreal {

std::string Rat::str() const {
    std::ostringstream os;
    os << q_.get_num();
    if (q_.get_den() != 1) os << "/" << q_.get_den();
    return os.str();
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int n, d;
        if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rat(n, d);
    }
    // decimal / scientific form, parsed exactly
    std::string t = s;
    bool neg = false;
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = (t[i++] == '-');
    std::string digits;
    long frac_places = 0, exp10 = 0;
    bool any = false, in_frac = false;
    for (; i < t.size(); ++i) {
        char c = t[i];
        if (c >= '0' && c <= '9') {
            digits += c;
            any = true;
            if (in_frac) ++frac_places;
        } else if (c == '.' && !in_frac) {
            in_frac = true;
        } else if ((c == 'e' || c == 'E') && any) {
            exp10 = std::stol(t.substr(i + 1));
            break;
        } else {
            throw std::invalid_argument("bad numeric literal: " + s);
        }
    }
    if (!any) throw std::invalid_argument("bad numeric literal: " + s);
    Int mant;
    mant.set_str(digits.empty() ? "0" : digits, 10);
    if (neg) mant = -mant;
    long p = exp10 - frac_places;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(p < 0 ? -p : p));
    return p >= 0 ? Rat(mant * scale) : Rat(mant, scale);
}

Int floor_int(const Rat& a) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return q;
}

Int ceil_int(const Rat& a) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return q;
}

Int height(const Rat& a) {
    Int n = ::abs(a.num());
    const Int d = a.den();
    return n > d ? n : d;
}

Int height(std::span<const Rat> v) {
    Int h = 1;
    for (const Rat& a : v) {
        Int ha = height(a);
        if (ha > h) h = ha;
    }
    return h;
}

Int round_num(const Rat& r, const Int& k) {
    if (k < 1) throw std::invalid_argument("round_num: k must be >= 1");
    // nearest integer to r*k; |n - r*k| <= 1/2 gives |n/k - r| <= 1/(2k) < 1/k
    Int num = r.num() * k;
    const Int& den = r.den();
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // rem in [0, den): compare 2*rem against den
    Int twice = rem * 2;
    if (twice > den) return q + 1;
    if (twice < den) return q;
    return mpz_even_p(q.get_mpz_t()) ? q : q + 1;  // tie: toward even
}

Rat sum_approx(const std::function<Rat(std::int64_t)>& g, std::int64_t y, const Int& k) {
    if (k < 1) throw std::invalid_argument("sum_approx: k must be >= 1");
    if (y < 0) return Rat(0);
    const Int denom = Int(y + 1) * k;
    Int acc = 0;
    for (std::int64_t i = 0; i <= y; ++i) acc += round_num(g(i), denom);
    return Rat(acc, denom);
}

Int pow10(unsigned p) {
    Int s;
    mpz_ui_pow_ui(s.get_mpz_t(), 10, p);
    return s;
}

DecimalRendering to_decimal(const Rat& r, const Rat& err, unsigned max_places) {
    if (!(err > Rat(0))) throw std::invalid_argument("to_decimal: err must be positive");
    unsigned places = 0;
    while (places < max_places && inv(pow10(places + 1)) >= err) ++places;

    DecimalRendering out;
    const Int scale = pow10(places);
    Int n = round_num(r * Rat(scale), Int(1));  // nearest integer to r*10^p
    out.shown = Rat(n, scale);
    if (n < 0) {
        out.negative = true;
        n = -n;
    }
    std::string digits = n.get_str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    out.int_digits = digits.substr(0, digits.size() - places);
    out.frac_digits = digits.substr(digits.size() - places);

    if (err > Rat(1)) {
        out.error_bound = Rat(ceil_int(err));  // coarse data: integer bar
    } else {
        out.error_bound = inv(scale);
    }
    return out;
}

std::string DecimalRendering::str() const {
    std::string s;
    if (negative) s += "-";
    s += int_digits;
    if (!frac_digits.empty()) s += "." + frac_digits;
    s += " ± ";
    if (error_bound.is_integer()) {
        s += error_bound.num().get_str();
    } else if (error_bound.num() == 1) {
        std::string ds = error_bound.den().get_str();
        bool pow_ten = ds[0] == '1' && ds.find_first_not_of('0', 1) == std::string::npos;
        if (pow_ten)
            s += "0." + std::string(ds.size() - 2, '0') + "1";
        else
            s += error_bound.str();
    } else {
        s += error_bound.str();
    }
    return s;
}

}  // namespace wreal
