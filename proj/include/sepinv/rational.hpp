#ifndef SEPINV_RATIONAL_HPP
#define SEPINV_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sepinv {

/// Exact arbitrary-precision arithmetic. Rational values are kept canonical
/// (lowest terms, positive denominator, zero stored as 0/1) by every
/// constructor-like helper below; gmp arithmetic preserves canonical form.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// (a)!/(b)! = a·(a−1)···(b+1) for a >= b >= 0.
inline Integer falling_factorial_quotient(long a, long b) {
    if (a < 0 || b < 0 || a < b)
        throw std::invalid_argument("falling_factorial_quotient: need a >= b >= 0");
    Integer r = 1;
    for (long v = a; v > b; --v) r *= v;
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Canonical wire format: "<numerator>/<denominator>", denominator always
/// present and positive.
inline std::string format_rational(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p" and "p/q" with optional leading minus; rejects anything else.
inline Rational parse_rational(const std::string& s) {
    const auto bad = [&] { return std::invalid_argument("parse_rational: malformed '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t pos = 0;
    if (s[pos] == '-' || s[pos] == '+') ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
    if (digits == 0) throw bad();
    Integer num(s.substr(0, pos));
    Integer den = 1;
    if (pos < s.size()) {
        if (s[pos] != '/') throw bad();
        ++pos;
        std::size_t dstart = pos, ddigits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++ddigits;
        if (ddigits == 0 || pos != s.size()) throw bad();
        den = Integer(s.substr(dstart));
    }
    return make_rational(num, den);
}

}  // namespace sepinv

#endif  // SEPINV_RATIONAL_HPP
