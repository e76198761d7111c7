#ifndef HEATSYM_RATIONAL_HPP
#define HEATSYM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "heatsym/errors.hpp"

namespace heatsym {

/// Exact rational scalar.  GMP keeps values in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) fail(ErrorKind::domain, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "num", "num/den" or "-num/den".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) fail(ErrorKind::validation, "empty rational literal");
    try {
        Rational q(s);
        if (q.get_den() == 0) fail(ErrorKind::validation, "zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::validation, "malformed rational literal '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return rat(1);
    if (e < 0) {
        if (base == 0) fail(ErrorKind::domain, "inverse of zero rational");
        return pow_int(rat(1) / base, -e);
    }
    Rational out = rat(1), b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

inline Rational factorial(long k) {
    Rational out = rat(1);
    for (long i = 2; i <= k; ++i) out *= rat(i);
    return out;
}

/// (k-1)!! with the conventions (-1)!! = 1!! = 1.
inline Rational double_factorial(long k) {
    Rational out = rat(1);
    for (long i = k; i >= 2; i -= 2) out *= rat(i);
    return out;
}

/// Exact square root; fails unless numerator and denominator are perfect squares.
inline Rational sqrt_exact(const Rational& q) {
    if (q < 0) fail(ErrorKind::domain, "square root of negative rational");
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        fail(ErrorKind::domain, "rational " + q.get_str() + " is not a perfect square");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational out(rn, rd);
    out.canonicalize();
    return out;
}

} // namespace heatsym

#endif
