#ifndef HEATSYM_EXT_SCALAR_HPP
#define HEATSYM_EXT_SCALAR_HPP

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

#include "heatsym/rational.hpp"

namespace heatsym {

/// Exact scalar in Q(z)*pi^{h/2}, where z = exp(i*pi/4) (so z^4 = -1).
/// The mantissa is stored on the basis (1, z, z^2, z^3); z^2 = i and
/// z - z^3 = sqrt(2), so the ring contains i, sqrt(2) and hence
/// sqrt(2i) = 1 + i.  The integer grade h attaches a formal factor
/// pi^{h/2}.  Sums are only defined between equal grades (zero is
/// grade-agnostic).
class ExtScalar {
public:
    ExtScalar() : c_{rat(0), rat(0), rat(0), rat(0)}, pi_half_(0) {}

    static ExtScalar rational(const Rational& r, int pi_half = 0);
    static ExtScalar integer(long v) { return rational(rat(v)); }
    /// z^k for any integer k.
    static ExtScalar zeta(int k);
    static ExtScalar i() { return zeta(2); }
    static ExtScalar sqrt2() { return zeta(1) - zeta(3); }
    static ExtScalar pi_pow(int half) { return rational(rat(1), half); }
    /// sqrt(2*i*pi) = (1+i)*sqrt(pi).
    static ExtScalar sqrt_two_i_pi();
    /// (2*i*pi)^{h/2}; exact for every integer h.
    static ExtScalar two_i_pi_half_pow(int h);
    static ExtScalar two_i_pi_pow(int k) { return two_i_pi_half_pow(2 * k); }
    /// (-2*i)^k.
    static ExtScalar minus_two_i_pow(int k);

    bool is_zero() const;
    bool is_rational() const;   // lies in Q (grade 0, mantissa in Q)
    bool is_integer() const;
    Rational rational_part() const; // requires is_rational()

    int pi_half() const { return pi_half_; }
    const std::array<Rational, 4>& coeffs() const { return c_; }

    ExtScalar operator-() const;
    ExtScalar& operator+=(const ExtScalar& o);
    ExtScalar& operator-=(const ExtScalar& o);
    ExtScalar& operator*=(const ExtScalar& o);
    friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
    friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
    friend ExtScalar operator*(ExtScalar a, const ExtScalar& b) { return a *= b; }
    friend bool operator==(const ExtScalar& a, const ExtScalar& b);
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

    ExtScalar inverse() const;
    ExtScalar pow(int k) const;
    /// Complex conjugation (z -> z^-1), pi grade unchanged.
    ExtScalar conj() const;

    std::complex<double> approx() const;
    std::string str() const;

private:
    ExtScalar(std::array<Rational, 4> c, int pi_half);
    void normalize();
    /// Galois map z -> z^k, k odd.
    ExtScalar galois(int k) const;

    std::array<Rational, 4> c_; // on (1, z, z^2, z^3)
    int pi_half_;
};

std::ostream& operator<<(std::ostream& os, const ExtScalar& s);

} // namespace heatsym

#endif
