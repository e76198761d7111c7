#include "heatsym/ext_scalar.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace heatsym {

ExtScalar::ExtScalar(std::array<Rational, 4> c, int pi_half)
    : c_(std::move(c)), pi_half_(pi_half) {
    normalize();
}

void ExtScalar::normalize() {
    if (is_zero()) pi_half_ = 0;
}

ExtScalar ExtScalar::rational(const Rational& r, int pi_half) {
    return ExtScalar({r, rat(0), rat(0), rat(0)}, pi_half);
}

ExtScalar ExtScalar::zeta(int k) {
    int m = ((k % 8) + 8) % 8;
    std::array<Rational, 4> c{rat(0), rat(0), rat(0), rat(0)};
    c[m % 4] = (m < 4) ? rat(1) : rat(-1);
    return ExtScalar(std::move(c), 0);
}

ExtScalar ExtScalar::sqrt_two_i_pi() {
    // (1+i) * pi^{1/2}
    return ExtScalar({rat(1), rat(0), rat(1), rat(0)}, 1);
}

ExtScalar ExtScalar::two_i_pi_half_pow(int h) {
    return sqrt_two_i_pi().pow(h);
}

ExtScalar ExtScalar::minus_two_i_pow(int k) {
    return (ExtScalar::integer(-2) * ExtScalar::i()).pow(k);
}

bool ExtScalar::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool ExtScalar::is_rational() const {
    return (pi_half_ == 0 || is_zero()) && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool ExtScalar::is_integer() const {
    return is_rational() && c_[0].get_den() == 1;
}

Rational ExtScalar::rational_part() const {
    if (!is_rational()) fail(ErrorKind::domain, "value " + str() + " is not rational");
    return c_[0];
}

ExtScalar ExtScalar::operator-() const {
    return ExtScalar({-c_[0], -c_[1], -c_[2], -c_[3]}, pi_half_);
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    if (pi_half_ != o.pi_half_)
        fail(ErrorKind::domain, "adding mixed pi grades " + std::to_string(pi_half_) +
                                     " and " + std::to_string(o.pi_half_));
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) { return *this += -o; }

ExtScalar& ExtScalar::operator*=(const ExtScalar& o) {
    std::array<Rational, 4> out{rat(0), rat(0), rat(0), rat(0)};
    for (int a = 0; a < 4; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (o.c_[b] == 0) continue;
            int s = a + b;
            if (s < 4)
                out[s] += c_[a] * o.c_[b];
            else
                out[s - 4] -= c_[a] * o.c_[b]; // z^4 = -1
        }
    }
    c_ = std::move(out);
    pi_half_ += o.pi_half_;
    normalize();
    return *this;
}

bool operator==(const ExtScalar& a, const ExtScalar& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.pi_half_ == b.pi_half_ && a.c_ == b.c_;
}

ExtScalar ExtScalar::galois(int k) const {
    std::array<Rational, 4> out{rat(0), rat(0), rat(0), rat(0)};
    out[0] = c_[0];
    for (int j = 1; j < 4; ++j) {
        int m = ((j * k) % 8 + 8) % 8;
        if (m < 4)
            out[m] += c_[j];
        else
            out[m - 4] -= c_[j];
    }
    return ExtScalar(std::move(out), pi_half_);
}

ExtScalar ExtScalar::conj() const { return galois(7); }

ExtScalar ExtScalar::inverse() const {
    if (is_zero()) fail(ErrorKind::domain, "inverse of zero");
    // x^-1 = s3(x) s5(x) s7(x) / N with N = x s3(x) s5(x) s7(x) in Q.
    ExtScalar mant = ExtScalar(c_, 0);
    ExtScalar p = mant.galois(3) * mant.galois(5) * mant.galois(7);
    ExtScalar norm = mant * p;
    if (!(norm.c_[1] == 0 && norm.c_[2] == 0 && norm.c_[3] == 0))
        fail(ErrorKind::internal, "field norm not rational");
    Rational n = norm.c_[0];
    std::array<Rational, 4> out;
    for (int k = 0; k < 4; ++k) out[k] = p.c_[k] / n;
    return ExtScalar(std::move(out), -pi_half_);
}

ExtScalar ExtScalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    ExtScalar out = ExtScalar::integer(1);
    ExtScalar b = *this;
    int e = k;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

std::complex<double> ExtScalar::approx() const {
    const double r2 = std::numbers::sqrt2 / 2.0;
    const std::complex<double> z(r2, r2);
    std::complex<double> v(to_double(c_[0]), 0.0);
    v += to_double(c_[1]) * z;
    v += std::complex<double>(0.0, to_double(c_[2]));
    v += to_double(c_[3]) * z * z * z;
    return v * std::pow(std::numbers::pi, pi_half_ / 2.0);
}

std::string ExtScalar::str() const {
    if (is_zero()) return "0";
    static const char* names[4] = {"", "z", "i", "z^3"};
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        Rational q = c_[k];
        if (first) {
            if (q < 0) { os << "-"; q = -q; }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        if (k == 0 || q != 1) {
            os << q.get_str();
            if (k != 0) os << "*";
        }
        if (k != 0) os << names[k];
        first = false;
    }
    if (pi_half_ != 0) {
        os << "*pi^";
        if (pi_half_ % 2 == 0)
            os << (pi_half_ / 2);
        else
            os << "(" << pi_half_ << "/2)";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& s) { return os << s.str(); }

} // namespace heatsym
