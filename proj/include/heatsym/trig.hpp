#ifndef HEATSYM_TRIG_HPP
#define HEATSYM_TRIG_HPP

#include <map>
#include <vector>

#include "heatsym/ext_scalar.hpp"

namespace heatsym {

/// Finite Fourier sum on the torus T^d = (R/2pi Z)^d: a map from
/// frequency vectors m to exact coefficients of e_m = exp(i m.theta).
/// Products convolve, d e_m = i m_j e_m dtheta^j, and integration picks
/// (2 pi)^d times the zero-frequency coefficient.
class TrigPoly {
public:
    TrigPoly() : d_(0) {}
    explicit TrigPoly(int d) : d_(d) {}
    static TrigPoly exponential(int d, const std::vector<int>& freq,
                                const ExtScalar& coeff = ExtScalar::integer(1));
    static TrigPoly constant(int d, const ExtScalar& v);

    int torus_dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, ExtScalar>& terms() const { return terms_; }

    void add_term(const std::vector<int>& freq, const ExtScalar& coeff);

    TrigPoly operator-() const;
    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    TrigPoly scaled(const ExtScalar& v) const;
    /// Complex conjugate (coefficients conjugate, frequencies negate).
    TrigPoly conj() const;
    /// d/dtheta_j, multiplying e_m by i m_j (0-based index).
    TrigPoly derivative(int j) const;

    ExtScalar zero_frequency() const;
    /// Integral over T^d: (2 pi)^d times the zero-frequency coefficient.
    ExtScalar integral() const;

    friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

private:
    int d_;
    std::map<std::vector<int>, ExtScalar> terms_;
};

/// q x q matrix of trig polynomials (idempotents, unitaries).
class TrigMatrix {
public:
    TrigMatrix() : d_(0), q_(0) {}
    TrigMatrix(int d, int q) : d_(d), q_(q), a_(static_cast<size_t>(q) * q, TrigPoly(d)) {}
    static TrigMatrix identity(int d, int q);
    /// 1x1 winding unitary e_w on the circle.
    static TrigMatrix winding(int w);

    int torus_dim() const { return d_; }
    int rank() const { return q_; }
    TrigPoly& at(int i, int j) { return a_[static_cast<size_t>(i) * q_ + j]; }
    const TrigPoly& at(int i, int j) const { return a_[static_cast<size_t>(i) * q_ + j]; }

    TrigMatrix operator-() const;
    TrigMatrix& operator+=(const TrigMatrix& o);
    friend TrigMatrix operator+(TrigMatrix a, const TrigMatrix& b) { return a += b; }
    friend TrigMatrix operator-(TrigMatrix a, const TrigMatrix& b);
    friend TrigMatrix operator*(const TrigMatrix& a, const TrigMatrix& b);
    TrigMatrix scaled(const ExtScalar& v) const;
    TrigMatrix adjoint() const;
    TrigMatrix derivative(int j) const;
    TrigPoly trace() const;

    bool is_identity() const;
    bool is_idempotent() const;   // e^2 = e
    bool is_selfadjoint() const;  // e = e*
    bool is_unitary() const;      // U U* = U* U = 1

    /// Block direct sum.
    friend TrigMatrix direct_sum(const TrigMatrix& a, const TrigMatrix& b);
    friend bool operator==(const TrigMatrix& a, const TrigMatrix& b) {
        return a.d_ == b.d_ && a.q_ == b.q_ && a.a_ == b.a_;
    }

private:
    int d_, q_;
    std::vector<TrigPoly> a_;
};

} // namespace heatsym

#endif
