#ifndef HEATSYM_SPHERE_HPP
#define HEATSYM_SPHERE_HPP

#include <array>
#include <map>
#include <vector>

#include "heatsym/ext_scalar.hpp"

namespace heatsym {

/// Polynomial in the ambient coordinates (x1, x2, x3) reduced modulo
/// x1^2 + x2^2 + x3^2 = 1: canonical monomials carry x3-exponent 0 or 1.
class SpherePoly {
public:
    SpherePoly() = default;
    static SpherePoly constant(const ExtScalar& v);
    static SpherePoly coordinate(int i); // 0-based

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::array<int, 3>, ExtScalar>& terms() const { return terms_; }

    /// Adds a monomial (reducing x3-powers through the sphere relation).
    void add_term(std::array<int, 3> expo, const ExtScalar& coeff);

    SpherePoly operator-() const;
    SpherePoly& operator+=(const SpherePoly& o);
    SpherePoly& operator-=(const SpherePoly& o);
    friend SpherePoly operator+(SpherePoly a, const SpherePoly& b) { return a += b; }
    friend SpherePoly operator-(SpherePoly a, const SpherePoly& b) { return a -= b; }
    friend SpherePoly operator*(const SpherePoly& a, const SpherePoly& b);
    SpherePoly scaled(const ExtScalar& v) const;
    SpherePoly conj() const;
    /// Ambient partial derivative of the canonical representative; its
    /// restriction to the sphere is gauge independent.
    SpherePoly derivative(int i) const;

    /// Exact integral over the unit sphere:
    /// int x^2p y^2q z^2r dA = 4 pi (2p-1)!!(2q-1)!!(2r-1)!!/(2p+2q+2r+1)!!.
    ExtScalar integral() const;

    friend bool operator==(const SpherePoly& a, const SpherePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SpherePoly& a, const SpherePoly& b) { return !(a == b); }

private:
    std::map<std::array<int, 3>, ExtScalar> terms_;
};

class SphereMatrix {
public:
    SphereMatrix() : q_(0) {}
    explicit SphereMatrix(int q) : q_(q), a_(static_cast<size_t>(q) * q) {}
    static SphereMatrix identity(int q);
    /// Bott idempotent e = (1 + x.sigma)/2 on the unit sphere.
    static SphereMatrix bott_idempotent();

    int rank() const { return q_; }
    SpherePoly& at(int i, int j) { return a_[static_cast<size_t>(i) * q_ + j]; }
    const SpherePoly& at(int i, int j) const { return a_[static_cast<size_t>(i) * q_ + j]; }

    friend SphereMatrix operator*(const SphereMatrix& a, const SphereMatrix& b);
    friend SphereMatrix operator-(const SphereMatrix& a, const SphereMatrix& b);
    SphereMatrix adjoint() const;
    SphereMatrix derivative(int i) const;
    SpherePoly trace() const;
    bool is_zero() const;
    bool is_idempotent() const;
    bool is_selfadjoint() const;
    friend SphereMatrix direct_sum(const SphereMatrix& a, const SphereMatrix& b);

private:
    int q_;
    std::vector<SpherePoly> a_;
};

/// Integral over S^2 of the 2-form w23 dx2^dx3 + w13 dx1^dx3 + w12 dx1^dx2
/// via the outward flux <(w23, -w13, w12), x>.
ExtScalar sphere_two_form_integral(const SpherePoly& w23, const SpherePoly& w13,
                                   const SpherePoly& w12);

} // namespace heatsym

#endif
