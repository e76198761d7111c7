#include "heatsym/sphere.hpp"

namespace heatsym {

SpherePoly SpherePoly::constant(const ExtScalar& v) {
    SpherePoly p;
    p.add_term({0, 0, 0}, v);
    return p;
}

SpherePoly SpherePoly::coordinate(int i) {
    SpherePoly p;
    std::array<int, 3> e{0, 0, 0};
    e[i] = 1;
    p.add_term(e, ExtScalar::integer(1));
    return p;
}

void SpherePoly::add_term(std::array<int, 3> expo, const ExtScalar& coeff) {
    if (coeff.is_zero()) return;
    if (expo[2] >= 2) {
        // x3^2 = 1 - x1^2 - x2^2
        std::array<int, 3> r = expo;
        r[2] -= 2;
        add_term(r, coeff);
        std::array<int, 3> r1 = r, r2 = r;
        r1[0] += 2;
        r2[1] += 2;
        add_term(r1, -coeff);
        add_term(r2, -coeff);
        return;
    }
    auto [it, inserted] = terms_.try_emplace(expo, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SpherePoly SpherePoly::operator-() const {
    SpherePoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

SpherePoly& SpherePoly::operator+=(const SpherePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SpherePoly& SpherePoly::operator-=(const SpherePoly& o) { return *this += -o; }

SpherePoly operator*(const SpherePoly& a, const SpherePoly& b) {
    SpherePoly p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            p.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return p;
}

SpherePoly SpherePoly::scaled(const ExtScalar& v) const {
    SpherePoly p;
    if (v.is_zero()) return p;
    for (const auto& [e, c] : terms_) p.add_term(e, c * v);
    return p;
}

SpherePoly SpherePoly::conj() const {
    SpherePoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c.conj());
    return p;
}

SpherePoly SpherePoly::derivative(int i) const {
    SpherePoly p;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        std::array<int, 3> r = e;
        r[i] -= 1;
        p.add_term(r, c * ExtScalar::integer(e[i]));
    }
    return p;
}

ExtScalar SpherePoly::integral() const {
    ExtScalar out;
    for (const auto& [e, c] : terms_) {
        if (e[0] % 2 || e[1] % 2 || e[2] % 2) continue;
        Rational moment = double_factorial(e[0] - 1) * double_factorial(e[1] - 1) *
                          double_factorial(e[2] - 1) /
                          double_factorial(e[0] + e[1] + e[2] + 1);
        out += c * ExtScalar::rational(rat(4) * moment, 2); // 4 pi * moment
    }
    return out;
}

SphereMatrix SphereMatrix::identity(int q) {
    SphereMatrix m(q);
    for (int i = 0; i < q; ++i) m.at(i, i) = SpherePoly::constant(ExtScalar::integer(1));
    return m;
}

SphereMatrix SphereMatrix::bott_idempotent() {
    SphereMatrix m(2);
    ExtScalar half = ExtScalar::rational(rat(1, 2));
    ExtScalar ihalf = half * ExtScalar::i();
    SpherePoly x = SpherePoly::coordinate(0), y = SpherePoly::coordinate(1),
               z = SpherePoly::coordinate(2);
    // (1 + x sigma1 + y sigma2 + z sigma3)/2
    m.at(0, 0) = SpherePoly::constant(half) + z.scaled(half);
    m.at(1, 1) = SpherePoly::constant(half) - z.scaled(half);
    m.at(0, 1) = x.scaled(half) - y.scaled(ihalf);
    m.at(1, 0) = x.scaled(half) + y.scaled(ihalf);
    return m;
}

SphereMatrix operator*(const SphereMatrix& a, const SphereMatrix& b) {
    if (a.q_ != b.q_) fail(ErrorKind::dimension, "sphere matrix shape mismatch");
    SphereMatrix m(a.q_);
    for (int i = 0; i < a.q_; ++i)
        for (int k = 0; k < a.q_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.q_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return m;
}

SphereMatrix operator-(const SphereMatrix& a, const SphereMatrix& b) {
    if (a.q_ != b.q_) fail(ErrorKind::dimension, "sphere matrix shape mismatch");
    SphereMatrix m(a.q_);
    for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
    return m;
}

SphereMatrix SphereMatrix::adjoint() const {
    SphereMatrix m(q_);
    for (int i = 0; i < q_; ++i)
        for (int j = 0; j < q_; ++j) m.at(j, i) = at(i, j).conj();
    return m;
}

SphereMatrix SphereMatrix::derivative(int i) const {
    SphereMatrix m(q_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].derivative(i);
    return m;
}

SpherePoly SphereMatrix::trace() const {
    SpherePoly t;
    for (int i = 0; i < q_; ++i) t += at(i, i);
    return t;
}

bool SphereMatrix::is_zero() const {
    for (const auto& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

bool SphereMatrix::is_idempotent() const { return ((*this) * (*this) - *this).is_zero(); }

bool SphereMatrix::is_selfadjoint() const { return (adjoint() - *this).is_zero(); }

SphereMatrix direct_sum(const SphereMatrix& a, const SphereMatrix& b) {
    SphereMatrix m(a.q_ + b.q_);
    for (int i = 0; i < a.q_; ++i)
        for (int j = 0; j < a.q_; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.q_; ++i)
        for (int j = 0; j < b.q_; ++j) m.at(a.q_ + i, a.q_ + j) = b.at(i, j);
    return m;
}

ExtScalar sphere_two_form_integral(const SpherePoly& w23, const SpherePoly& w13,
                                   const SpherePoly& w12) {
    SpherePoly flux = w23 * SpherePoly::coordinate(0) - w13 * SpherePoly::coordinate(1) +
                      w12 * SpherePoly::coordinate(2);
    return flux.integral();
}

} // namespace heatsym
