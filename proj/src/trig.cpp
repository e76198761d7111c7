#include "heatsym/trig.hpp"

#include <map>

namespace heatsym {

TrigPoly TrigPoly::exponential(int d, const std::vector<int>& freq, const ExtScalar& coeff) {
    TrigPoly f(d);
    f.add_term(freq, coeff);
    return f;
}

TrigPoly TrigPoly::constant(int d, const ExtScalar& v) {
    return exponential(d, std::vector<int>(d, 0), v);
}

void TrigPoly::add_term(const std::vector<int>& freq, const ExtScalar& coeff) {
    if (static_cast<int>(freq.size()) != d_)
        fail(ErrorKind::dimension, "frequency vector length mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(freq, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly f(d_);
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    if (d_ != o.d_) fail(ErrorKind::dimension, "torus dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += -o; }

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    if (a.d_ != b.d_) fail(ErrorKind::dimension, "torus dimension mismatch");
    TrigPoly f(a.d_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<int> m(a.d_);
            for (int i = 0; i < a.d_; ++i) m[i] = ma[i] + mb[i];
            f.add_term(m, ca * cb);
        }
    return f;
}

TrigPoly TrigPoly::scaled(const ExtScalar& v) const {
    TrigPoly f(d_);
    if (v.is_zero()) return f;
    for (const auto& [m, c] : terms_) f.add_term(m, c * v);
    return f;
}

TrigPoly TrigPoly::conj() const {
    TrigPoly f(d_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> neg(d_);
        for (int i = 0; i < d_; ++i) neg[i] = -m[i];
        f.add_term(neg, c.conj());
    }
    return f;
}

TrigPoly TrigPoly::derivative(int j) const {
    TrigPoly f(d_);
    for (const auto& [m, c] : terms_)
        if (m[j] != 0) f.add_term(m, c * ExtScalar::i() * ExtScalar::integer(m[j]));
    return f;
}

ExtScalar TrigPoly::zero_frequency() const {
    auto it = terms_.find(std::vector<int>(d_, 0));
    return it == terms_.end() ? ExtScalar() : it->second;
}

ExtScalar TrigPoly::integral() const {
    return zero_frequency() * ExtScalar::rational(pow_int(rat(2), d_), 2 * d_);
}

TrigMatrix TrigMatrix::identity(int d, int q) {
    TrigMatrix m(d, q);
    for (int i = 0; i < q; ++i) m.at(i, i) = TrigPoly::constant(d, ExtScalar::integer(1));
    return m;
}

TrigMatrix TrigMatrix::winding(int w) {
    TrigMatrix m(1, 1);
    m.at(0, 0) = TrigPoly::exponential(1, {w});
    return m;
}

TrigMatrix TrigMatrix::operator-() const {
    TrigMatrix m(d_, q_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

TrigMatrix& TrigMatrix::operator+=(const TrigMatrix& o) {
    if (d_ != o.d_ || q_ != o.q_) fail(ErrorKind::dimension, "trig matrix shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

TrigMatrix operator-(TrigMatrix a, const TrigMatrix& b) { return a += -b; }

TrigMatrix operator*(const TrigMatrix& a, const TrigMatrix& b) {
    if (a.d_ != b.d_ || a.q_ != b.q_) fail(ErrorKind::dimension, "trig matrix shape mismatch");
    TrigMatrix m(a.d_, a.q_);
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

TrigMatrix TrigMatrix::scaled(const ExtScalar& v) const {
    TrigMatrix m(d_, q_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].scaled(v);
    return m;
}

TrigMatrix TrigMatrix::adjoint() const {
    TrigMatrix m(d_, q_);
    for (int i = 0; i < q_; ++i)
        for (int j = 0; j < q_; ++j) m.at(j, i) = at(i, j).conj();
    return m;
}

TrigMatrix TrigMatrix::derivative(int j) const {
    TrigMatrix m(d_, q_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].derivative(j);
    return m;
}

TrigPoly TrigMatrix::trace() const {
    TrigPoly t(d_);
    for (int i = 0; i < q_; ++i) t += at(i, i);
    return t;
}

bool TrigMatrix::is_identity() const { return *this == identity(d_, q_); }

bool TrigMatrix::is_idempotent() const { return (*this) * (*this) == *this; }

bool TrigMatrix::is_selfadjoint() const { return adjoint() == *this; }

bool TrigMatrix::is_unitary() const {
    return ((*this) * adjoint()).is_identity() && (adjoint() * (*this)).is_identity();
}

TrigMatrix direct_sum(const TrigMatrix& a, const TrigMatrix& b) {
    if (a.d_ != b.d_) fail(ErrorKind::dimension, "torus dimension mismatch");
    TrigMatrix m(a.d_, a.q_ + b.q_);
    for (int i = 0; i < a.q_; ++i)
        for (int j = 0; j < a.q_; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.q_; ++i)
        for (int j = 0; j < b.q_; ++j) m.at(a.q_ + i, a.q_ + j) = b.at(i, j);
    return m;
}

} // namespace heatsym
