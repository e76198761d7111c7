#include "heatsym/form.hpp"

#include <bit>
#include <sstream>

namespace heatsym {

ScalarMatrix ScalarMatrix::identity(int p) {
    ScalarMatrix m(p);
    for (int i = 0; i < p; ++i) m.at(i, i) = ExtScalar::integer(1);
    return m;
}

ScalarMatrix ScalarMatrix::scalar(int p, const ExtScalar& v) {
    ScalarMatrix m(p);
    for (int i = 0; i < p; ++i) m.at(i, i) = v;
    return m;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

ScalarMatrix ScalarMatrix::operator-() const {
    ScalarMatrix m(p_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
    if (p_ != o.p_) fail(ErrorKind::dimension, "matrix rank mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.p_ != b.p_) fail(ErrorKind::dimension, "matrix rank mismatch");
    ScalarMatrix out(a.p_);
    for (int i = 0; i < a.p_; ++i)
        for (int k = 0; k < a.p_; ++k) {
            const ExtScalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < a.p_; ++j) {
                const ExtScalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

ScalarMatrix ScalarMatrix::scaled(const ExtScalar& v) const {
    ScalarMatrix m(p_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * v;
    return m;
}

ScalarMatrix ScalarMatrix::adjoint() const {
    ScalarMatrix m(p_);
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j) m.at(j, i) = at(i, j).conj();
    return m;
}

ExtScalar ScalarMatrix::trace() const {
    ExtScalar t;
    for (int i = 0; i < p_; ++i) t += at(i, i);
    return t;
}

int merge_sign(std::uint32_t s, std::uint32_t t) {
    int inv = 0;
    for (std::uint32_t rest = t; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        inv += std::popcount(s >> (j + 1));
    }
    return (inv & 1) ? -1 : 1;
}

FormElement::FormElement(int n, int p, Algebra alg) : n_(n), p_(p), alg_(alg) {
    if (n < 0 || n > 31) fail(ErrorKind::dimension, "unsupported ambient dimension");
    if (p < 1) fail(ErrorKind::dimension, "matrix rank must be positive");
}

FormElement FormElement::scalar(int n, int p, const ExtScalar& v, Algebra alg) {
    FormElement f(n, p, alg);
    f.add_term(0, ScalarMatrix::scalar(p, v));
    return f;
}

FormElement FormElement::generator(int n, int p, int i, Algebra alg) {
    FormElement f(n, p, alg);
    if (i < 1 || i > n) fail(ErrorKind::dimension, "generator index out of range");
    f.add_term(1u << (i - 1), ScalarMatrix::identity(p));
    return f;
}

void FormElement::add_monomial(std::span<const int> idx, const ScalarMatrix& coeff) {
    std::uint32_t mask = 0;
    int sign = 1;
    // Insertion sort; each swap of adjacent generators flips the sign.
    std::vector<int> v(idx.begin(), idx.end());
    for (size_t a = 0; a < v.size(); ++a) {
        for (size_t b = a; b > 0 && v[b] < v[b - 1]; --b) {
            std::swap(v[b], v[b - 1]);
            sign = -sign;
        }
    }
    for (size_t a = 0; a < v.size(); ++a) {
        if (v[a] < 1 || v[a] > n_) fail(ErrorKind::dimension, "generator index out of range");
        if (a > 0 && v[a] == v[a - 1]) return; // repeated generator: zero
        mask |= 1u << (v[a] - 1);
    }
    add_term(mask, sign < 0 ? -coeff : coeff);
}

void FormElement::add_term(std::uint32_t mask, const ScalarMatrix& coeff) {
    if (coeff.dim() != p_) fail(ErrorKind::dimension, "coefficient rank mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mask, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const ScalarMatrix* FormElement::coefficient(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? nullptr : &it->second;
}

FormElement FormElement::component(int d) const {
    FormElement out(n_, p_, alg_);
    for (const auto& [mask, m] : terms_)
        if (std::popcount(mask) == d) out.terms_.emplace(mask, m);
    return out;
}

int FormElement::top_degree() const {
    int d = -1;
    for (const auto& [mask, m] : terms_) d = std::max(d, std::popcount(mask));
    return d;
}

ScalarMatrix FormElement::top_coefficient() const {
    std::uint32_t full = (n_ == 32) ? ~0u : ((1u << n_) - 1);
    const ScalarMatrix* m = coefficient(full);
    return m ? *m : ScalarMatrix(p_);
}

FormElement FormElement::operator-() const {
    FormElement out(n_, p_, alg_);
    for (const auto& [mask, m] : terms_) out.terms_.emplace(mask, -m);
    return out;
}

void FormElement::check_compatible(const FormElement& o, const char* op) const {
    if (n_ != o.n_ || p_ != o.p_)
        fail(ErrorKind::dimension, std::string(op) + ": dimension/rank mismatch");
    if (alg_ != o.alg_)
        fail(ErrorKind::domain, std::string(op) + ": mixing exterior and Clifford elements");
}

FormElement& FormElement::operator+=(const FormElement& o) {
    check_compatible(o, "add");
    for (const auto& [mask, m] : o.terms_) add_term(mask, m);
    return *this;
}

FormElement& FormElement::operator-=(const FormElement& o) {
    check_compatible(o, "sub");
    for (const auto& [mask, m] : o.terms_) add_term(mask, -m);
    return *this;
}

namespace {

FormElement product(const FormElement& a, const FormElement& b, bool clifford) {
    FormElement out(a.dim(), a.rank(), a.algebra());
    for (const auto& [s, ms] : a.terms()) {
        for (const auto& [t, mt] : b.terms()) {
            std::uint32_t common = s & t;
            if (!clifford && common) continue;
            int sign = merge_sign(s, t);
            if (clifford && (std::popcount(common) & 1)) sign = -sign;
            ScalarMatrix m = ms * mt;
            out.add_term(clifford ? (s ^ t) : (s | t), sign < 0 ? -m : m);
        }
    }
    return out;
}

} // namespace

FormElement operator*(const FormElement& a, const FormElement& b) {
    a.check_compatible(b, "mul");
    return product(a, b, a.algebra() == Algebra::clifford);
}

FormElement wedge(const FormElement& a, const FormElement& b) {
    if (a.algebra() != Algebra::exterior || b.algebra() != Algebra::exterior)
        fail(ErrorKind::domain, "wedge requires exterior elements");
    return a * b;
}

FormElement clifford_mul(const FormElement& a, const FormElement& b) {
    if (a.algebra() != Algebra::clifford || b.algebra() != Algebra::clifford)
        fail(ErrorKind::domain, "clifford_mul requires Clifford elements");
    return a * b;
}

FormElement FormElement::scaled(const ExtScalar& v) const {
    FormElement out(n_, p_, alg_);
    if (v.is_zero()) return out;
    for (const auto& [mask, m] : terms_) out.add_term(mask, m.scaled(v));
    return out;
}

FormElement FormElement::scaled_matrix(const ScalarMatrix& m, bool left) const {
    FormElement out(n_, p_, alg_);
    for (const auto& [mask, c] : terms_) out.add_term(mask, left ? m * c : c * m);
    return out;
}

FormElement FormElement::matrix_trace() const {
    FormElement out(n_, 1, alg_);
    for (const auto& [mask, m] : terms_) {
        ScalarMatrix t(1);
        t.at(0, 0) = m.trace();
        out.add_term(mask, t);
    }
    return out;
}

FormElement FormElement::adjoint() const {
    FormElement out(n_, p_, alg_);
    for (const auto& [mask, m] : terms_) out.add_term(mask, m.adjoint());
    return out;
}

FormElement FormElement::with_algebra(Algebra alg) const {
    FormElement out(n_, p_, alg);
    out.terms_ = terms_;
    return out;
}

bool operator==(const FormElement& a, const FormElement& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.alg_ == b.alg_ && a.terms_ == b.terms_;
}

FormElement quantize(const FormElement& form) {
    if (form.algebra() != Algebra::exterior)
        fail(ErrorKind::domain, "quantize expects an exterior element");
    return form.with_algebra(Algebra::clifford);
}

FormElement symbol_map(const FormElement& clifford) {
    if (clifford.algebra() != Algebra::clifford)
        fail(ErrorKind::domain, "symbol_map expects a Clifford element");
    return clifford.with_algebra(Algebra::exterior);
}

ExtScalar supertrace_even(const FormElement& a) {
    int n = a.dim();
    if (n % 2 != 0) fail(ErrorKind::domain, "supertrace_even requires even dimension");
    return ExtScalar::minus_two_i_pow(n / 2) * a.top_coefficient().trace();
}

ExtScalar trace_odd(const FormElement& a) {
    int n = a.dim();
    if (n % 2 == 0) fail(ErrorKind::domain, "trace_odd requires odd dimension");
    int h = n / 2;
    ExtScalar two_h = ExtScalar::integer(1);
    for (int k = 0; k < h; ++k) two_h *= ExtScalar::integer(2);
    ExtScalar top = (-ExtScalar::i()).pow(h + 1);
    ExtScalar out = top * two_h * a.top_coefficient().trace();
    const ScalarMatrix* id_part = a.coefficient(0);
    if (id_part) out += two_h * id_part->trace();
    return out;
}

std::string FormElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, m] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[";
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < p_; ++j) {
                os << m.at(i, j).str();
                if (i != p_ - 1 || j != p_ - 1) os << ", ";
            }
        os << "]";
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            os << (alg_ == Algebra::clifford ? "*e" : "*dx") << (std::countr_zero(rest) + 1);
    }
    return os.str();
}

} // namespace heatsym
