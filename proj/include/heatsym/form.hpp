#ifndef HEATSYM_FORM_HPP
#define HEATSYM_FORM_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "heatsym/ext_scalar.hpp"

namespace heatsym {

/// Dense p x p matrix of exact scalars (row major).
class ScalarMatrix {
public:
    ScalarMatrix() : p_(0) {}
    explicit ScalarMatrix(int p) : p_(p), a_(static_cast<size_t>(p) * p) {}
    static ScalarMatrix identity(int p);
    static ScalarMatrix scalar(int p, const ExtScalar& v);

    int dim() const { return p_; }
    ExtScalar& at(int r, int c) { return a_[static_cast<size_t>(r) * p_ + c]; }
    const ExtScalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * p_ + c]; }

    bool is_zero() const;
    ScalarMatrix operator-() const;
    ScalarMatrix& operator+=(const ScalarMatrix& o);
    friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    ScalarMatrix scaled(const ExtScalar& v) const;
    ScalarMatrix adjoint() const; // conjugate transpose
    ExtScalar trace() const;
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.p_ == b.p_ && a.a_ == b.a_;
    }

private:
    int p_;
    std::vector<ExtScalar> a_;
};

/// Multiplication rule attached to a graded element: plain exterior
/// (wedge) product, or the Clifford product of the sigma-image basis,
/// where e_S . e_T = sign * (-1)^{|S and T|} e_{S xor T} realizes
/// xi.eta + eta.xi = -2<xi,eta> on generators.
enum class Algebra { exterior, clifford };

/// Matrix-valued element of the (complexified) exterior algebra over
/// {1..n}, stored as a map from strictly increasing index subsets
/// (bitmask, bit i-1 <-> generator i) to p x p coefficient matrices.
/// Zero coefficients are never stored.  Clifford elements use the same
/// storage in the sigma-image basis, flagged by `algebra()`.
class FormElement {
public:
    FormElement() : n_(0), p_(1), alg_(Algebra::exterior) {}
    FormElement(int n, int p, Algebra alg = Algebra::exterior);

    static FormElement scalar(int n, int p, const ExtScalar& v,
                              Algebra alg = Algebra::exterior);
    static FormElement unit(int n, int p, Algebra alg = Algebra::exterior) {
        return scalar(n, p, ExtScalar::integer(1), alg);
    }
    /// Generator dx^i (or c(e^i)), 1-based index.
    static FormElement generator(int n, int p, int i, Algebra alg = Algebra::exterior);

    int dim() const { return n_; }
    int rank() const { return p_; }
    Algebra algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * dx^{idx[0]} ^ ... ^ dx^{idx[k-1]}; the index list may
    /// be unsorted (the sign of the sorting permutation is applied) and a
    /// repeated index makes the monomial vanish.
    void add_monomial(std::span<const int> idx, const ScalarMatrix& coeff);
    void add_term(std::uint32_t mask, const ScalarMatrix& coeff);

    const std::map<std::uint32_t, ScalarMatrix>& terms() const { return terms_; }
    const ScalarMatrix* coefficient(std::uint32_t mask) const;

    /// Part of pure form degree d.
    FormElement component(int d) const;
    int top_degree() const; // -1 when zero
    /// Coefficient of the full top monomial dx^1^...^dx^n.
    ScalarMatrix top_coefficient() const;

    FormElement operator-() const;
    FormElement& operator+=(const FormElement& o);
    FormElement& operator-=(const FormElement& o);
    friend FormElement operator+(FormElement a, const FormElement& b) { return a += b; }
    friend FormElement operator-(FormElement a, const FormElement& b) { return a -= b; }
    /// Product in the element's own algebra (wedge or Clifford).
    friend FormElement operator*(const FormElement& a, const FormElement& b);
    FormElement scaled(const ExtScalar& v) const;
    FormElement scaled_matrix(const ScalarMatrix& m, bool left) const;
    /// Matrix trace, rank p -> 1.
    FormElement matrix_trace() const;
    FormElement adjoint() const;

    FormElement with_algebra(Algebra alg) const;

    friend bool operator==(const FormElement& a, const FormElement& b);
    friend bool operator!=(const FormElement& a, const FormElement& b) { return !(a == b); }

    std::string str() const;

private:
    void check_compatible(const FormElement& o, const char* op) const;

    int n_, p_;
    Algebra alg_;
    std::map<std::uint32_t, ScalarMatrix> terms_;
};

FormElement wedge(const FormElement& a, const FormElement& b);
FormElement clifford_mul(const FormElement& a, const FormElement& b);

/// Quantization map c: forms -> Clifford elements (basis relabeling).
FormElement quantize(const FormElement& form);
/// Symbol map sigma = c^{-1}.
FormElement symbol_map(const FormElement& clifford);

/// Str on Cl(n), n even: (-2i)^{n/2} tr(top coefficient); all lower
/// degrees vanish.
ExtScalar supertrace_even(const FormElement& a);
/// tr on Cl(n), n odd: (-i)^{[n/2]+1} 2^{[n/2]} tr(top coefficient)
/// plus 2^{[n/2]} tr(degree-0 coefficient); degrees 0<k<n vanish.
ExtScalar trace_odd(const FormElement& a);

/// Sign of interleaving sorted S before sorted T: (-1)^{#{(i,j) in SxT : i > j}}.
int merge_sign(std::uint32_t s, std::uint32_t t);

} // namespace heatsym

#endif
