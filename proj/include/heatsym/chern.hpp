#ifndef HEATSYM_CHERN_HPP
#define HEATSYM_CHERN_HPP

#include "heatsym/symbol.hpp"

namespace heatsym {

/// Antisymmetric n x n matrix of even-degree (>= 2) forms, as in the
/// curvature matrix R_ij = sum_{k<l} R_ijkl dx^k ^ dx^l.  Entries are
/// rank-1 and commute with every form.
class FormMatrix {
public:
    FormMatrix() : n_(0) {}
    explicit FormMatrix(int n);
    static FormMatrix from_curvature(const CurvatureData& R);

    int dim() const { return n_; }
    FormElement& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const FormElement& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    void validate() const;

    friend FormMatrix operator*(const FormMatrix& a, const FormMatrix& b);
    FormMatrix scaled(const ExtScalar& v) const;
    FormElement trace() const;

private:
    int n_;
    std::vector<FormElement> e_;
};

/// Terminating exponential sum_k f^k / k! in the element's own algebra.
FormElement exp_form(const FormElement& f);

/// A-hat form det^{1/2}((M/2)/sinh(M/2)) evaluated as
/// exp(1/2 tr log((M/2)/sinh(M/2))) with exact rational series
/// coefficients (nilpotency terminates everything at degree n).
FormElement a_hat_form(const FormMatrix& Rm);

/// Twist curvature assembled as the 2-form sum_{k<l} F_kl dx^k ^ dx^l
/// with p x p matrix coefficients.
FormElement twist_two_form(const CurvatureData& R);

/// Total Chern form Tr exp(-F) of the assembled twist 2-form.
FormElement chern_form(const FormElement& F);

/// Mehler kernel of the curvature harmonic oscillator H_R + d_t:
///   (4 pi t)^{-n/2} det^{1/2}((tM/2)/sinh(tM/2))
///     * exp(-(1/4t) <(tM/2)/tanh(tM/2) x, x>),
/// split into an exact form-valued factor and the scalar Gaussian
/// exp(-|x|^2/(4t)), which is reported through its exponent coefficient
/// (exact when x = 0).
struct MehlerValue {
    FormElement value;       // exact factor (includes the nilpotent exponential)
    Rational gauss_coeff;    // the scalar factor is exp(-gauss_coeff * |x|^2) with
                             // gauss_coeff = 1/(4t)
    Rational x_norm_sq;      // |x|^2 of the evaluation point
};

MehlerValue mehler_kernel(const FormMatrix& Rm, const std::vector<Rational>& x,
                          const Rational& t);

/// Local index density (2 i pi)^{-n/2} [A-hat ^ Ch]^{(n)} (n even).
FormElement index_density(const CurvatureData& R);

/// Differentiated density: for a Getzler-homogeneous differential model
/// operator P (exterior coefficients, polynomial in x),
///   B_0 = norm * [Tr_p ((P G_R)(0,1) ^ exp(-F(0)))]^{(n)},
/// with norm = (-2i)^{n/2} (n even) or (-i)^{[n/2]+1} 2^{[n/2]} (n odd).
FormElement index_density_with_prefactor(const CurvatureData& R,
                                         const VolterraSymbol& prefactor_model);

} // namespace heatsym

#endif
