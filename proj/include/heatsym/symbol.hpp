#ifndef HEATSYM_SYMBOL_HPP
#define HEATSYM_SYMBOL_HPP

#include <compare>
#include <optional>

#include "heatsym/curvature.hpp"

namespace heatsym {

/// Key of a canonical Volterra symbol term
///   coeff(x) * xi^beta * (|xi|^2 + i tau)^{-base_pow}.
/// Canonical form has no loose tau powers: the rewrite
/// i tau -> (|xi|^2 + i tau) - |xi|^2 is applied on ingestion, so
/// base_pow may be any integer (non-positive values are polynomial
/// factors of the base, as in the heat operator itself).
struct TermKey {
    mi::Mono beta = 0;
    int base_pow = 0;
    auto operator<=>(const TermKey&) const = default;
};

/// Parabolic degree |beta| - 2 * base_pow of a term.
inline int parabolic_degree(const TermKey& k) { return mi::total(k.beta) - 2 * k.base_pow; }

/// Sum of canonical terms of one parabolic degree.
class TermSum {
public:
    TermSum() = default;
    TermSum(int n, int p, Algebra alg, int jet_order)
        : n_(n), p_(p), alg_(alg), jet_order_(jet_order) {}

    int dim() const { return n_; }
    int rank() const { return p_; }
    Algebra algebra() const { return alg_; }
    int jet_order() const { return jet_order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TermKey, JetPoly>& terms() const { return terms_; }

    void add_term(const TermKey& key, const JetPoly& coeff);
    TermSum operator-() const;
    TermSum& operator+=(const TermSum& o);
    friend TermSum operator+(TermSum a, const TermSum& b) { return a += b; }
    /// Pointwise product: coefficients multiply in order, exponents add.
    friend TermSum operator*(const TermSum& a, const TermSum& b);
    TermSum scaled(const ExtScalar& v) const;

    /// d/dxi_i: beta_i xi^{beta - e_i} B^{-N} - 2N xi^{beta + e_i} B^{-N-1}.
    TermSum xi_derivative(int i) const;
    /// D_x^alpha = (-i)^{|alpha|} d_x^alpha acting on the coefficient jets.
    TermSum x_derivative(int i) const;
    /// Multiplies by B^{-by}.
    TermSum shift_base(int by) const;

    TermSum with_algebra(Algebra alg) const;
    friend bool operator==(const TermSum& a, const TermSum& b);
    friend bool operator!=(const TermSum& a, const TermSum& b) { return !(a == b); }

private:
    int n_ = 0, p_ = 1;
    Algebra alg_ = Algebra::clifford;
    int jet_order_ = 2;
    std::map<TermKey, JetPoly> terms_;
};

/// Expansion q_m + q_{m-1} + ... + q_{m-J} of a Volterra symbol by
/// parabolic degree; component j holds only terms of degree m - j
/// (checked by validate()).
class VolterraSymbol {
public:
    VolterraSymbol() = default;
    VolterraSymbol(int n, int p, Algebra alg, int jet_order, int leading, int depth);

    static VolterraSymbol identity(int n, int p, Algebra alg, int jet_order, int depth);
    /// Symbol of a differential operator, optionally adding i*tau (heat
    /// operator); components are indexed from xi-degree downwards.
    static VolterraSymbol from_diff_op(const DiffOpSymbol& op, bool add_i_tau, int depth);

    int dim() const { return n_; }
    int rank() const { return p_; }
    Algebra algebra() const { return alg_; }
    int jet_order() const { return jet_order_; }
    int leading() const { return leading_; }
    int depth() const { return static_cast<int>(comps_.size()) - 1; }

    TermSum& component(int j) { return comps_[j]; }
    const TermSum& component(int j) const { return comps_[j]; }
    /// Component of the given parabolic degree (zero sum if absent).
    TermSum component_of_degree(int degree) const;

    bool is_zero() const;
    bool is_identity() const;
    void validate() const;

    VolterraSymbol scaled(const ExtScalar& v) const;
    VolterraSymbol with_algebra(Algebra alg) const;
    friend bool operator==(const VolterraSymbol& a, const VolterraSymbol& b);
    friend bool operator!=(const VolterraSymbol& a, const VolterraSymbol& b) { return !(a == b); }

private:
    int n_ = 0, p_ = 1;
    Algebra alg_ = Algebra::clifford;
    int jet_order_ = 2;
    int leading_ = 0;
    std::vector<TermSum> comps_;
};

/// Volterra composition q1 # q2 = sum_alpha 1/alpha! d_xi^alpha q1 D_x^alpha q2,
/// regrouped by parabolic degree and truncated to `depth` components.
VolterraSymbol compose_symbols(const VolterraSymbol& q1, const VolterraSymbol& q2, int depth);

/// Parametrix of p + d_t built by the degree recursion from
/// q_{-2} = (p_2 + i tau)^{-1} (finite Neumann re-expansion about
/// |xi|^2).  Verifies (p + i tau) # q = 1 through the truncation depth
/// unless `check` is false.
VolterraSymbol parametrix_expansion(const DiffOpSymbol& p, int depth, bool check = true);

/// Value at (y, t) = (0, 1) of the inverse Fourier transform of the
/// unique homogeneous Volterra extension of a degree-homogeneous
/// component, evaluated at x = 0.  Per term coeff * xi^beta * B^{-N}:
/// tau-inversion gives chi(t) t^{N-1}/(N-1)! e^{-t|xi|^2} and the
/// Gaussian xi-moments give prod (beta_i - 1)!! 2^{-beta_i/2}, all times
/// (4 pi)^{-n/2} (carried as mantissa 2^{-n}, pi grade -n).  Odd beta
/// kills the term.
FormElement radial_eval(const TermSum& component);

/// Pointwise heat coefficients a_l (or b_l with a differential prefactor
/// r = prefactor # parametrix) at x = 0:
///   a_l = qcheck_{-2-2l}(0,0,1),  b_l = rcheck_{2[m/2]-2-2l}(0,0,1).
std::vector<FormElement> heat_coefficients(const DiffOpSymbol& p, int count,
                                           const std::optional<DiffOpSymbol>& prefactor = {});

} // namespace heatsym

#endif
