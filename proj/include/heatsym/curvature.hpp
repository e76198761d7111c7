#ifndef HEATSYM_CURVATURE_HPP
#define HEATSYM_CURVATURE_HPP

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "heatsym/jet.hpp"

namespace heatsym {

/// Pointwise geometric input: the Riemann tensor R_{ijkl} =
/// <R(d_i,d_j)d_k, d_l> at the base point, and an antihermitian twist
/// curvature F_{kl} of rank p.  The scalar curvature is derived, never
/// supplied.  For the round 2-sphere of Gauss curvature K the nonzero
/// input is R_{1212} = K (so kappa = 2K).
class CurvatureData {
public:
    CurvatureData(int n, int p = 1);

    int dim() const { return n_; }
    int rank() const { return p_; }

    /// Sets one component and all its symmetry images (1-based indices).
    void set_riemann(int i, int j, int k, int l, const Rational& v);
    void set_twist(int k, int l, const ScalarMatrix& f);

    const Rational& riemann(int i, int j, int k, int l) const;
    const ScalarMatrix& twist(int k, int l) const;
    bool has_twist() const { return has_twist_; }

    /// Full symmetry + Bianchi + antihermitian twist check; computes kappa.
    /// Every violation raises a validation error naming the identity.
    void validate();
    bool validated() const { return validated_; }
    const Rational& kappa() const;

private:
    Rational& riem(int i, int j, int k, int l);
    int n_, p_;
    std::vector<Rational> riem_;          // n^4, 0-based dense
    std::vector<ScalarMatrix> twist_;     // n^2 matrices, antisymmetric in (k,l)
    bool has_twist_ = false;
    bool validated_ = false;
    Rational kappa_;
};

/// Order-2 jets of the synchronous normal frame data:
/// g_ij = delta_ij - 1/3 R_ikjl x^k x^l, omega_ikl = -1/2 R_ijkl x^j,
/// and the Christoffel jet of g.  All entries are rank-1 scalar jets.
struct NormalJets {
    int n = 0;
    std::vector<JetPoly> g;      // [i*n+j]
    std::vector<JetPoly> g_inv;  // [i*n+j]
    std::vector<JetPoly> omega;  // [((i*n)+k)*n+l]
    std::vector<JetPoly> gamma;  // [((k*n)+i)*n+j]  Gamma^k_ij
};

NormalJets build_normal_jets(const CurvatureData& R, int order);

/// Total symbol of a differential operator of order <= 2 in the
/// synchronous normal frame: a map from xi-monomials to coefficient
/// jets.  `content_order` records through which jet order the
/// coefficients agree with the true Taylor expansion (exact polynomial
/// operators use `exact_content`).
class DiffOpSymbol {
public:
    static constexpr int exact_content = std::numeric_limits<int>::max();

    DiffOpSymbol() = default;
    DiffOpSymbol(int n, int p, Algebra alg, int jet_order, int content_order);

    int dim() const { return n_; }
    int rank() const { return p_; }
    Algebra algebra() const { return alg_; }
    int jet_order() const { return jet_order_; }
    int content_order() const { return content_order_; }
    int xi_degree() const;

    void add_part(mi::Mono beta, const JetPoly& coeff);
    const std::map<mi::Mono, JetPoly>& parts() const { return parts_; }

    /// Sum of the parts of a given xi-degree (p2, p1, p0 pieces).
    DiffOpSymbol xi_part(int degree) const;
    /// Principal part at the origin must be |xi|^2 * identity.
    void check_principal_scalar() const;

    DiffOpSymbol& operator+=(const DiffOpSymbol& o);
    DiffOpSymbol scaled(const ExtScalar& v) const;
    /// Left multiplication by a function jet (x-dependent coefficient).
    DiffOpSymbol left_mul(const JetPoly& f) const;
    /// Operator composition a(x,D) b(x,D): sum_alpha 1/alpha!
    /// (d_xi^alpha a)(D_x^alpha b); exact for polynomial symbols.
    friend DiffOpSymbol compose(const DiffOpSymbol& a, const DiffOpSymbol& b);

private:
    int n_ = 0, p_ = 1;
    Algebra alg_ = Algebra::clifford;
    int jet_order_ = 2;
    int content_order_ = 2;
    std::map<mi::Mono, JetPoly> parts_;
};

/// Lichnerowicz square of the twisted Dirac operator:
///   -g^{ij}(nabla_i nabla_j - Gamma^k_ij nabla_k)
///   + 1/2 c(e^k) c(e^l) F(e_k,e_l) + kappa/4,
/// with nabla_i = d_i + 1/4 omega_ikl(x) c(e^k) c(e^l) + A_i and the
/// twist connection in radial gauge A_i = -1/2 F_ij x^j.
DiffOpSymbol lichnerowicz_symbol(const CurvatureData& R, int jet_order = 2);

/// Scalar Laplace-Beltrami symbol -g^{ij}(d_i d_j - Gamma^k_ij d_k).
DiffOpSymbol laplace_beltrami_symbol(const CurvatureData& R, int jet_order = 2);

/// Embeds a rank-1 scalar-coefficient jet into rank p with the given algebra.
JetPoly embed_scalar_jet(const JetPoly& s, int p, Algebra alg);

} // namespace heatsym

#endif
