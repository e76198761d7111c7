#ifndef HEATSYM_ORACLE_HPP
#define HEATSYM_ORACLE_HPP

#include <vector>

#include "heatsym/rational.hpp"

namespace heatsym::oracle {

/// Exactly solvable spectra used as numeric ground truth.  The oracle
/// layer is floating point end to end and shares no symbolic machinery
/// with the parametrix path.
enum class SpectrumKind {
    sphere_laplacian,     // S^2: lambda_l = l(l+1), mult 2l+1
    sphere_monopole_dirac, // S^2, charge q: +-sqrt(m(m+|q|)), mult 2m+|q|; kernel |q|
    circle_dirac          // S^1: lambda_m = m, mult 1
};

struct SpectrumModel {
    SpectrumKind kind = SpectrumKind::sphere_laplacian;
    int charge = 0; // monopole charge q

    /// Tr e^{-t Delta} (Laplacian/Dirac-squared trace), truncated when the
    /// tail bound drops below `tol`.
    double heat_trace(double t, double tol = 1e-20) const;
    /// Str e^{-t D^2} for the monopole Dirac: branch cancellation leaves
    /// the chiral kernel, exactly the charge.
    double heat_supertrace(double t) const;
};

struct FitResult {
    std::vector<double> coefficients; // c_0 .. c_{L}
    double residual;                  // rms misfit over the grid
};

/// Least-squares fit of the heat trace against t^{-n/2} sum_l c_l t^l on
/// the given grid.
FitResult heat_trace_fit(const SpectrumModel& model, const std::vector<double>& t_grid,
                         int count, int n_dim);

struct SpectralFlowResult {
    int spectral_flow;   // upward crossings of the tracked family
    int toeplitz_index;  // dim ker - dim coker of the compressed PUP
};

/// Tracks the eigenvalues of D + s U* [D, U] for U = e_w on Fourier modes
/// |m| <= cutoff, counting signed crossings of level -1/2 along s in
/// [0,1], and computes the Toeplitz index of PUP on the truncated Hardy
/// space (boundary modes excluded).
SpectralFlowResult spectral_flow_track(int winding, int cutoff, int steps = 16);

struct PdeCheckResult {
    double max_rel_error; // against the closed form, relative to the peak
    double mass_defect;   // drift of the discrete integral over the run
};

/// Crank-Nicolson check of the 1D Mehler closed form for
/// d_t u + (-d_x^2 + (a^2/4) x^2) u = 0: evolve the closed-form profile
/// from t0 to t1 and compare.
PdeCheckResult mehler_pde_check_1d(double a, int grid_points, double box, double t0,
                                   double t1, int steps);
/// 2D rotation-block check (inverted potential -a^2 |x|^2 / 4, closed
/// form with sin/tan), Peaceman-Rachford ADI; requires a * t1 < pi.
PdeCheckResult mehler_pde_check_2d(double a, int grid_points, double box, double t0,
                                   double t1, int steps);

/// Gauss-Hermite value of (2 pi)^{-n} int xi^beta e^{-|xi|^2} dxi / (N-1)!.
double quadrature_radial_value(const std::vector<int>& beta, int base_pow, int n_dim,
                               int points = 48);
/// The exact closed form of the same quantity, rendered to double.
double radial_reference(const std::vector<int>& beta, int base_pow, int n_dim);

} // namespace heatsym::oracle

#endif
