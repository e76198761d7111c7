#include "heatsym/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "heatsym/errors.hpp"

namespace heatsym::oracle {

namespace {

double sphere_laplacian_trace(double t, double tol) {
    double sum = 0.0;
    for (long l = 0;; ++l) {
        double term = (2.0 * l + 1.0) * std::exp(-t * l * (l + 1.0));
        sum += term;
        if (l > 2.0 / std::sqrt(t) && term < tol) break;
        if (l > 100000) break;
    }
    return sum;
}

double monopole_trace(double t, int q, double tol) {
    int aq = std::abs(q);
    double sum = aq; // kernel
    for (long m = 1;; ++m) {
        double lambda2 = static_cast<double>(m) * (m + aq);
        double term = 2.0 * (2.0 * m + aq) * std::exp(-t * lambda2);
        sum += term;
        if (m > 2.0 / std::sqrt(t) && term < tol) break;
        if (m > 100000) break;
    }
    return sum;
}

double circle_trace(double t, double tol) {
    double sum = 1.0;
    for (long m = 1;; ++m) {
        double term = 2.0 * std::exp(-t * m * m);
        sum += term;
        if (m > 2.0 / std::sqrt(t) && term < tol) break;
        if (m > 100000) break;
    }
    return sum;
}

} // namespace

double SpectrumModel::heat_trace(double t, double tol) const {
    if (t <= 0) fail(ErrorKind::domain, "heat trace needs t > 0");
    switch (kind) {
        case SpectrumKind::sphere_laplacian: return sphere_laplacian_trace(t, tol);
        case SpectrumKind::sphere_monopole_dirac: return monopole_trace(t, charge, tol);
        case SpectrumKind::circle_dirac: return circle_trace(t, tol);
    }
    fail(ErrorKind::internal, "unknown spectrum kind");
}

double SpectrumModel::heat_supertrace(double t) const {
    if (kind != SpectrumKind::sphere_monopole_dirac)
        fail(ErrorKind::domain, "supertrace oracle is for the monopole Dirac spectrum");
    if (t <= 0) fail(ErrorKind::domain, "heat supertrace needs t > 0");
    // +-lambda branches share multiplicities and cancel pairwise; the sum
    // is evaluated literally to exhibit the cancellation.
    int aq = std::abs(charge);
    double sum = (charge >= 0) ? aq : -aq; // chiral kernel
    for (long m = 1; m <= 64; ++m) {
        double lambda2 = static_cast<double>(m) * (m + aq);
        double mult = 2.0 * m + aq;
        sum += mult * std::exp(-t * lambda2) - mult * std::exp(-t * lambda2);
    }
    return sum;
}

FitResult heat_trace_fit(const SpectrumModel& model, const std::vector<double>& t_grid,
                         int count, int n_dim) {
    if (count < 1 || t_grid.size() < static_cast<size_t>(count))
        fail(ErrorKind::domain, "fit needs at least as many grid points as coefficients");
    const int rows = static_cast<int>(t_grid.size());
    std::vector<long double> a(static_cast<size_t>(rows) * count);
    std::vector<long double> y(rows);
    for (int r = 0; r < rows; ++r) {
        double t = t_grid[r];
        y[r] = model.heat_trace(t);
        for (int c = 0; c < count; ++c)
            a[static_cast<size_t>(r) * count + c] = std::pow(t, -0.5 * n_dim + c);
    }
    // normal equations (count x count), Gaussian elimination with pivoting
    std::vector<long double> m(static_cast<size_t>(count) * (count + 1), 0.0L);
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            long double s = 0.0L;
            for (int r = 0; r < rows; ++r)
                s += a[static_cast<size_t>(r) * count + i] * a[static_cast<size_t>(r) * count + j];
            m[static_cast<size_t>(i) * (count + 1) + j] = s;
        }
        long double s = 0.0L;
        for (int r = 0; r < rows; ++r) s += a[static_cast<size_t>(r) * count + i] * y[r];
        m[static_cast<size_t>(i) * (count + 1) + count] = s;
    }
    for (int col = 0; col < count; ++col) {
        int piv = col;
        for (int r = col + 1; r < count; ++r)
            if (std::fabs(static_cast<double>(m[static_cast<size_t>(r) * (count + 1) + col])) >
                std::fabs(static_cast<double>(m[static_cast<size_t>(piv) * (count + 1) + col])))
                piv = r;
        if (m[static_cast<size_t>(piv) * (count + 1) + col] == 0.0L)
            fail(ErrorKind::domain, "ill-conditioned fit (degenerate t grid)");
        if (piv != col)
            for (int c = 0; c <= count; ++c)
                std::swap(m[static_cast<size_t>(piv) * (count + 1) + c],
                          m[static_cast<size_t>(col) * (count + 1) + c]);
        for (int r = 0; r < count; ++r) {
            if (r == col) continue;
            long double f = m[static_cast<size_t>(r) * (count + 1) + col] /
                            m[static_cast<size_t>(col) * (count + 1) + col];
            for (int c = col; c <= count; ++c)
                m[static_cast<size_t>(r) * (count + 1) + c] -=
                    f * m[static_cast<size_t>(col) * (count + 1) + c];
        }
    }
    FitResult out;
    out.coefficients.resize(count);
    for (int i = 0; i < count; ++i)
        out.coefficients[i] = static_cast<double>(m[static_cast<size_t>(i) * (count + 1) + count] /
                                                  m[static_cast<size_t>(i) * (count + 1) + i]);
    long double rss = 0.0L;
    for (int r = 0; r < rows; ++r) {
        long double fit = 0.0L;
        for (int c = 0; c < count; ++c)
            fit += out.coefficients[c] * a[static_cast<size_t>(r) * count + c];
        long double d = (fit - y[r]) / y[r];
        rss += d * d;
    }
    out.residual = std::sqrt(static_cast<double>(rss / rows));
    return out;
}

namespace {

/// Jacobi eigenvalues of a dense symmetric matrix (row major), ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) < 1e-18) continue;
                double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace

SpectralFlowResult spectral_flow_track(int winding, int cutoff, int steps) {
    if (cutoff < 4 * std::abs(winding) + 8)
        fail(ErrorKind::domain, "cutoff too small for the requested winding");
    const int dim = 2 * cutoff + 1;
    // D + s U*[D,U] on modes -K..K; for U = e_w the perturbation is the
    // multiplication operator by w (Fourier-diagonal).
    auto count_below = [&](double s) {
        std::vector<double> m(static_cast<size_t>(dim) * dim, 0.0);
        for (int i = 0; i < dim; ++i)
            m[static_cast<size_t>(i) * dim + i] = (i - cutoff) + s * winding;
        std::vector<double> eig = jacobi_eigenvalues(std::move(m), dim);
        int c = 0;
        for (double v : eig)
            if (v < -0.5) ++c;
        return c;
    };
    int flow = 0;
    int prev = count_below(0.0);
    for (int k = 1; k <= steps; ++k) {
        int cur = count_below(static_cast<double>(k) / steps);
        flow += prev - cur; // eigenvalues moving up through the level
        prev = cur;
    }

    // Toeplitz compression P U P on modes 0..K: e_m -> e_{m+w}.
    int ker = 0, coker = 0, artifacts = 0;
    for (int m = 0; m <= cutoff; ++m) {
        if (m + winding < 0) ++ker;           // genuinely annihilated
        if (m + winding > cutoff) ++artifacts; // truncation boundary, not kernel
        if (m - winding < 0) ++coker;          // not reached by any mode
    }
    if (artifacts > cutoff / 2)
        fail(ErrorKind::domain, "cutoff too small: truncation dominates the compression");
    return {flow, ker - coker};
}

namespace {

double sinc_ratio(double x) { return std::fabs(x) < 1e-8 ? 1.0 : x / std::sinh(x); }
double tanh_ratio(double x) { return std::fabs(x) < 1e-8 ? 1.0 : x / std::tanh(x); }
double sin_ratio(double x) { return std::fabs(x) < 1e-8 ? 1.0 : x / std::sin(x); }
double tan_ratio(double x) { return std::fabs(x) < 1e-8 ? 1.0 : x / std::tan(x); }

/// 1D Mehler kernel of -d_x^2 + (a^2/4) x^2 at the diagonal offset x.
double mehler_1d(double a, double x, double t) {
    double at = a * t;
    return std::pow(4.0 * std::numbers::pi * t, -0.5) * std::sqrt(sinc_ratio(at)) *
           std::exp(-x * x / (4.0 * t) * tanh_ratio(at));
}

/// Inverted-potential analogue (2D rotation block factor): sin/tan forms.
double mehler_1d_inverted(double a, double x, double t) {
    double at = a * t;
    return std::pow(4.0 * std::numbers::pi * t, -0.5) * std::sqrt(sin_ratio(at)) *
           std::exp(-x * x / (4.0 * t) * tan_ratio(at));
}

/// Thomas solve of a constant tridiagonal system (b diagonal varies).
void tridiag_solve(const std::vector<double>& lower, const std::vector<double>& diag,
                   const std::vector<double>& upper, std::vector<double>& rhs) {
    const int n = static_cast<int>(diag.size());
    std::vector<double> c(n), d(n);
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for (int i = 1; i < n; ++i) {
        double m = diag[i] - lower[i] * c[i - 1];
        c[i] = upper[i] / m;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / m;
    }
    rhs[n - 1] = d[n - 1];
    for (int i = n - 2; i >= 0; --i) rhs[i] = d[i] - c[i] * rhs[i + 1];
}

} // namespace

PdeCheckResult mehler_pde_check_1d(double a, int grid_points, double box, double t0,
                                   double t1, int steps) {
    if (t0 <= 0 || t1 <= t0) fail(ErrorKind::domain, "need 0 < t0 < t1");
    const int n = grid_points;
    const double h = 2.0 * box / (n - 1);
    const double dt = (t1 - t0) / steps;
    std::vector<double> u(n), x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = -box + i * h;
        u[i] = mehler_1d(a, x[i], t0);
    }
    double mass0 = 0.0;
    for (double v : u) mass0 += v * h;

    // Crank-Nicolson for u_t = u_xx - (a^2/4) x^2 u, Dirichlet box.
    std::vector<double> lower(n), diag(n), upper(n), rhs(n);
    const double r = dt / (2.0 * h * h);
    for (int step = 0; step < steps; ++step) {
        for (int i = 0; i < n; ++i) {
            double v = 0.25 * a * a * x[i] * x[i];
            if (i == 0 || i == n - 1) {
                lower[i] = 0.0; diag[i] = 1.0; upper[i] = 0.0; rhs[i] = 0.0;
                continue;
            }
            lower[i] = -r;
            upper[i] = -r;
            diag[i] = 1.0 + 2.0 * r + 0.5 * dt * v;
            rhs[i] = u[i] + r * (u[i + 1] - 2.0 * u[i] + u[i - 1]) - 0.5 * dt * v * u[i];
        }
        tridiag_solve(lower, diag, upper, rhs);
        u = rhs;
    }

    double peak = 0.0, err = 0.0, mass1 = 0.0;
    for (int i = 0; i < n; ++i) {
        double exact = mehler_1d(a, x[i], t1);
        peak = std::max(peak, std::fabs(exact));
        err = std::max(err, std::fabs(u[i] - exact));
        mass1 += u[i] * h;
    }
    double exact_mass1 = 0.0;
    for (int i = 0; i < n; ++i) exact_mass1 += mehler_1d(a, x[i], t1) * h;
    return {err / peak, std::fabs(mass1 - exact_mass1) / exact_mass1};
}

PdeCheckResult mehler_pde_check_2d(double a, int grid_points, double box, double t0,
                                   double t1, int steps) {
    if (t0 <= 0 || t1 <= t0) fail(ErrorKind::domain, "need 0 < t0 < t1");
    if (a * t1 >= std::numbers::pi)
        fail(ErrorKind::domain, "a t must stay below the focal time pi/a");
    const int n = grid_points;
    const double h = 2.0 * box / (n - 1);
    const double dt = (t1 - t0) / steps;
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = -box + i * h;
    std::vector<double> u(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            u[static_cast<size_t>(i) * n + j] =
                mehler_1d_inverted(a, x[i], t0) * mehler_1d_inverted(a, x[j], t0);

    // Peaceman-Rachford ADI for u_t = Lap u + (a^2/4) |x|^2 u with
    // A_x = d_x^2 + (a^2/4) x^2 and A_y the y analogue.
    const double r = dt / (2.0 * h * h);
    std::vector<double> lower(n), diag(n), upper(n), rhs(n);
    std::vector<double> ustar(static_cast<size_t>(n) * n);
    auto pot = [&](int i) { return -0.25 * a * a * x[i] * x[i]; };
    for (int step = 0; step < steps; ++step) {
        // x-implicit half step
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                if (i == 0 || i == n - 1 || j == 0 || j == n - 1) {
                    lower[i] = 0.0; diag[i] = 1.0; upper[i] = 0.0; rhs[i] = 0.0;
                    continue;
                }
                lower[i] = -r;
                upper[i] = -r;
                diag[i] = 1.0 + 2.0 * r + 0.5 * dt * pot(i);
                double uy = u[static_cast<size_t>(i) * n + j + 1] -
                            2.0 * u[static_cast<size_t>(i) * n + j] +
                            u[static_cast<size_t>(i) * n + j - 1];
                rhs[i] = u[static_cast<size_t>(i) * n + j] + r * uy -
                         0.5 * dt * pot(j) * u[static_cast<size_t>(i) * n + j];
            }
            tridiag_solve(lower, diag, upper, rhs);
            for (int i = 0; i < n; ++i) ustar[static_cast<size_t>(i) * n + j] = rhs[i];
        }
        // y-implicit half step
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == 0 || i == n - 1 || j == 0 || j == n - 1) {
                    lower[j] = 0.0; diag[j] = 1.0; upper[j] = 0.0; rhs[j] = 0.0;
                    continue;
                }
                lower[j] = -r;
                upper[j] = -r;
                diag[j] = 1.0 + 2.0 * r + 0.5 * dt * pot(j);
                double ux = ustar[static_cast<size_t>(i + 1) * n + j] -
                            2.0 * ustar[static_cast<size_t>(i) * n + j] +
                            ustar[static_cast<size_t>(i - 1) * n + j];
                rhs[j] = ustar[static_cast<size_t>(i) * n + j] + r * ux -
                         0.5 * dt * pot(i) * ustar[static_cast<size_t>(i) * n + j];
            }
            tridiag_solve(lower, diag, upper, rhs);
            for (int j = 0; j < n; ++j) u[static_cast<size_t>(i) * n + j] = rhs[j];
        }
    }

    double peak = 0.0, err = 0.0, mass = 0.0, emass = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double exact = mehler_1d_inverted(a, x[i], t1) * mehler_1d_inverted(a, x[j], t1);
            double got = u[static_cast<size_t>(i) * n + j];
            peak = std::max(peak, std::fabs(exact));
            err = std::max(err, std::fabs(got - exact));
            mass += got * h * h;
            emass += exact * h * h;
        }
    return {err / peak, std::fabs(mass - emass) / emass};
}

namespace {

/// Gauss-Hermite nodes/weights (weight e^{-x^2}) by Newton iteration.
void gauss_hermite(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(m, 0.0);
    weights.assign(m, 0.0);
    const double pim4 = 0.7511255444649425; // pi^{-1/4}
    double z = 0.0;
    for (int i = 0; i < (m + 1) / 2; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * m + 1.0) - 1.85575 * std::pow(2.0 * m + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(m, 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * nodes[1];
        else
            z = 2.0 * z - nodes[i - 2];
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < m; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * m) * p2;
            double dz = p1 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        nodes[i] = z;
        nodes[m - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[m - 1 - i] = weights[i];
    }
}

} // namespace

double quadrature_radial_value(const std::vector<int>& beta, int base_pow, int n_dim,
                               int points) {
    if (static_cast<int>(beta.size()) != n_dim)
        fail(ErrorKind::dimension, "beta length must match the dimension");
    int btot = 0;
    for (int b : beta) btot += b;
    if (base_pow < 1 || btot - 2 * base_pow >= 0)
        fail(ErrorKind::domain, "divergent parameter range (non-smoothing term)");
    std::vector<double> x, w;
    gauss_hermite(points, x, w);
    double prod = 1.0;
    for (int b : beta) {
        double s = 0.0;
        for (int j = 0; j < points; ++j) s += w[j] * std::pow(x[j], b);
        prod *= s;
    }
    double fact = 1.0;
    for (int k = 2; k < base_pow; ++k) fact *= k;
    return std::pow(2.0 * std::numbers::pi, -n_dim) * prod / fact;
}

double radial_reference(const std::vector<int>& beta, int base_pow, int n_dim) {
    Rational moment = rat(1);
    for (int b : beta) {
        if (b % 2) return 0.0;
        moment *= double_factorial(b - 1) / pow_int(rat(2), b / 2);
    }
    moment /= factorial(base_pow - 1);
    moment *= pow_int(rat(2), -n_dim);
    return to_double(moment) * std::pow(std::numbers::pi, -0.5 * n_dim);
}

} // namespace heatsym::oracle
