#include "heatsym/chern.hpp"

#include <bit>

namespace heatsym {

namespace {

// Rational power series c[0] + c[1] w + ... used with w -> M^2 (so one
// power of w is two form degrees); everything is cut at w^maxk.

std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, int maxk) {
    std::vector<Rational> out(maxk + 1, rat(0));
    for (int i = 0; i <= maxk; ++i) {
        if (i >= static_cast<int>(a.size()) || a[i] == 0) continue;
        for (int j = 0; i + j <= maxk; ++j) {
            if (j >= static_cast<int>(b.size()) || b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Rational> series_inverse(const std::vector<Rational>& a, int maxk) {
    if (a.empty() || a[0] != 1) fail(ErrorKind::internal, "series inverse needs unit constant term");
    std::vector<Rational> inv(maxk + 1, rat(0));
    inv[0] = rat(1);
    for (int k = 1; k <= maxk; ++k) {
        Rational s = rat(0);
        for (int j = 1; j <= k; ++j) {
            Rational aj = (j < static_cast<int>(a.size())) ? a[j] : rat(0);
            s += aj * inv[k - j];
        }
        inv[k] = -s;
    }
    return inv;
}

std::vector<Rational> series_log1p(const std::vector<Rational>& a, int maxk) {
    // log(a) with a[0] = 1: sum (-1)^{j+1} (a-1)^j / j.
    std::vector<Rational> w(a);
    if (w.empty() || w[0] != 1) fail(ErrorKind::internal, "series log needs unit constant term");
    w[0] = rat(0);
    std::vector<Rational> out(maxk + 1, rat(0));
    std::vector<Rational> pw(maxk + 1, rat(0));
    pw[0] = rat(1);
    for (int j = 1; j <= maxk; ++j) {
        pw = series_mul(pw, w, maxk);
        Rational sign = (j % 2) ? rat(1) : rat(-1);
        for (int k = 0; k <= maxk; ++k) out[k] += sign * pw[k] / rat(j);
    }
    return out;
}

// sinh(u)/u and cosh(u) as series in w = u^2.
std::vector<Rational> sinh_over_u(int maxk) {
    std::vector<Rational> s(maxk + 1);
    for (int k = 0; k <= maxk; ++k) s[k] = rat(1) / factorial(2 * k + 1);
    return s;
}
std::vector<Rational> cosh_series(int maxk) {
    std::vector<Rational> s(maxk + 1);
    for (int k = 0; k <= maxk; ++k) s[k] = rat(1) / factorial(2 * k);
    return s;
}

std::vector<Rational> substitute_quarter(const std::vector<Rational>& a) {
    // f(u^2) -> f(x^2/4): coefficient of x^{2k} is a[k] / 4^k.
    std::vector<Rational> out(a);
    for (size_t k = 0; k < out.size(); ++k) out[k] /= pow_int(rat(4), static_cast<long>(k));
    return out;
}

/// log((x/2)/sinh(x/2)) as a series in w = x^2.
std::vector<Rational> log_half_sinh_ratio(int maxk) {
    std::vector<Rational> s = substitute_quarter(sinh_over_u(maxk));
    std::vector<Rational> l = series_log1p(s, maxk);
    for (auto& v : l) v = -v;
    return l;
}

/// (x/2)/tanh(x/2) as a series in w = x^2.
std::vector<Rational> half_coth_ratio(int maxk) {
    std::vector<Rational> s = substitute_quarter(sinh_over_u(maxk));
    std::vector<Rational> c = substitute_quarter(cosh_series(maxk));
    return series_mul(c, series_inverse(s, maxk), maxk);
}

ExtScalar four_pi_t_pow(int n, const Rational& t) {
    // (4 pi t)^{-n/2}
    if (t <= 0) fail(ErrorKind::domain, "Mehler kernel needs t > 0");
    Rational mant;
    if (n % 2 == 0)
        mant = pow_int(rat(4) * t, -(n / 2));
    else
        mant = pow_int(rat(4) * t, -((n + 1) / 2)) * sqrt_exact(rat(4) * t);
    return ExtScalar::rational(mant, -n);
}

} // namespace

FormMatrix::FormMatrix(int n)
    : n_(n), e_(static_cast<size_t>(n) * n, FormElement(n, 1, Algebra::exterior)) {}

FormMatrix FormMatrix::from_curvature(const CurvatureData& R) {
    const int n = R.dim();
    FormMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FormElement& f = out.at(i, j);
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const Rational& v = R.riemann(i + 1, j + 1, k + 1, l + 1);
                    if (v == 0) continue;
                    int idx[2] = {k + 1, l + 1};
                    f.add_monomial(idx, ScalarMatrix::scalar(1, ExtScalar::rational(v)));
                }
        }
    return out;
}

void FormMatrix::validate() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (!(at(i, j) + at(j, i)).is_zero())
                fail(ErrorKind::validation, "form matrix is not antisymmetric");
            for (const auto& [mask, m] : at(i, j).terms())
                if (std::popcount(mask) % 2 != 0 || mask == 0)
                    fail(ErrorKind::validation, "form matrix entries must be even forms of degree >= 2");
        }
}

FormMatrix operator*(const FormMatrix& a, const FormMatrix& b) {
    if (a.n_ != b.n_) fail(ErrorKind::dimension, "form matrix dimension mismatch");
    FormMatrix out(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.n_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return out;
}

FormMatrix FormMatrix::scaled(const ExtScalar& v) const {
    FormMatrix out(n_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k].scaled(v);
    return out;
}

FormElement FormMatrix::trace() const {
    FormElement t(n_, 1, Algebra::exterior);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

FormElement exp_form(const FormElement& f) {
    if (!f.component(0).is_zero())
        fail(ErrorKind::domain, "exp_form needs a nilpotent argument (no degree-0 part)");
    FormElement out = FormElement::scalar(f.dim(), f.rank(), ExtScalar::integer(1), f.algebra());
    FormElement power = out;
    Rational fact = rat(1);
    for (int k = 1; k <= f.dim(); ++k) {
        power = power * f;
        if (power.is_zero()) break;
        fact *= rat(k);
        out += power.scaled(ExtScalar::rational(rat(1) / fact));
    }
    return out;
}

FormElement a_hat_form(const FormMatrix& Rm) {
    const int n = Rm.dim();
    const int maxk = n / 2;
    std::vector<Rational> l = log_half_sinh_ratio(maxk);
    // 1/2 tr log((M/2)/sinh(M/2)) = 1/2 sum_k l_k tr((M^2)^k).
    FormElement arg(n, 1, Algebra::exterior);
    if (maxk >= 1) {
        FormMatrix m2 = Rm * Rm;
        FormMatrix pw = m2;
        for (int k = 1; k <= maxk; ++k) {
            if (l[k] != 0) arg += pw.trace().scaled(ExtScalar::rational(l[k] / rat(2)));
            if (k < maxk) pw = pw * m2;
        }
    }
    return exp_form(arg);
}

FormElement twist_two_form(const CurvatureData& R) {
    const int n = R.dim(), p = R.rank();
    FormElement f(n, p, Algebra::exterior);
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            const ScalarMatrix& m = R.twist(k + 1, l + 1);
            if (m.is_zero()) continue;
            int idx[2] = {k + 1, l + 1};
            f.add_monomial(idx, m);
        }
    return f;
}

FormElement chern_form(const FormElement& F) {
    return exp_form(-F).matrix_trace();
}

MehlerValue mehler_kernel(const FormMatrix& Rm, const std::vector<Rational>& x,
                          const Rational& t) {
    const int n = Rm.dim();
    if (static_cast<int>(x.size()) != n) fail(ErrorKind::dimension, "point dimension mismatch");
    const int maxk = n / 2;

    MehlerValue out;
    out.gauss_coeff = rat(1) / (rat(4) * t);
    out.x_norm_sq = rat(0);
    for (const auto& xi : x) out.x_norm_sq += xi * xi;

    // det^{1/2}((tM/2)/sinh(tM/2)) = exp(1/2 sum_k l_k t^{2k} tr((M^2)^k)).
    std::vector<Rational> l = log_half_sinh_ratio(maxk);
    std::vector<Rational> kk = half_coth_ratio(maxk);
    FormElement det_arg(n, 1, Algebra::exterior);
    FormElement quad_arg(n, 1, Algebra::exterior);
    if (maxk >= 1) {
        FormMatrix m2 = Rm * Rm;
        FormMatrix pw = m2;
        for (int k = 1; k <= maxk; ++k) {
            Rational tk = pow_int(t, 2 * k);
            if (l[k] != 0) det_arg += pw.trace().scaled(ExtScalar::rational(l[k] * tk / rat(2)));
            if (kk[k] != 0) {
                // <(pw)_nil x, x> contribution of order k.
                FormElement q(n, 1, Algebra::exterior);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (pw.at(i, j).is_zero()) continue;
                        Rational xij = x[i] * x[j];
                        if (xij == 0) continue;
                        q += pw.at(i, j).scaled(ExtScalar::rational(xij));
                    }
                quad_arg += q.scaled(ExtScalar::rational(-kk[k] * tk * out.gauss_coeff));
            }
            if (k < maxk) pw = pw * m2;
        }
    }
    out.value = exp_form(det_arg) * exp_form(quad_arg);
    out.value = out.value.scaled(four_pi_t_pow(n, t));
    return out;
}

FormElement index_density(const CurvatureData& R) {
    const int n = R.dim();
    if (n % 2 != 0)
        fail(ErrorKind::domain, "index density via the supertrace needs even dimension");
    CurvatureData copy = R;
    if (!R.validated()) copy.validate();
    FormElement ahat = a_hat_form(FormMatrix::from_curvature(copy));
    FormElement ch = chern_form(twist_two_form(copy));
    FormElement density = wedge(ahat, ch).component(n);
    return density.scaled(ExtScalar::two_i_pi_pow(-n / 2));
}

FormElement index_density_with_prefactor(const CurvatureData& R,
                                         const VolterraSymbol& prefactor_model) {
    CurvatureData copy = R;
    if (!R.validated()) copy.validate();
    const int n = copy.dim(), p = copy.rank();
    if (prefactor_model.algebra() != Algebra::exterior)
        fail(ErrorKind::domain, "prefactor must be a model (exterior) symbol");
    if (prefactor_model.dim() != n || prefactor_model.rank() != p)
        fail(ErrorKind::dimension, "prefactor dimension/rank mismatch");

    int max_deriv = 0;
    int order = 0; // Getzler degree of the homogeneous prefactor
    bool any = false;
    for (int j = 0; j <= prefactor_model.depth(); ++j)
        for (const auto& [key, jet] : prefactor_model.component(j).terms()) {
            if (key.base_pow != 0)
                fail(ErrorKind::domain, "prefactor must be a differential symbol");
            max_deriv = std::max(max_deriv, mi::total(key.beta));
            for (const auto& [xmono, coeff] : jet.terms())
                for (const auto& [mask, mat] : coeff.terms()) {
                    int g = mi::total(key.beta) + std::popcount(mask) - mi::total(xmono);
                    order = any ? std::max(order, g) : g;
                    any = true;
                }
        }
    // the leading supertrace (resp. odd trace) coefficient exists only
    // when the prefactor order matches the dimension parity
    if (any && (order % 2 + 2) % 2 != n % 2)
        fail(ErrorKind::domain, "prefactor of wrong parity for the dimension");

    // Mehler kernel at t = 1 as an x-polynomial through degree max_deriv.
    FormMatrix W = FormMatrix::from_curvature(copy);
    const int maxk = n / 2;
    std::vector<Rational> l = log_half_sinh_ratio(maxk);
    std::vector<Rational> kk = half_coth_ratio(maxk);

    FormElement det_arg(n, 1, Algebra::exterior);
    JetPoly quad(n, 1, Algebra::exterior, max_deriv); // -(1/4)<k(W)x, x>
    const Rational quarter = rat(1, 4);
    // scalar part -(1/4)|x|^2
    FormElement one = FormElement::unit(n, 1);
    for (int i = 0; i < n; ++i)
        quad.add_term(mi::inc(mi::inc(0, i), i), one.scaled(ExtScalar::rational(-quarter)));
    if (maxk >= 1) {
        FormMatrix m2 = W * W;
        FormMatrix pw = m2;
        for (int k = 1; k <= maxk; ++k) {
            if (l[k] != 0) det_arg += pw.trace().scaled(ExtScalar::rational(l[k] / rat(2)));
            if (kk[k] != 0)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (pw.at(i, j).is_zero()) continue;
                        quad.add_term(mi::inc(mi::inc(0, i), j),
                                      pw.at(i, j).scaled(ExtScalar::rational(-quarter * kk[k])));
                    }
            if (k < maxk) pw = pw * m2;
        }
    }
    // exp of the jet-valued quadratic argument (truncated by the jet order).
    JetPoly expq = JetPoly::constant(one, max_deriv);
    JetPoly power = expq;
    Rational fact = rat(1);
    for (int k = 1; k <= max_deriv / 2 + n; ++k) {
        power = power * quad;
        if (power.is_zero()) break;
        fact *= rat(k);
        expq += power.scaled(ExtScalar::rational(rat(1) / fact));
    }
    JetPoly g = expq.scaled_form(exp_form(det_arg), true).scaled(four_pi_t_pow(n, rat(1)));

    // Apply the model operator: terms coeff(x) xi^beta act as coeff(x) D^beta.
    const ExtScalar minus_i = -ExtScalar::i();
    FormElement pg_rank(n, p, Algebra::exterior);
    for (int j = 0; j <= prefactor_model.depth(); ++j)
        for (const auto& [key, jet] : prefactor_model.component(j).terms()) {
            JetPoly d = g;
            for (int v = 0; v < n; ++v)
                for (int tcount = 0; tcount < mi::get(key.beta, v); ++tcount)
                    d = d.derivative(v);
            FormElement dval = d.value_at_origin().scaled(minus_i.pow(mi::total(key.beta)));
            if (dval.is_zero()) continue;
            // only the x^0 part of the coefficient survives at the origin
            FormElement c0 = jet.value_at_origin();
            if (c0.is_zero()) continue;
            // embed the rank-1 kernel value into rank p and multiply in order
            FormElement dval_p(n, p, Algebra::exterior);
            for (const auto& [mask, m] : dval.terms())
                dval_p.add_term(mask, ScalarMatrix::scalar(p, m.at(0, 0)));
            pg_rank += c0 * dval_p;
        }

    FormElement total = pg_rank * exp_form(-twist_two_form(copy));
    FormElement traced = total.matrix_trace().component(n);
    ExtScalar norm;
    if (n % 2 == 0) {
        norm = ExtScalar::minus_two_i_pow(n / 2);
    } else {
        int h = n / 2;
        ExtScalar two_h = ExtScalar::integer(1);
        for (int k = 0; k < h; ++k) two_h *= ExtScalar::integer(2);
        norm = (-ExtScalar::i()).pow(h + 1) * two_h;
    }
    return traced.scaled(norm);
}

} // namespace heatsym
