#include "heatsym/curvature.hpp"

#include <sstream>

namespace heatsym {

namespace {
std::string idx4(int i, int j, int k, int l) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << "," << l << ")";
    return os.str();
}
} // namespace

CurvatureData::CurvatureData(int n, int p) : n_(n), p_(p) {
    if (n < 1 || n > 8) fail(ErrorKind::dimension, "dimension out of supported range");
    if (p < 1) fail(ErrorKind::dimension, "twist rank must be positive");
    riem_.assign(static_cast<size_t>(n) * n * n * n, rat(0));
    twist_.assign(static_cast<size_t>(n) * n, ScalarMatrix(p));
}

Rational& CurvatureData::riem(int i, int j, int k, int l) {
    return riem_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l];
}

const Rational& CurvatureData::riemann(int i, int j, int k, int l) const {
    if (i < 1 || j < 1 || k < 1 || l < 1 || i > n_ || j > n_ || k > n_ || l > n_)
        fail(ErrorKind::dimension, "riemann index out of range");
    return riem_[(((static_cast<size_t>(i) - 1) * n_ + (j - 1)) * n_ + (k - 1)) * n_ + (l - 1)];
}

void CurvatureData::set_riemann(int i, int j, int k, int l, const Rational& v) {
    if (i < 1 || j < 1 || k < 1 || l < 1 || i > n_ || j > n_ || k > n_ || l > n_)
        fail(ErrorKind::dimension, "riemann index out of range");
    --i; --j; --k; --l;
    riem(i, j, k, l) = v;
    riem(j, i, k, l) = -v;
    riem(i, j, l, k) = -v;
    riem(j, i, l, k) = v;
    riem(k, l, i, j) = v;
    riem(l, k, i, j) = -v;
    riem(k, l, j, i) = -v;
    riem(l, k, j, i) = v;
    validated_ = false;
}

void CurvatureData::set_twist(int k, int l, const ScalarMatrix& f) {
    if (k < 1 || l < 1 || k > n_ || l > n_)
        fail(ErrorKind::dimension, "twist index out of range");
    if (f.dim() != p_) fail(ErrorKind::dimension, "twist matrix rank mismatch");
    twist_[static_cast<size_t>(k - 1) * n_ + (l - 1)] = f;
    twist_[static_cast<size_t>(l - 1) * n_ + (k - 1)] = -f;
    has_twist_ = true;
    validated_ = false;
}

const ScalarMatrix& CurvatureData::twist(int k, int l) const {
    return twist_[static_cast<size_t>(k - 1) * n_ + (l - 1)];
}

void CurvatureData::validate() {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    if (riem(i, j, k, l) != -riem(j, i, k, l))
                        fail(ErrorKind::validation,
                             "riemann antisymmetry in the first pair violated at " +
                                 idx4(i + 1, j + 1, k + 1, l + 1));
                    if (riem(i, j, k, l) != -riem(i, j, l, k))
                        fail(ErrorKind::validation,
                             "riemann antisymmetry in the second pair violated at " +
                                 idx4(i + 1, j + 1, k + 1, l + 1));
                    if (riem(i, j, k, l) != riem(k, l, i, j))
                        fail(ErrorKind::validation,
                             "riemann pair symmetry violated at " + idx4(i + 1, j + 1, k + 1, l + 1));
                    if (riem(i, j, k, l) + riem(i, k, l, j) + riem(i, l, j, k) != 0)
                        fail(ErrorKind::validation,
                             "first Bianchi identity violated at " + idx4(i + 1, j + 1, k + 1, l + 1));
                }
    for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
            const ScalarMatrix& f = twist_[static_cast<size_t>(k) * n_ + l];
            const ScalarMatrix& g = twist_[static_cast<size_t>(l) * n_ + k];
            if (!(f + g).is_zero())
                fail(ErrorKind::validation, "twist antisymmetry F_kl = -F_lk violated at (" +
                                                std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
            if (!(f + f.adjoint()).is_zero())
                fail(ErrorKind::validation, "twist matrix F_" + std::to_string(k + 1) +
                                                std::to_string(l + 1) + " is not antihermitian");
        }
    kappa_ = rat(0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) kappa_ += riem(i, j, i, j);
    validated_ = true;
}

const Rational& CurvatureData::kappa() const {
    if (!validated_) fail(ErrorKind::domain, "curvature not validated");
    return kappa_;
}

NormalJets build_normal_jets(const CurvatureData& R, int order) {
    if (order > 2)
        fail(ErrorKind::truncation,
             "jet order " + std::to_string(order) + " exceeds the curvature-only input (max 2)");
    CurvatureData copy = R;
    if (!R.validated()) copy.validate();
    const int n = R.dim();
    auto scalar_jet = [&](int ord) { return JetPoly(n, 1, Algebra::exterior, ord); };
    auto one = FormElement::unit(n, 1);

    NormalJets out;
    out.n = n;
    out.g.assign(static_cast<size_t>(n) * n, scalar_jet(order));
    out.g_inv.assign(static_cast<size_t>(n) * n, scalar_jet(order));
    out.omega.assign(static_cast<size_t>(n) * n * n, scalar_jet(order));
    out.gamma.assign(static_cast<size_t>(n) * n * n, scalar_jet(order));

    Rational third = rat(1, 3), half = rat(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            JetPoly& gij = out.g[static_cast<size_t>(i) * n + j];
            JetPoly& hij = out.g_inv[static_cast<size_t>(i) * n + j];
            if (i == j) {
                gij.add_term(0, one);
                hij.add_term(0, one);
            }
            if (order < 2) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rational c = copy.riemann(i + 1, k + 1, j + 1, l + 1) * third;
                    if (c == 0) continue;
                    mi::Mono m = mi::inc(mi::inc(0, k), l);
                    gij.add_term(m, one.scaled(ExtScalar::rational(-c)));
                    // delta + A with A = O(|x|^2): inverse is delta - A at this order.
                    hij.add_term(m, one.scaled(ExtScalar::rational(c)));
                }
        }

    if (order >= 1) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    JetPoly& w = out.omega[(static_cast<size_t>(i) * n + k) * n + l];
                    for (int j = 0; j < n; ++j) {
                        Rational c = -half * copy.riemann(i + 1, j + 1, k + 1, l + 1);
                        if (c == 0) continue;
                        w.add_term(mi::inc(0, j), one.scaled(ExtScalar::rational(c)));
                    }
                }
        // Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    JetPoly acc = scalar_jet(order);
                    for (int l = 0; l < n; ++l) {
                        JetPoly s = out.g[static_cast<size_t>(j) * n + l].derivative(i) +
                                    out.g[static_cast<size_t>(i) * n + l].derivative(j) -
                                    out.g[static_cast<size_t>(i) * n + j].derivative(l);
                        acc += out.g_inv[static_cast<size_t>(k) * n + l] * s;
                    }
                    out.gamma[(static_cast<size_t>(k) * n + i) * n + j] =
                        acc.scaled(ExtScalar::rational(half));
                }
    }
    return out;
}

JetPoly embed_scalar_jet(const JetPoly& s, int p, Algebra alg) {
    if (s.rank() != 1) fail(ErrorKind::dimension, "embed_scalar_jet expects rank 1");
    JetPoly out(s.vars(), p, alg, s.order());
    for (const auto& [m, c] : s.terms()) {
        FormElement f(s.vars(), p, alg);
        for (const auto& [mask, mat] : c.terms())
            f.add_term(mask, ScalarMatrix::scalar(p, mat.at(0, 0)));
        out.add_term(m, f);
    }
    return out;
}

DiffOpSymbol::DiffOpSymbol(int n, int p, Algebra alg, int jet_order, int content_order)
    : n_(n), p_(p), alg_(alg), jet_order_(jet_order), content_order_(content_order) {}

int DiffOpSymbol::xi_degree() const {
    int d = 0;
    for (const auto& [b, c] : parts_) d = std::max(d, mi::total(b));
    return d;
}

void DiffOpSymbol::add_part(mi::Mono beta, const JetPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = parts_.try_emplace(beta, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

DiffOpSymbol DiffOpSymbol::xi_part(int degree) const {
    DiffOpSymbol out(n_, p_, alg_, jet_order_, content_order_);
    for (const auto& [b, c] : parts_)
        if (mi::total(b) == degree) out.parts_.emplace(b, c);
    return out;
}

void DiffOpSymbol::check_principal_scalar() const {
    FormElement id = FormElement::scalar(n_, p_, ExtScalar::integer(1), alg_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            mi::Mono b = mi::inc(mi::inc(0, i), j);
            auto it = parts_.find(b);
            FormElement v = (it == parts_.end()) ? FormElement(n_, p_, alg_)
                                                 : it->second.value_at_origin();
            bool ok = (i == j) ? (v == id) : v.is_zero();
            if (!ok)
                fail(ErrorKind::validation,
                     "principal symbol at the origin is not |xi|^2 * identity");
        }
}

DiffOpSymbol& DiffOpSymbol::operator+=(const DiffOpSymbol& o) {
    if (n_ != o.n_ || p_ != o.p_ || alg_ != o.alg_)
        fail(ErrorKind::dimension, "operator symbol mismatch");
    content_order_ = std::min(content_order_, o.content_order_);
    for (const auto& [b, c] : o.parts_) add_part(b, c);
    return *this;
}

DiffOpSymbol DiffOpSymbol::scaled(const ExtScalar& v) const {
    DiffOpSymbol out(n_, p_, alg_, jet_order_, content_order_);
    for (const auto& [b, c] : parts_) out.add_part(b, c.scaled(v));
    return out;
}

DiffOpSymbol DiffOpSymbol::left_mul(const JetPoly& f) const {
    DiffOpSymbol out(n_, p_, alg_, jet_order_, content_order_);
    for (const auto& [b, c] : parts_) out.add_part(b, f * c);
    return out;
}

DiffOpSymbol compose(const DiffOpSymbol& a, const DiffOpSymbol& b) {
    if (a.n_ != b.n_ || a.p_ != b.p_ || a.alg_ != b.alg_)
        fail(ErrorKind::dimension, "operator symbol mismatch");
    DiffOpSymbol out(a.n_, a.p_, a.alg_, std::min(a.jet_order_, b.jet_order_),
                     std::min(a.content_order_, b.content_order_));
    const ExtScalar minus_i = -ExtScalar::i();
    for (const auto& [ba, ca] : a.parts_) {
        // alpha <= ba (xi-derivatives of the left factor kill higher alpha).
        std::vector<mi::Mono> alphas = mi::enumerate(a.n_, mi::total(ba));
        for (mi::Mono alpha : alphas) {
            Rational deriv_factor = rat(1);
            bool ok = true;
            mi::Mono rest = ba;
            for (int v = 0; v < a.n_ && ok; ++v) {
                int av = mi::get(alpha, v), bv = mi::get(ba, v);
                if (av > bv) { ok = false; break; }
                for (int t = 0; t < av; ++t) deriv_factor *= rat(bv - t);
                rest = mi::dec(rest, v, av);
            }
            if (!ok || deriv_factor == 0) continue;
            Rational coeff = deriv_factor / mi::factorial(alpha);
            int ad = mi::total(alpha);
            for (const auto& [bb, cb] : b.parts_) {
                JetPoly d = cb;
                for (int v = 0; v < a.n_; ++v)
                    for (int t = 0; t < mi::get(alpha, v); ++t) d = d.derivative(v);
                if (d.is_zero()) continue;
                d = d.scaled(minus_i.pow(ad) * ExtScalar::rational(coeff));
                out.add_part(rest + bb, ca * d);
            }
        }
    }
    return out;
}

namespace {

/// Clifford bivector c(e^k) c(e^l), k != l (0-based entries).
FormElement bivector(int n, int p, int k, int l) {
    return FormElement::generator(n, p, k + 1, Algebra::clifford) *
           FormElement::generator(n, p, l + 1, Algebra::clifford);
}

DiffOpSymbol second_order_part(const CurvatureData& R, const NormalJets& nj, int p,
                               Algebra alg, int jet_order,
                               const std::vector<JetPoly>& sigma) {
    const int n = R.dim();
    DiffOpSymbol out(n, p, alg, jet_order, 2);
    const ExtScalar I = ExtScalar::i();
    FormElement id = FormElement::scalar(n, p, ExtScalar::integer(1), alg);

    // nabla_i as a first order symbol: i xi_i + sigma_i(x).
    auto nabla = [&](int i) {
        DiffOpSymbol s(n, p, alg, jet_order, 2);
        s.add_part(mi::inc(0, i), JetPoly::constant(id.scaled(I), jet_order));
        if (!sigma[i].is_zero()) s.add_part(0, sigma[i]);
        return s;
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            DiffOpSymbol term = compose(nabla(i), nabla(j));
            for (int k = 0; k < n; ++k) {
                const JetPoly& gam = nj.gamma[(static_cast<size_t>(k) * n + i) * n + j];
                if (gam.is_zero()) continue;
                term += nabla(k).left_mul(embed_scalar_jet(gam, p, alg)).scaled(ExtScalar::integer(-1));
            }
            JetPoly ginv = embed_scalar_jet(nj.g_inv[static_cast<size_t>(i) * n + j], p, alg);
            out += term.left_mul(ginv).scaled(ExtScalar::integer(-1));
        }
    return out;
}

} // namespace

DiffOpSymbol lichnerowicz_symbol(const CurvatureData& R, int jet_order) {
    CurvatureData copy = R;
    if (!R.validated()) copy.validate();
    const int n = copy.dim(), p = copy.rank();
    const Algebra alg = Algebra::clifford;
    NormalJets nj = build_normal_jets(copy, std::min(jet_order, 2));

    // sigma_i = 1/4 omega_ikl c(e^k)c(e^l) + A_i, radial gauge A_i = -1/2 F_ij x^j.
    std::vector<JetPoly> sigma(n, JetPoly(n, p, alg, jet_order));
    const Rational quarter = rat(1, 4), half = rat(1, 2);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                if (k == l) continue;
                const JetPoly& w = nj.omega[(static_cast<size_t>(i) * n + k) * n + l];
                if (w.is_zero()) continue;
                JetPoly e = embed_scalar_jet(w.scaled(ExtScalar::rational(quarter)), p, alg);
                sigma[i] += e.scaled_form(bivector(n, p, k, l), true);
            }
        for (int j = 0; j < n; ++j) {
            const ScalarMatrix& f = copy.twist(i + 1, j + 1);
            if (f.is_zero()) continue;
            FormElement fe(n, p, alg);
            fe.add_term(0, f.scaled(ExtScalar::rational(-half)));
            JetPoly a(n, p, alg, jet_order);
            a.add_term(mi::inc(0, j), fe);
            sigma[i] += a;
        }
    }

    DiffOpSymbol out = second_order_part(copy, nj, p, alg, jet_order, sigma);

    // 1/2 c(e^k)c(e^l) F(e_k,e_l) = sum_{k<l} c(e^k)c(e^l) F_kl, plus kappa/4.
    FormElement endo(n, p, alg);
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            const ScalarMatrix& f = copy.twist(k + 1, l + 1);
            if (f.is_zero()) continue;
            endo += bivector(n, p, k, l).scaled_matrix(f, false);
        }
    endo += FormElement::scalar(n, p, ExtScalar::rational(copy.kappa() / 4), alg);
    if (!endo.is_zero()) out.add_part(0, JetPoly::constant(endo, jet_order));

    out.check_principal_scalar();
    return out;
}

DiffOpSymbol laplace_beltrami_symbol(const CurvatureData& R, int jet_order) {
    CurvatureData copy = R;
    if (!R.validated()) copy.validate();
    const int n = copy.dim();
    NormalJets nj = build_normal_jets(copy, std::min(jet_order, 2));
    std::vector<JetPoly> sigma(n, JetPoly(n, 1, Algebra::clifford, jet_order));
    DiffOpSymbol out = second_order_part(copy, nj, 1, Algebra::clifford, jet_order, sigma);
    out.check_principal_scalar();
    return out;
}

} // namespace heatsym
