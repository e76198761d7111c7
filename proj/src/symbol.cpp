#include "heatsym/symbol.hpp"

namespace heatsym {

void TermSum::add_term(const TermKey& key, const JetPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TermSum TermSum::operator-() const {
    TermSum out(n_, p_, alg_, jet_order_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

TermSum& TermSum::operator+=(const TermSum& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TermSum operator*(const TermSum& a, const TermSum& b) {
    TermSum out(a.n_, a.p_, a.alg_, std::min(a.jet_order_, b.jet_order_));
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            JetPoly c = ca * cb;
            if (c.is_zero()) continue;
            out.add_term({ka.beta + kb.beta, ka.base_pow + kb.base_pow}, c);
        }
    return out;
}

TermSum TermSum::scaled(const ExtScalar& v) const {
    TermSum out(n_, p_, alg_, jet_order_);
    if (v.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.add_term(k, c.scaled(v));
    return out;
}

TermSum TermSum::xi_derivative(int i) const {
    TermSum out(n_, p_, alg_, jet_order_);
    for (const auto& [k, c] : terms_) {
        int bi = mi::get(k.beta, i);
        if (bi > 0)
            out.add_term({mi::dec(k.beta, i), k.base_pow},
                         c.scaled(ExtScalar::integer(bi)));
        if (k.base_pow != 0)
            out.add_term({mi::inc(k.beta, i), k.base_pow + 1},
                         c.scaled(ExtScalar::integer(-2 * k.base_pow)));
    }
    return out;
}

TermSum TermSum::x_derivative(int i) const {
    TermSum out(n_, p_, alg_, jet_order_);
    const ExtScalar minus_i = -ExtScalar::i();
    for (const auto& [k, c] : terms_) {
        JetPoly d = c.derivative(i).scaled(minus_i);
        if (!d.is_zero()) out.add_term(k, d);
    }
    return out;
}

TermSum TermSum::shift_base(int by) const {
    TermSum out(n_, p_, alg_, jet_order_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(TermKey{k.beta, k.base_pow + by}, c);
    return out;
}

TermSum TermSum::with_algebra(Algebra alg) const {
    TermSum out(n_, p_, alg, jet_order_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.with_algebra(alg));
    return out;
}

bool operator==(const TermSum& a, const TermSum& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.alg_ == b.alg_ && a.terms_ == b.terms_;
}

VolterraSymbol::VolterraSymbol(int n, int p, Algebra alg, int jet_order, int leading, int depth)
    : n_(n), p_(p), alg_(alg), jet_order_(jet_order), leading_(leading),
      comps_(depth + 1, TermSum(n, p, alg, jet_order)) {}

VolterraSymbol VolterraSymbol::identity(int n, int p, Algebra alg, int jet_order, int depth) {
    VolterraSymbol s(n, p, alg, jet_order, 0, depth);
    s.comps_[0].add_term({0, 0},
                         JetPoly::constant(FormElement::scalar(n, p, ExtScalar::integer(1), alg),
                                           jet_order));
    return s;
}

VolterraSymbol VolterraSymbol::from_diff_op(const DiffOpSymbol& op, bool add_i_tau, int depth) {
    int m = op.xi_degree();
    if (add_i_tau && m != 2)
        fail(ErrorKind::domain, "heat operator requires a second order symbol");
    VolterraSymbol s(op.dim(), op.rank(), op.algebra(), op.jet_order(), m,
                     std::max(depth, m));
    for (const auto& [beta, jet] : op.parts())
        s.comps_[m - mi::total(beta)].add_term({beta, 0}, jet);
    if (add_i_tau) {
        // i tau = B - |xi|^2 in canonical form.
        FormElement id = FormElement::scalar(op.dim(), op.rank(), ExtScalar::integer(1),
                                             op.algebra());
        JetPoly idj = JetPoly::constant(id, op.jet_order());
        s.comps_[0].add_term({0, -1}, idj);
        for (int i = 0; i < op.dim(); ++i)
            s.comps_[0].add_term({mi::inc(mi::inc(0, i), i), 0}, -idj);
    }
    return s;
}

TermSum VolterraSymbol::component_of_degree(int degree) const {
    int j = leading_ - degree;
    if (j < 0 || j >= static_cast<int>(comps_.size()))
        return TermSum(n_, p_, alg_, jet_order_);
    return comps_[j];
}

bool VolterraSymbol::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

bool VolterraSymbol::is_identity() const {
    VolterraSymbol id = identity(n_, p_, alg_, jet_order_, depth());
    return *this == id;
}

void VolterraSymbol::validate() const {
    for (int j = 0; j < static_cast<int>(comps_.size()); ++j)
        for (const auto& [k, c] : comps_[j].terms()) {
            if (parabolic_degree(k) != leading_ - j)
                fail(ErrorKind::internal,
                     "term of parabolic degree " + std::to_string(parabolic_degree(k)) +
                         " stored in component of degree " + std::to_string(leading_ - j));
            if (c.rank() != p_ || c.vars() != n_)
                fail(ErrorKind::internal, "symbol term with mismatched dimensions");
        }
}

VolterraSymbol VolterraSymbol::scaled(const ExtScalar& v) const {
    VolterraSymbol out(n_, p_, alg_, jet_order_, leading_, depth());
    for (size_t j = 0; j < comps_.size(); ++j) out.comps_[j] = comps_[j].scaled(v);
    return out;
}

VolterraSymbol VolterraSymbol::with_algebra(Algebra alg) const {
    VolterraSymbol out(n_, p_, alg, jet_order_, leading_, depth());
    for (size_t j = 0; j < comps_.size(); ++j) out.comps_[j] = comps_[j].with_algebra(alg);
    return out;
}

bool operator==(const VolterraSymbol& a, const VolterraSymbol& b) {
    if (a.n_ != b.n_ || a.p_ != b.p_ || a.alg_ != b.alg_) return false;
    // Compare by parabolic degree so differing leading orders of zero
    // components do not matter.
    int hi = std::max(a.leading_, b.leading_);
    int lo = std::min(a.leading_ - a.depth(), b.leading_ - b.depth());
    for (int d = hi; d >= lo; --d)
        if (!(a.component_of_degree(d) == b.component_of_degree(d))) return false;
    return true;
}

VolterraSymbol compose_symbols(const VolterraSymbol& q1, const VolterraSymbol& q2, int depth) {
    if (q1.dim() != q2.dim() || q1.rank() != q2.rank())
        fail(ErrorKind::dimension, "composition dimension/rank mismatch");
    if (q1.algebra() != q2.algebra())
        fail(ErrorKind::domain, "composition across algebras");
    if (depth > q1.depth() + 0 || depth > q2.depth() + 0)
        fail(ErrorKind::truncation, "composition depth exceeds stored truncation");
    const int n = q1.dim();
    VolterraSymbol out(n, q1.rank(), q1.algebra(), std::min(q1.jet_order(), q2.jet_order()),
                       q1.leading() + q2.leading(), depth);

    for (int j1 = 0; j1 <= q1.depth(); ++j1) {
        if (q1.component(j1).is_zero()) continue;
        for (mi::Mono alpha : mi::enumerate(n, depth - j1)) {
            int ad = mi::total(alpha);
            if (j1 + ad > depth) continue;
            // d_xi^alpha of the left component, 1/alpha! folded in.
            TermSum left = q1.component(j1);
            for (int v = 0; v < n && !left.is_zero(); ++v)
                for (int t = 0; t < mi::get(alpha, v); ++t) left = left.xi_derivative(v);
            if (left.is_zero()) continue;
            left = left.scaled(ExtScalar::rational(rat(1) / mi::factorial(alpha)));
            for (int j2 = 0; j1 + j2 + ad <= depth && j2 <= q2.depth(); ++j2) {
                if (q2.component(j2).is_zero()) continue;
                TermSum right = q2.component(j2);
                for (int v = 0; v < n && !right.is_zero(); ++v)
                    for (int t = 0; t < mi::get(alpha, v); ++t) right = right.x_derivative(v);
                if (right.is_zero()) continue;
                out.component(j1 + j2 + ad) += left * right;
            }
        }
    }
    return out;
}

VolterraSymbol parametrix_expansion(const DiffOpSymbol& p, int depth, bool check) {
    p.check_principal_scalar();
    const int n = p.dim(), rank = p.rank();
    const Algebra alg = p.algebra();
    const int jo = p.jet_order();

    VolterraSymbol heat = VolterraSymbol::from_diff_op(p, true, std::max(depth, 2));

    // Base (p_2 + i tau)^{-1} = sum_k (-1)^k (B^{-1} r)^k B^{-1} with
    // r = p_2 - |xi|^2 = O(|x|^2); the sum is finite in the jet quotient.
    FormElement id = FormElement::scalar(n, rank, ExtScalar::integer(1), alg);
    TermSum r(n, rank, alg, jo);
    for (const auto& [k, c] : heat.component(0).terms()) {
        if (k.base_pow == -1) continue; // the B term of i tau
        TermKey key = k;
        JetPoly cc = c;
        if (mi::total(k.beta) == 2 && k.base_pow == 0) {
            // remove |xi|^2 * id: the -|xi|^2 of i tau cancels the flat part
            r.add_term(key, cc);
        } else {
            fail(ErrorKind::internal, "unexpected term in principal heat component");
        }
    }
    // r currently holds p_2 - |xi|^2 because from_diff_op added -|xi|^2.
    TermSum base(n, rank, alg, jo);
    TermSum layer(n, rank, alg, jo);
    layer.add_term({0, 1}, JetPoly::constant(id, jo));
    base += layer;
    for (int k = 1; !layer.is_zero() && k <= jo + 2; ++k) {
        layer = (r * layer).shift_base(1).scaled(ExtScalar::integer(-1));
        base += layer;
    }

    VolterraSymbol q(n, rank, alg, jo, -2, depth);
    q.component(0) = base;

    for (int j = 1; j <= depth; ++j) {
        TermSum s(n, rank, alg, jo);
        for (int k = 0; k < j; ++k) {
            if (q.component(k).is_zero()) continue;
            for (int l = 0; l <= std::min(2, j - k); ++l) {
                int ad = j - k - l;
                if (heat.component(l).is_zero()) continue;
                for (mi::Mono alpha : mi::enumerate(n, ad)) {
                    if (mi::total(alpha) != ad) continue;
                    TermSum left = heat.component(l);
                    for (int v = 0; v < n && !left.is_zero(); ++v)
                        for (int t = 0; t < mi::get(alpha, v); ++t) left = left.xi_derivative(v);
                    if (left.is_zero()) continue;
                    left = left.scaled(ExtScalar::rational(rat(1) / mi::factorial(alpha)));
                    TermSum right = q.component(k);
                    for (int v = 0; v < n && !right.is_zero(); ++v)
                        for (int t = 0; t < mi::get(alpha, v); ++t) right = right.x_derivative(v);
                    if (right.is_zero()) continue;
                    s += left * right;
                }
            }
        }
        if (!s.is_zero()) q.component(j) = (base * s).scaled(ExtScalar::integer(-1));
    }

    q.validate();
    if (check) {
        VolterraSymbol res = compose_symbols(heat, q, depth);
        if (!res.is_identity())
            fail(ErrorKind::internal, "parametrix residual (p + i tau) # q - 1 != 0");
    }
    return q;
}

FormElement radial_eval(const TermSum& component) {
    const int n = component.dim();
    FormElement out(n, component.rank(), component.algebra());
    for (const auto& [k, c] : component.terms()) {
        if (k.base_pow < 1)
            fail(ErrorKind::domain,
                 "radial evaluation of a non-smoothing term (base power < 1)");
        bool odd = false;
        Rational moment = rat(1);
        for (int v = 0; v < n; ++v) {
            int b = mi::get(k.beta, v);
            if (b % 2) { odd = true; break; }
            moment *= double_factorial(b - 1) / pow_int(rat(2), b / 2);
        }
        if (odd) continue;
        moment /= factorial(k.base_pow - 1);
        FormElement v0 = c.value_at_origin();
        if (v0.is_zero()) continue;
        out += v0.scaled(ExtScalar::rational(moment));
    }
    // Normalization (4 pi)^{-n/2}: mantissa 2^{-n}, pi grade -n.
    return out.scaled(ExtScalar::rational(pow_int(rat(2), -n), -n));
}

std::vector<FormElement> heat_coefficients(const DiffOpSymbol& p, int count,
                                           const std::optional<DiffOpSymbol>& prefactor) {
    if (p.content_order() != DiffOpSymbol::exact_content && count - 1 > p.content_order() / 2)
        fail(ErrorKind::truncation,
             "jets of order " + std::to_string(p.content_order()) + " support heat coefficients up to a_" +
                 std::to_string(p.content_order() / 2));
    int m = prefactor ? prefactor->xi_degree() : 0;
    int depth = 2 * (count - 1) + (m % 2 ? 1 : 0);
    VolterraSymbol q = parametrix_expansion(p, depth);
    VolterraSymbol r = q;
    if (prefactor) {
        VolterraSymbol pre = VolterraSymbol::from_diff_op(*prefactor, false, depth);
        r = compose_symbols(pre, q, depth);
    }
    // a_l at parabolic degree -2-2l, b_l at 2[m/2]-2-2l.
    int lead_even = 2 * (m / 2) - 2;
    std::vector<FormElement> out;
    out.reserve(count);
    for (int l = 0; l < count; ++l)
        out.push_back(radial_eval(r.component_of_degree(lead_even - 2 * l)));
    return out;
}

} // namespace heatsym
