#include "heatsym/jet.hpp"

#include <sstream>

namespace heatsym {

namespace mi {

namespace {
void enumerate_rec(int n, int var, int budget, Mono cur, std::vector<Mono>& out) {
    if (var == n) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= budget; ++k)
        enumerate_rec(n, var + 1, budget - k, inc(cur, var, k), out);
}
} // namespace

std::vector<Mono> enumerate(int n, int max_total) {
    std::vector<Mono> out;
    enumerate_rec(n, 0, max_total, 0, out);
    return out;
}

} // namespace mi

JetPoly JetPoly::constant(const FormElement& c, int order) {
    JetPoly j(c.dim(), c.rank(), c.algebra(), order);
    j.add_term(0, c);
    return j;
}

void JetPoly::add_term(mi::Mono xmono, const FormElement& coeff) {
    if (coeff.is_zero()) return;
    if (mi::total(xmono) > order_) return;
    auto [it, inserted] = terms_.try_emplace(xmono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormElement JetPoly::value_at_origin() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? FormElement(n_, p_, alg_) : it->second;
}

const FormElement* JetPoly::coefficient(mi::Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

JetPoly JetPoly::operator-() const {
    JetPoly out = zero_like(*this);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

JetPoly& JetPoly::operator+=(const JetPoly& o) {
    order_ = std::min(order_, o.order_);
    std::erase_if(terms_, [&](const auto& kv) { return mi::total(kv.first) > order_; });
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

JetPoly& JetPoly::operator-=(const JetPoly& o) { return *this += -o; }

JetPoly operator*(const JetPoly& a, const JetPoly& b) {
    JetPoly out(a.n_, a.p_, a.alg_, std::min(a.order_, b.order_));
    for (const auto& [ma, ca] : a.terms_) {
        int da = mi::total(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mi::total(mb) > out.order_) continue;
            out.add_term(ma + mb, ca * cb);
        }
    }
    return out;
}

JetPoly JetPoly::scaled(const ExtScalar& v) const {
    JetPoly out = zero_like(*this);
    if (v.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c.scaled(v));
    return out;
}

JetPoly JetPoly::scaled_form(const FormElement& f, bool left) const {
    JetPoly out = zero_like(*this);
    for (const auto& [m, c] : terms_) out.add_term(m, left ? f * c : c * f);
    return out;
}

JetPoly JetPoly::derivative(int i) const {
    JetPoly out = zero_like(*this);
    for (const auto& [m, c] : terms_) {
        int e = mi::get(m, i);
        if (e == 0) continue;
        out.add_term(mi::dec(m, i), c.scaled(ExtScalar::integer(e)));
    }
    return out;
}

JetPoly JetPoly::with_order(int order) const {
    JetPoly out(n_, p_, alg_, order);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

JetPoly JetPoly::with_algebra(Algebra alg) const {
    JetPoly out(n_, p_, alg, order_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.with_algebra(alg));
    return out;
}

bool operator==(const JetPoly& a, const JetPoly& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.alg_ == b.alg_ && a.terms_ == b.terms_;
}

std::string JetPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < n_; ++i) {
            int e = mi::get(m, i);
            if (e == 1) os << "*x" << (i + 1);
            else if (e > 1) os << "*x" << (i + 1) << "^" << e;
        }
    }
    return os.str();
}

} // namespace heatsym
