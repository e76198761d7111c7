#include "heatsym/getzler.hpp"

#include <bit>

namespace heatsym {

std::optional<int> getzler_order(const VolterraSymbol& q) {
    std::optional<int> best;
    for (int j = 0; j <= q.depth(); ++j)
        for (const auto& [key, jet] : q.component(j).terms())
            for (const auto& [xmono, coeff] : jet.terms())
                for (const auto& [mask, mat] : coeff.terms()) {
                    int g = getzler_degree(key, xmono, std::popcount(mask));
                    if (!best || g > *best) best = g;
                }
    return best;
}

VolterraSymbol model_operator(const VolterraSymbol& q) {
    std::optional<int> m = getzler_order(q);
    if (!m) fail(ErrorKind::domain, "model operator of the zero symbol");
    VolterraSymbol out(q.dim(), q.rank(), Algebra::exterior, q.jet_order(), q.leading(),
                       q.depth());
    for (int j = 0; j <= q.depth(); ++j) {
        TermSum& dst = out.component(j);
        for (const auto& [key, jet] : q.component(j).terms()) {
            JetPoly filtered(jet.vars(), jet.rank(), Algebra::exterior, jet.order());
            for (const auto& [xmono, coeff] : jet.terms()) {
                FormElement keep(coeff.dim(), coeff.rank(), Algebra::exterior);
                for (const auto& [mask, mat] : coeff.terms())
                    if (getzler_degree(key, xmono, std::popcount(mask)) == *m)
                        keep.add_term(mask, mat);
                if (!keep.is_zero()) filtered.add_term(xmono, keep);
            }
            if (!filtered.is_zero()) dst.add_term(key, filtered);
        }
    }
    return out;
}

KernelLeadingTerm kernel_leading_term(const VolterraSymbol& q, int j) {
    const int n = q.dim();
    if (j > n || j < 0) fail(ErrorKind::dimension, "form degree out of range");
    std::optional<int> mo = getzler_order(q);
    if (!mo) fail(ErrorKind::domain, "kernel term of the zero symbol");
    int m = *mo;

    KernelLeadingTerm out;
    if ((m - j) % 2 != 0) {
        out.vanishes = true;
        out.t_exponent = rat(j - m - n - 1, 2);
        out.error_exponent = out.t_exponent;
        out.coefficient = FormElement(n, q.rank(), Algebra::exterior);
        return out;
    }
    out.t_exponent = rat(j - m - n, 2) - 1;
    out.error_exponent = rat(j - m - n, 2);
    FormElement value = radial_eval(q.component_of_degree(m - j));
    if (value.algebra() == Algebra::clifford) value = symbol_map(value);
    out.coefficient = value.component(j);
    return out;
}

} // namespace heatsym
