#ifndef HEATSYM_GETZLER_HPP
#define HEATSYM_GETZLER_HPP

#include <optional>

#include "heatsym/symbol.hpp"

namespace heatsym {

/// Getzler degree of an elementary piece
///   x^a * (form of degree f) * xi^beta * tau^s * B^{-N}:
///   |beta| + 2s - 2N + f - |a|,
/// reproducing deg d_j = 1/2 deg d_t = deg c(dx^j) = -deg x^j = 1 on
/// generators (matrix factors have degree 0).
inline int getzler_degree(const TermKey& key, mi::Mono xmono, int form_degree) {
    return parabolic_degree(key) + form_degree - mi::total(xmono);
}

/// Maximum Getzler degree over all stored pieces; empty for the zero
/// symbol (the -infinity sentinel).
std::optional<int> getzler_order(const VolterraSymbol& q);

/// Sum of the pieces of Getzler degree exactly m (the Getzler order),
/// with Clifford coefficients reinterpreted as exterior forms through
/// the sigma map and the polynomial x-dependence retained.
VolterraSymbol model_operator(const VolterraSymbol& q);

/// Leading small-time behavior of sigma[K_Q(0,0,t)]^{(j)} per the
/// Getzler filtration: for m - j even the term is
/// t^{(j-m-n)/2 - 1} * coefficient + O(t^{(j-m-n)/2}); for m - j odd the
/// coefficient vanishes and only the error bound t^{(j-m-n-1)/2} is
/// certified by term bookkeeping.
struct KernelLeadingTerm {
    Rational t_exponent;     // exponent of the leading power (or of the bound)
    FormElement coefficient; // sigma-image, pure degree j
    Rational error_exponent; // exponent of the remainder bound
    bool vanishes = false;   // odd case
};

KernelLeadingTerm kernel_leading_term(const VolterraSymbol& q, int j);

} // namespace heatsym

#endif
