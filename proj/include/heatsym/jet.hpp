#ifndef HEATSYM_JET_HPP
#define HEATSYM_JET_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "heatsym/form.hpp"

namespace heatsym {

/// Packed multi-index: 8 bits per variable, up to 8 variables.
namespace mi {

using Mono = std::uint64_t;

inline int get(Mono m, int i) { return static_cast<int>((m >> (8 * i)) & 0xff); }
inline Mono inc(Mono m, int i, int by = 1) { return m + (static_cast<Mono>(by) << (8 * i)); }
inline Mono dec(Mono m, int i, int by = 1) { return m - (static_cast<Mono>(by) << (8 * i)); }
inline int total(Mono m) {
    int s = 0;
    while (m) { s += static_cast<int>(m & 0xff); m >>= 8; }
    return s;
}
inline Mono pack(const std::vector<int>& a) {
    Mono m = 0;
    for (size_t i = 0; i < a.size(); ++i) m |= static_cast<Mono>(a[i] & 0xff) << (8 * i);
    return m;
}
inline std::vector<int> unpack(Mono m, int n) {
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = get(m, i);
    return a;
}
inline Rational factorial(Mono m) {
    Rational f = rat(1);
    while (m) { f *= heatsym::factorial(static_cast<long>(m & 0xff)); m >>= 8; }
    return f;
}
/// All multi-indices over n variables with |m| <= max_total.
std::vector<Mono> enumerate(int n, int max_total);

} // namespace mi

/// Polynomial jet in x = (x^1..x^n) with FormElement coefficients,
/// truncated at a fixed total order: monomials above the order are
/// dropped by every operation (arithmetic in the quotient by x^{J+1}).
class JetPoly {
public:
    JetPoly() : n_(0), p_(1), alg_(Algebra::exterior), order_(0) {}
    JetPoly(int n_vars, int p, Algebra alg, int order)
        : n_(n_vars), p_(p), alg_(alg), order_(order) {}

    static JetPoly constant(const FormElement& c, int order);
    static JetPoly zero_like(const JetPoly& proto) {
        return JetPoly(proto.n_, proto.p_, proto.alg_, proto.order_);
    }

    int vars() const { return n_; }
    int rank() const { return p_; }
    Algebra algebra() const { return alg_; }
    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<mi::Mono, FormElement>& terms() const { return terms_; }

    void add_term(mi::Mono xmono, const FormElement& coeff);
    /// Coefficient of x^0.
    FormElement value_at_origin() const;
    const FormElement* coefficient(mi::Mono m) const;

    JetPoly operator-() const;
    JetPoly& operator+=(const JetPoly& o);
    JetPoly& operator-=(const JetPoly& o);
    friend JetPoly operator+(JetPoly a, const JetPoly& b) { return a += b; }
    friend JetPoly operator-(JetPoly a, const JetPoly& b) { return a -= b; }
    friend JetPoly operator*(const JetPoly& a, const JetPoly& b);
    JetPoly scaled(const ExtScalar& v) const;
    JetPoly scaled_form(const FormElement& f, bool left) const;

    /// Plain partial derivative d/dx^i (0-based variable index).
    JetPoly derivative(int i) const;
    JetPoly with_order(int order) const;
    JetPoly with_algebra(Algebra alg) const;

    friend bool operator==(const JetPoly& a, const JetPoly& b);
    friend bool operator!=(const JetPoly& a, const JetPoly& b) { return !(a == b); }

    std::string str() const;

private:
    int n_, p_;
    Algebra alg_;
    int order_;
    std::map<mi::Mono, FormElement> terms_;
};

} // namespace heatsym

#endif
