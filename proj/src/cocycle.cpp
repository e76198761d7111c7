#include "heatsym/cocycle.hpp"

#include <algorithm>
#include <vector>

namespace heatsym {

namespace {

/// Signed permutations of {0..m-1} (index list, sign).
void permutations(int m, std::vector<std::pair<std::vector<int>, int>>& out) {
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end());
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (idx[i] > idx[j]) ++inv;
        out.emplace_back(idx, (inv % 2) ? -1 : 1);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

/// int f0 df1 ^ ... ^ dfm over T^d for scalar functions (m = d).
ExtScalar scalar_chain_integral(std::span<const TrigPoly> args) {
    const int m = static_cast<int>(args.size()) - 1;
    const int d = args[0].torus_dim();
    if (m != d) fail(ErrorKind::dimension, "top-degree chain needs m = d");
    std::vector<std::pair<std::vector<int>, int>> perms;
    permutations(m, perms);
    ExtScalar out;
    for (const auto& [p, sign] : perms) {
        TrigPoly prod = args[0];
        for (int j = 1; j <= m; ++j) prod = prod * args[j].derivative(p[j - 1]);
        ExtScalar v = prod.integral();
        out += (sign < 0) ? -v : v;
    }
    return out;
}

ExtScalar two_i_pi_neg_half(int n) { return ExtScalar::two_i_pi_half_pow(-n); }

} // namespace

ExtScalar CocycleComponent::operator()(std::span<const TrigPoly> args) const {
    if (static_cast<int>(args.size()) != arity)
        fail(ErrorKind::dimension, "cochain arity mismatch");
    return eval(args);
}

ExtScalar cm_even_value(int k, int n, std::span<const TrigPoly> args) {
    if (n % 2) fail(ErrorKind::domain, "even component needs even dimension");
    if (static_cast<int>(args.size()) != 2 * k + 1)
        fail(ErrorKind::dimension, "even component arity mismatch");
    if (2 * k != n) return ExtScalar(); // flat torus: Ahat^{(n-2k)} = 0 unless 2k = n
    ExtScalar integral = scalar_chain_integral(args);
    return two_i_pi_neg_half(n) * ExtScalar::rational(rat(1) / factorial(2 * k)) * integral;
}

CocycleComponent cm_even_component(int k, int n) {
    CocycleComponent c;
    c.arity = 2 * k + 1;
    c.eval = [k, n](std::span<const TrigPoly> args) { return cm_even_value(k, n, args); };
    return c;
}

ExtScalar cm_odd_value(int k, int n, std::span<const TrigPoly> args) {
    if (n % 2 == 0) fail(ErrorKind::domain, "odd component needs odd dimension");
    if (static_cast<int>(args.size()) != 2 * k + 2)
        fail(ErrorKind::dimension, "odd component arity mismatch");
    if (2 * k + 1 != n) return ExtScalar();
    ExtScalar integral = scalar_chain_integral(args);
    ExtScalar norm = ExtScalar::sqrt_two_i_pi() * ExtScalar::two_i_pi_pow(-(n / 2) - 1);
    return norm * ExtScalar::rational(rat(1) / factorial(2 * k + 1)) * integral;
}

CocycleComponent cm_odd_component(int k, int n) {
    CocycleComponent c;
    c.arity = 2 * k + 2;
    c.eval = [k, n](std::span<const TrigPoly> args) { return cm_odd_value(k, n, args); };
    return c;
}

CocycleComponent hochschild_b(const CocycleComponent& psi) {
    CocycleComponent out;
    out.arity = psi.arity + 1;
    int k = psi.arity - 1; // psi in C^k
    out.eval = [psi, k](std::span<const TrigPoly> a) {
        ExtScalar sum;
        std::vector<TrigPoly> args(a.begin(), a.end());
        for (int j = 0; j <= k; ++j) {
            std::vector<TrigPoly> v;
            v.reserve(k + 1);
            for (int i = 0; i < j; ++i) v.push_back(args[i]);
            v.push_back(args[j] * args[j + 1]);
            for (int i = j + 2; i <= k + 1; ++i) v.push_back(args[i]);
            ExtScalar term = psi(v);
            sum += (j % 2) ? -term : term;
        }
        std::vector<TrigPoly> wrap;
        wrap.reserve(k + 1);
        wrap.push_back(args[k + 1] * args[0]);
        for (int i = 1; i <= k; ++i) wrap.push_back(args[i]);
        ExtScalar term = psi(wrap);
        sum += ((k + 1) % 2) ? -term : term;
        return sum;
    };
    return out;
}

CocycleComponent insert_unit_b0(const CocycleComponent& psi) {
    CocycleComponent out;
    out.arity = psi.arity - 1;
    out.eval = [psi](std::span<const TrigPoly> a) {
        std::vector<TrigPoly> v;
        v.reserve(a.size() + 1);
        v.push_back(TrigPoly::constant(a[0].torus_dim(), ExtScalar::integer(1)));
        v.insert(v.end(), a.begin(), a.end());
        return psi(v);
    };
    return out;
}

CocycleComponent cyclic_antisymmetrizer(const CocycleComponent& psi) {
    CocycleComponent out;
    out.arity = psi.arity;
    int m = psi.arity; // on C^{m-1}
    out.eval = [psi, m](std::span<const TrigPoly> a) {
        ExtScalar sum;
        for (int j = 0; j < m; ++j) {
            std::vector<TrigPoly> v;
            v.reserve(m);
            for (int i = 0; i < m; ++i) v.push_back(a[(j + i) % m]);
            ExtScalar term = psi(v);
            sum += (((m - 1) * j) % 2) ? -term : term;
        }
        return sum;
    };
    return out;
}

CocycleComponent connes_boundary(const CocycleComponent& psi) {
    return cyclic_antisymmetrizer(insert_unit_b0(psi));
}

ExtScalar cocycle_residual(const CocycleComponent& low, const CocycleComponent& high,
                           std::span<const TrigPoly> args) {
    CocycleComponent blow = hochschild_b(low);
    CocycleComponent bhigh = connes_boundary(high);
    if (blow.arity != bhigh.arity)
        fail(ErrorKind::dimension, "components are not at adjacent levels");
    return blow(args) + bhigh(args);
}

ExtScalar torus_chain_integral(std::span<const TrigMatrix> args) {
    const int m = static_cast<int>(args.size()) - 1;
    const int d = args[0].torus_dim();
    if (m != d) fail(ErrorKind::dimension, "top-degree chain needs m = d");
    std::vector<std::pair<std::vector<int>, int>> perms;
    permutations(m, perms);
    ExtScalar out;
    for (const auto& [p, sign] : perms) {
        TrigMatrix prod = args[0];
        for (int j = 1; j <= m; ++j) prod = prod * args[j].derivative(p[j - 1]);
        ExtScalar v = prod.trace().integral();
        out += (sign < 0) ? -v : v;
    }
    return out;
}

ExtScalar pair_even_torus(const TrigMatrix& e, int n) {
    if (n % 2) fail(ErrorKind::domain, "even pairing needs even dimension");
    if (!e.is_idempotent() || !e.is_selfadjoint())
        fail(ErrorKind::validation, "pairing input is not a selfadjoint idempotent");
    // sum_k (-1)^k (2k)!/k! phi_2k # Tr(e..e); only 2k = n survives on the
    // flat torus, giving (-1)^{n/2}/(n/2)! (2 i pi)^{-n/2} int tr(e (de)^n).
    int k = n / 2;
    std::vector<TrigMatrix> chain(static_cast<size_t>(n) + 1, e);
    ExtScalar integral = torus_chain_integral(chain);
    Rational c = rat((k % 2) ? -1 : 1) / factorial(k);
    return two_i_pi_neg_half(n) * ExtScalar::rational(c) * integral;
}

ExtScalar pair_even_sphere(const SphereMatrix& e) {
    if (!e.is_idempotent() || !e.is_selfadjoint())
        fail(ErrorKind::validation, "pairing input is not a selfadjoint idempotent");
    // n = 2: phi_0 vanishes (Ahat has no degree-2 part) and the k = 1 term
    // gives -(2 i pi)^{-1} int tr(e de de).
    SphereMatrix d1 = e.derivative(0), d2 = e.derivative(1), d3 = e.derivative(2);
    auto component = [&](const SphereMatrix& da, const SphereMatrix& db) {
        return (e * (da * db - db * da)).trace();
    };
    // tr(e de^2) = sum_{i<j} tr(e [d_i e, d_j e]) dx_i ^ dx_j
    SpherePoly w12 = component(d1, d2);
    SpherePoly w13 = component(d1, d3);
    SpherePoly w23 = component(d2, d3);
    ExtScalar integral = sphere_two_form_integral(w23, w13, w12);
    return -(ExtScalar::two_i_pi_pow(-1)) * integral;
}

ExtScalar pair_odd(const TrigMatrix& u, int n) {
    if (n % 2 == 0) fail(ErrorKind::domain, "odd pairing needs odd dimension");
    if (!u.is_unitary()) fail(ErrorKind::validation, "pairing input is not unitary");
    // (1/sqrt(2 i pi)) sum_k (-1)^k k! phi_{2k+1} # Tr(U^-1, U, ..., U^-1, U);
    // only 2k+1 = n survives on the flat torus.
    int k = (n - 1) / 2;
    std::vector<TrigMatrix> chain;
    chain.reserve(static_cast<size_t>(n) + 1);
    TrigMatrix uinv = u.adjoint();
    for (int i = 0; i <= n; ++i) chain.push_back((i % 2) ? u : uinv);
    ExtScalar integral = torus_chain_integral(chain);
    ExtScalar phi = ExtScalar::sqrt_two_i_pi() * ExtScalar::two_i_pi_pow(-(n / 2) - 1) *
                    ExtScalar::rational(rat(1) / factorial(n)) * integral;
    Rational c = rat((k % 2) ? -1 : 1) * factorial(k);
    return ExtScalar::sqrt_two_i_pi().inverse() * ExtScalar::rational(c) * phi;
}

ExtScalar aps_spectral_flow(const TrigMatrix& u, int n) {
    if (n % 2 == 0) fail(ErrorKind::domain, "spectral flow formula needs odd dimension");
    if (!u.is_unitary()) fail(ErrorKind::validation, "input is not unitary");
    int k = (n - 1) / 2;
    // omega = U^{-1} dU; int tr(omega^n) with all factors equal.
    TrigMatrix uinv = u.adjoint();
    std::vector<std::pair<std::vector<int>, int>> perms;
    permutations(n, perms);
    ExtScalar integral;
    for (const auto& [p, sign] : perms) {
        TrigMatrix prod = TrigMatrix::identity(u.torus_dim(), u.rank());
        for (int j = 0; j < n; ++j) prod = prod * (uinv * u.derivative(p[j]));
        ExtScalar v = prod.trace().integral();
        integral += (sign < 0) ? -v : v;
    }
    ExtScalar ch = ExtScalar::rational(factorial(k) / factorial(n)) * integral;
    return ExtScalar::two_i_pi_pow(-(n / 2) - 1) * ch;
}

namespace {
ExtScalar gamma_product_inverse(const std::vector<int>& alpha, bool even, int k) {
    long atot = 0;
    Rational afact = rat(1), prod = rat(1), run = rat(0);
    for (size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] < 0) fail(ErrorKind::domain, "negative commutator index");
        atot += alpha[j];
        afact *= factorial(alpha[j]);
        run += rat(alpha[j]) + 1;
        prod *= run;
    }
    Rational sign = rat((atot % 2) ? -1 : 1);
    Rational denom = afact * prod * (even ? rat(2) : rat(1)) * sign;
    // Gamma(|a|+k) (even) or Gamma(|a|+k+1/2) (odd)
    long g = atot + k;
    if (even) {
        if (g < 1) fail(ErrorKind::domain, "Gamma argument must be positive");
        return ExtScalar::rational(factorial(g - 1) / denom);
    }
    // Gamma(g + 1/2) = (2g-1)!!/2^g sqrt(pi)
    Rational gam = double_factorial(2 * g - 1) / pow_int(rat(2), g);
    return ExtScalar::rational(gam / denom, 1);
}
} // namespace

ExtScalar cm_constant_even(int k, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != 2 * k)
        fail(ErrorKind::dimension, "even constant needs a 2k-fold index");
    if (k < 1) fail(ErrorKind::domain, "even constants start at k = 1");
    return gamma_product_inverse(alpha, true, k);
}

ExtScalar cm_constant_odd(int k, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != 2 * k + 1)
        fail(ErrorKind::dimension, "odd constant needs a (2k+1)-fold index");
    return gamma_product_inverse(alpha, false, k);
}

} // namespace heatsym
