#include "heatsym/random_inputs.hpp"

namespace heatsym {

Rational random_rational(Rng& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return rat(num(rng), den(rng));
}

ExtScalar random_zeta_scalar(Rng& rng) {
    ExtScalar v;
    for (int k = 0; k < 4; ++k)
        v += ExtScalar::rational(random_rational(rng)) * ExtScalar::zeta(k);
    return v;
}

CurvatureData random_curvature_data(Rng& rng, int n, int p, bool twist) {
    std::vector<Rational> raw(static_cast<size_t>(n) * n * n * n, rat(0));
    auto idx = [&](int i, int j, int k, int l) {
        return ((static_cast<size_t>(i) * n + j) * n + k) * n + l;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (std::make_pair(i, j) > std::make_pair(k, l)) continue;
                    Rational v = random_rational(rng);
                    raw[idx(i, j, k, l)] = v;
                    raw[idx(j, i, k, l)] = -v;
                    raw[idx(i, j, l, k)] = -v;
                    raw[idx(j, i, l, k)] = v;
                    raw[idx(k, l, i, j)] = v;
                    raw[idx(l, k, i, j)] = -v;
                    raw[idx(k, l, j, i)] = -v;
                    raw[idx(l, k, j, i)] = v;
                }
    std::vector<Rational> fixed(raw);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rational cyc =
                        raw[idx(i, j, k, l)] + raw[idx(i, k, l, j)] + raw[idx(i, l, j, k)];
                    fixed[idx(i, j, k, l)] -= cyc / rat(3);
                }
    CurvatureData R(n, p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (fixed[idx(i, j, k, l)] != 0)
                        R.set_riemann(i + 1, j + 1, k + 1, l + 1, fixed[idx(i, j, k, l)]);
    if (twist) {
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
                ScalarMatrix m(p);
                for (int r = 0; r < p; ++r)
                    for (int c = 0; c < p; ++c) m.at(r, c) = random_zeta_scalar(rng);
                R.set_twist(k + 1, l + 1, m + (-m.adjoint()));
            }
    }
    R.validate();
    return R;
}

TrigPoly random_trig_poly(Rng& rng, int d, int max_terms, int max_freq) {
    std::uniform_int_distribution<int> freq(-max_freq, max_freq);
    TrigPoly f(d);
    for (int t = 0; t < max_terms; ++t) {
        std::vector<int> m(d);
        for (int i = 0; i < d; ++i) m[i] = freq(rng);
        f.add_term(m, random_zeta_scalar(rng));
    }
    return f;
}

} // namespace heatsym
