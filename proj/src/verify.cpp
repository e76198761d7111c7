#include "heatsym/verify.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <sstream>

#include "heatsym/chern.hpp"
#include "heatsym/cocycle.hpp"
#include "heatsym/getzler.hpp"
#include "heatsym/oracle.hpp"
#include "heatsym/random_inputs.hpp"

namespace heatsym::verify {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// One A1 instance: exact equality of the Getzler-limit supertrace of
/// the symbolic parametrix kernel with the closed-form index density,
/// plus the Mehler cross-check of the model kernel.
bool a1_instance(std::uint64_t seed, int n, int p, std::string* why) {
    Rng rng(seed);
    CurvatureData R = random_curvature_data(rng, n, p, true);
    VolterraSymbol q = parametrix_expansion(lichnerowicz_symbol(R), n);
    FormElement k_top = radial_eval(q.component_of_degree(-2 - n));

    FormMatrix W = FormMatrix::from_curvature(R);
    MehlerValue g = mehler_kernel(W, std::vector<Rational>(n, rat(0)), rat(1));
    FormElement gp(n, p, Algebra::exterior);
    for (const auto& [mask, m] : g.value.terms())
        gp.add_term(mask, ScalarMatrix::scalar(p, m.at(0, 0)));
    FormElement model_kernel = (gp * exp_form(-twist_two_form(R))).component(n);
    if (symbol_map(k_top).component(n) != model_kernel) {
        *why = "model kernel route mismatch";
        return false;
    }

    ExtScalar lhs = supertrace_even(k_top);
    ExtScalar rhs = index_density(R).top_coefficient().at(0, 0);
    if (lhs != rhs) {
        *why = "supertrace route differs from the A-hat/Chern density";
        return false;
    }
    return true;
}

CheckResult a1(std::uint64_t seed, int threads) {
    auto t0 = Clock::now();
    CheckResult r{"A1", "local index theorem as an exact identity", false, 0.0, ""};
    struct Inst { int n, p; std::uint64_t seed; };
    std::vector<Inst> plan;
    std::uint64_t s = seed;
    for (int i = 0; i < 7; ++i) plan.push_back({2, 1, ++s});
    for (int i = 0; i < 7; ++i) plan.push_back({2, 2, ++s});
    for (int i = 0; i < 3; ++i) plan.push_back({4, 1, ++s});
    for (int i = 0; i < 3; ++i) plan.push_back({4, 2, ++s});

    int okc = 0;
    std::string why;
    if (threads > 1) {
        std::vector<std::future<std::pair<bool, std::string>>> futs;
        for (const auto& inst : plan)
            futs.push_back(std::async(std::launch::async, [inst] {
                std::string w;
                bool ok = a1_instance(inst.seed, inst.n, inst.p, &w);
                return std::make_pair(ok, w);
            }));
        for (auto& f : futs) {
            auto [ok, w] = f.get();
            if (ok) ++okc;
            else why = w;
        }
    } else {
        for (const auto& inst : plan) {
            std::string w;
            if (a1_instance(inst.seed, inst.n, inst.p, &w)) ++okc;
            else why = w;
        }
    }
    r.pass = okc == static_cast<int>(plan.size());
    std::ostringstream os;
    os << okc << "/" << plan.size() << " random instances exact (n in {2,4}, rank in {1,2})";
    if (!r.pass) os << "; first failure: " << why;
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

CheckResult a2() {
    auto t0 = Clock::now();
    CheckResult r{"A2", "heat coefficient a_1 on the round sphere", false, 0.0, ""};
    CurvatureData R(2, 1);
    R.set_riemann(1, 2, 1, 2, rat(1));
    R.validate();
    auto as = heat_coefficients(laplace_beltrami_symbol(R), 2);
    ExtScalar expect = ExtScalar::rational(rat(1, 3)) * ExtScalar::rational(rat(1, 4), -2);
    bool symbolic = as[1] == FormElement::scalar(2, 1, expect, Algebra::clifford);

    oracle::SpectrumModel m{oracle::SpectrumKind::sphere_laplacian, 0};
    std::vector<double> grid;
    for (int i = 0; i < 24; ++i) grid.push_back(0.004 + 0.002 * i);
    oracle::FitResult fit = oracle::heat_trace_fit(m, grid, 4, 2);
    double e0 = std::fabs(fit.coefficients[0] - 1.0);
    double e1 = std::fabs(fit.coefficients[1] - 1.0 / 3.0);
    bool numeric = e0 < 1e-6 && e1 < 1e-5;

    r.pass = symbolic && numeric;
    std::ostringstream os;
    os << "symbolic a_1 = (1/3)(4pi)^-1 " << (symbolic ? "exact" : "MISMATCH")
       << "; spectral fit |c0-1| = " << e0 << ", |c1-1/3| = " << e1;
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

CheckResult a3() {
    auto t0 = Clock::now();
    CheckResult r{"A3", "Mehler closed form against the PDE oracle", false, 0.0, ""};
    double worst1d = 0.0;
    for (double a : {0.0, 0.5, 1.0}) {
        auto c = oracle::mehler_pde_check_1d(a, 3001, 9.0, 0.25, 0.75, 400);
        worst1d = std::max(worst1d, c.max_rel_error);
    }
    auto c2 = oracle::mehler_pde_check_2d(1.0, 601, 8.0, 0.25, 0.75, 160);
    r.pass = worst1d <= 1e-4 && c2.max_rel_error <= 1e-4;
    std::ostringstream os;
    os << "1d max rel err " << worst1d << " (a in {0, 1/2, 1}); 2d rotation block "
       << c2.max_rel_error;
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

CheckResult a4() {
    auto t0 = Clock::now();
    CheckResult r{"A4", "APS spectral flow on the circle", false, 0.0, ""};
    bool ok = true;
    std::ostringstream os;
    for (int w = -2; w <= 2; ++w) {
        auto tracked = oracle::spectral_flow_track(w, 64);
        TrigMatrix u = TrigMatrix::winding(w);
        ExtScalar paired = pair_odd(u, 1);
        ExtScalar aps = aps_spectral_flow(u, 1);
        bool here = tracked.spectral_flow == w && paired == ExtScalar::integer(w) &&
                    aps == ExtScalar::integer(w);
        ok = ok && here;
        if (!here) os << " w=" << w << " MISMATCH;";
    }
    r.pass = ok;
    r.detail = ok ? "track = pairOdd = aps = w for w in {-2..2}, cutoff 64" : os.str();
    r.seconds = elapsed(t0);
    return r;
}

CheckResult a5() {
    auto t0 = Clock::now();
    CheckResult r{"A5", "even pairing integrality", false, 0.0, ""};
    ExtScalar bott = pair_even_sphere(SphereMatrix::bott_idempotent());
    bool bott_ok = bott.is_integer() &&
                   (bott == ExtScalar::integer(1) || bott == ExtScalar::integer(-1));
    TrigMatrix e(2, 2);
    e.at(0, 0) = TrigPoly::constant(2, ExtScalar::integer(1));
    bool torus_ok = pair_even_torus(e, 2) == ExtScalar();
    r.pass = bott_ok && torus_ok;
    std::ostringstream os;
    os << "Bott idempotent pairs to " << bott.str() << "; constant projector on T^2 pairs to 0";
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

CheckResult a6() {
    auto t0 = Clock::now();
    CheckResult r{"A6", "radial evaluation against Gauss-Hermite quadrature", false, 0.0, ""};
    struct Case { std::vector<int> beta; int N; int n; };
    std::vector<Case> cases = {{{0, 0}, 1, 2},    {{2, 0}, 2, 2},    {{0, 2}, 2, 2},
                               {{2, 2}, 3, 2},    {{4, 0}, 3, 2},    {{0, 0, 0}, 1, 3},
                               {{2, 0, 0}, 2, 3}, {{2, 2, 2}, 5, 3}, {{6, 0}, 4, 2},
                               {{1, 0}, 1, 2}};
    double worst = 0.0;
    for (const auto& c : cases) {
        double got = oracle::quadrature_radial_value(c.beta, c.N, c.n);
        double expect = oracle::radial_reference(c.beta, c.N, c.n);
        worst = std::max(worst, std::fabs(got - expect) / std::max(1.0, std::fabs(expect)));
    }
    r.pass = worst <= 1e-10;
    std::ostringstream os;
    os << cases.size() << " (beta, N, n) cases, worst deviation " << worst;
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

CheckResult a7(std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckResult r{"A7", "cyclic cocycle identity (b + B) phi = 0", false, 0.0, ""};
    Rng rng(seed ^ 0xa7a7a7a7ull);
    int bad = 0, total = 0;
    CocycleComponent e0 = cm_even_component(0, 2), e2 = cm_even_component(1, 2),
                     e4 = cm_even_component(2, 2);
    for (int it = 0; it < 13; ++it) {
        std::vector<TrigPoly> t2 = {random_trig_poly(rng, 2), random_trig_poly(rng, 2)};
        if (cocycle_residual(e0, e2, t2) != ExtScalar()) ++bad;
        ++total;
    }
    for (int it = 0; it < 12; ++it) {
        std::vector<TrigPoly> t4 = {random_trig_poly(rng, 2), random_trig_poly(rng, 2),
                                    random_trig_poly(rng, 2), random_trig_poly(rng, 2)};
        if (cocycle_residual(e2, e4, t4) != ExtScalar()) ++bad;
        ++total;
    }
    CocycleComponent o1 = cm_odd_component(0, 1), o3 = cm_odd_component(1, 1);
    for (int it = 0; it < 25; ++it) {
        std::vector<TrigPoly> t3 = {random_trig_poly(rng, 1), random_trig_poly(rng, 1),
                                    random_trig_poly(rng, 1)};
        if (cocycle_residual(o1, o3, t3) != ExtScalar()) ++bad;
        ++total;
    }
    r.pass = bad == 0;
    std::ostringstream os;
    os << total << " random tuples (T^2 even, T^1 odd), " << bad << " nonzero residuals";
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

VolterraSymbol random_small_symbol(Rng& rng, int leading, int depth) {
    VolterraSymbol q(2, 1, Algebra::clifford, 6, leading, depth);
    std::uniform_int_distribution<int> pick_n(1, 2), var(0, 1), xdeg(0, 1), mask(0, 3);
    for (int j = 0; j <= depth; ++j) {
        int d = leading - j;
        int N = pick_n(rng);
        int btot = d + 2 * N;
        if (btot < 0 || btot > 5) continue;
        mi::Mono beta = 0;
        for (int b = 0; b < btot; ++b) beta = mi::inc(beta, var(rng));
        JetPoly jet(2, 1, Algebra::clifford, 6);
        FormElement f(2, 1, Algebra::clifford);
        ScalarMatrix c(1);
        c.at(0, 0) = random_zeta_scalar(rng);
        f.add_term(static_cast<std::uint32_t>(mask(rng)), c);
        if (f.is_zero()) continue;
        jet.add_term(xdeg(rng) ? mi::inc(0, var(rng)) : 0, f);
        q.component(j).add_term({beta, N}, jet);
    }
    return q;
}

CheckResult a8(std::uint64_t seed) {
    auto t0 = Clock::now();
    CheckResult r{"A8", "Getzler filtration laws under composition", false, 0.0, ""};
    Rng rng(seed ^ 0xa8a8a8a8ull);
    int bad = 0, equal_cases = 0, drop_cases = 0, total = 0;
    while (total < 20) {
        VolterraSymbol a = random_small_symbol(rng, -1, 2);
        VolterraSymbol b = random_small_symbol(rng, -2, 2);
        auto ma = getzler_order(a), mb = getzler_order(b);
        if (!ma || !mb) continue;
        ++total;
        VolterraSymbol ab = compose_symbols(a, b, 2);
        auto mab = getzler_order(ab);
        if (mab && *mab > *ma + *mb) { ++bad; continue; }
        VolterraSymbol mm = compose_symbols(model_operator(a), model_operator(b), 2);
        auto mmm = getzler_order(mm);
        if (mmm && *mmm == *ma + *mb) {
            ++equal_cases;
            if (!(mab == mmm && model_operator(ab) == mm)) ++bad;
        } else {
            ++drop_cases;
            if (mab && *mab >= *ma + *mb) ++bad;
        }
    }
    r.pass = bad == 0 && equal_cases > 0;
    std::ostringstream os;
    os << total << " random pairs: " << equal_cases << " model products, " << drop_cases
       << " strict order drops, " << bad << " violations";
    r.detail = os.str();
    r.seconds = elapsed(t0);
    return r;
}

} // namespace

std::vector<CheckResult> run_acceptance(std::uint64_t seed, int threads) {
    std::vector<CheckResult> out;
    out.push_back(a1(seed, threads));
    out.push_back(a2());
    out.push_back(a3());
    out.push_back(a4());
    out.push_back(a5());
    out.push_back(a6());
    out.push_back(a7(seed));
    out.push_back(a8(seed));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace heatsym::verify
