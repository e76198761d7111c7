#include <doctest.h>

#include "heatsym/cocycle.hpp"
#include "test_util.hpp"

using namespace heatsym;

namespace {

TrigPoly em(int d, std::vector<int> m) { return TrigPoly::exponential(d, m); }

TrigPoly random_trig(testutil::Rng& rng, int d, int max_terms = 2) {
    TrigPoly f(d);
    std::uniform_int_distribution<int> freq(-2, 2);
    for (int t = 0; t < max_terms; ++t) {
        std::vector<int> m(d);
        for (int i = 0; i < d; ++i) m[i] = freq(rng);
        f.add_term(m, testutil::random_scalar(rng));
    }
    return f;
}

} // namespace

TEST_CASE("trig calculus basics") {
    TrigPoly a = em(2, {1, 0}), b = em(2, {0, 1});
    CHECK((a * b) == em(2, {1, 1}));
    CHECK(a.derivative(0) == em(2, {1, 0}).scaled(ExtScalar::i()));
    CHECK(a.derivative(1).is_zero());
    // int e_m = (2 pi)^d delta_{m,0}
    CHECK(a.integral() == ExtScalar());
    CHECK(TrigPoly::constant(2, ExtScalar::integer(1)).integral() ==
          ExtScalar::rational(rat(4), 4));
    CHECK(a.conj() == em(2, {-1, 0}));
    CHECK(TrigMatrix::winding(3).is_unitary());
}

TEST_CASE("even component values on the flat two-torus") {
    // phi_2(e_(-1,-1), e_(1,0), e_(0,1)) = i pi
    std::vector<TrigPoly> args = {em(2, {-1, -1}), em(2, {1, 0}), em(2, {0, 1})};
    ExtScalar v = cm_even_value(1, 2, args);
    CHECK(v == ExtScalar::i() * ExtScalar::pi_pow(2));

    // Fourier orthogonality oracle:
    // int e_a de_b ^ de_c = (2 pi i)^2 (b1 c2 - b2 c1) delta_{a+b+c,0}
    testutil::Rng rng(149);
    std::uniform_int_distribution<int> freq(-2, 2);
    for (int it = 0; it < 30; ++it) {
        std::vector<int> b = {freq(rng), freq(rng)}, c = {freq(rng), freq(rng)};
        std::vector<int> a = {freq(rng), freq(rng)};
        std::vector<TrigPoly> t = {em(2, a), em(2, b), em(2, c)};
        ExtScalar got = cm_even_value(1, 2, t);
        ExtScalar expect;
        if (a[0] + b[0] + c[0] == 0 && a[1] + b[1] + c[1] == 0) {
            long det = static_cast<long>(b[0]) * c[1] - static_cast<long>(b[1]) * c[0];
            // (2 i pi)^{-1}/2! * (2 pi i)^2 * det
            expect = ExtScalar::two_i_pi_pow(-1) * ExtScalar::rational(rat(1, 2)) *
                     (ExtScalar::integer(2) * ExtScalar::i() * ExtScalar::pi_pow(2)).pow(2) *
                     ExtScalar::integer(det);
        }
        CHECK(got == expect);
    }

    // f0 = 1: Stokes kills it
    std::vector<TrigPoly> stokes = {TrigPoly::constant(2, ExtScalar::integer(1)),
                                    em(2, {1, 0}), em(2, {-1, 0})};
    CHECK(cm_even_value(1, 2, stokes) == ExtScalar());

    // 2k != n on the flat torus vanishes
    std::vector<TrigPoly> low = {em(2, {1, 1})};
    CHECK(cm_even_value(0, 2, low) == ExtScalar());
}

TEST_CASE("odd component values on the circle") {
    // phi_1(e_-1, e_1) = sqrt(2 i pi)
    std::vector<TrigPoly> args = {em(1, {-1}), em(1, {1})};
    CHECK(cm_odd_value(0, 1, args) == ExtScalar::sqrt_two_i_pi());
    // f0 = 1 -> 0 (Stokes)
    std::vector<TrigPoly> stokes = {TrigPoly::constant(1, ExtScalar::integer(1)), em(1, {2})};
    CHECK(cm_odd_value(0, 1, stokes) == ExtScalar());
    // frequency sum != 0 -> 0
    std::vector<TrigPoly> off = {em(1, {-1}), em(1, {2})};
    CHECK(cm_odd_value(0, 1, off) == ExtScalar());
}

TEST_CASE("cocycle identity on the flat two-torus") {
    testutil::Rng rng(151);
    CocycleComponent phi0 = cm_even_component(0, 2);
    CocycleComponent phi2 = cm_even_component(1, 2);
    CocycleComponent phi4 = cm_even_component(2, 2);
    for (int it = 0; it < 25; ++it) {
        std::vector<TrigPoly> a2 = {random_trig(rng, 2), random_trig(rng, 2)};
        CHECK(cocycle_residual(phi0, phi2, a2) == ExtScalar());
        std::vector<TrigPoly> a4 = {random_trig(rng, 2), random_trig(rng, 2),
                                    random_trig(rng, 2), random_trig(rng, 2)};
        CHECK(cocycle_residual(phi2, phi4, a4) == ExtScalar());
    }
}

TEST_CASE("cocycle identity on circles and the three-torus") {
    testutil::Rng rng(157);
    CocycleComponent phi1 = cm_odd_component(0, 1);
    CocycleComponent phi3 = cm_odd_component(1, 1);
    for (int it = 0; it < 25; ++it) {
        std::vector<TrigPoly> a3 = {random_trig(rng, 1), random_trig(rng, 1),
                                    random_trig(rng, 1)};
        CHECK(cocycle_residual(phi1, phi3, a3) == ExtScalar());
    }
    CocycleComponent psi1 = cm_odd_component(0, 3);
    CocycleComponent psi3 = cm_odd_component(1, 3);
    for (int it = 0; it < 10; ++it) {
        std::vector<TrigPoly> a3 = {random_trig(rng, 3), random_trig(rng, 3),
                                    random_trig(rng, 3)};
        CHECK(cocycle_residual(psi1, psi3, a3) == ExtScalar());
    }
}

TEST_CASE("cyclic antisymmetrizer normalization") {
    // A psi = (k+1) psi for a cyclic cochain (phi_2 is cyclic)
    testutil::Rng rng(163);
    CocycleComponent phi2 = cm_even_component(1, 2);
    CocycleComponent a = cyclic_antisymmetrizer(phi2);
    for (int it = 0; it < 10; ++it) {
        std::vector<TrigPoly> t = {random_trig(rng, 2), random_trig(rng, 2),
                                   random_trig(rng, 2)};
        CHECK(a(t) == ExtScalar::integer(3) * phi2(t));
    }
}

TEST_CASE("unit insertion") {
    CocycleComponent phi2 = cm_even_component(1, 2);
    CocycleComponent b0 = insert_unit_b0(phi2);
    std::vector<TrigPoly> t = {em(2, {1, 0}), em(2, {-1, 0})};
    std::vector<TrigPoly> full = {TrigPoly::constant(2, ExtScalar::integer(1)), t[0], t[1]};
    CHECK(b0(t) == phi2(full));
}

TEST_CASE("even pairing") {
    // constant projector on the flat two-torus pairs to zero
    TrigMatrix e(2, 2);
    e.at(0, 0) = TrigPoly::constant(2, ExtScalar::integer(1));
    CHECK(e.is_idempotent());
    CHECK(pair_even_torus(e, 2) == ExtScalar());

    // Bott idempotent on the sphere: exact integer of absolute value 1
    SphereMatrix bott = SphereMatrix::bott_idempotent();
    CHECK(bott.is_idempotent());
    CHECK(bott.is_selfadjoint());
    ExtScalar v = pair_even_sphere(bott);
    CHECK(v.is_integer());
    CHECK((v == ExtScalar::integer(1) || v == ExtScalar::integer(-1)));

    // additivity under direct sums
    CHECK(pair_even_sphere(direct_sum(bott, bott)) == v + v);

    // non-idempotent input is rejected
    TrigMatrix bad(2, 1);
    bad.at(0, 0) = TrigPoly::constant(2, ExtScalar::rational(rat(1, 2)));
    CHECK_THROWS_AS(pair_even_torus(bad, 2), Error);
}

TEST_CASE("odd pairing computes winding numbers") {
    for (int w = -2; w <= 2; ++w) {
        TrigMatrix u = TrigMatrix::winding(w);
        ExtScalar v = pair_odd(u, 1);
        CHECK(v == ExtScalar::integer(w));
        CHECK(aps_spectral_flow(u, 1) == ExtScalar::integer(w));
    }
    // U = 1 -> 0, and block sums add
    CHECK(pair_odd(TrigMatrix::identity(1, 2), 1) == ExtScalar());
    TrigMatrix u2 = direct_sum(TrigMatrix::winding(2), TrigMatrix::winding(-1));
    CHECK(pair_odd(u2, 1) == ExtScalar::integer(1));
    CHECK(aps_spectral_flow(u2, 1) == ExtScalar::integer(1));
}

TEST_CASE("odd pairing equals the spectral flow integral on the three-torus") {
    // U = [[a, b], [-conj(b), conj(a)]] with
    // a = cos t1 + i sin t1 cos t2, b = sin t1 sin t2 e^{i t3}:
    // |a|^2 + |b|^2 = 1, so U is an exact trig-polynomial unitary.
    int d = 3;
    ExtScalar half = ExtScalar::rational(rat(1, 2));
    ExtScalar ihalf = half * ExtScalar::i();
    auto cosx = [&](int j) {
        TrigPoly f(d);
        std::vector<int> m(d, 0);
        m[j] = 1;
        f.add_term(m, half);
        m[j] = -1;
        f.add_term(m, half);
        return f;
    };
    auto sinx = [&](int j) {
        TrigPoly f(d);
        std::vector<int> m(d, 0);
        m[j] = 1;
        f.add_term(m, -ihalf);
        m[j] = -1;
        f.add_term(m, ihalf);
        return f;
    };
    TrigPoly a = cosx(0) + sinx(0) * cosx(1).scaled(ExtScalar::i());
    TrigPoly e3(d);
    e3.add_term({0, 0, 1}, ExtScalar::integer(1));
    TrigPoly b = sinx(0) * sinx(1) * e3;
    TrigMatrix u(d, 2);
    u.at(0, 0) = a;
    u.at(0, 1) = b;
    u.at(1, 0) = -b.conj();
    u.at(1, 1) = a.conj();
    REQUIRE(u.is_unitary());

    ExtScalar lhs = pair_odd(u, 3);
    ExtScalar rhs = aps_spectral_flow(u, 3);
    CHECK(lhs == rhs);
    CHECK(lhs.is_integer());

    // Exact trig-polynomial unitaries pair trivially with the top class,
    // so pin the k = 1 sign convention pointwise instead: the alternating
    // chain tr(U^-1 dU ^ dU^-1 ^ dU) equals -tr((U^-1 dU)^3) against a
    // random scalar weight.
    TrigPoly f = em(3, {0, -1, 0}); // resonant with the integrand's spectrum
    TrigMatrix uinv = u.adjoint();
    TrigMatrix fuinv(3, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) fuinv.at(i, j) = f * uinv.at(i, j);
    std::vector<TrigMatrix> alt = {fuinv, u, uinv, u};
    ExtScalar weighted_alt = torus_chain_integral(alt);

    // weighted omega-cube: sum over permutations of
    // f tr(U^-1 d_a U U^-1 d_b U U^-1 d_c U)
    int idx[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    ExtScalar weighted_cube;
    for (int s = 0; s < 6; ++s) {
        TrigMatrix prod = fuinv * u.derivative(idx[s][0]);
        prod = prod * (uinv * u.derivative(idx[s][1]));
        prod = prod * (uinv * u.derivative(idx[s][2]));
        ExtScalar v = prod.trace().integral();
        weighted_cube += (s < 3) ? v : -v;
    }
    CHECK(weighted_alt == -weighted_cube);
    CHECK(weighted_alt != ExtScalar());
}

TEST_CASE("cm constants from the Gamma recipes") {
    // even: c_{1,0} = (1/2) Gamma(1)/2! = 1/4
    CHECK(cm_constant_even(1, {0, 0}) == ExtScalar::rational(rat(1, 4)));
    // odd: c_{0,0} = Gamma(1/2) = sqrt(pi)
    CHECK(cm_constant_odd(0, {0}) == ExtScalar::rational(rat(1), 1));
    // odd: c_{1,0} = Gamma(3/2)/3! = sqrt(pi)/12
    CHECK(cm_constant_odd(1, {0, 0, 0}) == ExtScalar::rational(rat(1, 12), 1));
    // even with alpha = (1,0): Gamma(2) c^{-1} = 2 * (-1) * 1 * (2)(3) = -12
    CHECK(cm_constant_even(1, {1, 0}) == ExtScalar::rational(rat(-1, 12)));
    CHECK_THROWS_AS(cm_constant_even(0, {}), Error);
}
