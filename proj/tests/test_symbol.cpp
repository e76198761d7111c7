#include <doctest.h>

#include "heatsym/chern.hpp"
#include "heatsym/symbol.hpp"
#include "test_util.hpp"

using namespace heatsym;

namespace {

DiffOpSymbol flat_laplacian(int n, int p, Algebra alg = Algebra::clifford) {
    DiffOpSymbol op(n, p, alg, 2, DiffOpSymbol::exact_content);
    FormElement id = FormElement::scalar(n, p, ExtScalar::integer(1), alg);
    for (int i = 0; i < n; ++i)
        op.add_part(mi::inc(mi::inc(0, i), i), JetPoly::constant(id, 2));
    return op;
}

DiffOpSymbol laplacian_plus_potential(int n, const FormElement& v) {
    DiffOpSymbol op = flat_laplacian(n, v.rank(), v.algebra());
    op.add_part(0, JetPoly::constant(v, 2));
    return op;
}

/// Random canonical symbol: `depth`+1 components of the right parabolic
/// degrees, x-degree <= 1 per coefficient, jets at the given cap.
VolterraSymbol random_volterra(testutil::Rng& rng, int n, int p, Algebra alg, int leading,
                               int depth, int jet_cap) {
    VolterraSymbol q(n, p, alg, jet_cap, leading, depth);
    std::uniform_int_distribution<int> pick_n(1, 2), var(0, n - 1), xdeg(0, 1);
    for (int j = 0; j <= depth; ++j) {
        int d = leading - j;
        for (int t = 0; t < 2; ++t) {
            int N = pick_n(rng);
            int btot = d + 2 * N;
            if (btot < 0 || btot > 5) continue;
            mi::Mono beta = 0;
            for (int b = 0; b < btot; ++b) beta = mi::inc(beta, var(rng));
            JetPoly jet(n, p, alg, jet_cap);
            mi::Mono x = xdeg(rng) ? mi::inc(0, var(rng)) : 0;
            jet.add_term(x, testutil::random_form(rng, n, p, alg, 2));
            q.component(j).add_term({beta, N}, jet);
        }
    }
    q.validate();
    return q;
}

} // namespace

TEST_CASE("composition unit") {
    testutil::Rng rng(31);
    VolterraSymbol q = random_volterra(rng, 2, 1, Algebra::clifford, -2, 2, 2);
    VolterraSymbol one = VolterraSymbol::identity(2, 1, Algebra::clifford, 2, 2);
    CHECK(compose_symbols(one, q, 2) == q);
    CHECK(compose_symbols(q, one, 2) == q);
}

TEST_CASE("flat exactness") {
    int n = 2;
    DiffOpSymbol p = flat_laplacian(n, 1);
    VolterraSymbol heat = VolterraSymbol::from_diff_op(p, true, 2);
    VolterraSymbol q = parametrix_expansion(p, 2);
    // q_{-2} = B^{-1}, higher components vanish
    TermSum expect(n, 1, Algebra::clifford, 2);
    expect.add_term({0, 1},
                    JetPoly::constant(FormElement::unit(n, 1, Algebra::clifford), 2));
    CHECK(q.component(0) == expect);
    CHECK(q.component(1).is_zero());
    CHECK(q.component(2).is_zero());
    CHECK(compose_symbols(heat, q, 2).is_identity());
    CHECK(compose_symbols(q, heat, 2).is_identity());
}

TEST_CASE("leading component of a composition is the pointwise product") {
    testutil::Rng rng(37);
    VolterraSymbol a = random_volterra(rng, 2, 2, Algebra::clifford, -1, 2, 6);
    VolterraSymbol b = random_volterra(rng, 2, 2, Algebra::clifford, -2, 2, 6);
    VolterraSymbol c = compose_symbols(a, b, 2);
    CHECK(c.leading() == -3);
    CHECK(c.component(0) == a.component(0) * b.component(0));
}

TEST_CASE("constant potential parametrix by hand") {
    testutil::Rng rng(41);
    int n = 3;
    ScalarMatrix vm = testutil::random_matrix(rng, 2);
    FormElement v(n, 2, Algebra::clifford);
    v.add_term(0, vm);
    DiffOpSymbol p = laplacian_plus_potential(n, v);
    VolterraSymbol q = parametrix_expansion(p, 2);

    TermSum base(n, 2, Algebra::clifford, 2);
    base.add_term({0, 1}, JetPoly::constant(FormElement::unit(n, 2, Algebra::clifford), 2));
    CHECK(q.component(0) == base);
    CHECK(q.component(1).is_zero()); // q_{-3} = 0
    TermSum expect(n, 2, Algebra::clifford, 2);
    expect.add_term({0, 2}, JetPoly::constant(-v, 2));
    CHECK(q.component(2) == expect); // q_{-4} = -V B^{-2}
}

TEST_CASE("parametrix defining identity for random curvature") {
    testutil::Rng rng(43);
    for (int it = 0; it < 3; ++it) {
        CurvatureData R = testutil::random_curvature(rng, 2, 2, true);
        DiffOpSymbol p = lichnerowicz_symbol(R);
        VolterraSymbol q = parametrix_expansion(p, 2); // built-in residual check on
        VolterraSymbol heat = VolterraSymbol::from_diff_op(p, true, 2);
        CHECK(compose_symbols(heat, q, 2).is_identity());
    }
}

TEST_CASE("composition associativity at shared depth") {
    testutil::Rng rng(47);
    for (int it = 0; it < 5; ++it) {
        VolterraSymbol a = random_volterra(rng, 2, 1, Algebra::clifford, 0, 3, 6);
        VolterraSymbol b = random_volterra(rng, 2, 1, Algebra::clifford, -2, 3, 6);
        VolterraSymbol c = random_volterra(rng, 2, 1, Algebra::clifford, -1, 3, 6);
        VolterraSymbol ab_c = compose_symbols(compose_symbols(a, b, 3), c, 3);
        VolterraSymbol a_bc = compose_symbols(a, compose_symbols(b, c, 3), 3);
        CHECK(ab_c == a_bc);
    }
}

TEST_CASE("composition depth gate") {
    testutil::Rng rng(53);
    VolterraSymbol a = random_volterra(rng, 2, 1, Algebra::clifford, 0, 1, 2);
    CHECK_THROWS_AS(compose_symbols(a, a, 3), Error);
}

TEST_CASE("homogeneity bookkeeping") {
    testutil::Rng rng(59);
    VolterraSymbol a = random_volterra(rng, 3, 1, Algebra::clifford, -2, 3, 2);
    a.validate();
    // placing a term in the wrong component trips validate()
    VolterraSymbol bad(2, 1, Algebra::clifford, 2, -2, 1);
    bad.component(1).add_term({0, 1},
                              JetPoly::constant(FormElement::unit(2, 1, Algebra::clifford), 2));
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("radial evaluation closed values") {
    int n = 2;
    auto unit_jet = JetPoly::constant(FormElement::unit(n, 1, Algebra::clifford), 2);
    TermSum base(n, 1, Algebra::clifford, 2);
    base.add_term({0, 1}, unit_jet);
    FormElement v = radial_eval(base);
    CHECK(v == FormElement::scalar(n, 1, ExtScalar::rational(rat(1, 4), -2), Algebra::clifford));

    TermSum t2(n, 1, Algebra::clifford, 2);
    t2.add_term({mi::inc(mi::inc(0, 0), 0), 2}, unit_jet); // xi_1^2 B^{-2}
    CHECK(radial_eval(t2) ==
          FormElement::scalar(n, 1, ExtScalar::rational(rat(1, 8), -2), Algebra::clifford));

    TermSum odd(n, 1, Algebra::clifford, 2);
    odd.add_term({mi::inc(0, 0), 1}, unit_jet); // xi_1 B^{-1}
    CHECK(radial_eval(odd).is_zero());

    TermSum bad(n, 1, Algebra::clifford, 2);
    bad.add_term({0, 0}, unit_jet);
    CHECK_THROWS_AS(radial_eval(bad), Error);
}

TEST_CASE("odd components of geometric parametrices evaluate to zero") {
    testutil::Rng rng(61);
    CurvatureData R = testutil::random_curvature(rng, 2, 1, true);
    VolterraSymbol q = parametrix_expansion(lichnerowicz_symbol(R), 2);
    CHECK(radial_eval(q.component(1)).is_zero());
}

TEST_CASE("heat coefficients: flat") {
    for (int n = 2; n <= 3; ++n) {
        auto as = heat_coefficients(flat_laplacian(n, 1), 3);
        CHECK(as[0] == FormElement::scalar(n, 1, ExtScalar::rational(pow_int(rat(2), -n), -n),
                                           Algebra::clifford));
        CHECK(as[1].is_zero());
        CHECK(as[2].is_zero());
    }
}

TEST_CASE("heat coefficients: constant potential gives a_1 = -V") {
    testutil::Rng rng(67);
    int n = 2;
    ScalarMatrix vm = testutil::random_matrix(rng, 2);
    FormElement v(n, 2, Algebra::clifford);
    v.add_term(0, vm);
    auto as = heat_coefficients(laplacian_plus_potential(n, v), 2);
    ExtScalar norm = ExtScalar::rational(pow_int(rat(2), -n), -n);
    CHECK(as[1] == (-v).scaled(norm));
}

TEST_CASE("heat coefficients: Laplace-Beltrami on the unit sphere") {
    CurvatureData R = testutil::sphere_curvature(rat(1));
    auto as = heat_coefficients(laplace_beltrami_symbol(R), 2);
    ExtScalar norm = ExtScalar::rational(rat(1, 4), -2); // (4 pi)^{-1}
    CHECK(as[0] == FormElement::scalar(2, 1, norm, Algebra::clifford));
    // a_1 = kappa/6 = 1/3
    CHECK(as[1] == FormElement::scalar(2, 1, ExtScalar::rational(rat(1, 3)) * norm,
                                       Algebra::clifford));
}

TEST_CASE("heat coefficients: insufficient jet depth fails loudly") {
    CurvatureData R = testutil::sphere_curvature(rat(1));
    CHECK_THROWS_AS(heat_coefficients(laplace_beltrami_symbol(R), 3), Error);
}

TEST_CASE("heat coefficients: spinor Dirac square on the unit sphere") {
    // Lichnerowicz a_1 = (kappa/6 - kappa/4) Id = -kappa/12: the spin
    // connection terms must cancel out of a_1.
    CurvatureData R = testutil::sphere_curvature(rat(1));
    auto as = heat_coefficients(lichnerowicz_symbol(R), 2);
    ExtScalar norm = ExtScalar::rational(rat(1, 4), -2);
    CHECK(as[1] == FormElement::scalar(2, 1, ExtScalar::rational(rat(-1, 6)) * norm,
                                       Algebra::clifford));
}

TEST_CASE("index route is invariant under the jet truncation cap") {
    testutil::Rng rng(191);
    CurvatureData R = testutil::random_curvature(rng, 2, 2, true);
    for (int cap : {2, 4}) {
        VolterraSymbol q = parametrix_expansion(lichnerowicz_symbol(R, cap), 2);
        ExtScalar v = supertrace_even(radial_eval(q.component_of_degree(-4)));
        ExtScalar expect = index_density(R).top_coefficient().at(0, 0);
        CHECK(v == expect);
    }
}

TEST_CASE("constant-coefficient parametrices are two-sided inverses") {
    testutil::Rng rng(193);
    int n = 2;
    ScalarMatrix vm = testutil::random_matrix(rng, 2);
    FormElement v(n, 2, Algebra::clifford);
    v.add_term(0, vm);
    DiffOpSymbol p = laplacian_plus_potential(n, v);
    VolterraSymbol q = parametrix_expansion(p, 4);
    VolterraSymbol heat = VolterraSymbol::from_diff_op(p, true, 4);
    CHECK(compose_symbols(heat, q, 4).is_identity());
    CHECK(compose_symbols(q, heat, 4).is_identity());
}
