#include <doctest.h>

#include "heatsym/chern.hpp"
#include "heatsym/cocycle.hpp"
#include "heatsym/getzler.hpp"
#include "heatsym/io.hpp"
#include "heatsym/oracle.hpp"
#include "test_util.hpp"

using namespace heatsym;

TEST_CASE("composition dimension mismatch") {
    VolterraSymbol a = VolterraSymbol::identity(2, 1, Algebra::clifford, 2, 1);
    VolterraSymbol b = VolterraSymbol::identity(3, 1, Algebra::clifford, 2, 1);
    CHECK_THROWS_AS(compose_symbols(a, b, 1), Error);
    VolterraSymbol c = VolterraSymbol::identity(2, 1, Algebra::exterior, 2, 1);
    CHECK_THROWS_AS(compose_symbols(a, c, 1), Error);
}

TEST_CASE("parametrix requires a scalar principal part at the origin") {
    DiffOpSymbol p(2, 1, Algebra::clifford, 2, DiffOpSymbol::exact_content);
    FormElement two = FormElement::scalar(2, 1, ExtScalar::integer(2), Algebra::clifford);
    for (int i = 0; i < 2; ++i)
        p.add_part(mi::inc(mi::inc(0, i), i), JetPoly::constant(two, 2));
    CHECK_THROWS_WITH_AS(parametrix_expansion(p, 1), doctest::Contains("principal"), Error);
}

TEST_CASE("prefactor parity gate") {
    testutil::Rng rng(181);
    CurvatureData R2 = testutil::random_curvature(rng, 2, 1, false);
    // odd-order prefactor in even dimension is rejected
    VolterraSymbol odd(2, 1, Algebra::exterior, 2, 0, 0);
    odd.component(0).add_term({0, 0},
                              JetPoly::constant(FormElement::generator(2, 1, 1), 2));
    CHECK_THROWS_WITH_AS(index_density_with_prefactor(R2, odd),
                         doctest::Contains("parity"), Error);
    // even-order prefactor in odd dimension is rejected
    CurvatureData R1(1, 1);
    R1.validate();
    VolterraSymbol unit = VolterraSymbol::identity(1, 1, Algebra::exterior, 2, 0);
    CHECK_THROWS_WITH_AS(index_density_with_prefactor(R1, unit),
                         doctest::Contains("parity"), Error);
}

TEST_CASE("pairing preconditions") {
    TrigMatrix u(1, 1);
    u.at(0, 0) = TrigPoly::constant(1, ExtScalar::integer(2)); // not unitary
    CHECK_THROWS_AS(pair_odd(u, 1), Error);
    CHECK_THROWS_AS(aps_spectral_flow(u, 1), Error);
    CHECK_THROWS_AS(aps_spectral_flow(TrigMatrix::identity(2, 1), 2), Error);
    SphereMatrix half(1);
    half.at(0, 0) = SpherePoly::constant(ExtScalar::rational(rat(1, 2)));
    CHECK_THROWS_AS(pair_even_sphere(half), Error);
}

TEST_CASE("cochain arity mismatch") {
    CocycleComponent phi2 = cm_even_component(1, 2);
    std::vector<TrigPoly> two = {TrigPoly::constant(2, ExtScalar::integer(1)),
                                 TrigPoly::constant(2, ExtScalar::integer(1))};
    CHECK_THROWS_AS(phi2(two), Error);
}

TEST_CASE("degenerate fit grid is rejected") {
    oracle::SpectrumModel m{oracle::SpectrumKind::sphere_laplacian, 0};
    std::vector<double> grid(6, 0.01); // all equal: singular normal equations
    CHECK_THROWS_AS(oracle::heat_trace_fit(m, grid, 3, 2), Error);
}

TEST_CASE("json schema errors carry names") {
    using nlohmann::json;
    json bad = {{"n", 2}, {"riemann", json::array({json::array({1, 2, 1, 2, "1/0"})})}};
    CHECK_THROWS_AS(io::curvature_from_json(bad), Error);
    json extra = {{"n", 2}, {"surprise", 1}};
    CHECK_THROWS_WITH_AS(io::curvature_from_json(extra), doctest::Contains("unknown field"),
                         Error);
}
