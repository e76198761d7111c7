#include <doctest.h>

#include "heatsym/chern.hpp"
#include "heatsym/getzler.hpp"
#include "test_util.hpp"

using namespace heatsym;

namespace {

/// Hand-built symbol of H_R + F(0) (+ i tau), exterior coefficients:
///   |xi|^2 + 2 sum_i B_i (i xi_i) - sum_i B_i^2 + F,  B_i = 1/4 W_ij x^j.
VolterraSymbol model_heat_symbol(const CurvatureData& R, int depth, bool with_tau) {
    const int n = R.dim(), p = R.rank();
    FormMatrix W = FormMatrix::from_curvature(R);
    const Algebra alg = Algebra::exterior;
    FormElement id = FormElement::scalar(n, p, ExtScalar::integer(1), alg);
    JetPoly idj = JetPoly::constant(id, 2);
    VolterraSymbol s(n, p, alg, 2, 2, std::max(depth, 2));

    auto embed = [&](const FormElement& f) {
        FormElement out(n, p, alg);
        for (const auto& [mask, m] : f.terms())
            out.add_term(mask, ScalarMatrix::scalar(p, m.at(0, 0)));
        return out;
    };

    for (int i = 0; i < n; ++i) s.component(0).add_term({mi::inc(mi::inc(0, i), i), 0}, idj);
    if (with_tau) {
        s.component(0).add_term({0, -1}, idj);
        for (int i = 0; i < n; ++i) s.component(0).add_term({mi::inc(mi::inc(0, i), i), 0}, -idj);
    }
    const ExtScalar I = ExtScalar::i();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (W.at(i, j).is_zero()) continue;
            JetPoly c(n, p, alg, 2);
            c.add_term(mi::inc(0, j),
                       embed(W.at(i, j)).scaled(ExtScalar::rational(rat(1, 2)) * I));
            s.component(1).add_term({mi::inc(0, i), 0}, c);
        }
    JetPoly quad(n, p, alg, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (W.at(i, j).is_zero() || W.at(i, k).is_zero()) continue;
                quad.add_term(mi::inc(mi::inc(0, j), k),
                              embed(W.at(i, j) * W.at(i, k))
                                  .scaled(ExtScalar::rational(rat(-1, 16))));
            }
    if (!quad.is_zero()) s.component(2).add_term({0, 0}, quad);
    FormElement f2 = twist_two_form(R);
    if (!f2.is_zero()) s.component(2).add_term({0, 0}, JetPoly::constant(f2, 2));
    return s;
}

} // namespace

TEST_CASE("generator degrees") {
    // x^j * 1 has Getzler order -1
    VolterraSymbol s(2, 1, Algebra::clifford, 2, 0, 0);
    JetPoly xj(2, 1, Algebra::clifford, 2);
    xj.add_term(mi::inc(0, 0), FormElement::unit(2, 1, Algebra::clifford));
    s.component(0).add_term({0, 0}, xj);
    CHECK(getzler_order(s) == -1);

    // covariant derivative: i xi_1 + 1/4 omega_{1kl} c(e^k)c(e^l) has order 1
    CurvatureData R = testutil::sphere_curvature(rat(1));
    NormalJets nj = build_normal_jets(R, 2);
    VolterraSymbol nab(2, 1, Algebra::clifford, 2, 1, 1);
    nab.component(0).add_term(
        {mi::inc(0, 0), 0},
        JetPoly::constant(FormElement::unit(2, 1, Algebra::clifford).scaled(ExtScalar::i()), 2));
    FormElement e12 = FormElement::generator(2, 1, 1, Algebra::clifford) *
                      FormElement::generator(2, 1, 2, Algebra::clifford);
    JetPoly sig = nj.omega[1].scaled(ExtScalar::rational(rat(1, 2))); // omega_{1,1,2} doubled pair
    VolterraSymbol nab_full = nab;
    nab_full.component(1).add_term({0, 0}, embed_scalar_jet(sig, 1, Algebra::clifford)
                                                .scaled_form(e12, true));
    CHECK(getzler_order(nab_full) == 1);

    // zero symbol: -infinity sentinel
    VolterraSymbol z(2, 1, Algebra::clifford, 2, 0, 0);
    CHECK(!getzler_order(z).has_value());
}

TEST_CASE("lichnerowicz square has Getzler order 2 and model H_R + F") {
    testutil::Rng rng(71);
    for (int n : {2, 4}) {
        CurvatureData R = testutil::random_curvature(rng, n, 2, true);
        DiffOpSymbol p = lichnerowicz_symbol(R);
        VolterraSymbol ps = VolterraSymbol::from_diff_op(p, false, 2);
        CHECK(getzler_order(ps) == 2);
        VolterraSymbol model = model_operator(ps);
        VolterraSymbol expect = model_heat_symbol(R, 2, false);
        CHECK(model == expect);
    }
}

TEST_CASE("flat untwisted Laplacian is its own model") {
    CurvatureData R(3, 1);
    R.validate();
    DiffOpSymbol p = laplace_beltrami_symbol(R);
    VolterraSymbol ps = VolterraSymbol::from_diff_op(p, false, 2);
    CHECK(model_operator(ps) == ps.with_algebra(Algebra::exterior));
}

TEST_CASE("parametrix filtration order is -2") {
    testutil::Rng rng(73);
    CurvatureData R = testutil::random_curvature(rng, 2, 1, true);
    VolterraSymbol q = parametrix_expansion(lichnerowicz_symbol(R), 2);
    CHECK(q.leading() == -2);
    CHECK(getzler_order(q) == -2);
}

TEST_CASE("model of the parametrix inverts the model heat operator") {
    testutil::Rng rng(79);
    for (int n : {2, 4}) {
        CurvatureData R = testutil::random_curvature(rng, n, n == 2 ? 2 : 1, true);
        VolterraSymbol q = parametrix_expansion(lichnerowicz_symbol(R), n);
        VolterraSymbol qm = model_operator(q);
        VolterraSymbol hm = model_heat_symbol(R, n, true);
        CHECK(compose_symbols(hm, qm, n).is_identity());
    }
}

TEST_CASE("kernel leading term: flat parametrix at j = 0") {
    for (int n : {2, 3}) {
        CurvatureData R(n, 1);
        R.validate();
        VolterraSymbol q = parametrix_expansion(lichnerowicz_symbol(R), 1);
        KernelLeadingTerm lt = kernel_leading_term(q, 0);
        CHECK(lt.t_exponent == rat(-n, 2));
        CHECK(!lt.vanishes);
        CHECK(lt.coefficient ==
              FormElement::scalar(n, 1, ExtScalar::rational(pow_int(rat(2), -n), -n)));
        CHECK(lt.error_exponent == rat(-n, 2) + 1);
    }
}

TEST_CASE("kernel leading term: odd parity vanishes with the certified bound") {
    testutil::Rng rng(83);
    CurvatureData R = testutil::random_curvature(rng, 2, 1, true);
    VolterraSymbol q = parametrix_expansion(lichnerowicz_symbol(R), 2);
    KernelLeadingTerm lt = kernel_leading_term(q, 1); // m - j = -3 odd
    CHECK(lt.vanishes);
    CHECK(lt.coefficient.is_zero());
    CHECK(lt.t_exponent == rat(1 - (-2) - 2 - 1, 2));
    CHECK_THROWS_AS(kernel_leading_term(q, 5), Error);
}

TEST_CASE("kernel leading term: Dirac parametrix top degree") {
    testutil::Rng rng(89);
    CurvatureData R = testutil::random_curvature(rng, 2, 1, true);
    VolterraSymbol q = parametrix_expansion(lichnerowicz_symbol(R), 2);
    KernelLeadingTerm lt = kernel_leading_term(q, 2);
    CHECK(lt.t_exponent == 0);
    FormMatrix W = FormMatrix::from_curvature(R);
    MehlerValue g = mehler_kernel(W, {rat(0), rat(0)}, rat(1));
    FormElement expect = (g.value * exp_form(-twist_two_form(R))).component(2);
    CHECK(lt.coefficient == expect);
}

TEST_CASE("composition respects the filtration") {
    testutil::Rng rng(97);
    auto random_volterra = [&](int leading, int depth) {
        VolterraSymbol q(2, 1, Algebra::clifford, 6, leading, depth);
        std::uniform_int_distribution<int> pick_n(1, 2), var(0, 1), xdeg(0, 1);
        for (int j = 0; j <= depth; ++j) {
            int d = leading - j;
            int N = pick_n(rng);
            int btot = d + 2 * N;
            if (btot < 0 || btot > 5) continue;
            mi::Mono beta = 0;
            for (int b = 0; b < btot; ++b) beta = mi::inc(beta, var(rng));
            JetPoly jet(2, 1, Algebra::clifford, 6);
            jet.add_term(xdeg(rng) ? mi::inc(0, var(rng)) : 0,
                         testutil::random_form(rng, 2, 1, Algebra::clifford, 2));
            q.component(j).add_term({beta, N}, jet);
        }
        return q;
    };
    int checked_equal = 0, checked_drop = 0;
    for (int it = 0; it < 40; ++it) {
        VolterraSymbol a = random_volterra(-1, 2);
        VolterraSymbol b = random_volterra(-2, 2);
        auto ma = getzler_order(a), mb = getzler_order(b);
        if (!ma || !mb) continue;
        VolterraSymbol ab = compose_symbols(a, b, 2);
        auto mab = getzler_order(ab);
        if (mab) CHECK(*mab <= *ma + *mb);
        VolterraSymbol mm = compose_symbols(model_operator(a), model_operator(b), 2);
        auto mmm = getzler_order(mm);
        if (mmm && *mmm == *ma + *mb) {
            CHECK(mab == mmm);
            CHECK(model_operator(ab) == mm);
            ++checked_equal;
        } else {
            CHECK((!mab || *mab < *ma + *mb));
            ++checked_drop;
        }
    }
    CHECK(checked_equal > 0);
}
