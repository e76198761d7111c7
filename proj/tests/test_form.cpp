#include <doctest.h>

#include "test_util.hpp"

using namespace heatsym;

namespace {
FormElement dx(int n, int i, int p = 1) { return FormElement::generator(n, p, i); }
FormElement ce(int n, int i, int p = 1) {
    return FormElement::generator(n, p, i, Algebra::clifford);
}
} // namespace

TEST_CASE("wedge basics") {
    int n = 3;
    CHECK(wedge(dx(n, 1), dx(n, 2)) == -wedge(dx(n, 2), dx(n, 1)));
    CHECK(wedge(dx(n, 1), dx(n, 1)).is_zero());
    CHECK(wedge(dx(n, 1) + dx(n, 2), dx(n, 2)) == wedge(dx(n, 1), dx(n, 2)));
    // canonicalization: inserting dx2^dx1 stores -dx1^dx2
    FormElement f(n, 1, Algebra::exterior);
    int idx[2] = {2, 1};
    f.add_monomial(idx, ScalarMatrix::identity(1));
    CHECK(f == -wedge(dx(n, 1), dx(n, 2)));
    int rep[2] = {2, 2};
    FormElement g(n, 1, Algebra::exterior);
    g.add_monomial(rep, ScalarMatrix::identity(1));
    CHECK(g.is_zero());
}

TEST_CASE("wedge mismatch errors") {
    CHECK_THROWS_AS(wedge(dx(2, 1), dx(3, 1)), Error);
    CHECK_THROWS_AS(wedge(dx(2, 1, 1), dx(2, 1, 2)), Error);
}

TEST_CASE("clifford relations") {
    int n = 3;
    CHECK(ce(n, 1) * ce(n, 1) == FormElement::scalar(n, 1, ExtScalar::integer(-1), Algebra::clifford));
    CHECK(symbol_map(ce(n, 1) * ce(n, 2)) == wedge(dx(n, 1), dx(n, 2)));
    CHECK(ce(n, 1) * ce(n, 2) * ce(n, 1) == ce(n, 2));
}

TEST_CASE("clifford anticommutator on random rational 1-forms") {
    testutil::Rng rng(11);
    int n = 4;
    for (int it = 0; it < 50; ++it) {
        FormElement xi(n, 1, Algebra::clifford), eta(n, 1, Algebra::clifford);
        ExtScalar inner;
        std::vector<Rational> a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = testutil::random_rational(rng);
            b[i] = testutil::random_rational(rng);
            xi += ce(n, i + 1).scaled(ExtScalar::rational(a[i]));
            eta += ce(n, i + 1).scaled(ExtScalar::rational(b[i]));
            inner += ExtScalar::rational(a[i] * b[i]);
        }
        FormElement anti = xi * eta + eta * xi;
        CHECK(anti == FormElement::scalar(n, 1, ExtScalar::integer(-2) * inner, Algebra::clifford));
    }
}

TEST_CASE("clifford associativity on random elements") {
    testutil::Rng rng(13);
    for (int n = 2; n <= 4; ++n)
        for (int it = 0; it < 20; ++it) {
            FormElement a = testutil::random_form(rng, n, 2, Algebra::clifford);
            FormElement b = testutil::random_form(rng, n, 2, Algebra::clifford);
            FormElement c = testutil::random_form(rng, n, 2, Algebra::clifford);
            CHECK((a * b) * c == a * (b * c));
        }
}

TEST_CASE("quantize/symbol roundtrip") {
    testutil::Rng rng(17);
    CHECK(symbol_map(quantize(wedge(dx(2, 1), dx(2, 2)))) == wedge(dx(2, 1), dx(2, 2)));
    CHECK(quantize(FormElement::unit(3, 1)) == FormElement::unit(3, 1, Algebra::clifford));
    for (int it = 0; it < 20; ++it) {
        FormElement x = testutil::random_form(rng, 3, 2, Algebra::exterior);
        CHECK(symbol_map(quantize(x)) == x);
    }
    CHECK(symbol_map(ce(2, 1) * ce(2, 2)) == wedge(dx(2, 1), dx(2, 2)));
}

TEST_CASE("supertrace values") {
    CHECK(supertrace_even(ce(2, 1) * ce(2, 2)) == ExtScalar::integer(-2) * ExtScalar::i());
    CHECK(supertrace_even(FormElement::unit(2, 1, Algebra::clifford)) == ExtScalar());
    CHECK(supertrace_even(ce(4, 1) * ce(4, 2) * ce(4, 3) * ce(4, 4)) == ExtScalar::integer(-4));
    CHECK_THROWS_AS(supertrace_even(ce(3, 1)), Error);
}

TEST_CASE("odd trace values") {
    CHECK(trace_odd(ce(1, 1)) == -ExtScalar::i());
    CHECK(trace_odd(ce(3, 1) * ce(3, 2) * ce(3, 3)) == ExtScalar::integer(-2));
    CHECK(trace_odd(ce(3, 1)) == ExtScalar());
    // degree-0 part contributes the ordinary spinor trace 2^{[n/2]}
    CHECK(trace_odd(FormElement::unit(3, 1, Algebra::clifford)) == ExtScalar::integer(2));
    CHECK_THROWS_AS(trace_odd(ce(2, 1)), Error);
}

TEST_CASE("supertrace is a supertrace") {
    testutil::Rng rng(19);
    int n = 4;
    std::uniform_int_distribution<int> mask(0, (1 << n) - 1);
    for (int it = 0; it < 80; ++it) {
        // homogeneous elements: single random masks
        FormElement a(n, 2, Algebra::clifford), b(n, 2, Algebra::clifford);
        int ma = mask(rng), mb = mask(rng);
        a.add_term(ma, testutil::random_matrix(rng, 2));
        b.add_term(mb, testutil::random_matrix(rng, 2));
        int pa = std::popcount(static_cast<unsigned>(ma)) % 2;
        int pb = std::popcount(static_cast<unsigned>(mb)) % 2;
        ExtScalar lhs = supertrace_even(a * b);
        ExtScalar rhs = supertrace_even(b * a);
        if (pa * pb == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}
