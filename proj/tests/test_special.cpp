#include "doctest.h"
#include "oracles.hpp"

#include "planar/calculus.hpp"
#include "planar/special.hpp"
#include "planar/substitution.hpp"

using namespace planar;

namespace {
const Monomial X = Monomial::var_x();
} // namespace

TEST_CASE("bracket arithmetic") {
    CHECK(bracket(2, 1) == Rational(1));
    CHECK(bracket(2, 2) == Rational(3));
    CHECK(bracket(3, 2) == Rational(4));
    CHECK(bracket(2, 3) == Rational(7));
    CHECK(bracket_factorial(2, 0) == Rational(1));
    CHECK(bracket_factorial(2, 3) == Rational(21));
    CHECK(bracket_factorial(3, 3) == Rational(52));
    CHECK_THROWS_AS(bracket(1, 2), ArityError);
    CHECK_THROWS_AS(exp_k(1, 3), ArityError);
}

TEST_CASE("exponential low-degree slices") {
    for (long k = 2; k <= 5; ++k) {
        Series e = exp_k(k, 3);
        CHECK(e.coefficient(Monomial::unit()) == Rational(1));
        CHECK(e.coefficient(X) == Rational(1));
        Series deg2 = homogeneous_component(e, 2);
        CHECK(deg2.terms().size() == 1);
        CHECK(deg2.coefficient(graft({X, X})) == Rational(1, 2));
    }

    Series e2 = exp_k(2, 4);
    CHECK(e2.coefficient(graft({X, graft({X, X})})) == Rational(1, 12));
    CHECK(e2.coefficient(graft({graft({X, X}), X})) == Rational(1, 12));
    // binary exponential has no corollas of arity 3 or more
    for (const auto& [m, c] : e2.terms()) {
        CHECK(m.arity() <= 2);
    }
}

TEST_CASE("exponential verifiers pass") {
    CHECK(verify_exp_functional_equation(2, 5).passed);
    CHECK(verify_exp_functional_equation(3, 4).passed);
    CHECK(verify_exp_derivative(2, 5).passed);
    CHECK(verify_exp_derivative(4, 4).passed);
    CHECK(verify_omega_equation(2, 5).passed);
    CHECK(verify_omega_equation(3, 4).passed);
}

TEST_CASE("reversion fixes x and inverts polynomials") {
    CHECK(agree(reversion(Series::x(5), 5), Series::x(5)));

    Series g = add(Series::x(3), Series::monomial(graft({X, X}), 3));
    Series h = reversion(g, 3);
    CHECK(h.coefficient(X) == Rational(1));
    CHECK(h.coefficient(graft({X, X})) == Rational(-1));
    CHECK(h.coefficient(graft({X, graft({X, X})})) == Rational(1));
    CHECK(h.coefficient(graft({graft({X, X}), X})) == Rational(1));
    CHECK(h.terms().size() == 4);

    CHECK(agree(substitute(h, g), Series::x(3)));
    CHECK(agree(substitute(g, h), Series::x(3)));
    CHECK(agree(reversion(h, 3), g));
}

TEST_CASE("reversion input validation") {
    Series with_y = add(Series::x(4), Series::y(4));
    CHECK_THROWS_AS(reversion(with_y, 4), VariableError);
    CHECK_THROWS_AS(reversion(Series::x(2), 3), PrecisionError);
    Series affine = add(Series::one(4), Series::x(4));
    CHECK_THROWS_AS(reversion(affine, 4), OrderError);
    Series doubled = scale(Rational(2), Series::x(4));
    CHECK_THROWS_AS(reversion(doubled, 4), NormalizationError);
}

TEST_CASE("logarithm low-degree slices") {
    Series l2 = log_k(2, 3);
    CHECK(l2.coefficient(X) == Rational(1));
    CHECK(l2.coefficient(graft({X, X})) == Rational(-1, 2));
    CHECK(l2.coefficient(graft({X, graft({X, X})})) == Rational(1, 6));
    CHECK(l2.coefficient(graft({graft({X, X}), X})) == Rational(1, 6));
    CHECK(l2.coefficient(graft({X, X, X})) == Rational(0));
    CHECK(l2.coefficient(Monomial::unit()) == Rational(0));

    Series l3 = log_k(3, 3);
    CHECK(l3.coefficient(graft({X, graft({X, X})})) == Rational(3, 16));
    CHECK(l3.coefficient(graft({X, X, X})) == Rational(-1, 24));
}

TEST_CASE("logarithm inverts the exponential both ways") {
    for (long k = 2; k <= 3; ++k) {
        Series e_minus_1 = sub(exp_k(k, 4), Series::one(4));
        Series l = log_k(k, 4);
        CHECK(agree(substitute(l, e_minus_1), Series::x(4)));
        CHECK(agree(substitute(e_minus_1, l), Series::x(4)));
    }
}

TEST_CASE("log verifiers pass") {
    CHECK(verify_log_ode(2, 5).passed);
    CHECK(verify_log_ode(3, 4).passed);
    CHECK(verify_h_recurrence(2, 5).passed);
    CHECK(verify_h_recurrence(3, 4).passed);
}

TEST_CASE("closed forms for the low log slices") {
    for (long k = 2; k <= 4; ++k) {
        Series l = log_k(k, 3);
        for (int n = 1; n <= 3; ++n) {
            CHECK(agree(h_closed_form(k, n), homogeneous_component(l, n)));
        }
    }
    Series h3 = h_closed_form(2, 3);
    CHECK(h3.coefficient(graft({X, graft({X, X})})) == Rational(1, 6));
    CHECK(h3.coefficient(graft({X, X, X})) == Rational(0));
    Series h3k3 = h_closed_form(3, 3);
    CHECK(h3k3.coefficient(graft({X, X, X})) == Rational(-1, 24));
    CHECK_THROWS_AS(h_closed_form(2, 5), Error);
    CHECK_THROWS_AS(h_closed_form(2, 0), Error);
}

TEST_CASE("printed degree-4 closed form at k = 2") {
    Series h4 = h_closed_form(2, 4);
    Monomial x2 = graft({X, X});
    CHECK(h4.coefficient(graft({X, X, X, X})) == Rational(-1, 18));
    CHECK(h4.coefficient(graft({X, graft({X, X, X})})) == Rational(1, 36));
    CHECK(h4.coefficient(graft({X, graft({X, x2})})) == Rational(-1, 21));
    CHECK(h4.coefficient(graft({x2, x2})) == Rational(-5, 84));
    CHECK(h4.coefficient(graft({X, X, x2})) == Rational(0));
}

TEST_CASE("degree-4 discrepancy report at k = 2") {
    Report r = h4_discrepancy_report(2);
    CHECK(!r.passed);
    REQUIRE(r.entries.size() == 5);
    int mismatches = 0;
    for (const auto& e : r.entries)
        if (!e.match) ++mismatches;
    CHECK(mismatches == 2);
    CHECK(r.entries[0].match);
    CHECK(r.entries[3].item.find("x^3") != std::string::npos);
    CHECK(r.entries[4].item.find("x^4") != std::string::npos);
}
