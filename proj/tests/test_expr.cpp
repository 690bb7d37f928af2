#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "planar/expr.hpp"
#include "planar/special.hpp"

using namespace planar;

namespace {
const Monomial X = Monomial::var_x();
const Monomial Y = Monomial::var_y();
} // namespace

TEST_CASE("parsing atoms and products") {
    CHECK(agree(parse_series("x"), Series::x(1)));
    CHECK(agree(parse_series("1"), Series::one(0)));
    CHECK(agree(parse_series("y"), Series::from_terms({{Y, Rational(1)}}, 0)));

    Series s = parse_series("x^3");
    CHECK(s.precision() == 3);
    CHECK(s.coefficient(graft({X, X, X})) == Rational(1));

    Monomial m = parse_monomial("x*(x*x^2)");
    CHECK(m.encoding() == "(x,(x,(x,x)))");
    CHECK(parse_monomial("(x,(x,(x,x)))") == m);
    CHECK(parse_monomial(" ( x , ( x , ( x , x ) ) ) ") == m);
}

TEST_CASE("orbit braces expand to the full orbit") {
    Series s = parse_series("{x*x^2}");
    CHECK(s.coefficient(graft({X, graft({X, X})})) == Rational(1));
    CHECK(s.coefficient(graft({graft({X, X}), X})) == Rational(1));
    CHECK(s.terms().size() == 2);

    Series single = parse_series("{x^2*x^2}");
    CHECK(single.terms().size() == 1);

    Series big = parse_series("{x*(x*x^2)}");
    CHECK(big.terms().size() == 4);
}

TEST_CASE("signs and coefficients") {
    Series s = parse_series("-1/2*x^2 + x");
    CHECK(s.coefficient(X) == Rational(1));
    CHECK(s.coefficient(graft({X, X})) == Rational(-1, 2));
    CHECK(s.precision() == 2);

    CHECK(parse_series("2*1").coefficient(Monomial::unit()) == Rational(2));
    CHECK(parse_series("x - x").is_zero());
    CHECK(parse_series("-x").coefficient(X) == Rational(-1));
    CHECK(parse_series("3/6*x").coefficient(X) == Rational(1, 2));
}

TEST_CASE("grouping atoms") {
    Series s = parse_series("(x*x)*(x*x)");
    CHECK(s.coefficient(graft({graft({X, X}), graft({X, X})})) == Rational(1));
    // a group around a single atom is just that atom
    CHECK(agree(parse_series("(x)"), Series::x(1)));
    CHECK(parse_monomial("((x,x))") == graft({X, X}));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_series(""), SyntaxError);
    CHECK_THROWS_AS(parse_series("x^1"), SyntaxError);
    CHECK_THROWS_AS(parse_series("x^0"), SyntaxError);
    CHECK_THROWS_AS(parse_series("x^2000"), SyntaxError);
    CHECK_THROWS_AS(parse_series("x*1"), SyntaxError);
    CHECK_THROWS_AS(parse_series("x,y"), SyntaxError);
    CHECK_THROWS_AS(parse_series("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_series("()"), SyntaxError);
    CHECK_THROWS_AS(parse_series("{x+y}"), SyntaxError);
    CHECK_THROWS_AS(parse_series("1/0*x"), SyntaxError);
    CHECK_THROWS_AS(parse_monomial("x + y"), SyntaxError);
    CHECK_THROWS_AS(parse_monomial("2*x"), SyntaxError);

    try {
        parse_series("x ^ oops");
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("canonical formatting") {
    Series s = parse_series("1/2*(x,x) - x");
    CHECK(format_canonical(s) == "-1*x + 1/2*(x,x)");
    CHECK(format_canonical(Series::zero(3)) == "0*1");
    CHECK(format_canonical(Series::one(0)) == "1*1");
}

TEST_CASE("pretty formatting") {
    CHECK(format_pretty(Series::zero(2)) == "0*1");
    CHECK(format_pretty(parse_series("1 + x")) == "1 + x");
    CHECK(format_pretty(parse_series("-x + 1/2*x^2")) == "-x + 1/2*x^2");
    CHECK(format_pretty(parse_series("{x*x^2}")) == "{x*x^2}");
    CHECK(format_pretty(parse_series("1/6*{x*x^2}")) == "1/6*{x*x^2}");
    CHECK(format_pretty(parse_series("x^2*x^2")) == "x^2*x^2");
    // a partial orbit must not collapse
    CHECK(format_pretty(parse_series("x*x^2")) == "x*x^2");
    CHECK(format_pretty(parse_series("x*x^2 + 2*(x^2*x)")) ==
          "2*x^2*x + x*x^2");
    CHECK(format_pretty(parse_series("x*y + y*x")) == "{y*x}");
    CHECK(format_pretty(homogeneous_component(log_k(2, 3), 3)) ==
          "1/6*{x*x^2}");
}

TEST_CASE("pretty monomial syntax") {
    CHECK(pretty_monomial(Monomial::unit()) == "1");
    CHECK(pretty_monomial(graft({X, X, X})) == "x^3");
    CHECK(pretty_monomial(graft({Y, Y})) == "y*y");
    CHECK(pretty_monomial(graft({X, graft({Y, Y})})) == "x*(y*y)");
    CHECK(pretty_monomial(graft({graft({X, X}), X, Y})) == "x^2*x*y");
    CHECK(pretty_monomial(graft({X, graft({X, graft({X, X})})})) ==
          "x*(x*x^2)");
}

TEST_CASE("parse and print round-trip") {
    Series targets[] = {log_k(2, 5), exp_k(3, 4), h_closed_form(2, 4)};
    for (const Series& t : targets) {
        CHECK(agree(parse_series(format_pretty(t)), t));
        CHECK(agree(parse_series(format_canonical(t)), t));
    }

    std::mt19937 rng(211);
    for (int trial = 0; trial < 20; ++trial) {
        Series f = oracles::random_polynomial(rng, 4, 4, 0, {Label::x, Label::y});
        Series back = parse_series(format_pretty(f));
        CHECK(agree(back, f));
        CHECK(format_pretty(parse_series(format_canonical(f))) ==
              format_pretty(f));
    }
}

TEST_CASE("json output is schema-stable") {
    Series s = parse_series("1/2*x^2 + x");
    std::string doc = format_json(s, 2);
    CHECK(doc.find("\"k\": 2") != std::string::npos);
    CHECK(doc.find("\"precision\": 2") != std::string::npos);
    CHECK(doc.find("\"monomial\": \"(x,x)\"") != std::string::npos);
    CHECK(doc.find("\"coeff\": \"1/2\"") != std::string::npos);
    CHECK(doc.find("\"deg_x\": 2") != std::string::npos);
    CHECK(doc.back() == '\n');
    CHECK(format_json(s, 2) == doc);

    std::string nok = format_json(s, std::nullopt);
    CHECK(nok.find("\"k\"") == std::string::npos);
}
