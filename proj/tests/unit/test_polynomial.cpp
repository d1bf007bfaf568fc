#include <doctest.h>

#include "sharygin/polynomial.hpp"

using namespace sharygin;

TEST_CASE("trivariate basics") {
    TriPoly a = TriPoly::variable(0), b = TriPoly::variable(1), c = TriPoly::variable(2);
    TriPoly p = (a + b) * (a - b);
    CHECK(p == a.pow(2) - b.pow(2));
    CHECK(p.derivative(0) == a.scaled(Rational(2)));
    CHECK(p.evaluate(Rational(3), Rational(2), Rational(0)) == 5);

    TriPoly composed = p.compose({b, a, c});
    CHECK(composed == b.pow(2) - a.pow(2));

    CHECK((a * b * c).homogeneous_degree() == 3);
    CHECK_THROWS_AS((a + a * b).homogeneous_degree(), std::domain_error);

    auto lambda = p.proportionality_factor(p.scaled(Rational(-7)));
    REQUIRE(lambda.has_value());
    CHECK(*lambda == -7);
    CHECK(p.proportionality_factor(a * b) == std::nullopt);
}

TEST_CASE("exact division over Z") {
    // (t-1)(t^2+t+1) = t^3-1
    IntPoly cubic({Integer(-1), Integer(0), Integer(0), Integer(1)});
    IntPoly linear({Integer(-1), Integer(1)});
    IntPoly quotient = divide_exact(cubic, linear);
    CHECK(quotient == IntPoly({Integer(1), Integer(1), Integer(1)}));
    CHECK_THROWS_AS(divide_exact(cubic, IntPoly({Integer(1), Integer(1)})), std::domain_error);
}

TEST_CASE("reduction by a monic polynomial") {
    // t^4 mod t^2+1 = 1; t^3 mod t^2+1 = -t
    IntPoly mod({Integer(1), Integer(0), Integer(1)});
    CHECK(mod_monic(IntPoly::monomial(Integer(1), 4), mod) == IntPoly::constant(Integer(1)));
    CHECK(mod_monic(IntPoly::monomial(Integer(1), 3), mod) == IntPoly({Integer(0), Integer(-1)}));
}

TEST_CASE("primitive part") {
    RatPoly p({Rational(-4, 6), Rational(0), Rational(2, 3)});
    IntPoly prim = primitive_part(p);
    CHECK(prim == IntPoly({Integer(-1), Integer(0), Integer(1)}));
    RatPoly neg({Rational(0), Rational(-3, 2)});
    CHECK(primitive_part(neg) == IntPoly({Integer(0), Integer(1)}));  // sign normalized
}

TEST_CASE("interpolation recovers polynomials") {
    RatPoly p({Rational(3), Rational(-2), Rational(0), Rational(5)});
    std::vector<std::pair<Rational, Rational>> nodes;
    for (int t = -2; t <= 2; ++t) nodes.emplace_back(Rational(t), p.evaluate(Rational(t)));
    CHECK(lagrange_interpolate(nodes) == p);
}

TEST_CASE("resultants") {
    // Shared root (x-1) makes the resultant vanish.
    RatPoly f({Rational(2), Rational(-3), Rational(1)});   // (x-1)(x-2)
    RatPoly g({Rational(-5), Rational(4), Rational(1)});   // (x-1)(x+5)
    CHECK(resultant(f, g) == 0);
    // res(x^2+1, x^2-2) = product of (alpha_i - beta_j) = 9
    CHECK(resultant(RatPoly({Rational(1), Rational(0), Rational(1)}),
                    RatPoly({Rational(-2), Rational(0), Rational(1)})) == 9);
}

TEST_CASE("determinant") {
    std::vector<std::vector<Rational>> m{
        {Rational(2), Rational(1)},
        {Rational(7), Rational(4)},
    };
    CHECK(determinant(m) == 1);
    std::vector<std::vector<Rational>> singular{
        {Rational(1), Rational(2)},
        {Rational(2), Rational(4)},
    };
    CHECK(determinant(singular) == 0);
}
