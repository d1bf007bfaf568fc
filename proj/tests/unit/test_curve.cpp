#include <doctest.h>

#include <random>

#include "sharygin/appendix.hpp"
#include "sharygin/curve.hpp"

using namespace sharygin;

namespace {

ProjectiveTriple cubic_point(long a, long b, long c) {
    return ProjectiveTriple(Integer(a), Integer(b), Integer(c), Form::cubic);
}

WeierstrassPoint wp(long x, long y) { return WeierstrassPoint::affine(Rational(x), Rational(y)); }

WeierstrassPoint appendix_point(int n, bool with_d) {
    WeierstrassPoint p = scalar_mul(n, cubic_to_weierstrass(curve_constants().generator_a));
    if (with_d) p = add(p, cubic_to_weierstrass(curve_constants().torsion_d));
    return p;
}

}  // namespace

TEST_CASE("projective canonicalization") {
    ProjectiveTriple p(Rational(-3, 2), Rational(0), Rational(9, 4), Form::cubic);
    CHECK(p.to_string() == "2:0:-3");
    CHECK(cubic_point(-2, 0, 3) == cubic_point(4, 0, -6));
    CHECK_THROWS_AS(cubic_point(0, 0, 0), std::invalid_argument);
    CHECK(ProjectiveTriple::parse("25:-32:17", Form::cubic) == cubic_point(25, -32, 17));
    CHECK_THROWS_AS(ProjectiveTriple::parse("1:2", Form::cubic), std::invalid_argument);
}

TEST_CASE("cubic invariant q") {
    CHECK(eval_cubic_q(curve_constants().origin_o) == 0);
    CHECK(eval_cubic_q(cubic_point(0, 1, 1)) == 0);
    CHECK(eval_cubic_q(cubic_point(1, 1, 1)) == 4);
    CHECK_THROWS_AS(
        eval_cubic_q(ProjectiveTriple(Integer(4), Integer(4), Integer(1), Form::weierstrass)),
        std::invalid_argument);
}

TEST_CASE("q is homogeneous of degree 3") {
    CHECK(cubic_form().homogeneous_degree() == 3);
    std::mt19937_64 rng(20240317);
    std::uniform_int_distribution<long> dist(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        Rational a(dist(rng)), b(dist(rng)), c(dist(rng));
        long lam_num = dist(rng), lam_den = dist(rng);
        if (lam_num == 0 || lam_den == 0) continue;
        Rational lam = make_rational(Integer(lam_num), Integer(lam_den));
        Rational lhs = eval_cubic_q(Rational(lam * a), Rational(lam * b), Rational(lam * c));
        CHECK(lhs == Rational(lam * lam * lam * eval_cubic_q(a, b, c)));
    }
}

TEST_CASE("on-curve predicates") {
    CHECK(is_on_curve(wp(4, 4)));
    CHECK(is_on_curve(WeierstrassPoint::infinity()));
    CHECK(!is_on_curve(cubic_point(1, 1, 1)));
    CHECK(is_on_curve(ProjectiveTriple(Integer(0), Integer(1), Integer(0), Form::weierstrass)));
    CHECK(is_on_curve(ProjectiveTriple(Integer(-1), Integer(-1), Integer(1), Form::minimal)));
    CHECK(is_on_minimal_curve(Rational(1), Rational(0)));
}

TEST_CASE("cubic <-> weierstrass transforms") {
    CHECK(cubic_to_weierstrass(curve_constants().generator_a) == wp(-4, -12));
    CHECK(cubic_to_weierstrass(curve_constants().origin_o).is_infinity());
    CHECK(cubic_to_weierstrass(cubic_point(25, -32, 17)) == wp(36, -228));
    CHECK_THROWS_AS(cubic_to_weierstrass(cubic_point(1, 1, 1)), std::invalid_argument);

    CHECK(weierstrass_to_cubic(wp(4, 4)) == cubic_point(0, 1, 1));
    CHECK(weierstrass_to_cubic(wp(0, 0)) == cubic_point(1, 1, -1));
    CHECK(weierstrass_to_cubic(wp(-1, 6)) == cubic_point(1, 5, -4));
    CHECK(weierstrass_to_cubic(WeierstrassPoint::infinity()) == curve_constants().origin_o);
}

TEST_CASE("minimal <-> weierstrass transforms") {
    auto minimal = [](long x, long y, long z) {
        return ProjectiveTriple(Integer(x), Integer(y), Integer(z), Form::minimal);
    };
    CHECK(minimal_to_weierstrass(minimal(-1, -1, 1)) == wp(-4, -12));
    CHECK(minimal_to_weierstrass(minimal(9, -33, 1)) == wp(36, -228));
    CHECK(minimal_to_weierstrass(minimal(1, 0, 1)) == wp(4, 4));
    CHECK(minimal_to_weierstrass(minimal(0, 1, 0)).is_infinity());
    CHECK_THROWS_AS(minimal_to_weierstrass(minimal(1, 1, 1)), std::invalid_argument);

    CHECK(weierstrass_to_minimal(wp(-4, -12)) == minimal(-1, -1, 1));
    CHECK(weierstrass_to_minimal(WeierstrassPoint::infinity()) == minimal(0, 1, 0));
}

TEST_CASE("the model maps are verified symbolically") { CHECK(transform_identities_hold()); }

TEST_CASE("negation in every model") {
    CHECK(negate(cubic_point(1, 0, -1)) == cubic_point(0, 1, -1));
    CHECK(negate(wp(4, 4)) == wp(4, -4));
    CHECK(negate(wp(0, 0)) == wp(0, 0));
    CHECK(negate(negate(cubic_point(1, 3, -5))) == cubic_point(1, 3, -5));
    CHECK(add(wp(-4, -12), negate(wp(-4, -12))).is_infinity());
    // minimal-model negation (x, y) -> (x, -x-y): -A = (-1, 2)
    ProjectiveTriple neg_a =
        negate(ProjectiveTriple(Integer(-1), Integer(-1), Integer(1), Form::minimal));
    CHECK(neg_a == ProjectiveTriple(Integer(-1), Integer(2), Integer(1), Form::minimal));
    CHECK(minimal_to_weierstrass(neg_a) == wp(-4, 12));
}

TEST_CASE("negation agrees across forms") {
    for (const AppendixRow& row : appendix_rows()) {
        WeierstrassPoint p = appendix_point(row.n, row.with_d);
        CHECK(weierstrass_to_cubic(negate(p)) == negate(weierstrass_to_cubic(p)));
        CHECK(weierstrass_to_minimal(negate(p)) == negate(weierstrass_to_minimal(p)));
    }
}

TEST_CASE("chord-tangent addition") {
    CHECK(add(wp(-4, -12), wp(-4, -12)) == wp(4, 4));     // A + A = 2A
    CHECK(add(wp(-4, -12), wp(0, 0)) == wp(8, -24));      // A + D
    CHECK(add(wp(4, 4), WeierstrassPoint::infinity()) == wp(4, 4));
    CHECK(add(wp(0, 0), wp(0, 0)).is_infinity());         // 2-torsion
}

TEST_CASE("scalar multiplication") {
    WeierstrassPoint a = wp(-4, -12);
    CHECK(scalar_mul(3, a) == wp(-1, 6));
    CHECK(scalar_mul(2, wp(0, 0)).is_infinity());
    CHECK(scalar_mul(6, a).x() == make_rational(Integer(121), Integer(16)));
    CHECK(scalar_mul(0, a).is_infinity());
    CHECK(scalar_mul(-5, a) == negate(scalar_mul(5, a)));
    // agrees with iterated addition
    WeierstrassPoint acc = WeierstrassPoint::infinity();
    for (int n = 1; n <= 12; ++n) {
        acc = add(acc, a);
        CHECK(acc == scalar_mul(n, a));
    }
}

TEST_CASE("group axioms on the reference points") {
    std::vector<WeierstrassPoint> pts;
    for (const AppendixRow& row : appendix_rows()) pts.push_back(appendix_point(row.n, row.with_d));

    for (const auto& p : pts) {
        CHECK(add(p, WeierstrassPoint::infinity()) == p);
        CHECK(add(p, negate(p)).is_infinity());
        for (const auto& q : pts) CHECK(add(p, q) == add(q, p));
    }
    for (const auto& p : pts)
        for (const auto& q : pts)
            for (const auto& r : pts) CHECK(add(add(p, q), r) == add(p, add(q, r)));
}

TEST_CASE("closure of the group law") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> ndist(1, 15);
    WeierstrassPoint a = wp(-4, -12);
    for (int trial = 0; trial < 20; ++trial) {
        WeierstrassPoint p = scalar_mul(ndist(rng), a);
        WeierstrassPoint q = scalar_mul(ndist(rng), a);
        CHECK(is_on_curve(add(p, q)));
        CHECK(is_on_curve(scalar_mul(ndist(rng), p)));
    }
}

TEST_CASE("round trips on 200 random points") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> ndist(1, 40);
    std::uniform_int_distribution<int> eps(0, 1);
    WeierstrassPoint a = wp(-4, -12), d = wp(0, 0);
    for (int trial = 0; trial < 200; ++trial) {
        WeierstrassPoint p = scalar_mul(ndist(rng), a);
        if (eps(rng)) p = add(p, d);
        CHECK(cubic_to_weierstrass(weierstrass_to_cubic(p)) == p);
        CHECK(minimal_to_weierstrass(weierstrass_to_minimal(p)) == p);
        ProjectiveTriple cubic = weierstrass_to_cubic(p);
        CHECK(weierstrass_to_cubic(cubic_to_weierstrass(cubic)) == cubic);
    }
}

TEST_CASE("reference table rows reproduce in all three forms") {
    for (const AppendixRow& row : appendix_rows()) {
        WeierstrassPoint p = appendix_point(row.n, row.with_d);
        CHECK(to_projective(p) == row.weierstrass);
        CHECK(weierstrass_to_cubic(p) == row.cubic);
        CHECK(weierstrass_to_minimal(p) == row.minimal);
    }
}

TEST_CASE("hessian") {
    CHECK(hessian_eval(curve_constants().origin_o) == 0);
    CHECK(hessian_eval(curve_constants().torsion_d) == -96);
    // homogeneity: H(2,-2,0) = 8 H(1,-1,0) = 0
    CHECK(hessian_eval(cubic_point(2, -2, 0)) == 0);
    CHECK(hessian_form().homogeneous_degree() == 3);
    CHECK(hessian_form().evaluate(Rational(2), Rational(4), Rational(-6)) ==
          Rational(8) * hessian_form().evaluate(Rational(1), Rational(2), Rational(-3)));
}

TEST_CASE("inflexion polynomial") {
    IntPoly octic = inflexion_polynomial();
    std::vector<Integer> expected{Integer(32),   Integer(115), Integer(506),
                                  Integer(1053), Integer(1212), Integer(1053),
                                  Integer(506),  Integer(115), Integer(32)};
    CHECK(octic.coefficients() == expected);
    for (size_t i = 0; i <= 8; ++i) CHECK(octic[i] == octic[8 - i]);  // palindromic
    CHECK(octic.evaluate(Integer(-1)) == -48);
}

TEST_CASE("smoothness") {
    CHECK(check_smooth());
    CHECK(curve_constants().elliptic_disc == 2506752);
    CHECK(curve_constants().elliptic_disc == 16 * curve_constants().cubic_disc);
    // cuspidal fixture y^2 = x^3
    CHECK(!check_smooth(WeierstrassCoefficients{Integer(0), Integer(0), Integer(0)}));
    // nodal fixture y^2 = x^3 + x^2
    CHECK(!check_smooth(WeierstrassCoefficients{Integer(1), Integer(0), Integer(0)}));
}

TEST_CASE("tangent lines") {
    LinearForm at_2a_neg = tangent_line(cubic_point(1, 0, 1));
    CHECK(at_2a_neg.coeffs == std::array<Integer, 3>{Integer(4), Integer(1), Integer(-4)});

    // mirror symmetry under a <-> b
    LinearForm mirrored = tangent_line(cubic_point(0, 1, 1));
    CHECK(mirrored.coeffs == std::array<Integer, 3>{Integer(1), Integer(4), Integer(-4)});

    // at the origin the tangent 2a + 2b + c meets the curve with multiplicity 3:
    // q(s*(1,-1,0) + t*(1,0,-2)) has only the t^3 monomial.
    LinearForm at_origin = tangent_line(curve_constants().origin_o);
    CHECK(at_origin.coeffs == std::array<Integer, 3>{Integer(2), Integer(2), Integer(1)});
    TriPoly s = TriPoly::variable(0), t = TriPoly::variable(1);
    TriPoly restricted = cubic_form().compose({s + t, -s, t.scaled(Rational(-2))});
    for (const auto& [mono, coeff] : restricted.terms()) {
        CHECK(mono[1] == 3);  // only t^3 survives
        (void)coeff;
    }
    CHECK(!restricted.is_zero());

    CHECK_THROWS_AS(tangent_line(cubic_point(1, 1, 1)), std::invalid_argument);
}
