#include <doctest.h>

#include <random>

#include "sharygin/enumerate.hpp"
#include "sharygin/triangle.hpp"

using namespace sharygin;

namespace {

TriangleTriple triangle(long a, long b, long c) {
    return TriangleTriple(Rational(a), Rational(b), Rational(c));
}

// Independent oracle: place B = (0,0), C = (a,0), recover A exactly, compute
// the three bisector feet by section ratios and return squared distances.
// Squared distances stay rational because the y-coordinate of A enters only
// through its square.
struct OracleSquares {
    Rational a2, b2, c2;
};

OracleSquares bisectral_squares_oracle(const TriangleTriple& t) {
    const Rational &a = t.a(), &b = t.b(), &c = t.c();
    Rational xa((c * c + a * a - b * b) / (2 * a));
    Rational ya_sq(c * c - xa * xa);

    // A' on BC at distance ac/(b+c) from B.
    Rational apx(a * c / (b + c));

    // C' on segment B->A with |BC'| = ac/(a+b): C' = A * (a/(a+b)).
    Rational cl(a / (a + b));
    Rational cpx(xa * cl);
    // y-component is ya * cl

    // B' on segment C->A with |CB'| = ab/(a+c): B' = C + (A - C) * (a/(a+c)).
    Rational bl(a / (a + c));
    Rational bpx(a + (xa - a) * bl);
    // y-component is ya * bl

    auto sq = [](const Rational& v) { return Rational(v * v); };
    OracleSquares out;
    out.a2 = sq(bpx - cpx) + ya_sq * sq(bl - cl);   // B'C'
    out.b2 = sq(apx - cpx) + ya_sq * sq(cl);        // A'C'
    out.c2 = sq(apx - bpx) + ya_sq * sq(bl);        // A'B'
    return out;
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, 12);
    return make_rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace

TEST_CASE("triangle validity") {
    CHECK_THROWS_AS(triangle(1, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(triangle(1, 2, 3), std::invalid_argument);  // degenerate
    CHECK_THROWS_AS(TriangleTriple(Rational(-3), Rational(4), Rational(5)), std::invalid_argument);
    CHECK(triangle(3, 4, 5).is_scalene());
    CHECK(!triangle(5, 5, 3).is_scalene());
}

TEST_CASE("bisectral squares: equilateral is the medial triangle") {
    BisectralSquares s = bisectral_squares(triangle(1, 1, 1));
    CHECK(s.a2 == Rational(1, 4));
    CHECK(s.b2 == Rational(1, 4));
    CHECK(s.c2 == Rational(1, 4));
}

TEST_CASE("bisectral squares of (3,4,5) against the coordinate oracle") {
    BisectralSquares s = bisectral_squares(triangle(3, 4, 5));
    CHECK(s.a2 == make_rational(Integer(585), Integer(196)));
    CHECK(s.b2 == make_rational(Integer(1360), Integer(441)));
    CHECK(s.c2 == make_rational(Integer(145), Integer(36)));
    OracleSquares o = bisectral_squares_oracle(triangle(3, 4, 5));
    CHECK(o.a2 == s.a2);
    CHECK(o.b2 == s.b2);
    CHECK(o.c2 == s.c2);
}

TEST_CASE("bisectral squares agree with the oracle on random triangles") {
    std::mt19937_64 rng(1905);
    int done = 0;
    while (done < 50) {
        Rational a = random_rational(rng, 1, 60), b = random_rational(rng, 1, 60),
                 c = random_rational(rng, 1, 60);
        if (!TriangleTriple::valid_sides(a, b, c)) continue;
        TriangleTriple t(a, b, c);
        BisectralSquares s = bisectral_squares(t);
        OracleSquares o = bisectral_squares_oracle(t);
        CHECK(s.a2 == o.a2);
        CHECK(s.b2 == o.b2);
        CHECK(s.c2 == o.c2);
        ++done;
    }
}

TEST_CASE("the discovered integer triangle is Sharygin") {
    TriangleTriple flagship = triangle(18800081, 1481089, 19214131);
    BisectralSquares s = bisectral_squares(flagship);
    CHECK(s.a2 == s.b2);
    CHECK(s.a2 != s.c2);
    CHECK(is_sharygin(flagship));
    CHECK(!is_sharygin(triangle(1, 1, 1)));
    CHECK(!is_sharygin(triangle(3, 4, 5)));
}

TEST_CASE("point_to_triangle") {
    ProjectiveTriple nine_a_d(Integer(1481089), Integer(18800081), Integer(19214131), Form::cubic);
    auto t = point_to_triangle(nine_a_d);
    REQUIRE(t.has_value());
    CHECK(t->a() == 1481089);
    CHECK(t->b() == 18800081);
    CHECK(t->c() == 19214131);

    CHECK(!point_to_triangle(curve_constants().generator_a).has_value());  // zero coordinate
    CHECK(!point_to_triangle(curve_constants().torsion_d).has_value());    // mixed signs
    CHECK_THROWS_AS(point_to_triangle(ProjectiveTriple(Integer(1), Integer(1), Integer(1), Form::cubic)),
                    std::invalid_argument);
}

TEST_CASE("largest angle cosine") {
    CHECK(largest_angle_cosine(triangle(3, 4, 5)) == 0);
    CHECK(largest_angle_cosine(triangle(1, 1, 1)) == Rational(1, 2));
    CHECK(largest_angle_cosine(triangle(2, 2, 3)) == Rational(-1, 8));
}

TEST_CASE("markelov chart") {
    auto mk = [](const Rational& x, const Rational& y, const Rational& z) {
        return markelov_eval(MarkelovChart{x, y, z});
    };
    CHECK(mk(Rational(-1), Rational(0), Rational(1)) == 0);
    CHECK(mk(Rational(-1, 2), Rational(-1, 2), Rational(3, 2)) == 0);
    CHECK(mk(Rational(1), Rational(1), Rational(1)) == 32);
    CHECK(markelov_q_factor() == 1);

    // chart consistency: markelov(x,y,z) = factor * q(y+z, x+z, x+y)
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        Rational x(dist(rng)), y(dist(rng)), z(dist(rng));
        CHECK(mk(x, y, z) ==
              Rational(markelov_q_factor() *
                       eval_cubic_q(Rational(y + z), Rational(x + z), Rational(x + y))));
    }
}

TEST_CASE("trigonometric residual") {
    set_real_precision_bits(128);
    Real pi = real_pi();
    Real tol("1e-30");

    Real heptagon = trig_residual(AngleTriple::from_two(pi / 7, 2 * pi / 7));
    CHECK(abs(heptagon) < tol);

    Real equilateral = trig_residual(AngleTriple::from_two(pi / 3, pi / 3));
    CHECK(abs(equilateral) > Real("0.1"));

    CHECK_THROWS_AS(AngleTriple::from_two(Real(2), Real(2)), std::invalid_argument);
}

TEST_CASE("law-of-sines consistency: q(2 sin a, 2 sin b, 2 sin(a+b)) = 8 sin a sin b residual") {
    set_real_precision_bits(128);
    Real pi = real_pi();
    Real tol = default_tolerance();
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(0.05, 1.2);
    for (int trial = 0; trial < 20; ++trial) {
        Real alpha(angle(rng)), beta(angle(rng));
        if (alpha + beta >= pi) continue;
        Real sa = sin(alpha), sb = sin(beta), sc = sin(alpha + beta);
        // evaluate q numerically through its monomials
        Real a = 2 * sa, b = 2 * sb, c = 2 * sc;
        Real q = -c * c * c - c * c * (a + b) + c * (a * a + a * b + b * b) +
                 (a * a * a + a * a * b + a * b * b + b * b * b);
        Real rhs = 8 * sa * sb * trig_residual(AngleTriple::from_two(alpha, beta));
        CHECK(abs(q - rhs) < tol);
    }
}

TEST_CASE("heptagon triangle") {
    set_real_precision_bits(128);
    Real tol = default_tolerance();
    auto sides = heptagon_side_lengths();
    // scalene
    CHECK(abs(sides[0] - sides[1]) > Real("0.1"));
    CHECK(abs(sides[1] - sides[2]) > Real("0.1"));
    CHECK(abs(sides[0] - sides[2]) > Real("0.1"));
    // ratio of the two shorter sides is 2 cos(pi/7)
    Real ratio = sides[1] / sides[0];
    CHECK(abs(ratio - 2 * cos(real_pi() / 7)) < tol);
    // numerically Sharygin: two bisectral squares agree
    auto sq = bisectral_squares_numeric(sides[0], sides[1], sides[2]);
    CHECK(abs(sq[0] - sq[1]) < tol);
    CHECK(abs(sq[0] - sq[2]) > Real("1e-4"));
}

TEST_CASE("equivalence: Sharygin iff q = 0, on 500 samples") {
    std::mt19937_64 rng(160914);
    int checked = 0;

    // true cases: catalog triangles and rational scalings of them
    std::vector<TriangleTriple> true_cases;
    for (const PointRecord& rec : walk(30))
        if (rec.triangle) true_cases.push_back(*rec.triangle);
    REQUIRE(true_cases.size() == 4);
    std::uniform_int_distribution<long> scale_num(1, 7), scale_den(1, 7);
    for (const TriangleTriple& t : true_cases) {
        for (int rep = 0; rep < 5; ++rep) {
            TriangleTriple s = t.scaled(make_rational(Integer(scale_num(rng)), Integer(scale_den(rng))));
            CHECK(eval_cubic_q(s.a(), s.b(), s.c()) == 0);
            CHECK(is_sharygin(s));
            ++checked;
        }
    }

    // random scalene triangles: q = 0 iff Sharygin (almost always both false)
    while (checked < 500) {
        Rational a = random_rational(rng, 1, 40), b = random_rational(rng, 1, 40),
                 c = random_rational(rng, 1, 40);
        if (!TriangleTriple::valid_sides(a, b, c)) continue;
        TriangleTriple t(a, b, c);
        if (!t.is_scalene()) continue;
        bool q_zero = sgn(eval_cubic_q(a, b, c)) == 0;
        CHECK(is_sharygin(t) == q_zero);
        ++checked;
    }
}

TEST_CASE("sign identity: sign(a2 - b2) = sign((a-b) q)") {
    std::mt19937_64 rng(31337);
    int done = 0;
    while (done < 100) {
        Rational a = random_rational(rng, 1, 40), b = random_rational(rng, 1, 40),
                 c = random_rational(rng, 1, 40);
        if (!TriangleTriple::valid_sides(a, b, c)) continue;
        TriangleTriple t(a, b, c);
        BisectralSquares s = bisectral_squares(t);
        CHECK(sgn(Rational(s.a2 - s.b2)) == sgn(Rational((a - b) * eval_cubic_q(a, b, c))));
        ++done;
    }
    // spot value: (3,4,5) has a' < b' while (a-b) q < 0
    BisectralSquares s = bisectral_squares(triangle(3, 4, 5));
    CHECK(sgn(Rational(s.a2 - s.b2)) < 0);
    CHECK(sgn(Rational((Rational(3) - Rational(4)) * eval_cubic_q(Rational(3), Rational(4), Rational(5)))) < 0);
}

TEST_CASE("isosceles degeneracy and scale invariance") {
    std::mt19937_64 rng(8);
    int done = 0;
    while (done < 40) {
        Rational a = random_rational(rng, 1, 30), c = random_rational(rng, 1, 30);
        if (!TriangleTriple::valid_sides(a, a, c)) continue;
        BisectralSquares s = bisectral_squares(TriangleTriple(a, a, c));
        CHECK(s.a2 == s.b2);
        ++done;
    }
    TriangleTriple flagship = triangle(18800081, 1481089, 19214131);
    for (long num : {2L, 3L, 7L})
        for (long den : {1L, 5L})
            CHECK(is_sharygin(flagship.scaled(make_rational(Integer(num), Integer(den)))));
    TriangleTriple plain = triangle(4, 5, 6);
    CHECK(is_sharygin(plain) == is_sharygin(plain.scaled(Rational(7, 3))));
}

TEST_CASE("bisectral squares commute with side permutations") {
    std::mt19937_64 rng(2718);
    int done = 0;
    while (done < 30) {
        Rational a = random_rational(rng, 1, 30), b = random_rational(rng, 1, 30),
                 c = random_rational(rng, 1, 30);
        if (!TriangleTriple::valid_sides(a, b, c)) continue;
        BisectralSquares s = bisectral_squares(TriangleTriple(a, b, c));
        BisectralSquares swapped_ab = bisectral_squares(TriangleTriple(b, a, c));
        CHECK(swapped_ab.a2 == s.b2);
        CHECK(swapped_ab.b2 == s.a2);
        CHECK(swapped_ab.c2 == s.c2);
        BisectralSquares rotated = bisectral_squares(TriangleTriple(b, c, a));
        CHECK(rotated.a2 == s.b2);
        CHECK(rotated.b2 == s.c2);
        CHECK(rotated.c2 == s.a2);
        ++done;
    }
}
