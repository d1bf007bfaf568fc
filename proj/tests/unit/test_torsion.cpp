#include <doctest.h>

#include <random>

#include "sharygin/enumerate.hpp"
#include "sharygin/torsion.hpp"

using namespace sharygin;

namespace {

WeierstrassPoint wp(long x, long y) { return WeierstrassPoint::affine(Rational(x), Rational(y)); }

// Affine curve arithmetic over F_p, used as the independent reduction oracle.
struct ModPoint {
    bool inf = true;
    long x = 0, y = 0;
};

long mod_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        long q = r / new_r;
        std::swap(t, new_t);
        new_t -= q * t;
        std::swap(r, new_r);
        new_r -= q * r;
    }
    return ((t % p) + p) % p;
}

ModPoint mod_add(const ModPoint& a, const ModPoint& b, long p) {
    if (a.inf) return b;
    if (b.inf) return a;
    long slope;
    if (a.x == b.x) {
        if ((a.y + b.y) % p == 0) return ModPoint{};
        slope = ((3 * a.x % p * a.x + 10 * a.x + (p - 32 % p)) % p) * mod_inverse(2 * a.y, p) % p;
    } else {
        slope = ((b.y - a.y + p) % p) * mod_inverse((b.x - a.x + p) % p, p) % p;
    }
    long x3 = (((slope * slope - 5 - a.x - b.x) % p) + p) % p;
    long y3 = ((slope * ((a.x - x3 + p) % p) - a.y) % p + p) % p;
    return ModPoint{false, x3, y3};
}

std::optional<ModPoint> reduce_mod_p(const WeierstrassPoint& q, long p) {
    if (q.is_infinity()) return ModPoint{};
    const Integer &xd = q.x().get_den(), &yd = q.y().get_den();
    if (divides(Integer(p), xd) || divides(Integer(p), yd)) return std::nullopt;
    auto to_fp = [&](const Rational& r) {
        Integer num = r.get_num() % p, den = r.get_den() % p;
        long n = ((num.get_si() % p) + p) % p;
        long d = ((den.get_si() % p) + p) % p;
        return n * mod_inverse(d, p) % p;
    };
    return ModPoint{false, to_fp(q.x()), to_fp(q.y())};
}

}  // namespace

TEST_CASE("torsion subgroup is {O, (0,0)}") {
    auto subgroup = torsion_subgroup();
    REQUIRE(subgroup.size() == 2);
    CHECK(subgroup[0].is_infinity());
    CHECK(subgroup[1] == wp(0, 0));
}

TEST_CASE("candidate audit") {
    auto candidates = torsion_candidates();

    // (4,4) survives the divisor sieve (4 | 2506752) but no n <= 12 kills it
    bool found_44 = false;
    for (const auto& c : candidates)
        if (c.point == wp(4, 4)) {
            found_44 = true;
            CHECK(!c.confirmed_order.has_value());
            CHECK(c.y_divisor == 4);
        }
    CHECK(found_44);
    for (int n = 1; n <= 12; ++n) CHECK(!scalar_mul(n, wp(4, 4)).is_infinity());

    // y = 0 contributes only x = 0: the quadratic x^2+5x-32 has discriminant
    // 153 = 9*17, not a perfect square
    CHECK(!is_perfect_square(Integer(153)));
    for (const auto& c : candidates)
        if (c.y_divisor == 0) CHECK(c.point == wp(0, 0));

    // the only confirmed candidate is (0,0), with order 2
    for (const auto& c : candidates) {
        if (c.point == wp(0, 0))
            CHECK(c.confirmed_order == 2);
        else
            CHECK(!c.confirmed_order.has_value());
    }
}

TEST_CASE("torsion subgroup is closed under the group law") {
    auto subgroup = torsion_subgroup();
    for (const auto& p : subgroup) {
        bool closed_neg = false;
        for (const auto& q : subgroup) closed_neg = closed_neg || negate(p) == q;
        CHECK(closed_neg);
        for (const auto& q : subgroup) {
            WeierstrassPoint sum = add(p, q);
            bool closed = false;
            for (const auto& r : subgroup) closed = closed || sum == r;
            CHECK(closed);
        }
    }
}

TEST_CASE("duplication x-map") {
    Rational x6a = make_rational(Integer(121), Integer(16));
    WeierstrassPoint a = wp(-4, -12);
    CHECK(scalar_mul(6, a).x() == x6a);
    CHECK(duplication_x(x6a) == scalar_mul(12, a).x());
    CHECK(duplication_x(Rational(4)) == 36);  // 2A -> 4A
    CHECK_THROWS_AS(duplication_x(Rational(0)), std::domain_error);

    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> ndist(1, 25);
    for (int trial = 0; trial < 100; ++trial) {
        int n = ndist(rng);
        WeierstrassPoint p = scalar_mul(n, a);
        CHECK(duplication_x(p.x()) == scalar_mul(2 * n, a).x());
    }
}

TEST_CASE("growth certificate from 6A") {
    WeierstrassPoint six_a = scalar_mul(6, wp(-4, -12));
    GrowthCertificate cert = growth_certificate(six_a, 10);
    REQUIRE(cert.numerators.size() == 11);
    CHECK(cert.numerators[0] == 121);
    for (size_t i = 1; i < cert.numerators.size(); ++i) {
        CHECK(cert.numerators[i] > cert.numerators[i - 1]);
        CHECK(cert.numerators[i] > 0);
        CHECK(mpz_odd_p(cert.numerators[i].get_mpz_t()));
    }
}

TEST_CASE("growth chain matches exact duplication") {
    WeierstrassPoint six_a = scalar_mul(6, wp(-4, -12));
    GrowthCertificate cert = growth_certificate(six_a, 4);
    Rational x = six_a.x();
    for (size_t i = 1; i < cert.numerators.size(); ++i) {
        x = duplication_x(x);  // mpq path with full canonicalization
        CHECK(x.get_num() == cert.numerators[i]);
    }
}

TEST_CASE("growth certificate preconditions") {
    // 2A has x = 4: even numerator
    CHECK_THROWS_AS(growth_certificate(wp(4, 4), 3), std::invalid_argument);
    CHECK_THROWS_AS(growth_certificate(WeierstrassPoint::infinity(), 3), std::invalid_argument);
    // -A has x = -4: negative numerator
    CHECK_THROWS_AS(growth_certificate(wp(-4, 12), 3), std::invalid_argument);
}

TEST_CASE("point counts mod small primes") {
    ReductionCount r5 = count_points_mod_p(5);
    CHECK(r5.np == 9);
    CHECK(r5.ap == -4);
    CHECK(r5.ap * r5.ap <= 4 * 5);
    ReductionCount r7 = count_points_mod_p(7);
    CHECK(r7.np == 9);
    CHECK(r7.ap == -2);

    // brute-force oracle over all pairs
    for (long p : {5L, 7L, 11L, 13L}) {
        long brute = 0;
        for (long x = 0; x < p; ++x)
            for (long y = 0; y < p; ++y)
                if ((y * y) % p == ((((x * x + 5 * x) % p) * x % p - 32 * x) % p + p * 32) % p) ++brute;
        CHECK(count_points_mod_p(p).np == brute);
    }

    CHECK_THROWS_AS(count_points_mod_p(3), std::invalid_argument);   // bad reduction
    CHECK_THROWS_AS(count_points_mod_p(17), std::invalid_argument);  // bad reduction
    CHECK_THROWS_AS(count_points_mod_p(4), std::invalid_argument);   // composite
}

TEST_CASE("hasse scan") {
    HasseScanReport report = hasse_scan(1000, 1);
    CHECK(report.violations.empty());
    CHECK(report.counts.size() == 165);  // 168 primes minus {2, 3, 17}
    for (const ReductionCount& rc : report.counts) {
        CHECK(rc.ap == rc.p - rc.np);
        // (0,0) reduces to 2-torsion mod every good p, so the group order
        // np + 1 is even
        CHECK((rc.np + 1) % 2 == 0);
    }
    CHECK_THROWS_AS(hasse_scan(3, 1), std::invalid_argument);
}

TEST_CASE("reduction mod p is a homomorphism on reference points") {
    std::vector<WeierstrassPoint> pts;
    for (const AppendixRow& row : appendix_rows()) {
        WeierstrassPoint p = scalar_mul(row.n, wp(-4, -12));
        if (row.with_d) p = add(p, wp(0, 0));
        pts.push_back(p);
    }
    for (long p : primes_up_to(100)) {
        if (!is_good_prime(p)) continue;
        for (const auto& P : pts)
            for (const auto& Q : pts) {
                auto rp = reduce_mod_p(P, p), rq = reduce_mod_p(Q, p);
                auto rsum = reduce_mod_p(add(P, Q), p);
                if (!rp || !rq || !rsum) continue;  // p divides a denominator
                ModPoint via_group = mod_add(*rp, *rq, p);
                CHECK(via_group.inf == rsum->inf);
                if (!via_group.inf) {
                    CHECK(via_group.x == rsum->x);
                    CHECK(via_group.y == rsum->y);
                }
            }
    }
}
