#include "sharygin/torsion.hpp"

#include <algorithm>
#include <map>

#include "sharygin/parallel.hpp"

namespace sharygin {

namespace {

// x^3 + 5x^2 - 32x
Integer curve_rhs(const Integer& x) { return Integer(((x + 5) * x - 32) * x); }

// Integer roots of x^3 + 5x^2 - 32x - y2 = 0 by divisor search on the
// constant term (x | y2 when y2 != 0).
std::vector<Integer> integer_roots_for_y_squared(const Integer& y2,
                                                 const std::vector<std::pair<Integer, unsigned>>& y2_factorization) {
    std::vector<Integer> roots;
    if (y2 == 0) {
        roots.push_back(Integer(0));
        // remaining factor x^2 + 5x - 32: integer roots would divide 32
        for (const Integer& d : divisors_from_factorization({{Integer(2), 5}}))
            for (const Integer& x : {Integer(d), Integer(-d)})
                if (x * x + 5 * x - 32 == 0) roots.push_back(x);
        return roots;
    }
    for (const Integer& d : divisors_from_factorization(y2_factorization))
        for (const Integer& x : {Integer(d), Integer(-d)})
            if (curve_rhs(x) == y2) roots.push_back(x);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<int> order_at_most_12(const WeierstrassPoint& p) {
    WeierstrassPoint acc = p;
    for (int n = 1; n <= 12; ++n) {
        if (acc.is_infinity()) return n;
        acc = add(acc, p);
    }
    return std::nullopt;
}

}  // namespace

std::vector<TorsionCandidate> torsion_candidates() {
    // Divisors of the elliptic discriminant 2506752 = 2^14 * 3^2 * 17.
    const std::vector<std::pair<Integer, unsigned>> disc_factorization{
        {Integer(2), 14}, {Integer(3), 2}, {Integer(17), 1}};

    std::map<std::pair<Integer, Integer>, TorsionCandidate> found;  // keyed by (x, y)
    auto consider = [&](const Integer& x, const Integer& y, const Integer& y_divisor) {
        if (curve_rhs(x) != y * y) return;
        auto key = std::make_pair(x, y);
        if (found.count(key)) return;
        WeierstrassPoint p = WeierstrassPoint::affine(Rational(x), Rational(y));
        found.emplace(key, TorsionCandidate{p, y_divisor, order_at_most_12(p)});
    };

    for (const Integer& x : integer_roots_for_y_squared(Integer(0), {})) consider(x, Integer(0), Integer(0));

    for (const Integer& y : divisors_from_factorization(disc_factorization)) {
        std::vector<std::pair<Integer, unsigned>> y2_fact;
        Integer rest = y;
        for (const auto& [prime, mult] : disc_factorization) {
            (void)mult;
            unsigned e = static_cast<unsigned>(p_adic_valuation(rest, prime));
            if (e > 0) y2_fact.emplace_back(prime, 2 * e);
            for (unsigned i = 0; i < e; ++i) rest /= prime;
        }
        Integer y2(y * y);
        for (const Integer& x : integer_roots_for_y_squared(y2, y2_fact)) {
            consider(x, y, y);
            consider(x, Integer(-y), y);
        }
    }

    std::vector<TorsionCandidate> out;
    out.reserve(found.size());
    for (auto& [key, cand] : found) out.push_back(cand);
    return out;
}

std::vector<WeierstrassPoint> torsion_subgroup() {
    std::vector<WeierstrassPoint> subgroup{WeierstrassPoint::infinity()};
    for (const TorsionCandidate& cand : torsion_candidates())
        if (cand.confirmed_order) subgroup.push_back(cand.point);
    return subgroup;
}

Rational duplication_x(const Rational& x0) {
    Rational num(x0 * x0 + 32);
    num *= num;
    Rational den(4 * x0 * (x0 * x0 + 5 * x0 - 32));
    if (sgn(den) == 0)
        throw std::domain_error("duplication_x: vertical tangent (2-torsion x-coordinate)");
    return Rational(num / den);
}

GrowthCertificate growth_certificate(const WeierstrassPoint& start, int steps) {
    if (steps < 1) throw std::invalid_argument("growth_certificate: steps must be >= 1");
    if (start.is_infinity())
        throw std::invalid_argument("growth_certificate: start must be affine");
    Integer p = start.x().get_num();
    Integer q = start.x().get_den();
    if (p <= 0 || !mpz_odd_p(p.get_mpz_t()))
        throw std::invalid_argument("growth_certificate: numerator of x(start) must be odd and positive");

    GrowthCertificate cert{start, {p}, steps};
    for (int step = 0; step < steps; ++step) {
        Integer p2(p * p), q2(q * q);
        Integer a(p2 + 32 * q2);
        Integer num(a * a);
        Integer den(4 * p * q * (p2 + 5 * p * q - 32 * q2));
        // gcd(num, den) divides 153 = 3^2 * 17 here (num is odd and coprime
        // to p and q), so full big-integer gcds are never needed.
        for (int i = 0; i < 2 && mpz_divisible_ui_p(num.get_mpz_t(), 3) &&
                        mpz_divisible_ui_p(den.get_mpz_t(), 3);
             ++i) {
            num /= 3;
            den /= 3;
        }
        if (mpz_divisible_ui_p(num.get_mpz_t(), 17) && mpz_divisible_ui_p(den.get_mpz_t(), 17)) {
            num /= 17;
            den /= 17;
        }
        if (den <= 0 || num <= p || !mpz_odd_p(num.get_mpz_t()))
            throw std::runtime_error("growth_certificate: growth law violated at step " +
                                     std::to_string(step + 1));
        p = num;
        q = den;
        cert.numerators.push_back(p);
    }
    return cert;
}

bool is_good_prime(long p) { return p != 2 && p != 3 && p != 17; }

ReductionCount count_points_mod_p(long p) {
    if (p < 2 || !is_probable_prime(Integer(p)))
        throw std::invalid_argument("count_points_mod_p: p must be prime");
    if (!is_good_prime(p))
        throw std::invalid_argument("count_points_mod_p: bad reduction at p = " + std::to_string(p));
    std::vector<long> square_count(static_cast<size_t>(p), 0);
    for (long y = 0; y < p; ++y) ++square_count[static_cast<size_t>((y * y) % p)];
    long np = 0;
    long c5 = 5 % p, c32 = ((-32) % p + p) % p;
    for (long x = 0; x < p; ++x) {
        long rhs = ((x + c5) % p) * x % p;             // x^2 + 5x
        rhs = ((rhs + c32) % p) * x % p;               // (x^2 + 5x - 32) x
        np += square_count[static_cast<size_t>(rhs)];
    }
    // np counts affine pairs; the group has np + 1 elements, so the trace of
    // Frobenius is p + 1 - (np + 1) = p - np. That is the quantity the Hasse
    // bound |ap| <= 2 sqrt(p) constrains.
    return ReductionCount{p, np, p - np};
}

HasseScanReport hasse_scan(long p_max, unsigned threads) {
    if (p_max < 5) throw std::invalid_argument("hasse_scan: p_max must be >= 5");
    std::vector<long> good;
    for (long p : primes_up_to(p_max))
        if (is_good_prime(p)) good.push_back(p);
    HasseScanReport report;
    report.p_max = p_max;
    report.counts = parallel_map<ReductionCount>(
        good.size(), threads, [&](size_t i) { return count_points_mod_p(good[i]); });
    for (const ReductionCount& rc : report.counts)
        if (rc.ap * rc.ap > 4 * rc.p) report.violations.push_back(rc.p);
    return report;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        primes.push_back(i);
        for (long j = i * i; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return primes;
}

}  // namespace sharygin
