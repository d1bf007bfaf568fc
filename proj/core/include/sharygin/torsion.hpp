#pragma once

// Torsion subgroup by Nagell-Lutz divisor enumeration with the Mazur bound
// (orders <= 12) as the confirmation step, the elementary infinite-order
// certificate built on strictly growing duplication numerators, and
// point counting on the reductions mod p with Hasse bound checks.

#include <optional>
#include <vector>

#include "sharygin/curve.hpp"
#include "sharygin/rational.hpp"

namespace sharygin {

struct TorsionCandidate {
    WeierstrassPoint point;
    Integer y_divisor;                   // |y| of the candidate (0 allowed)
    std::optional<int> confirmed_order;  // set iff n*P = O for some n <= 12
};

/// Every integer point (x, y) with y = 0 or y | 2506752, audited against the
/// Mazur bound. Deterministic order (by x, then y).
std::vector<TorsionCandidate> torsion_candidates();

/// The torsion subgroup: exactly {infinity, (0,0)}.
std::vector<WeierstrassPoint> torsion_subgroup();

/// x-coordinate of 2P from the x-coordinate of P:
/// (x^2+32)^2 / (4x(x^2+5x-32)). Throws std::domain_error when the tangent
/// is vertical (x of a 2-torsion point).
Rational duplication_x(const Rational& x0);

/// Chain of x-numerators under repeated duplication, starting numerator
/// included. Every entry after the first must be odd, positive and strictly
/// larger than its predecessor; violation of the growth law throws
/// std::runtime_error. A completed chain certifies that the start point has
/// infinite order.
struct GrowthCertificate {
    WeierstrassPoint start;
    std::vector<Integer> numerators;  // steps + 1 entries
    int steps;
};

/// Requires x(start) to have an odd positive numerator.
GrowthCertificate growth_certificate(const WeierstrassPoint& start, int steps);

struct ReductionCount {
    long p;
    long np;  // affine pairs (x, y) with y^2 = x^3 + 5x^2 - 32x over F_p
    long ap;  // Frobenius trace p - np (the group order is np + 1)
};

/// Counts affine points by a table of squares; O(p) time.
/// Throws std::invalid_argument for p in {2, 3, 17} (bad reduction) or
/// composite p.
ReductionCount count_points_mod_p(long p);

struct HasseScanReport {
    long p_max = 0;
    std::vector<ReductionCount> counts;  // all good primes <= p_max, ascending
    std::vector<long> violations;        // primes with ap^2 > 4p (none expected)
};

HasseScanReport hasse_scan(long p_max, unsigned threads = 1);

std::vector<long> primes_up_to(long n);
bool is_good_prime(long p);

}  // namespace sharygin
