#pragma once

// Exact root-of-unity identities via arithmetic in Z[t]/Phi_n, and the
// exhaustive regular-polygon search: which triples of N-gon vertices give a
// Sharygin triangle. Searching tests the six-term expression
//   1 + x + y + x^2 y^3 + x^3 y^2 + x^3 y^3,   x = zeta_2N^m, y = zeta_2N^n,
// for exact vanishing; a configurable-precision numeric prefilter keeps the
// exact test off the overwhelmingly nonzero bulk.

#include <vector>

#include "sharygin/polynomial.hpp"
#include "sharygin/rational.hpp"
#include "sharygin/real.hpp"

namespace sharygin {

/// Phi_n, computed by dividing t^n - 1 by the cyclotomic polynomials of the
/// proper divisors of n. Memoized; n >= 1.
const IntPoly& cyclotomic_polynomial(unsigned n);

/// Element of Z[t]/Phi_n; the coefficient vector has length deg Phi_n.
class CyclotomicElement {
public:
    explicit CyclotomicElement(unsigned conductor);  // zero
    static CyclotomicElement constant(unsigned conductor, const Integer& value);
    /// t^k mod Phi_n.
    static CyclotomicElement root_power(unsigned conductor, unsigned k);
    static CyclotomicElement from_poly(unsigned conductor, const IntPoly& p);

    unsigned conductor() const { return conductor_; }
    const IntPoly& poly() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    CyclotomicElement operator+(const CyclotomicElement& o) const;
    CyclotomicElement operator-(const CyclotomicElement& o) const;
    CyclotomicElement operator*(const CyclotomicElement& o) const;
    bool operator==(const CyclotomicElement& o) const;

private:
    unsigned conductor_;
    IntPoly value_;  // reduced mod Phi_n
};

/// Constraint region of the search: m, n >= 1 and m + n < N/2 strictly
/// (positive real and imaginary parts for x, y and xy).
bool search_constraints_ok(unsigned N, unsigned m, unsigned n);

/// Exact test: Phi_2N divides 1 + t^m + t^n + t^(2m+3n) + t^(3m+2n) +
/// t^(3m+3n) reduced mod t^2N - 1. Throws std::invalid_argument outside the
/// constraint region.
bool expression_is_zero(unsigned N, unsigned m, unsigned n);

/// |expression| at x = exp(i pi m/N), y = exp(i pi n/N), at the current
/// working precision.
Real expression_magnitude(unsigned N, unsigned m, unsigned n);

struct SearchHit {
    unsigned N, m, n;
    bool operator==(const SearchHit& o) const { return N == o.N && m == o.m && n == o.n; }
};

struct SearchOptions {
    unsigned threads = 1;
    bool exact = true;              // confirm near-zeros with the cyclotomic test
    Real prefilter_threshold = Real("1e-10");
};

/// All hits with N <= n_max, ordered by (N, m, n).
std::vector<SearchHit> search(unsigned n_max, const SearchOptions& options = {});

/// z = zeta_14 + zeta_14^-1 = 2cos(pi/7) satisfies z^3 - z^2 - 2z + 1 = 0
/// exactly in Z[t]/Phi_14, and that cubic has no rational root, so
/// 2cos(pi/7) is irrational.
bool cos7_minpoly_check();

}  // namespace sharygin
