#pragma once

// Exact arbitrary-precision integers and rationals, backed by GMP.
// mpq_class keeps values canonical (reduced, positive denominator) through
// every arithmetic operation, which is exactly the invariant the rest of
// the library relies on for equality and printing.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharygin {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws on zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n" or "n/d" in base 10. Throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& text);

/// Parses a base-10 integer, rejecting anything with a fractional part.
Integer parse_integer(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Integer abs_int(const Integer& z) { return Integer(abs(z)); }

inline Rational square(const Rational& q) { return Rational(q * q); }

/// z == s*s for some integer s >= 0.
inline bool is_perfect_square(const Integer& z) {
    return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

/// Exact integer square root of a perfect square.
inline Integer exact_isqrt(const Integer& z) {
    if (!is_perfect_square(z)) throw std::domain_error("exact_isqrt: not a perfect square");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

/// q == r*r for some rational r >= 0; returns that r if so.
std::optional<Rational> rational_sqrt(const Rational& q);

inline Integer pow_int(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rational(const Rational& base, long exp);

/// Multiplicity of the prime p in z. z must be nonzero.
unsigned long p_adic_valuation(const Integer& z, const Integer& p);

/// v_p(num) - v_p(den) for nonzero q.
long p_adic_valuation(const Rational& q, const Integer& p);

inline bool divides(const Integer& d, const Integer& z) {
    return mpz_divisible_p(z.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_probable_prime(const Integer& z, int reps = 30) {
    return mpz_probab_prime_p(z.get_mpz_t(), reps) != 0;
}

/// All positive divisors of a number given by its prime factorization.
std::vector<Integer> divisors_from_factorization(
    const std::vector<std::pair<Integer, unsigned>>& factorization);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace sharygin
