#pragma once

// Small exact polynomial toolkit: sparse trivariate forms over Q (enough for
// the cubic invariant, its Hessian and the symbolic identities between
// coordinate models) and dense univariate polynomials over Q or Z
// (cyclotomic arithmetic, resultants by interpolation).

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharygin/rational.hpp"

namespace sharygin {

/// Trivariate polynomial with exact rational coefficients.
/// Variables are indexed 0,1,2 and conventionally named (a,b,c) or (x,y,z).
class TriPoly {
public:
    using Monomial = std::array<unsigned, 3>;

    TriPoly() = default;
    explicit TriPoly(const Rational& constant);

    static TriPoly variable(int index);
    static TriPoly monomial(const Rational& coeff, unsigned ea, unsigned eb, unsigned ec);

    TriPoly operator+(const TriPoly& other) const;
    TriPoly operator-(const TriPoly& other) const;
    TriPoly operator*(const TriPoly& other) const;
    TriPoly operator-() const;
    TriPoly& operator+=(const TriPoly& other);
    TriPoly& operator-=(const TriPoly& other);

    TriPoly scaled(const Rational& factor) const;
    TriPoly pow(unsigned exp) const;
    TriPoly derivative(int var) const;

    /// Substitutes replacement[i] for variable i.
    TriPoly compose(const std::array<TriPoly, 3>& replacement) const;

    Rational evaluate(const Rational& a, const Rational& b, const Rational& c) const;

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const TriPoly& other) const { return terms_ == other.terms_; }

    /// Total degree of every term when the polynomial is a form; throws if mixed.
    unsigned homogeneous_degree() const;

    /// If other == lambda * this for a constant lambda, returns lambda.
    std::optional<Rational> proportionality_factor(const TriPoly& other) const;

    /// Coefficients of c^k after fixing a and b, lowest degree first.
    std::vector<Rational> coefficients_in_c(const Rational& a, const Rational& b) const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    std::string to_string() const;

private:
    void prune();
    std::map<Monomial, Rational> terms_;
};

/// Dense univariate polynomial, lowest-degree coefficient first.
template <class Coeff>
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly1 constant(const Coeff& value) { return Poly1(std::vector<Coeff>{value}); }
    static Poly1 monomial(const Coeff& coeff, unsigned degree) {
        std::vector<Coeff> v(degree + 1, Coeff(0));
        v[degree] = coeff;
        return Poly1(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    const Coeff& operator[](size_t i) const { return c_[i]; }
    const std::vector<Coeff>& coefficients() const { return c_; }
    const Coeff& leading() const {
        if (is_zero()) throw std::domain_error("Poly1::leading of zero polynomial");
        return c_.back();
    }

    Poly1 operator+(const Poly1& o) const {
        std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), Coeff(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly1(std::move(r));
    }
    Poly1 operator-(const Poly1& o) const {
        std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), Coeff(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly1(std::move(r));
    }
    Poly1 operator*(const Poly1& o) const {
        if (is_zero() || o.is_zero()) return Poly1();
        std::vector<Coeff> r(c_.size() + o.c_.size() - 1, Coeff(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly1(std::move(r));
    }
    Poly1 scaled(const Coeff& f) const {
        std::vector<Coeff> r(c_);
        for (Coeff& x : r) x *= f;
        return Poly1(std::move(r));
    }
    bool operator==(const Poly1& o) const { return c_ == o.c_; }

    Coeff evaluate(const Coeff& x) const {
        Coeff acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = Coeff(acc * x + c_[i]);
        return acc;
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

private:
    std::vector<Coeff> c_;
};

using IntPoly = Poly1<Integer>;
using RatPoly = Poly1<Rational>;

/// Quotient of an exact division over Z; throws if the division is not exact.
IntPoly divide_exact(const IntPoly& numerator, const IntPoly& denominator);

/// Remainder of division by a monic integer polynomial.
IntPoly mod_monic(const IntPoly& value, const IntPoly& monic_divisor);

/// gcd of all coefficients (0 for the zero polynomial).
Integer content(const IntPoly& p);

/// Primitive integer multiple of a rational polynomial, leading coefficient > 0.
IntPoly primitive_part(const RatPoly& p);

/// Unique polynomial of degree < nodes.size() through the given (x, y) pairs.
RatPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& nodes);

/// Determinant by fraction-free Gaussian elimination; consumes the matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Resultant with respect to the shared variable (Sylvester determinant).
Rational resultant(const RatPoly& f, const RatPoly& g);

}  // namespace sharygin
