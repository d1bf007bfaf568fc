#pragma once

// Exact triangle predicates: bisectral (bisector-foot) triangle side lengths,
// the Sharygin condition, extraction of integer triangles from curve points,
// and the trigonometric form of the defining equation.
//
// Bisectral lengths are kept as squares so everything stays in Q: the foot of
// the bisector from A splits BC as BA' = ac/(b+c), A'C = ab/(b+c), and the
// squared distances between feet follow from the law of cosines with
// rational cos A, cos B, cos C.

#include <array>
#include <optional>

#include "sharygin/curve.hpp"
#include "sharygin/rational.hpp"
#include "sharygin/real.hpp"

namespace sharygin {

/// Side lengths (a, b, c) = (BC, AC, AB), positive and satisfying the strict
/// triangle inequalities. Construction validates; throws std::invalid_argument.
class TriangleTriple {
public:
    TriangleTriple(const Rational& a, const Rational& b, const Rational& c);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }

    bool is_scalene() const { return a_ != b_ && b_ != c_ && a_ != c_; }
    TriangleTriple scaled(const Rational& factor) const;

    /// Strict triangle-inequality test without constructing.
    static bool valid_sides(const Rational& a, const Rational& b, const Rational& c);

private:
    Rational a_, b_, c_;
};

/// Squared side lengths of the bisectral triangle:
/// a2 = B'C'^2, b2 = A'C'^2, c2 = A'B'^2.
struct BisectralSquares {
    Rational a2, b2, c2;
};

BisectralSquares bisectral_squares(const TriangleTriple& t);

/// Scalene with at least two equal bisectral squared lengths.
bool is_sharygin(const TriangleTriple& t);

/// Positive primitive integer sides from a curve point in cubic form, in the
/// point's own coordinate order, if the representative can be made positive
/// and satisfies the strict triangle inequalities; nullopt otherwise.
std::optional<TriangleTriple> point_to_triangle(const ProjectiveTriple& p);

/// Exact cosine of the angle opposite the (weakly) largest side.
Rational largest_angle_cosine(const TriangleTriple& t);

/// 4z^3 + 6xyz - 3xy(x+y) + 5z(x^2+y^2) + 9z^2(x+y), the incircle
/// tangent-length form of the cubic: equal to markelov_q_factor() times
/// q(y+z, x+z, x+y).
struct MarkelovChart {
    Rational x, y, z;
};
Rational markelov_eval(const MarkelovChart& m);

/// The constant lambda with markelov(x,y,z) = lambda * q(y+z, x+z, x+y),
/// determined by exact symbolic expansion.
Rational markelov_q_factor();

/// Angles of a triangle in radians; gamma = pi - alpha - beta.
struct AngleTriple {
    Real alpha, beta, gamma;
    static AngleTriple from_two(const Real& alpha, const Real& beta);
};

/// sin a + sin b + sin(a+b) - sin(a+2b) - sin(2a+b) - sin(2a+2b), the
/// trigonometric residual whose vanishing characterizes Sharygin angles.
Real trig_residual(const AngleTriple& angles);

/// Side lengths |z-1|, |z^3-z|, |z^3-1| for z = exp(2*pi*i/7): the triangle
/// on vertices 1, z, z^3 of the regular heptagon inscribed in the unit
/// circle. Equals (2 sin(pi/7), 2 sin(2pi/7), 2 sin(3pi/7)).
std::array<Real, 3> heptagon_side_lengths();

/// Numeric bisectral squared lengths, for tolerance-based checks.
std::array<Real, 3> bisectral_squares_numeric(const Real& a, const Real& b, const Real& c);

}  // namespace sharygin
