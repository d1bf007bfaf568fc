#pragma once

// The Sharygin cubic in its three coordinate models and the elliptic group
// law on the Weierstrass model y^2 = x^3 + 5x^2 - 32x.
//
// Coordinate models:
//   minimal      y^2 + xy = x^3 + x^2 - 2x
//   weierstrass  y^2 = x^3 + 5x^2 - 32x
//   cubic        q(a,b,c) = -c^3 - c^2(a+b) + c(a^2+ab+b^2) + a^3+a^2b+ab^2+b^3 = 0
//
// Transformations between models, negation in each model and the origin,
// torsion and generator points are pinned down here and verified against a
// reference point table (see appendix.hpp). The symbolic identities behind
// the transformations are recomputed at startup; see
// transform_identities_hold().

#include <array>
#include <optional>
#include <string>

#include "sharygin/polynomial.hpp"
#include "sharygin/rational.hpp"

namespace sharygin {

enum class Form { minimal, weierstrass, cubic };

std::string form_name(Form f);

/// A projective point with a canonical representative: coprime integer
/// coordinates whose first nonzero entry is positive. Two triples are equal
/// iff their canonical representatives (and forms) are equal.
class ProjectiveTriple {
public:
    ProjectiveTriple(const Rational& u, const Rational& v, const Rational& w, Form form);
    ProjectiveTriple(const Integer& u, const Integer& v, const Integer& w, Form form);

    const Integer& u() const { return c_[0]; }
    const Integer& v() const { return c_[1]; }
    const Integer& w() const { return c_[2]; }
    const std::array<Integer, 3>& coords() const { return c_; }
    Form form() const { return form_; }

    bool operator==(const ProjectiveTriple& o) const { return form_ == o.form_ && c_ == o.c_; }
    bool operator!=(const ProjectiveTriple& o) const { return !(*this == o); }

    /// "u:v:w"
    std::string to_string() const;
    static ProjectiveTriple parse(const std::string& text, Form form);

private:
    void canonicalize();
    std::array<Integer, 3> c_;
    Form form_;
};

/// Affine point on y^2 = x^3 + 5x^2 - 32x, or the identity at infinity.
class WeierstrassPoint {
public:
    static WeierstrassPoint infinity() { return WeierstrassPoint(); }
    static WeierstrassPoint affine(const Rational& x, const Rational& y) {
        return WeierstrassPoint(x, y);
    }

    bool is_infinity() const { return infinity_; }
    const Rational& x() const { return require_affine(), x_; }
    const Rational& y() const { return require_affine(), y_; }

    bool operator==(const WeierstrassPoint& o) const {
        if (infinity_ || o.infinity_) return infinity_ == o.infinity_;
        return x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const WeierstrassPoint& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    WeierstrassPoint() : infinity_(true) {}
    WeierstrassPoint(const Rational& x, const Rational& y) : infinity_(false), x_(x), y_(y) {}
    void require_affine() const {
        if (infinity_) throw std::domain_error("WeierstrassPoint: coordinate of the point at infinity");
    }
    bool infinity_;
    Rational x_, y_;
};

/// y^2 = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCoefficients {
    Integer a2, a4, a6;
};

/// Discriminant of the cubic x^3 + a2 x^2 + a4 x + a6.
Integer cubic_discriminant(const WeierstrassCoefficients& c);
/// 16 * cubic discriminant, the discriminant of the elliptic model.
Integer elliptic_discriminant(const WeierstrassCoefficients& c);

struct CurveConstants {
    WeierstrassCoefficients coefficients;   // (5, -32, 0)
    Integer elliptic_disc;                  // 2506752 = 2^14 * 3^2 * 17
    Integer cubic_disc;                     // 156672 = elliptic_disc / 16
    ProjectiveTriple origin_o;              // (1:-1:0), the rational inflexion, identity
    ProjectiveTriple torsion_d;             // (1:1:-1), the 2-torsion point
    ProjectiveTriple generator_a;           // (1:0:-1), infinite order
};

const CurveConstants& curve_constants();

/// q as a symbolic form; single source of truth for the cubic model.
const TriPoly& cubic_form();
/// det of the matrix of second partials of q.
const TriPoly& hessian_form();

Rational eval_cubic_q(const Rational& a, const Rational& b, const Rational& c);
/// Throws std::invalid_argument unless t is in cubic form.
Rational eval_cubic_q(const ProjectiveTriple& t);

bool is_on_curve(const ProjectiveTriple& p);
bool is_on_curve(const WeierstrassPoint& p);

/// (a:b:c) -> (x,y) with x = 4(a+b+2c)/(2(a+b)+c), y = 12(b-a)/(2(a+b)+c).
/// The origin maps to the point at infinity. Throws if p is not on the curve.
WeierstrassPoint cubic_to_weierstrass(const ProjectiveTriple& p);
/// (x,y) -> (8-x-y : 8-x+y : 4x-8); infinity -> (1:-1:0).
ProjectiveTriple weierstrass_to_cubic(const WeierstrassPoint& p);

/// (x,y) on the minimal model -> (4x, 4x+8y). Throws if p is not on the curve.
WeierstrassPoint minimal_to_weierstrass(const ProjectiveTriple& p);
/// (x,y) -> (x/4, (y-x)/8) on the minimal model.
ProjectiveTriple weierstrass_to_minimal(const WeierstrassPoint& p);

/// Group inverse in the model the point lives in:
/// cubic (a:b:c) -> (b:a:c); weierstrass (x,y) -> (x,-y); minimal (x,y) -> (x,-x-y).
ProjectiveTriple negate(const ProjectiveTriple& p);
WeierstrassPoint negate(const WeierstrassPoint& p);

/// Chord-tangent sum. Both points must satisfy the curve equation.
WeierstrassPoint add(const WeierstrassPoint& p, const WeierstrassPoint& q);
WeierstrassPoint scalar_mul(const Integer& n, const WeierstrassPoint& p);
WeierstrassPoint scalar_mul(long n, const WeierstrassPoint& p);

/// Hessian determinant evaluated on the canonical representative.
Rational hessian_eval(const ProjectiveTriple& t);

/// Eliminates c from {q=0, H=0} in the chart b=1 (t = a/b), removes the
/// factor (t+1) contributed by the origin and returns the remaining primitive
/// degree-8 integer polynomial with positive leading coefficient.
IntPoly inflexion_polynomial();

/// True iff the elliptic discriminant is nonzero.
bool check_smooth(const WeierstrassCoefficients& c);
bool check_smooth();

/// Primitive integer gradient of q at a smooth curve point: the tangent line
/// coeffs[0]*a + coeffs[1]*b + coeffs[2]*c = 0.
struct LinearForm {
    std::array<Integer, 3> coeffs;
    std::string to_string() const;
};
LinearForm tangent_line(const ProjectiveTriple& t);

/// Checks symbolically that the corrected model maps carry each defining
/// equation onto the next one (used at startup and by the test suite).
bool transform_identities_hold();

/// Conversions between the affine group-law carrier and projective triples
/// in weierstrass form ((0:1:0) is the point at infinity).
ProjectiveTriple to_projective(const WeierstrassPoint& p);
WeierstrassPoint to_weierstrass_point(const ProjectiveTriple& p);

/// Affine (x,y) or infinity on the minimal model, as a projective triple.
bool is_on_minimal_curve(const Rational& x, const Rational& y);

}  // namespace sharygin
