#include "sharygin/triangle.hpp"

namespace sharygin {

namespace {

// Works verbatim over any exact or floating scalar with field operations.
template <class T>
std::array<T, 3> bisectral_squares_generic(const T& a, const T& b, const T& c) {
    T ab = a * b, ac = a * c, bc = b * c;
    T a_sq = a * a, b_sq = b * b, c_sq = c * c;

    // B'C'^2: feet on the two sides through A, angle at A.
    T ab_prime = bc / (a + c);   // AB'
    T ac_prime = bc / (a + b);   // AC'
    T a2 = ab_prime * ab_prime + ac_prime * ac_prime -
           bc * (b_sq + c_sq - a_sq) / ((a + c) * (a + b));

    // A'C'^2: feet on the two sides through B, angle at B.
    T ba_prime = ac / (b + c);   // BA'
    T bc_prime = ac / (a + b);   // BC'
    T b2 = ba_prime * ba_prime + bc_prime * bc_prime -
           ac * (a_sq + c_sq - b_sq) / ((b + c) * (a + b));

    // A'B'^2: feet on the two sides through C, angle at C.
    T ca_prime = ab / (b + c);   // CA'
    T cb_prime = ab / (a + c);   // CB'
    T c2 = ca_prime * ca_prime + cb_prime * cb_prime -
           ab * (a_sq + b_sq - c_sq) / ((b + c) * (a + c));

    return {a2, b2, c2};
}

}  // namespace

TriangleTriple::TriangleTriple(const Rational& a, const Rational& b, const Rational& c)
    : a_(a), b_(b), c_(c) {
    if (!valid_sides(a, b, c))
        throw std::invalid_argument("TriangleTriple: sides must be positive and satisfy the strict triangle inequalities");
}

bool TriangleTriple::valid_sides(const Rational& a, const Rational& b, const Rational& c) {
    if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0) return false;
    return a < b + c && b < a + c && c < a + b;
}

TriangleTriple TriangleTriple::scaled(const Rational& factor) const {
    if (sgn(factor) <= 0) throw std::invalid_argument("TriangleTriple::scaled: factor must be positive");
    return TriangleTriple(Rational(a_ * factor), Rational(b_ * factor), Rational(c_ * factor));
}

BisectralSquares bisectral_squares(const TriangleTriple& t) {
    auto [a2, b2, c2] = bisectral_squares_generic<Rational>(t.a(), t.b(), t.c());
    return BisectralSquares{a2, b2, c2};
}

bool is_sharygin(const TriangleTriple& t) {
    if (!t.is_scalene()) return false;
    BisectralSquares s = bisectral_squares(t);
    return s.a2 == s.b2 || s.a2 == s.c2 || s.b2 == s.c2;
}

std::optional<TriangleTriple> point_to_triangle(const ProjectiveTriple& p) {
    if (p.form() != Form::cubic)
        throw std::invalid_argument("point_to_triangle: expected cubic form");
    if (!is_on_curve(p)) throw std::invalid_argument("point_to_triangle: point not on the curve");
    // The canonical representative has its first nonzero coordinate positive,
    // so a sign choice making all coordinates positive exists iff all three
    // are already positive.
    const auto& c = p.coords();
    if (sgn(c[0]) <= 0 || sgn(c[1]) <= 0 || sgn(c[2]) <= 0) return std::nullopt;
    if (!TriangleTriple::valid_sides(Rational(c[0]), Rational(c[1]), Rational(c[2])))
        return std::nullopt;
    return TriangleTriple(Rational(c[0]), Rational(c[1]), Rational(c[2]));
}

Rational largest_angle_cosine(const TriangleTriple& t) {
    Rational p = t.a(), q = t.b(), r = t.c();  // r will hold the largest side
    if (p > r) std::swap(p, r);
    if (q > r) std::swap(q, r);
    return Rational((p * p + q * q - r * r) / (2 * p * q));
}

Rational markelov_eval(const MarkelovChart& m) {
    const Rational &x = m.x, &y = m.y, &z = m.z;
    return Rational(4 * z * z * z + 6 * x * y * z - 3 * x * y * (x + y) +
                    5 * z * (x * x + y * y) + 9 * z * z * (x + y));
}

Rational markelov_q_factor() {
    static const Rational lambda = [] {
        TriPoly x = TriPoly::variable(0), y = TriPoly::variable(1), z = TriPoly::variable(2);
        TriPoly markelov = z.pow(3).scaled(Rational(4)) + (x * y * z).scaled(Rational(6)) -
                           (x * y * (x + y)).scaled(Rational(3)) +
                           (z * (x.pow(2) + y.pow(2))).scaled(Rational(5)) +
                           (z.pow(2) * (x + y)).scaled(Rational(9));
        TriPoly q_in_chart = cubic_form().compose({y + z, x + z, x + y});
        std::optional<Rational> factor = q_in_chart.proportionality_factor(markelov);
        if (!factor || sgn(*factor) == 0)
            throw std::logic_error("markelov_q_factor: chart polynomial is not proportional to q");
        return *factor;
    }();
    return lambda;
}

AngleTriple AngleTriple::from_two(const Real& alpha, const Real& beta) {
    Real pi = real_pi();
    if (alpha <= 0 || beta <= 0 || alpha + beta >= pi)
        throw std::invalid_argument("AngleTriple: need alpha, beta > 0 and alpha + beta < pi");
    return AngleTriple{alpha, beta, Real(pi - alpha - beta)};
}

Real trig_residual(const AngleTriple& angles) {
    const Real &a = angles.alpha, &b = angles.beta;
    return sin(a) + sin(b) + sin(a + b) - sin(a + 2 * b) - sin(2 * a + b) - sin(2 * a + 2 * b);
}

std::array<Real, 3> heptagon_side_lengths() {
    Real step = real_pi() / 7;
    return {2 * sin(step), 2 * sin(2 * step), 2 * sin(3 * step)};
}

std::array<Real, 3> bisectral_squares_numeric(const Real& a, const Real& b, const Real& c) {
    return bisectral_squares_generic<Real>(a, b, c);
}

}  // namespace sharygin
