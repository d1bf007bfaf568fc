#include "sharygin/curve.hpp"

#include <sstream>

namespace sharygin {

std::string form_name(Form f) {
    switch (f) {
        case Form::minimal: return "minimal";
        case Form::weierstrass: return "weierstrass";
        case Form::cubic: return "cubic";
    }
    throw std::logic_error("form_name: bad enum");
}

ProjectiveTriple::ProjectiveTriple(const Rational& u, const Rational& v, const Rational& w, Form form)
    : form_(form) {
    Integer lcm(1);
    for (const Rational* q : {&u, &v, &w})
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q->get_den().get_mpz_t());
    Rational scale(lcm);
    c_[0] = Rational(u * scale).get_num();
    c_[1] = Rational(v * scale).get_num();
    c_[2] = Rational(w * scale).get_num();
    canonicalize();
}

ProjectiveTriple::ProjectiveTriple(const Integer& u, const Integer& v, const Integer& w, Form form)
    : c_{u, v, w}, form_(form) {
    canonicalize();
}

void ProjectiveTriple::canonicalize() {
    Integer g(0);
    for (const Integer& x : c_) {
        Integer ax = abs_int(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("ProjectiveTriple: all coordinates zero");
    for (Integer& x : c_) x /= g;
    for (const Integer& x : c_) {
        if (x == 0) continue;
        if (x < 0)
            for (Integer& y : c_) y = -y;
        break;
    }
}

std::string ProjectiveTriple::to_string() const {
    return c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str();
}

ProjectiveTriple ProjectiveTriple::parse(const std::string& text, Form form) {
    std::array<Rational, 3> q;
    size_t begin = 0;
    for (int i = 0; i < 3; ++i) {
        size_t end = (i < 2) ? text.find(':', begin) : text.size();
        if (i < 2 && end == std::string::npos)
            throw std::invalid_argument("ProjectiveTriple::parse: expected u:v:w, got '" + text + "'");
        q[static_cast<size_t>(i)] = parse_rational(text.substr(begin, end - begin));
        begin = end + 1;
    }
    return ProjectiveTriple(q[0], q[1], q[2], form);
}

std::string WeierstrassPoint::to_string() const {
    if (infinity_) return "inf";
    return "(" + sharygin::to_string(x_) + ", " + sharygin::to_string(y_) + ")";
}

Integer cubic_discriminant(const WeierstrassCoefficients& c) {
    const Integer &a = c.a2, &b = c.a4, &d = c.a6;
    return Integer(-4 * a * a * a * d + a * a * b * b + 18 * a * b * d - 4 * b * b * b - 27 * d * d);
}

Integer elliptic_discriminant(const WeierstrassCoefficients& c) {
    return Integer(16 * cubic_discriminant(c));
}

const TriPoly& cubic_form() {
    static const TriPoly q = [] {
        TriPoly a = TriPoly::variable(0), b = TriPoly::variable(1), c = TriPoly::variable(2);
        return -c.pow(3) - c.pow(2) * (a + b) + c * (a.pow(2) + a * b + b.pow(2)) +
               (a.pow(3) + a.pow(2) * b + a * b.pow(2) + b.pow(3));
    }();
    return q;
}

const TriPoly& hessian_form() {
    static const TriPoly h = [] {
        const TriPoly& q = cubic_form();
        TriPoly second[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) second[i][j] = q.derivative(i).derivative(j);
        return second[0][0] * (second[1][1] * second[2][2] - second[1][2] * second[1][2]) -
               second[0][1] * (second[0][1] * second[2][2] - second[1][2] * second[0][2]) +
               second[0][2] * (second[0][1] * second[1][2] - second[1][1] * second[0][2]);
    }();
    return h;
}

namespace {

// y^2 z - x^3 - 5 x^2 z + 32 x z^2 as a form in (x, y, z).
const TriPoly& weierstrass_projective_form() {
    static const TriPoly w = [] {
        TriPoly x = TriPoly::variable(0), y = TriPoly::variable(1), z = TriPoly::variable(2);
        return y.pow(2) * z - x.pow(3) - x.pow(2) * z * TriPoly(Rational(5)) +
               x * z.pow(2) * TriPoly(Rational(32));
    }();
    return w;
}

// y^2 z + x y z - x^3 - x^2 z + 2 x z^2 as a form in (x, y, z).
const TriPoly& minimal_projective_form() {
    static const TriPoly m = [] {
        TriPoly x = TriPoly::variable(0), y = TriPoly::variable(1), z = TriPoly::variable(2);
        return y.pow(2) * z + x * y * z - x.pow(3) - x.pow(2) * z +
               x * z.pow(2) * TriPoly(Rational(2));
    }();
    return m;
}

Rational eval_form(const TriPoly& f, const ProjectiveTriple& p) {
    return f.evaluate(Rational(p.u()), Rational(p.v()), Rational(p.w()));
}

const ProjectiveTriple& weierstrass_infinity_triple() {
    static const ProjectiveTriple inf(Integer(0), Integer(1), Integer(0), Form::weierstrass);
    return inf;
}

const ProjectiveTriple& minimal_infinity_triple() {
    static const ProjectiveTriple inf(Integer(0), Integer(1), Integer(0), Form::minimal);
    return inf;
}

void require_form(const ProjectiveTriple& p, Form f, const char* who) {
    if (p.form() != f)
        throw std::invalid_argument(std::string(who) + ": expected " + form_name(f) +
                                    " form, got " + form_name(p.form()));
}

}  // namespace

const CurveConstants& curve_constants() {
    static const CurveConstants k = [] {
        WeierstrassCoefficients coeffs{Integer(5), Integer(-32), Integer(0)};
        CurveConstants c{
            coeffs,
            elliptic_discriminant(coeffs),
            cubic_discriminant(coeffs),
            ProjectiveTriple(Integer(1), Integer(-1), Integer(0), Form::cubic),
            ProjectiveTriple(Integer(1), Integer(1), Integer(-1), Form::cubic),
            ProjectiveTriple(Integer(1), Integer(0), Integer(-1), Form::cubic),
        };
        if (c.elliptic_disc != 2506752 || c.elliptic_disc != 16 * c.cubic_disc)
            throw std::logic_error("curve_constants: discriminant mismatch");
        if (!transform_identities_hold())
            throw std::logic_error("curve_constants: coordinate-model identities violated");
        return c;
    }();
    return k;
}

Rational eval_cubic_q(const Rational& a, const Rational& b, const Rational& c) {
    return cubic_form().evaluate(a, b, c);
}

Rational eval_cubic_q(const ProjectiveTriple& t) {
    require_form(t, Form::cubic, "eval_cubic_q");
    return eval_form(cubic_form(), t);
}

bool is_on_curve(const ProjectiveTriple& p) {
    switch (p.form()) {
        case Form::cubic: return sgn(eval_form(cubic_form(), p)) == 0;
        case Form::weierstrass: return sgn(eval_form(weierstrass_projective_form(), p)) == 0;
        case Form::minimal: return sgn(eval_form(minimal_projective_form(), p)) == 0;
    }
    throw std::logic_error("is_on_curve: bad form");
}

bool is_on_curve(const WeierstrassPoint& p) {
    if (p.is_infinity()) return true;
    const Rational &x = p.x(), &y = p.y();
    return Rational(y * y) == Rational(x * x * x + 5 * x * x - 32 * x);
}

bool is_on_minimal_curve(const Rational& x, const Rational& y) {
    return Rational(y * y + x * y) == Rational(x * x * x + x * x - 2 * x);
}

WeierstrassPoint cubic_to_weierstrass(const ProjectiveTriple& p) {
    require_form(p, Form::cubic, "cubic_to_weierstrass");
    if (!is_on_curve(p)) throw std::invalid_argument("cubic_to_weierstrass: point not on the curve");
    Rational a(p.u()), b(p.v()), c(p.w());
    Rational denom(2 * (a + b) + c);
    if (sgn(denom) == 0) {
        // 2a+2b+c = 0 is the tangent at the origin, which is an inflexion:
        // the only curve point on it is the origin itself.
        return WeierstrassPoint::infinity();
    }
    Rational x(4 * (a + b + 2 * c) / denom);
    Rational y(12 * (b - a) / denom);
    return WeierstrassPoint::affine(x, y);
}

ProjectiveTriple weierstrass_to_cubic(const WeierstrassPoint& p) {
    if (p.is_infinity()) return curve_constants().origin_o;
    const Rational &x = p.x(), &y = p.y();
    return ProjectiveTriple(Rational(8 - x - y), Rational(8 - x + y), Rational(4 * x - 8), Form::cubic);
}

WeierstrassPoint minimal_to_weierstrass(const ProjectiveTriple& p) {
    require_form(p, Form::minimal, "minimal_to_weierstrass");
    if (!is_on_curve(p)) throw std::invalid_argument("minimal_to_weierstrass: point not on the curve");
    if (p.w() == 0) return WeierstrassPoint::infinity();  // canonical (0:1:0)
    Rational x1 = make_rational(p.u(), p.w());
    Rational y1 = make_rational(p.v(), p.w());
    return WeierstrassPoint::affine(Rational(4 * x1), Rational(4 * x1 + 8 * y1));
}

ProjectiveTriple weierstrass_to_minimal(const WeierstrassPoint& p) {
    if (p.is_infinity()) return minimal_infinity_triple();
    Rational x1(p.x() / 4);
    Rational y1((p.y() - p.x()) / 8);
    return ProjectiveTriple(x1, y1, Rational(1), Form::minimal);
}

ProjectiveTriple negate(const ProjectiveTriple& p) {
    switch (p.form()) {
        case Form::cubic: return ProjectiveTriple(p.v(), p.u(), p.w(), Form::cubic);
        case Form::weierstrass:
            return ProjectiveTriple(p.u(), Integer(-p.v()), p.w(), Form::weierstrass);
        case Form::minimal:
            return ProjectiveTriple(p.u(), Integer(-p.u() - p.v()), p.w(), Form::minimal);
    }
    throw std::logic_error("negate: bad form");
}

WeierstrassPoint negate(const WeierstrassPoint& p) {
    if (p.is_infinity()) return p;
    return WeierstrassPoint::affine(p.x(), Rational(-p.y()));
}

WeierstrassPoint add(const WeierstrassPoint& p, const WeierstrassPoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rational &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rational slope;
    if (x1 == x2) {
        if (y1 == Rational(-y2)) return WeierstrassPoint::infinity();  // includes 2-torsion
        slope = Rational((3 * x1 * x1 + 10 * x1 - 32) / (2 * y1));
    } else {
        slope = Rational((y2 - y1) / (x2 - x1));
    }
    Rational x3(slope * slope - 5 - x1 - x2);
    Rational y3(slope * (x1 - x3) - y1);
    return WeierstrassPoint::affine(x3, y3);
}

WeierstrassPoint scalar_mul(const Integer& n, const WeierstrassPoint& p) {
    if (n == 0 || p.is_infinity()) return WeierstrassPoint::infinity();
    Integer m = abs_int(n);
    WeierstrassPoint acc = WeierstrassPoint::infinity();
    // Double-and-add, most significant bit first.
    for (size_t bit = mpz_sizeinbase(m.get_mpz_t(), 2); bit-- > 0;) {
        acc = add(acc, acc);
        if (mpz_tstbit(m.get_mpz_t(), bit)) acc = add(acc, p);
    }
    return n < 0 ? negate(acc) : acc;
}

WeierstrassPoint scalar_mul(long n, const WeierstrassPoint& p) { return scalar_mul(Integer(n), p); }

Rational hessian_eval(const ProjectiveTriple& t) {
    require_form(t, Form::cubic, "hessian_eval");
    return eval_form(hessian_form(), t);
}

IntPoly inflexion_polynomial() {
    static const IntPoly octic = [] {
        const TriPoly& q = cubic_form();
        const TriPoly& h = hessian_form();
        // Resultant in c of the chart-(b=1) slices, by evaluation/interpolation.
        // Degrees in c stay at 3 for every node below, so the interpolated
        // polynomial of degree <= 18 is the genuine resultant.
        std::vector<std::pair<Rational, Rational>> nodes;
        for (int t0 = -13; nodes.size() < 21; ++t0) {
            Rational t(t0);
            RatPoly qc(q.coefficients_in_c(t, Rational(1)));
            RatPoly hc(h.coefficients_in_c(t, Rational(1)));
            if (qc.degree() != 3 || hc.degree() != 3)
                throw std::logic_error("inflexion_polynomial: degenerate chart slice");
            nodes.emplace_back(t, resultant(qc, hc));
        }
        RatPoly res = lagrange_interpolate(nodes);
        IntPoly prim = primitive_part(res);
        // Strip the (t+1) factor contributed by the origin (1:-1:0).
        IntPoly t_plus_1(std::vector<Integer>{Integer(1), Integer(1)});
        int stripped = 0;
        while (!prim.is_zero() && prim.evaluate(Integer(-1)) == 0) {
            prim = divide_exact(prim, t_plus_1);
            ++stripped;
        }
        if (stripped != 1 || prim.degree() != 8)
            throw std::logic_error("inflexion_polynomial: unexpected factor structure");
        if (sgn(prim.leading()) < 0) prim = prim.scaled(Integer(-1));
        return prim;
    }();
    return octic;
}

bool check_smooth(const WeierstrassCoefficients& c) { return elliptic_discriminant(c) != 0; }

bool check_smooth() { return curve_constants().elliptic_disc != 0; }

std::string LinearForm::to_string() const {
    return coeffs[0].get_str() + "*a + " + coeffs[1].get_str() + "*b + " + coeffs[2].get_str() + "*c = 0";
}

LinearForm tangent_line(const ProjectiveTriple& t) {
    require_form(t, Form::cubic, "tangent_line");
    if (!is_on_curve(t)) throw std::invalid_argument("tangent_line: point not on the curve");
    std::array<Rational, 3> grad;
    for (int v = 0; v < 3; ++v) grad[static_cast<size_t>(v)] = eval_form(cubic_form().derivative(v), t);
    if (sgn(grad[0]) == 0 && sgn(grad[1]) == 0 && sgn(grad[2]) == 0)
        throw std::logic_error("tangent_line: zero gradient on a smooth curve");
    // The gradient of a form at an integer point is integral; reduce to a
    // primitive triple with the same sign convention as points.
    ProjectiveTriple primitive(grad[0], grad[1], grad[2], Form::cubic);
    return LinearForm{primitive.coords()};
}

bool transform_identities_hold() {
    TriPoly x = TriPoly::variable(0), y = TriPoly::variable(1);
    TriPoly eight(Rational(8));

    // q(8-x-y, 8-x+y, 4x-8) must be a constant multiple of x^3+5x^2-32x-y^2.
    std::array<TriPoly, 3> from_weierstrass{
        eight - x - y,
        eight - x + y,
        x.scaled(Rational(4)) - eight,
    };
    TriPoly pulled_back = cubic_form().compose(from_weierstrass);
    TriPoly weq = x.pow(3) + x.pow(2).scaled(Rational(5)) - x.scaled(Rational(32)) - y.pow(2);
    std::optional<Rational> lambda = weq.proportionality_factor(pulled_back);
    if (!lambda || sgn(*lambda) == 0) return false;

    // The weierstrass equation pulled through (x,y) = (4u, 4u+8v) must be a
    // constant multiple of the minimal-model equation v^2+uv-u^3-u^2+2u.
    std::array<TriPoly, 3> from_minimal{
        x.scaled(Rational(4)),
        x.scaled(Rational(4)) + y.scaled(Rational(8)),
        TriPoly(),
    };
    TriPoly weq_min = y.pow(2) - x.pow(3) - x.pow(2).scaled(Rational(5)) + x.scaled(Rational(32));
    TriPoly pulled_min = weq_min.compose(from_minimal);
    TriPoly min_eq =
        y.pow(2) + x * y - x.pow(3) - x.pow(2) + x.scaled(Rational(2));
    std::optional<Rational> mu = min_eq.proportionality_factor(pulled_min);
    return mu && sgn(*mu) != 0;
}

ProjectiveTriple to_projective(const WeierstrassPoint& p) {
    if (p.is_infinity()) return weierstrass_infinity_triple();
    return ProjectiveTriple(p.x(), p.y(), Rational(1), Form::weierstrass);
}

WeierstrassPoint to_weierstrass_point(const ProjectiveTriple& p) {
    require_form(p, Form::weierstrass, "to_weierstrass_point");
    if (p.w() == 0) {
        if (p != weierstrass_infinity_triple())
            throw std::invalid_argument("to_weierstrass_point: point at infinity must be (0:1:0)");
        return WeierstrassPoint::infinity();
    }
    return WeierstrassPoint::affine(make_rational(p.u(), p.w()), make_rational(p.v(), p.w()));
}

}  // namespace sharygin
