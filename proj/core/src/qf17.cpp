#include "sharygin/qf17.hpp"

namespace sharygin {

QF17Element QF17Element::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("QF17Element::inverse: zero element");
    return QF17Element(Rational(r_ / n), Rational(-s_ / n));
}

std::string QF17Element::to_string() const {
    if (sgn(s_) == 0) return sharygin::to_string(r_);
    std::string tail = sharygin::to_string(s_) + "*sqrt17";
    if (sgn(r_) == 0) return tail;
    return sharygin::to_string(r_) + (sgn(s_) > 0 ? " + " : " - ") +
           sharygin::to_string(Rational(abs(s_))) + "*sqrt17";
}

const DescentConstants& descent_constants() {
    static const DescentConstants k = [] {
        Rational half(1, 2);
        DescentConstants c{
            QF17Element(),                                               // e1 = 0
            QF17Element(Rational(-5) * half, Rational(-3) * half),       // e2
            QF17Element(Rational(-5) * half, Rational(3) * half),        // e3
            QF17Element(Rational(4), Rational(1)),                       // 4 + sqrt17
            QF17Element(Rational(5) * half, half),                       // 2+
            QF17Element(Rational(5) * half, Rational(-1) * half),        // 2-
            QF17Element::from_int(3),
            QF17Element::sqrt17(),
        };
        // e2, e3 are the roots of x^2 + 5x - 32; 2 = 2+ * 2-; norm(unit) = -1.
        if (c.e2 + c.e3 != QF17Element::from_int(-5) ||
            c.e2 * c.e3 != QF17Element::from_int(-32) ||
            c.e2.conjugate() != c.e3 || c.unit.norm() != -1 ||
            c.two_plus * c.two_minus != QF17Element::from_int(2) ||
            c.sqrt17.square() != QF17Element::from_int(17))
            throw std::logic_error("descent_constants: invariant violated");
        return c;
    }();
    return k;
}

bool is_square_in_qf17(const QF17Element& x) { return qf17_sqrt(x).has_value(); }

std::optional<QF17Element> qf17_sqrt(const QF17Element& x) {
    if (x.is_zero()) return QF17Element();
    if (x.is_rational()) {
        if (sgn(x.r()) < 0) return std::nullopt;
        if (auto root = rational_sqrt(x.r())) return QF17Element(*root, Rational(0));
        if (auto root = rational_sqrt(Rational(x.r() / 17)))
            return QF17Element(Rational(0), *root);
        return std::nullopt;
    }
    // (r + s sqrt17)^2 = u + v sqrt17 forces r^2 + 17 s^2 = u, 2rs = v, hence
    // r^2 is a root of 4t^2 - 4ut + 17v^2, i.e. (u +- sqrt(u^2-17v^2))/2.
    std::optional<Rational> n = rational_sqrt(x.norm());
    if (!n) return std::nullopt;
    for (const Rational& half_sum : {Rational((x.r() + *n) / 2), Rational((x.r() - *n) / 2)}) {
        if (sgn(half_sum) <= 0) continue;
        if (auto r = rational_sqrt(half_sum)) {
            Rational s(x.s() / (2 * *r));
            QF17Element root(*r, s);
            if (root.square() == x) return root;
        }
    }
    return std::nullopt;
}

bool same_square_class(const QF17Element& x, const QF17Element& y) {
    if (x.is_zero() || y.is_zero())
        throw std::invalid_argument("same_square_class: zero has no square class");
    return is_square_in_qf17(x * y);
}

std::vector<QF17Element> ks2_representatives() {
    const DescentConstants& k = descent_constants();
    const QF17Element generators[6] = {QF17Element::from_int(-1), k.unit,  k.two_plus,
                                       k.two_minus,               k.three, k.sqrt17};
    std::vector<QF17Element> reps;
    reps.reserve(64);
    for (unsigned mask = 0; mask < 64; ++mask) {
        QF17Element prod = QF17Element::from_int(1);
        for (unsigned bit = 0; bit < 6; ++bit)
            if (mask & (1u << bit)) prod = prod * generators[bit];
        reps.push_back(prod);
    }
    return reps;
}

bool ks2_pairwise_inequivalent(const std::vector<QF17Element>& reps) {
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            if (same_square_class(reps[i], reps[j])) return false;
    return true;
}

WeierstrassPoint verify_witness(const DescentWitness& w) {
    const DescentConstants& k = descent_constants();
    if (w.z1.is_zero() || w.z2.is_zero())
        throw std::domain_error("verify_witness: z1 and z2 must be nonzero");
    QF17Element lhs1 = w.b1 * w.z1.square() - w.b2 * w.z2.square();
    if (lhs1 != k.e2) throw std::domain_error("verify_witness: first equation not satisfied");
    QF17Element lhs2 = w.b1 * w.z1.square() - w.b1 * w.b2 * w.z3.square();
    if (lhs2 != k.e3) throw std::domain_error("verify_witness: second equation not satisfied");

    QF17Element x = w.b1 * w.z1.square() + k.e1;
    QF17Element y = w.b1 * w.b2 * w.z1 * w.z2 * w.z3;
    if (!x.is_rational() || !y.is_rational())
        throw std::domain_error("verify_witness: recovered point is not rational");
    if (y.square() != x * (x - k.e2) * (x - k.e3))
        throw std::domain_error("verify_witness: recovered point is not on the curve");
    WeierstrassPoint p = WeierstrassPoint::affine(x.r(), y.r());
    if (!is_on_curve(p)) throw std::logic_error("verify_witness: factored and expanded models disagree");
    return p;
}

std::vector<WitnessRow> builtin_witness_table() {
    const DescentConstants& k = descent_constants();
    Rational half(1, 2);
    auto q = [&](long num_r, long num_s, long den) {
        return QF17Element(Rational(num_r, den), Rational(num_s, den));
    };
    std::vector<WitnessRow> rows;
    rows.push_back({"2A",
                    {QF17Element::from_int(1), QF17Element::from_int(1),
                     QF17Element::from_int(2), q(3, 1, 2), q(-3, 1, 2)},
                    WeierstrassPoint::affine(Rational(4), Rational(4))});
    rows.push_back({"2A+D",
                    {QF17Element::from_int(-2), k.unit * k.two_minus,
                     QF17Element::from_int(2), q(5, -1, 2), q(-1, -1, 4)},
                    WeierstrassPoint::affine(Rational(-8), Rational(8))});
    rows.push_back({"3A",
                    {QF17Element::from_int(-1), k.unit * k.three,
                     QF17Element::from_int(1), q(-3, 1, 2), q(-5, 1, 2)},
                    WeierstrassPoint::affine(Rational(-1), Rational(6))});
    rows.push_back({"A+D",
                    {QF17Element::from_int(2), k.two_minus * k.three,
                     QF17Element::from_int(2), q(3, 1, 2), q(-1, -1, 4)},
                    WeierstrassPoint::affine(Rational(8), Rational(-24))});
    return rows;
}

bool minpoly_check_step9() {
    const DescentConstants& k = descent_constants();

    // B^2 for b2 = 2+.
    QF17Element b_squared = k.two_plus.conjugate() / k.two_plus;
    if (b_squared != QF17Element(Rational(21, 4), Rational(-5, 4))) return false;
    QF17Element two = QF17Element::from_int(2), twenty_one = QF17Element::from_int(21);
    if (!(two * b_squared.square() - twenty_one * b_squared + two).is_zero()) return false;
    // B itself is not in Q(sqrt17): neither root of 2t^2 - 21t + 2, namely
    // (21 -+ 5 sqrt17)/4, is a square there.
    if (is_square_in_qf17(b_squared)) return false;
    if (is_square_in_qf17(QF17Element(Rational(21, 4), Rational(5, 4)))) return false;

    // 2t^4 - 21t^2 + 2 is irreducible over Q. No rational roots (candidates
    // +-1, +-2, +-1/2), and no quadratic factorization of
    // t^4 - (21/2)t^2 + 1: the p=0 split needs disc (21/2)^2 - 4 to be a
    // rational square and the p != 0 split needs 2q + 21/2, q = +-1, to be
    // one; none is.
    RatPoly quartic({Rational(2), Rational(0), Rational(-21), Rational(0), Rational(2)});
    for (long num : {1, -1, 2, -2})
        for (long den : {1, 2})
            if (sgn(quartic.evaluate(Rational(num, den))) == 0) return false;
    if (rational_sqrt(Rational(441, 4) - 4)) return false;
    if (rational_sqrt(Rational(25, 2)) || rational_sqrt(Rational(17, 2))) return false;

    // Companion row b2 = 2+ * sqrt17: B^2 = -2-/2+ satisfies 2t^4+21t^2+2,
    // and again neither root (-21 -+ 5 sqrt17)/4 is a square in Q(sqrt17).
    QF17Element companion = (k.two_plus * k.sqrt17).conjugate() / (k.two_plus * k.sqrt17);
    if (companion != QF17Element(Rational(-21, 4), Rational(5, 4))) return false;
    if (!(two * companion.square() + twenty_one * companion + two).is_zero()) return false;
    if (is_square_in_qf17(companion)) return false;
    if (is_square_in_qf17(QF17Element(Rational(-21, 4), Rational(-5, 4)))) return false;

    return true;
}

bool squares_mod8_obstruction() {
    bool odd_squares_are_one = true;
    std::array<bool, 8> is_square_mod8{};
    for (int t = 0; t < 8; ++t) {
        int sq = (t * t) % 8;
        is_square_mod8[static_cast<size_t>(sq)] = true;
        if (t % 2 == 1 && sq != 1) odd_squares_are_one = false;
        if (t % 2 == 0 && sq != 0 && sq != 4) return false;
    }
    return odd_squares_are_one && !is_square_mod8[5] && !is_square_mod8[2] &&
           !is_square_mod8[3] && !is_square_mod8[6] && !is_square_mod8[7];
}

std::pair<TwoAdicApprox, TwoAdicApprox> hensel_sqrt17(int k) {
    if (k < 5) throw std::invalid_argument("hensel_sqrt17: k must be >= 5");
    // x^2 = 17 has four roots mod 2^j (j >= 5) but only two 2-adic limits;
    // the parasite roots differ from a limit by 2^(j-1) and do not lift.
    // Lifting to 2^(k+2) and reducing mod 2^k therefore yields the residue
    // of the genuine branch. Start from 9, a root mod 64 on the canonical
    // branch (9 mod 32); later corrections add multiples of 2^5 and leave
    // the class mod 32 alone.
    Integer r(9);
    for (int j = 6; j < k + 2; ++j) {
        Integer check(r * r - 17);
        if (mpz_tstbit(check.get_mpz_t(), static_cast<mp_bitcnt_t>(j)) != 0)
            mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(j - 1));
    }
    Integer modulus = pow_int(Integer(2), static_cast<unsigned long>(k));
    Integer branch = r % modulus;
    Integer check(branch * branch - 17);
    if (!divides(modulus, check) || branch % 32 != 9)
        throw std::logic_error("hensel_sqrt17: lifting failed");
    return {TwoAdicApprox{branch, k}, TwoAdicApprox{Integer(modulus - branch), k}};
}

Rational ord17(const QF17Element& x) {
    if (x.is_zero()) throw std::invalid_argument("ord17: zero element");
    // The extension is ramified at 17, so ord17 is Galois-invariant and
    // ord17(x) = ord17(x * conj(x)) / 2.
    return Rational(p_adic_valuation(x.norm(), Integer(17)), 2);
}

long ord2(const QF17Element& x) {
    if (x.is_zero()) throw std::invalid_argument("ord2: zero element");
    Integer den_lcm;
    mpz_lcm(den_lcm.get_mpz_t(), x.r().get_den().get_mpz_t(), x.s().get_den().get_mpz_t());
    Integer u = Rational(x.r() * den_lcm).get_num();
    Integer v = Rational(x.s() * den_lcm).get_num();
    long shift = -static_cast<long>(p_adic_valuation(den_lcm, Integer(2)));

    if (v == 0) return shift + static_cast<long>(p_adic_valuation(u, Integer(2)));
    if (u == 0) return shift + static_cast<long>(p_adic_valuation(v, Integer(2)));

    // u + v*alpha and u - v*alpha are 2-adic integers whose product is the
    // norm, so ord2(u + v*alpha) <= ord2(norm); one extra bit of precision
    // pins the valuation down exactly.
    long bound = static_cast<long>(p_adic_valuation(Integer(u * u - 17 * v * v), Integer(2)));
    for (int k = static_cast<int>(bound) + 2;; k *= 2) {
        Integer alpha = hensel_sqrt17(std::max(k, 7)).first.residue;
        Integer modulus = pow_int(Integer(2), static_cast<unsigned long>(std::max(k, 7)));
        Integer m((u + v * alpha) % modulus);
        if (m < 0) m += modulus;
        if (m != 0)
            return shift + static_cast<long>(p_adic_valuation(m, Integer(2)));
    }
}

std::pair<QF17Element, QF17Element> descent_image(const WeierstrassPoint& p) {
    const DescentConstants& k = descent_constants();
    QF17Element one = QF17Element::from_int(1);
    if (p.is_infinity()) return {one, one};
    QF17Element x = QF17Element::from_rational(p.x());
    if (x == k.e1) return {(k.e1 - k.e3) / (k.e1 - k.e2), k.e1 - k.e2};
    if (x == k.e2) return {k.e2 - k.e1, (k.e2 - k.e3) / (k.e2 - k.e1)};
    return {x - k.e1, x - k.e2};
}

}  // namespace sharygin
