#pragma once

// Exact arithmetic in Q(sqrt(17)) and the concrete computational content of
// the 2-descent over that field: the constants e1, e2, e3 and the split of 2,
// square-class representatives unramified outside S = {2, 3, 17, inf}, the
// four witness rows with the rational curve points they produce, the
// minimal-polynomial and mod-8 obstructions, and the 17-adic / 2-adic
// valuations (the latter through a fixed branch of sqrt(17) in Q_2).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sharygin/curve.hpp"
#include "sharygin/rational.hpp"

namespace sharygin {

/// r + s*sqrt(17) with exact rational r, s.
class QF17Element {
public:
    QF17Element() : r_(0), s_(0) {}
    QF17Element(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}
    static QF17Element from_rational(const Rational& r) { return QF17Element(r, Rational(0)); }
    static QF17Element from_int(long r) { return from_rational(Rational(r)); }
    static QF17Element sqrt17() { return QF17Element(Rational(0), Rational(1)); }

    const Rational& r() const { return r_; }
    const Rational& s() const { return s_; }

    bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }
    bool is_rational() const { return sgn(s_) == 0; }

    QF17Element conjugate() const { return QF17Element(r_, Rational(-s_)); }
    Rational norm() const { return Rational(r_ * r_ - 17 * s_ * s_); }

    QF17Element operator+(const QF17Element& o) const {
        return QF17Element(Rational(r_ + o.r_), Rational(s_ + o.s_));
    }
    QF17Element operator-(const QF17Element& o) const {
        return QF17Element(Rational(r_ - o.r_), Rational(s_ - o.s_));
    }
    QF17Element operator-() const { return QF17Element(Rational(-r_), Rational(-s_)); }
    QF17Element operator*(const QF17Element& o) const {
        return QF17Element(Rational(r_ * o.r_ + 17 * s_ * o.s_),
                           Rational(r_ * o.s_ + s_ * o.r_));
    }
    QF17Element inverse() const;
    QF17Element operator/(const QF17Element& o) const { return *this * o.inverse(); }

    QF17Element square() const { return *this * *this; }

    bool operator==(const QF17Element& o) const { return r_ == o.r_ && s_ == o.s_; }
    bool operator!=(const QF17Element& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Rational r_, s_;
};

struct DescentConstants {
    QF17Element e1;         // 0
    QF17Element e2;         // -(5 + 3 sqrt17)/2
    QF17Element e3;         // -(5 - 3 sqrt17)/2
    QF17Element unit;       // fundamental unit 4 + sqrt17, norm -1
    QF17Element two_plus;   // (5 + sqrt17)/2
    QF17Element two_minus;  // (5 - sqrt17)/2
    QF17Element three;      // 3, inert
    QF17Element sqrt17;     // ramified prime above 17
    // S = {2, 3, 17, inf}; the finite places appear above as generators.
};

const DescentConstants& descent_constants();

/// Exact square test in Q(sqrt17), reduced to rational-square conditions on
/// the norm and half-trace: u + v*sqrt17 = (r + s*sqrt17)^2 forces
/// r^2 = (u +- sqrt(norm))/2 with rational sqrt(norm).
bool is_square_in_qf17(const QF17Element& x);
/// The square root, when one exists (the one with r >= 0).
std::optional<QF17Element> qf17_sqrt(const QF17Element& x);
/// x and y generate the same class of K^x/(K^x)^2 (x*y is a square).
bool same_square_class(const QF17Element& x, const QF17Element& y);

/// All 64 subset products of {-1, 4+sqrt17, 2+, 2-, 3, sqrt17}, the
/// representatives of K(S,2); deterministic order (bit i of the index
/// selects the i-th generator above).
std::vector<QF17Element> ks2_representatives();
bool ks2_pairwise_inequivalent(const std::vector<QF17Element>& reps);

/// A solution of b1 z1^2 - b2 z2^2 = e2, b1 z1^2 - b1 b2 z3^2 = e3.
struct DescentWitness {
    QF17Element b1, b2, z1, z2, z3;
};

/// Validates the witness system exactly (throws std::domain_error when an
/// equation fails or z1, z2 vanish), then recovers the rational point
/// P = (b1 z1^2 + e1, b1 b2 z1 z2 z3) and checks it satisfies
/// y^2 = x (x - e2)(x - e3), i.e. lies on the Weierstrass model.
WeierstrassPoint verify_witness(const DescentWitness& w);

struct WitnessRow {
    std::string label;  // point the row recovers, e.g. "2A"
    DescentWitness witness;
    WeierstrassPoint expected;
};

/// The four solution rows (b1, b2) in {(1,1), (-2, u*2-), (-1, u*3),
/// (2, 2-*3)} recovering {2A, 2A+D, 3A, A+D}.
std::vector<WitnessRow> builtin_witness_table();

/// B^2 = conj(2+)/2+ = (21-5 sqrt17)/4 satisfies 2t^2 - 21t + 2 = 0, is not
/// a square in Q(sqrt17), and 2t^4 - 21t^2 + 2 is irreducible over Q; the
/// companion polynomial 2t^4 + 21t^2 + 2 likewise has no root in Q(sqrt17).
bool minpoly_check_step9();

/// Odd squares are 1 mod 8, all squares lie in {0,1,4}, so z^2 = 5 (mod 8)
/// is unsolvable.
bool squares_mod8_obstruction();

/// Residue of a 2-adic square root of 17 modulo 2^k.
struct TwoAdicApprox {
    Integer residue;
    int modulus_exponent;
};

/// Both branches modulo 2^k for k >= 5; first is the canonical branch
/// (congruent to 9 mod 32), second its negative. Residues are coherent:
/// the first branch at k' < k is the reduction of the one at k.
std::pair<TwoAdicApprox, TwoAdicApprox> hensel_sqrt17(int k);

/// ord_17 extended to the ramified quadratic extension: half-integers,
/// computed as ord_17(norm)/2. x must be nonzero.
Rational ord17(const QF17Element& x);

/// ord_2 through the embedding Q(sqrt17) -> Q_2 fixed by the canonical
/// branch of sqrt17. Working precision is chosen from ord_2(norm) so the
/// result is exact. x must be nonzero.
long ord2(const QF17Element& x);

/// The 2-descent coordinate map P -> (x - e1, x - e2) with its special
/// values at x = e1, x = e2 and at infinity.
std::pair<QF17Element, QF17Element> descent_image(const WeierstrassPoint& p);

}  // namespace sharygin
