#include "sharygin/polynomial.hpp"

#include <sstream>

namespace sharygin {

TriPoly::TriPoly(const Rational& constant) {
    if (sgn(constant) != 0) terms_[{0, 0, 0}] = constant;
}

TriPoly TriPoly::variable(int index) {
    return monomial(Rational(1), index == 0 ? 1u : 0u, index == 1 ? 1u : 0u, index == 2 ? 1u : 0u);
}

TriPoly TriPoly::monomial(const Rational& coeff, unsigned ea, unsigned eb, unsigned ec) {
    TriPoly p;
    if (sgn(coeff) != 0) p.terms_[{ea, eb, ec}] = coeff;
    return p;
}

void TriPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (sgn(it->second) == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

TriPoly& TriPoly::operator+=(const TriPoly& other) {
    for (const auto& [mono, coeff] : other.terms_) terms_[mono] += coeff;
    prune();
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& other) {
    for (const auto& [mono, coeff] : other.terms_) terms_[mono] -= coeff;
    prune();
    return *this;
}

TriPoly TriPoly::operator+(const TriPoly& other) const {
    TriPoly r(*this);
    r += other;
    return r;
}

TriPoly TriPoly::operator-(const TriPoly& other) const {
    TriPoly r(*this);
    r -= other;
    return r;
}

TriPoly TriPoly::operator-() const { return scaled(Rational(-1)); }

TriPoly TriPoly::operator*(const TriPoly& other) const {
    TriPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_) {
            Monomial m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]};
            r.terms_[m] += c1 * c2;
        }
    r.prune();
    return r;
}

TriPoly TriPoly::scaled(const Rational& factor) const {
    TriPoly r;
    if (sgn(factor) == 0) return r;
    for (const auto& [mono, coeff] : terms_) r.terms_[mono] = coeff * factor;
    return r;
}

TriPoly TriPoly::pow(unsigned exp) const {
    TriPoly r(Rational(1));
    for (unsigned i = 0; i < exp; ++i) r = r * (*this);
    return r;
}

TriPoly TriPoly::derivative(int var) const {
    TriPoly r;
    for (const auto& [mono, coeff] : terms_) {
        unsigned e = mono[static_cast<size_t>(var)];
        if (e == 0) continue;
        Monomial m(mono);
        m[static_cast<size_t>(var)] = e - 1;
        r.terms_[m] += coeff * e;
    }
    r.prune();
    return r;
}

TriPoly TriPoly::compose(const std::array<TriPoly, 3>& replacement) const {
    // Cache powers; every exponent here is tiny (degree <= 3 forms).
    std::array<std::vector<TriPoly>, 3> powers;
    for (int v = 0; v < 3; ++v) powers[static_cast<size_t>(v)].push_back(TriPoly(Rational(1)));
    auto power_of = [&](int v, unsigned e) -> const TriPoly& {
        auto& cache = powers[static_cast<size_t>(v)];
        while (cache.size() <= e) cache.push_back(cache.back() * replacement[static_cast<size_t>(v)]);
        return cache[e];
    };
    TriPoly r;
    for (const auto& [mono, coeff] : terms_) {
        TriPoly term = power_of(0, mono[0]) * power_of(1, mono[1]) * power_of(2, mono[2]);
        r += term.scaled(coeff);
    }
    return r;
}

Rational TriPoly::evaluate(const Rational& a, const Rational& b, const Rational& c) const {
    Rational acc(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term(coeff);
        for (unsigned i = 0; i < mono[0]; ++i) term *= a;
        for (unsigned i = 0; i < mono[1]; ++i) term *= b;
        for (unsigned i = 0; i < mono[2]; ++i) term *= c;
        acc += term;
    }
    return acc;
}

unsigned TriPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    unsigned deg = terms_.begin()->first[0] + terms_.begin()->first[1] + terms_.begin()->first[2];
    for (const auto& [mono, coeff] : terms_)
        if (mono[0] + mono[1] + mono[2] != deg)
            throw std::domain_error("TriPoly::homogeneous_degree: not a form");
    return deg;
}

std::optional<Rational> TriPoly::proportionality_factor(const TriPoly& other) const {
    if (terms_.empty() || other.terms_.empty()) return std::nullopt;
    if (terms_.size() != other.terms_.size()) return std::nullopt;
    std::optional<Rational> lambda;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return std::nullopt;
        Rational ratio(jt->second / it->second);
        if (!lambda)
            lambda = ratio;
        else if (*lambda != ratio)
            return std::nullopt;
    }
    return lambda;
}

std::vector<Rational> TriPoly::coefficients_in_c(const Rational& a, const Rational& b) const {
    std::vector<Rational> out;
    for (const auto& [mono, coeff] : terms_) {
        if (out.size() <= mono[2]) out.resize(mono[2] + 1, Rational(0));
        Rational term(coeff);
        for (unsigned i = 0; i < mono[0]; ++i) term *= a;
        for (unsigned i = 0; i < mono[1]; ++i) term *= b;
        out[mono[2]] += term;
    }
    while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
    return out;
}

std::string TriPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << sharygin::to_string(coeff);
        const char* names[3] = {"a", "b", "c"};
        for (int v = 0; v < 3; ++v) {
            unsigned e = mono[static_cast<size_t>(v)];
            if (e == 1) os << "*" << names[v];
            if (e > 1) os << "*" << names[v] << "^" << e;
        }
    }
    return os.str();
}

IntPoly divide_exact(const IntPoly& numerator, const IntPoly& denominator) {
    if (denominator.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    std::vector<Integer> rem(numerator.coefficients());
    int dn = numerator.degree();
    int dd = denominator.degree();
    if (numerator.is_zero()) return IntPoly();
    if (dn < dd) throw std::domain_error("divide_exact: degree too small for exact division");
    std::vector<Integer> quot(static_cast<size_t>(dn - dd) + 1, Integer(0));
    const Integer& lead = denominator.leading();
    for (int k = dn - dd; k >= 0; --k) {
        Integer top = rem[static_cast<size_t>(k + dd)];
        if (top == 0) continue;
        if (!divides(lead, top)) throw std::domain_error("divide_exact: inexact division");
        Integer q(top / lead);
        quot[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(k + i)] -= q * denominator[static_cast<size_t>(i)];
    }
    for (const Integer& r : rem)
        if (r != 0) throw std::domain_error("divide_exact: nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly mod_monic(const IntPoly& value, const IntPoly& monic_divisor) {
    if (monic_divisor.is_zero() || monic_divisor.leading() != 1)
        throw std::invalid_argument("mod_monic: divisor must be monic");
    std::vector<Integer> rem(value.coefficients());
    int dd = monic_divisor.degree();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        Integer q = rem[static_cast<size_t>(k)];
        if (q == 0) continue;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(k - dd + i)] -= q * monic_divisor[static_cast<size_t>(i)];
    }
    rem.resize(static_cast<size_t>(dd));
    return IntPoly(std::move(rem));
}

Integer content(const IntPoly& p) {
    Integer g(0);
    for (const Integer& c : p.coefficients()) {
        Integer ac = abs_int(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ac.get_mpz_t());
    }
    return g;
}

IntPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Integer den_lcm(1);
    for (const Rational& c : p.coefficients())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients()) {
        Rational scaled(c * Rational(den_lcm));
        ints.push_back(scaled.get_num());
    }
    IntPoly ip(std::move(ints));
    Integer g = content(ip);
    if (sgn(ip.leading()) < 0) g = -g;
    std::vector<Integer> out;
    out.reserve(ip.coefficients().size());
    for (const Integer& c : ip.coefficients()) out.push_back(Integer(c / g));
    return IntPoly(std::move(out));
}

RatPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& nodes) {
    RatPoly acc;
    for (size_t i = 0; i < nodes.size(); ++i) {
        RatPoly basis = RatPoly::constant(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (i == j) continue;
            basis = basis * RatPoly({Rational(-nodes[j].first), Rational(1)});
            denom *= nodes[i].first - nodes[j].first;
        }
        acc = acc + basis.scaled(Rational(nodes[i].second / denom));
    }
    return acc;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv(1 / m[col][col]);
        for (size_t row = col + 1; row < n; ++row) {
            if (sgn(m[row][col]) == 0) continue;
            Rational f(m[row][col] * inv);
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

Rational resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    int df = f.degree();
    int dg = g.degree();
    size_t n = static_cast<size_t>(df + dg);
    std::vector<std::vector<Rational>> syl(n, std::vector<Rational>(n, Rational(0)));
    // dg rows of f's coefficients, then df rows of g's, highest degree first.
    for (int row = 0; row < dg; ++row)
        for (int i = 0; i <= df; ++i)
            syl[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = f[static_cast<size_t>(df - i)];
    for (int row = 0; row < df; ++row)
        for (int i = 0; i <= dg; ++i)
            syl[static_cast<size_t>(dg + row)][static_cast<size_t>(row + i)] = g[static_cast<size_t>(dg - i)];
    return determinant(std::move(syl));
}

}  // namespace sharygin
