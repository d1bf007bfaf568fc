#include "sharygin/rational.hpp"

namespace sharygin {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

Integer parse_integer(const std::string& text) {
    Rational q = parse_rational(text);
    if (!is_integer(q)) throw std::invalid_argument("parse_integer: not an integer: '" + text + "'");
    return q.get_num();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (!is_perfect_square(q.get_num()) || !is_perfect_square(q.get_den())) return std::nullopt;
    return make_rational(exact_isqrt(q.get_num()), exact_isqrt(q.get_den()));
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (sgn(base) == 0) throw std::domain_error("pow_rational: 0 to a negative power");
        return pow_rational(Rational(1 / base), -exp);
    }
    Rational num(pow_int(base.get_num(), static_cast<unsigned long>(exp)));
    Rational den(pow_int(base.get_den(), static_cast<unsigned long>(exp)));
    return Rational(num / den);
}

unsigned long p_adic_valuation(const Integer& z, const Integer& p) {
    if (z == 0) throw std::domain_error("p_adic_valuation: zero argument");
    Integer reduced;
    return mpz_remove(reduced.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
}

long p_adic_valuation(const Rational& q, const Integer& p) {
    return static_cast<long>(p_adic_valuation(q.get_num(), p)) -
           static_cast<long>(p_adic_valuation(q.get_den(), p));
}

std::vector<Integer> divisors_from_factorization(
    const std::vector<std::pair<Integer, unsigned>>& factorization) {
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [prime, mult] : factorization) {
        std::vector<Integer> next;
        next.reserve(divs.size() * (mult + 1));
        Integer power(1);
        for (unsigned e = 0; e <= mult; ++e) {
            for (const Integer& d : divs) next.push_back(Integer(d * power));
            power *= prime;
        }
        divs.swap(next);
    }
    return divs;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace sharygin
