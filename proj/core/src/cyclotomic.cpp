#include "sharygin/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "sharygin/parallel.hpp"

namespace sharygin {

namespace {

IntPoly t_power_minus_one(unsigned n) {
    std::vector<Integer> c(n + 1, Integer(0));
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

}  // namespace

const IntPoly& cyclotomic_polynomial(unsigned n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Recursion bottoms out at Phi_1 = t - 1; compute divisors first without
    // holding re-entrancy issues (the lock is recursive-free, so gather the
    // needed divisors iteratively).
    std::vector<unsigned> todo{n};
    while (!todo.empty()) {
        unsigned m = todo.back();
        if (cache.count(m)) {
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) {
                todo.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        todo.pop_back();
        IntPoly numerator = t_power_minus_one(m);
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) numerator = divide_exact(numerator, cache.at(d));
        cache.emplace(m, std::move(numerator));
    }
    return cache.at(n);
}

CyclotomicElement::CyclotomicElement(unsigned conductor) : conductor_(conductor) {
    cyclotomic_polynomial(conductor);  // validates conductor >= 1
}

CyclotomicElement CyclotomicElement::constant(unsigned conductor, const Integer& value) {
    return from_poly(conductor, IntPoly::constant(value));
}

CyclotomicElement CyclotomicElement::root_power(unsigned conductor, unsigned k) {
    return from_poly(conductor, IntPoly::monomial(Integer(1), k));
}

CyclotomicElement CyclotomicElement::from_poly(unsigned conductor, const IntPoly& p) {
    CyclotomicElement e(conductor);
    e.value_ = mod_monic(p, cyclotomic_polynomial(conductor));
    return e;
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
    if (conductor_ != o.conductor_) throw std::invalid_argument("CyclotomicElement: conductor mismatch");
    CyclotomicElement e(conductor_);
    e.value_ = value_ + o.value_;
    return e;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
    if (conductor_ != o.conductor_) throw std::invalid_argument("CyclotomicElement: conductor mismatch");
    CyclotomicElement e(conductor_);
    e.value_ = value_ - o.value_;
    return e;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
    if (conductor_ != o.conductor_) throw std::invalid_argument("CyclotomicElement: conductor mismatch");
    return from_poly(conductor_, value_ * o.value_);
}

bool CyclotomicElement::operator==(const CyclotomicElement& o) const {
    return conductor_ == o.conductor_ && value_ == o.value_;
}

bool search_constraints_ok(unsigned N, unsigned m, unsigned n) {
    return m >= 1 && n >= 1 && 2 * (m + n) < N;
}

bool expression_is_zero(unsigned N, unsigned m, unsigned n) {
    if (!search_constraints_ok(N, m, n))
        throw std::invalid_argument("expression_is_zero: (m, n) outside the constraint region");
    unsigned order = 2 * N;
    std::vector<Integer> coeffs(order, Integer(0));
    for (unsigned e : {0u, m, n, 2 * m + 3 * n, 3 * m + 2 * n, 3 * m + 3 * n})
        coeffs[e % order] += 1;
    IntPoly p((std::vector<Integer>(coeffs)));
    // x = zeta_2N^m may be imprimitive; the test is vanishing at the
    // primitive root zeta_2N itself, i.e. divisibility by its minimal
    // polynomial Phi_2N.
    return mod_monic(p, cyclotomic_polynomial(order)).is_zero();
}

Real expression_magnitude(unsigned N, unsigned m, unsigned n) {
    if (!search_constraints_ok(N, m, n))
        throw std::invalid_argument("expression_magnitude: (m, n) outside the constraint region");
    Real theta = real_pi() / N;
    Real re(1), im(0);
    for (unsigned e : {m, n, 2 * m + 3 * n, 3 * m + 2 * n, 3 * m + 3 * n}) {
        re += cos(theta * e);
        im += sin(theta * e);
    }
    return sqrt(re * re + im * im);
}

std::vector<SearchHit> search(unsigned n_max, const SearchOptions& options) {
    if (n_max < 3) throw std::invalid_argument("search: n_max must be >= 3");
    std::vector<std::vector<SearchHit>> per_n = parallel_map<std::vector<SearchHit>>(
        n_max + 1, options.threads, [&](size_t big_n) -> std::vector<SearchHit> {
            if (big_n < 5) return {};  // constraint region is empty below N = 5
            real_precision_bits();     // sync mpfr precision on worker threads
            unsigned N = static_cast<unsigned>(big_n);
            std::vector<SearchHit> hits;
            for (unsigned m = 1; 2 * (m + 1) < N; ++m)
                for (unsigned n = 1; 2 * (m + n) < N; ++n) {
                    if (expression_magnitude(N, m, n) > options.prefilter_threshold) continue;
                    if (!options.exact || expression_is_zero(N, m, n))
                        hits.push_back(SearchHit{N, m, n});
                }
            return hits;
        });
    std::vector<SearchHit> all;
    for (const auto& hits : per_n) all.insert(all.end(), hits.begin(), hits.end());
    return all;
}

bool cos7_minpoly_check() {
    // z = t + t^13 represents zeta + zeta^-1 = 2cos(pi/7) in Z[t]/Phi_14.
    CyclotomicElement z =
        CyclotomicElement::root_power(14, 1) + CyclotomicElement::root_power(14, 13);
    CyclotomicElement two = CyclotomicElement::constant(14, Integer(2));
    CyclotomicElement one = CyclotomicElement::constant(14, Integer(1));
    CyclotomicElement value = z * z * z - z * z - two * z + one;
    if (!value.is_zero()) return false;
    // A rational root of the monic cubic would be +-1; neither works, so the
    // cubic is irreducible over Q and its root 2cos(pi/7) is irrational.
    IntPoly cubic({Integer(1), Integer(-2), Integer(-1), Integer(1)});
    return cubic.evaluate(Integer(1)) != 0 && cubic.evaluate(Integer(-1)) != 0;
}

}  // namespace sharygin
