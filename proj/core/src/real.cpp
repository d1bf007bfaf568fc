#include "sharygin/real.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace sharygin {

namespace {
std::atomic<unsigned> g_precision_bits{kDefaultRealPrecisionBits};

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
}
}  // namespace

void set_real_precision_bits(unsigned bits) {
    if (bits < 64) throw std::invalid_argument("set_real_precision_bits: need at least 64 bits");
    g_precision_bits.store(bits);
    Real::default_precision(bits_to_digits10(bits));
}

unsigned real_precision_bits() {
    // Keeps worker threads in sync with the process-wide setting even when
    // the backend's default precision is thread-local.
    unsigned bits = g_precision_bits.load();
    Real::default_precision(bits_to_digits10(bits));
    return bits;
}

Real real_pi() {
    real_precision_bits();
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

Real to_real(const Rational& q) {
    real_precision_bits();
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Real default_tolerance() {
    real_precision_bits();
    return Real(kDefaultTolerance);
}

}  // namespace sharygin
