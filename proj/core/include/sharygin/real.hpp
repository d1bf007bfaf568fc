#pragma once

// Configurable-precision reals for the few places exact arithmetic cannot
// reach (trigonometric residuals, the heptagon triangle, the search
// prefilter). MPFR via boost::multiprecision; precision is a process-wide
// setting given in bits, default 128.

#include <boost/multiprecision/mpfr.hpp>

#include "sharygin/rational.hpp"

namespace sharygin {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultRealPrecisionBits = 128;
inline constexpr const char* kDefaultTolerance = "1e-20";

/// Sets the working precision (>= 64 bits). Affects Reals constructed
/// afterwards on the calling thread; worker threads re-apply it on entry.
void set_real_precision_bits(unsigned bits);
unsigned real_precision_bits();

Real real_pi();
Real to_real(const Rational& q);
Real default_tolerance();

}  // namespace sharygin
