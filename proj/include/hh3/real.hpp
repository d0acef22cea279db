#pragma once

#include <boost/multiprecision/float128.hpp>

namespace hh3 {

// IEEE binary128. Frame components of boosted curves grow like cosh(s), and
// the bitension cancels terms of size |T|^3, so double runs out of digits.
using Real = boost::multiprecision::float128;

inline double to_double(const Real& x) { return static_cast<double>(x); }

}  // namespace hh3
