#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "hh3/curves.hpp"
#include "hh3/frame_algebra.hpp"
#include "hh3/random.hpp"
#include "hh3/real.hpp"

namespace test {

using hh3::FrameVector;
using hh3::Real;

inline double d(const Real& x) { return hh3::to_double(x); }

inline FrameVector vec(double a, double b, double c) { return {Real(a), Real(b), Real(c)}; }

inline FrameVector random_vector(hh3::SeededUniform& rng, double lo, double hi) {
  return {Real(rng(lo, hi)), Real(rng(lo, hi)), Real(rng(lo, hi))};
}

inline hh3::IntFrameVector random_int_vector(hh3::SeededUniform& rng, long long lo, long long hi) {
  return {rng.integer(lo, hi), rng.integer(lo, hi), rng.integer(lo, hi)};
}

inline Real max_diff(const FrameVector& a, const FrameVector& b) { return hh3::max_abs(a - b); }

inline double point_diff(const hh3::Point3& a, const hh3::Point3& b) {
  return std::max({d(abs(a.x - b.x)), d(abs(a.y - b.y)), d(abs(a.z - b.z))});
}

inline std::vector<Real> grid(double lo, double hi, int steps) {
  std::vector<Real> g;
  for (int i = 0; i <= steps; ++i) g.push_back(Real(lo) + (Real(hi) - Real(lo)) * i / steps);
  return g;
}

}  // namespace test
