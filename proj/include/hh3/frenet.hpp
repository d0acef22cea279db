#pragma once

#include <span>
#include <vector>

#include "hh3/curves.hpp"

namespace hh3 {

/// Frenet apparatus at one parameter value, with the s-derivatives of the
/// curvatures that the bitension expansion needs.
///
/// Orientation: N = ∇_T T / (k1 ε2) with k1 > 0, and B = T ∧ N.
struct FrenetData {
  Real s{0};
  FrameVector T, N, B;
  Real k1{0};
  Real k2{0};
  int eps1 = 0;  // g(T, T)
  int eps2 = 0;  // g(N, N)
  int eps3 = 0;  // g(B, B)
  Real dk1{0};
  Real d2k1{0};
  Real dk2{0};

  const Real& N3() const { return N.u3; }
  const Real& B3() const { return B.u3; }
};

struct FrenetOptions {
  Real tol{1e-9};  // geodesic / null-normal threshold on k1
  // Relative unit-speed check: ||g(T,T)| - 1| <= unit_speed_tol * (1 + |T|^2).
  Real unit_speed_tol{1e-12};
};

inline constexpr double kAnalyticFrenetTolerance = 1e-9;
inline constexpr double kFiniteDifferenceFrenetTolerance = 1e-5;
// Seven-point interpolation of double-precision samples at spacing ~0.01
// leaves |g(T,T)| - 1 near 1e-8.
inline constexpr double kSampledUnitSpeedTolerance = 1e-6;

/// Throws RejectedInput (not unit speed / null tangent), GeodesicDegenerate
/// (∇_T T = 0), or NullNormalDegenerate (∇_T T null but non-zero).
FrenetData compute_frenet(const TangentJet& jet, const FrenetOptions& options = {});
FrenetData compute_frenet(const Curve& curve, const Real& s, const FrenetOptions& options = {});

struct ConstancyStats {
  Real mean{0};
  Real max_deviation{0};
};

ConstancyStats constancy(std::span<const Real> values);

struct FrenetGrid {
  std::vector<FrenetData> points;
  ConstancyStats k1, k2, N3, B3;
};

FrenetGrid frenet_over_grid(const Curve& curve, std::span<const Real> grid, const FrenetOptions& options = {});

/// Euclidean norms of the three Frenet-equation defects, each computed by
/// differentiating the frame directly:
///   ∇_T T - k1 ε2 N,  ∇_T N + k1 ε1 T - k2 ε3 B,  ∇_T B + k2 ε2 N.
struct FrenetClosure {
  Real tangent{0};
  Real normal{0};
  Real binormal{0};

  Real max() const;
};

FrenetClosure frenet_closure(const TangentJet& jet, const FrenetOptions& options = {});

}  // namespace hh3
