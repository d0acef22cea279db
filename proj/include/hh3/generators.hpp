#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "hh3/curves.hpp"

namespace hh3 {

enum class FamilyKind {
  SpacelikeBiharmonic,
  TimelikeBiharmonic,
  SpacelikeHorizontal,
  B3ZeroSpacelike,
  B3ZeroTimelike,
  TimelikeHorizontalHelix,
  Geodesic,
};

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);

enum class Branch { Plus, Minus };

/// Quadratic: roots of the slope quadratic. AsPrinted: the closed forms with
/// sqrt(5 sinh² + 1), sqrt(5 cosh² - 1) and the horizontal slope ±1, kept for
/// the falsification rows.
enum class SlopeMode { Quadratic, AsPrinted };

struct SlopePair {
  Real plus;
  Real minus;

  const Real& pick(Branch b) const { return b == Branch::Plus ? plus : minus; }
};

/// Spacelike:  a² - 2a sinh α0 - 4 - 4 sinh² α0 = 0  ->  sinh α0 ± sqrt(5 sinh² α0 + 4)
/// Timelike:   a² - 2a cosh ν0 + 4 - 4 cosh² ν0 = 0  ->  cosh ν0 ± sqrt(5 cosh² ν0 - 4)
/// SpacelikeHorizontal is the spacelike case at α0 = 0 (shape ignored).
SlopePair solve_slope(FamilyKind kind, const Real& shape);
SlopePair printed_slope(FamilyKind kind, const Real& shape);

/// Left side of the slope quadratic at `slope`.
Real slope_quadratic(FamilyKind kind, const Real& shape, const Real& slope);

/// Integral curve of T = (amp cosh(as+b), amp sinh(as+b), vertical), in closed form:
///   x = (amp/a) sinh(as+b) + c1,  y = (amp/a) cosh(as+b) + c2,
///   z = 2 (vertical - amp²/a) s + (2 c1 amp/a) cosh(as+b) - (2 c2 amp/a) sinh(as+b) + c3.
/// Spacelike when amp = cosh α0, vertical = sinh α0; timelike when amp = sinh ν0,
/// vertical = cosh ν0. Every such curve is a helix with N3 = 0.
ClosedFormCurve make_lemma_helix(const Real& amp, const Real& vertical, const Real& slope, const Real& b,
                                 const std::array<Real, 3>& c, std::string description);

ClosedFormCurve make_spacelike_helix(const Real& alpha0, const Real& slope, const Real& b,
                                     const std::array<Real, 3>& c = {});
ClosedFormCurve make_timelike_helix(const Real& nu0, const Real& slope, const Real& b,
                                    const std::array<Real, 3>& d = {});

ClosedFormCurve make_spacelike_biharmonic(const Real& alpha0, Branch branch, const Real& b,
                                          const std::array<Real, 3>& c = {}, SlopeMode mode = SlopeMode::Quadratic);

/// Throws GeodesicDegenerate for ν0 = 0 (T = e3).
ClosedFormCurve make_timelike_biharmonic(const Real& nu0, Branch branch, const Real& b,
                                         const std::array<Real, 3>& d = {}, SlopeMode mode = SlopeMode::Quadratic);

ClosedFormCurve make_spacelike_horizontal(Branch branch, const Real& b, const std::array<Real, 3>& c = {},
                                          SlopeMode mode = SlopeMode::Quadratic);

/// α and its first three derivatives.
struct Profile {
  std::function<std::array<Real, 4>(const Real&)> jet;
  std::string description;
};

Profile linear_profile(const Real& offset, const Real& rate);
/// c0 + c1 s + c2 s^2 + c3 s^3.
Profile cubic_profile(const std::array<Real, 4>& c);
/// α(s) = offset + rate s + amplitude sin(omega s).
Profile wavy_profile(const Real& offset, const Real& rate, const Real& amplitude, const Real& omega);

/// General non-null frame curve in angle form:
///   spacelike T = (cosh α cosh β, cosh α sinh β, sinh α)
///   timelike  T = (sinh α cosh β, sinh α sinh β, cosh α)
/// Neither N3 nor B3 vanishes in general.
FrameCurve make_angle_curve(bool spacelike, Profile alpha, Profile beta);

/// Frame curve with B3 = 0 by construction:
///   spacelike T = (cosh α cosh β, cosh α sinh β, sinh α), β' = 2 sinh α
///   timelike  T = (sinh α cosh β, sinh α sinh β, cosh α), β' = 2 cosh α
/// with β(range.lo) = 0 and β obtained by quadrature. Throws
/// GeodesicDegenerate if α' vanishes identically and RejectedInput if α'
/// vanishes somewhere on the range.
FrameCurve make_b3zero_curve(FamilyKind kind, Profile alpha, const Interval& range);

/// T = (sinh ms, cosh ms, 0): unit-speed timelike and horizontal. Throws
/// GeodesicDegenerate for m = 0.
FrameCurve make_timelike_horizontal_helix(const Real& m);

/// Integral curve of e_axis through the origin (axis in 1..3).
ClosedFormCurve make_geodesic(int axis);

struct FamilyParams {
  FamilyKind kind = FamilyKind::SpacelikeHorizontal;
  Real shape{0};  // α0, ν0, or m
  Branch branch = Branch::Plus;
  Real phase{0};  // b or b~
  std::array<Real, 3> constants{};  // c_i or d_i
  SlopeMode mode = SlopeMode::Quadratic;
  int axis = 3;
  // B3-zero profile α(s) = offset + rate s + amplitude sin(omega s), and the
  // quadrature range for β.
  Real profile_offset{0};
  Real profile_rate{1};
  Real profile_amplitude{0};
  Real profile_omega{1};
  Interval range{Real(-2), Real(2)};
};

std::unique_ptr<Curve> make_family(const FamilyParams& params);

}  // namespace hh3
