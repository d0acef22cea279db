#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hh3/connection.hpp"
#include "hh3/frame_algebra.hpp"
#include "hh3/real.hpp"

namespace hh3 {

/// Coordinates (x, y, z) in the R^3 chart of the group.
struct Point3 {
  Real x{0};
  Real y{0};
  Real z{0};

  friend Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(const Real& k, const Point3& a) { return {k * a.x, k * a.y, k * a.z}; }
};

/// Position and its s-derivatives up to order 4.
using CoordinateJet = std::array<Point3, 5>;

/// Unit tangent T and its s-derivatives up to order 3, in frame components.
struct TangentJet {
  Jet<4> d{};
  int order = 3;  // highest derivative that is valid

  const FrameVector& tangent() const { return d[0]; }
};

/// T = (x', y', z'/2 + x' y - x y'), with derivatives by the Leibniz rule.
TangentJet tangent_jet_from_coordinates(const CoordinateJet& jet);

/// w(γ') = z' + 2 x' y - 2 x y'; vanishes exactly on horizontal curves.
Real horizontality_form(const CoordinateJet& jet);

struct Interval {
  Real lo;
  Real hi;
};

/// lo, lo + step, ..., hi. The span must be an integer number of steps.
std::vector<Real> make_grid(const Real& lo, const Real& hi, const Real& step);

class Curve {
 public:
  virtual ~Curve() = default;

  virtual TangentJet tangent_jet(const Real& s) const = 0;
  virtual std::string describe() const = 0;
};

/// A path given in coordinates; the frame tangent is derived from the jet.
class CoordinateCurve : public Curve {
 public:
  virtual CoordinateJet coordinate_jet(const Real& s) const = 0;

  Point3 position(const Real& s) const { return coordinate_jet(s)[0]; }
  TangentJet tangent_jet(const Real& s) const override { return tangent_jet_from_coordinates(coordinate_jet(s)); }
};

/// Closed-form coordinates with analytic derivatives.
class ClosedFormCurve final : public CoordinateCurve {
 public:
  using JetFunction = std::function<CoordinateJet(const Real&)>;

  ClosedFormCurve(JetFunction f, std::string description);

  CoordinateJet coordinate_jet(const Real& s) const override { return f_(s); }
  std::string describe() const override { return description_; }

  /// Position-only view, for wrapping in a FiniteDifferenceCurve.
  std::function<Point3(const Real&)> position_function() const;

 private:
  JetFunction f_;
  std::string description_;
};

struct FDConfig {
  Real h{1e-4};
  bool richardson = true;
  int levels = 2;  // step sizes h, h/2, ..., h/2^(levels-1) in the Richardson table
};

/// Derivatives of a position function by central differences.
///
/// Each order k uses the standard second-order central stencil with step h.
/// With richardson on, a Richardson table over steps h, h/2, ..., h/2^(L-1)
/// cancels the h^2, ..., h^(2L-2) terms, so the truncation error is
/// O(h^(2L)); rounding contributes O(eps |x| / (h/2^(L-1))^k).
class FiniteDifferenceCurve final : public CoordinateCurve {
 public:
  using PositionFunction = std::function<Point3(const Real&)>;

  FiniteDifferenceCurve(PositionFunction f, FDConfig config, std::string description);

  CoordinateJet coordinate_jet(const Real& s) const override;
  std::string describe() const override { return description_; }
  const FDConfig& config() const { return config_; }

 private:
  PositionFunction f_;
  FDConfig config_;
  std::string description_;
};

/// Samples (s_i, x_i, y_i, z_i) with strictly increasing s. Derivatives come
/// from the interpolating polynomial through the nearest 7 samples.
class SampledCurve final : public CoordinateCurve {
 public:
  SampledCurve(std::vector<Real> s, std::vector<Point3> points, std::string description = "sampled");

  CoordinateJet coordinate_jet(const Real& s) const override;
  std::string describe() const override { return description_; }

  std::span<const Real> parameters() const { return s_; }
  std::span<const Point3> points() const { return points_; }
  Interval domain() const { return {s_.front(), s_.back()}; }

 private:
  std::vector<Real> s_;
  std::vector<Point3> points_;
  std::string description_;
};

/// A curve known only through its unit tangent T(s) in frame components.
class FrameCurve final : public Curve {
 public:
  using JetFunction = std::function<TangentJet(const Real&)>;

  FrameCurve(JetFunction f, std::string description);

  TangentJet tangent_jet(const Real& s) const override { return f_(s); }
  std::string describe() const override { return description_; }

 private:
  JetFunction f_;
  std::string description_;
};

FrameVector tangent_frame_components(const Curve& curve, const Real& s);

/// |T3| <= tol at every grid point.
bool is_horizontal(const Curve& curve, std::span<const Real> grid, const Real& tol);

/// Common causal character of T over the grid; throws DegenerateInput if it changes.
CausalCharacter causal_character_of_curve(const Curve& curve, std::span<const Real> grid, const Real& tol);

/// Fixed-step RK4 for x' = T1, y' = T2, z' = 2 T3 - 2 T1 y + 2 T2 x.
SampledCurve integrate_frame_curve(const Curve& frame, const Point3& start, const Interval& range, const Real& step);

/// Reads `s,x,y,z` with a header row and strictly increasing s.
SampledCurve read_sampled_curve_csv(std::istream& in, std::string description = "csv");

}  // namespace hh3
