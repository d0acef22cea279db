#include "hh3/curves.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <utility>

#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

namespace hh3 {

TangentJet tangent_jet_from_coordinates(const CoordinateJet& p) {
  TangentJet out;
  for (int k = 0; k <= 3; ++k) {
    Real t3 = p[k + 1].z / 2;
    for (int i = 0; i <= k; ++i) {
      const Real c = Real(binomial(k, i));
      t3 += c * (p[i + 1].x * p[k - i].y - p[k - i].x * p[i + 1].y);
    }
    out.d[k] = FrameVector{p[k + 1].x, p[k + 1].y, t3};
  }
  return out;
}

Real horizontality_form(const CoordinateJet& p) {
  return p[1].z + 2 * p[1].x * p[0].y - 2 * p[0].x * p[1].y;
}

std::vector<Real> make_grid(const Real& lo, const Real& hi, const Real& step) {
  if (!(step > 0)) throw RejectedInput("grid step must be positive");
  if (!(hi >= lo)) throw RejectedInput("grid range is empty");
  const Real count = (hi - lo) / step;
  const Real n = round(count);
  if (abs(count - n) > Real(1e-9) * (1 + n)) {
    throw RejectedInput("grid range is not a whole number of steps");
  }
  const auto steps = static_cast<long long>(n);
  std::vector<Real> grid;
  grid.reserve(static_cast<std::size_t>(steps + 1));
  for (long long i = 0; i <= steps; ++i) grid.push_back(lo + Real(i) * step);
  grid.back() = hi;
  return grid;
}

ClosedFormCurve::ClosedFormCurve(JetFunction f, std::string description)
    : f_(std::move(f)), description_(std::move(description)) {}

std::function<Point3(const Real&)> ClosedFormCurve::position_function() const {
  return [f = f_](const Real& s) { return f(s)[0]; };
}

FiniteDifferenceCurve::FiniteDifferenceCurve(PositionFunction f, FDConfig config, std::string description)
    : f_(std::move(f)), config_(config), description_(std::move(description)) {
  if (!(config_.h > 0)) throw RejectedInput("finite-difference step must be positive");
  if (config_.levels < 1 || config_.levels > 6) throw RejectedInput("Richardson levels must be in 1..6");
}

namespace {

// Central stencils on samples f(s + j*h), j = -2..2, stored at index j + 2.
CoordinateJet central(const std::array<Point3, 5>& f, const Real& h) {
  const Real h2 = h * h;
  const Real h3 = h2 * h;
  const Real h4 = h2 * h2;
  CoordinateJet d;
  d[0] = f[2];
  d[1] = (1 / (2 * h)) * (f[3] - f[1]);
  d[2] = (1 / h2) * (f[3] - Real(2) * f[2] + f[1]);
  d[3] = (1 / (2 * h3)) * (f[4] - Real(2) * f[3] + Real(2) * f[1] - f[0]);
  d[4] = (1 / h4) * (f[4] - Real(4) * f[3] + Real(6) * f[2] - Real(4) * f[1] + f[0]);
  return d;
}

}  // namespace

CoordinateJet FiniteDifferenceCurve::coordinate_jet(const Real& s) const {
  const Real& h = config_.h;
  const int levels = config_.richardson ? config_.levels : 1;
  const int span = 1 << (levels - 1);  // finest step is h / span
  const Real q = h / span;
  std::vector<Point3> f(4 * span + 1);
  for (int j = -2 * span; j <= 2 * span; ++j) f[j + 2 * span] = f_(s + Real(j) * q);

  // table[i] holds the estimate from step h / 2^i, extrapolated in place.
  std::vector<CoordinateJet> table(levels);
  for (int i = 0; i < levels; ++i) {
    const int stride = span >> i;
    std::array<Point3, 5> g;
    for (int j = -2; j <= 2; ++j) g[j + 2] = f[2 * span + j * stride];
    table[i] = central(g, h / (1 << i));
  }
  Real factor = 1;
  for (int k = 1; k < levels; ++k) {
    factor *= 4;
    for (int i = levels - 1; i >= k; --i)
      for (int m = 1; m <= 4; ++m) table[i][m] = table[i][m] + (1 / (factor - 1)) * (table[i][m] - table[i - 1][m]);
  }
  return table[levels - 1];
}

SampledCurve::SampledCurve(std::vector<Real> s, std::vector<Point3> points, std::string description)
    : s_(std::move(s)), points_(std::move(points)), description_(std::move(description)) {
  if (s_.size() != points_.size()) throw RejectedInput("sample count mismatch");
  if (s_.size() < 5) throw RejectedInput("a sampled curve needs at least 5 samples");
  for (std::size_t i = 1; i < s_.size(); ++i) {
    if (!(s_[i] > s_[i - 1])) throw RejectedInput("sample parameters must be strictly increasing");
  }
}

namespace {

// Fornberg's recursion: weights[m][j] approximates the m-th derivative at z
// from values at nodes[j].
template <std::size_t M>
std::array<std::vector<Real>, M + 1> fornberg_weights(std::span<const Real> nodes, const Real& z) {
  const std::size_t n = nodes.size();
  std::array<std::vector<Real>, M + 1> c;
  for (auto& row : c) row.assign(n, Real(0));
  Real c1 = 1;
  Real c4 = nodes[0] - z;
  c[0][0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, M);
    Real c2 = 1;
    const Real c5 = c4;
    c4 = nodes[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const Real c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[k][i] = c1 * (Real(k) * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[k][j] = (c4 * c[k][j] - Real(k) * c[k - 1][j]) / c3;
      }
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

}  // namespace

CoordinateJet SampledCurve::coordinate_jet(const Real& s) const {
  const Real span = s_.back() - s_.front();
  const Real slack = Real(1e-12) * (1 + abs(span));
  if (s < s_.front() - slack || s > s_.back() + slack) {
    throw RejectedInput("parameter outside the sampled range");
  }
  const std::size_t window = std::min<std::size_t>(7, s_.size());
  const auto it = std::lower_bound(s_.begin(), s_.end(), s);
  const auto idx = static_cast<std::ptrdiff_t>(it - s_.begin());
  const std::ptrdiff_t last_start = static_cast<std::ptrdiff_t>(s_.size() - window);
  const std::ptrdiff_t start = std::clamp<std::ptrdiff_t>(idx - static_cast<std::ptrdiff_t>(window / 2), 0, last_start);

  std::vector<Real> local(window);
  for (std::size_t j = 0; j < window; ++j) local[j] = s_[static_cast<std::size_t>(start) + j] - s;
  const auto w = fornberg_weights<4>(local, Real(0));

  CoordinateJet out;
  for (int m = 0; m <= 4; ++m) {
    Point3 acc;
    for (std::size_t j = 0; j < window; ++j) acc = acc + w[m][j] * points_[static_cast<std::size_t>(start) + j];
    out[m] = acc;
  }
  return out;
}

FrameCurve::FrameCurve(JetFunction f, std::string description)
    : f_(std::move(f)), description_(std::move(description)) {}

FrameVector tangent_frame_components(const Curve& curve, const Real& s) { return curve.tangent_jet(s).tangent(); }

bool is_horizontal(const Curve& curve, std::span<const Real> grid, const Real& tol) {
  if (grid.empty()) throw RejectedInput("grid is empty");
  return std::all_of(grid.begin(), grid.end(),
                     [&](const Real& s) { return abs(tangent_frame_components(curve, s).u3) <= tol; });
}

CausalCharacter causal_character_of_curve(const Curve& curve, std::span<const Real> grid, const Real& tol) {
  if (grid.empty()) throw RejectedInput("grid is empty");
  const CausalCharacter first = causal_character(tangent_frame_components(curve, grid.front()), tol);
  for (const Real& s : grid.subspan(1)) {
    if (causal_character(tangent_frame_components(curve, s), tol) != first) {
      throw DegenerateInput("causal character changes along the curve");
    }
  }
  return first;
}

SampledCurve integrate_frame_curve(const Curve& frame, const Point3& start, const Interval& range, const Real& step) {
  if (!(range.hi > range.lo)) throw RejectedInput("integration range is empty");
  const std::vector<Real> grid = make_grid(range.lo, range.hi, step);

  using State = std::array<Real, 3>;
  boost::numeric::odeint::runge_kutta4<State, Real, State, Real> stepper;
  const auto rhs = [&frame](const State& p, State& dp, const Real& s) {
    const FrameVector t = tangent_frame_components(frame, s);
    dp[0] = t.u1;
    dp[1] = t.u2;
    dp[2] = 2 * t.u3 - 2 * t.u1 * p[1] + 2 * t.u2 * p[0];
  };

  State state{start.x, start.y, start.z};
  std::vector<Point3> points;
  points.reserve(grid.size());
  points.push_back(start);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    stepper.do_step(rhs, state, grid[i - 1], grid[i] - grid[i - 1]);
    points.push_back({state[0], state[1], state[2]});
  }
  return SampledCurve(grid, std::move(points), "integrated " + frame.describe());
}

namespace {

std::string trim(std::string_view v) {
  const auto b = v.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = v.find_last_not_of(" \t\r");
  return std::string(v.substr(b, e - b + 1));
}

Real parse_real(const std::string& field, std::size_t line) {
  const std::string f = trim(field);
  try {
    std::size_t used = 0;
    (void)std::stold(f, &used);
    if (used != f.size()) throw std::invalid_argument(f);
    Real v(f);
    using std::isfinite;
    if (!isfinite(v)) throw std::invalid_argument(f);
    return v;
  } catch (const std::exception&) {
    throw RejectedInput("line " + std::to_string(line) + ": not a finite number: '" + f + "'");
  }
}

}  // namespace

SampledCurve read_sampled_curve_csv(std::istream& in, std::string description) {
  std::string line;
  if (!std::getline(in, line)) throw RejectedInput("empty curve file");
  std::string header;
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') header.push_back(c);
  }
  if (header != "s,x,y,z") throw RejectedInput("expected header 's,x,y,z', got '" + trim(line) + "'");

  std::vector<Real> s;
  std::vector<Point3> pts;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4) {
      throw RejectedInput("line " + std::to_string(lineno) + ": expected 4 columns");
    }
    const Real si = parse_real(fields[0], lineno);
    if (!s.empty() && !(si > s.back())) {
      throw RejectedInput("line " + std::to_string(lineno) + ": s is not strictly increasing");
    }
    s.push_back(si);
    pts.push_back({parse_real(fields[1], lineno), parse_real(fields[2], lineno), parse_real(fields[3], lineno)});
  }
  return SampledCurve(std::move(s), std::move(pts), std::move(description));
}

}  // namespace hh3
