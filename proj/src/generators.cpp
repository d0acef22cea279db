#include "hh3/generators.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <sstream>

#include "hh3/errors.hpp"

namespace hh3 {

namespace {

std::string fmt(const Real& x) {
  std::ostringstream os;
  os.precision(17);
  os << to_double(x);
  return os.str();
}

// Value and first three derivatives of a scalar function of s.
using Scalar3 = std::array<Real, 4>;

Scalar3 mul(const Scalar3& a, const Scalar3& b) {
  Scalar3 r{};
  for (int n = 0; n < 4; ++n)
    for (int i = 0; i <= n; ++i) r[n] += Real(binomial(n, i)) * a[i] * b[n - i];
  return r;
}

// f(u) for f in {sinh, cosh}; `same` is f, `other` is f'.
Scalar3 compose(const Real& same, const Real& other, const Scalar3& u) {
  const Real& u1 = u[1];
  const Real& u2 = u[2];
  const Real& u3 = u[3];
  return {same, other * u1, same * u1 * u1 + other * u2, other * u1 * u1 * u1 + 3 * same * u1 * u2 + other * u3};
}

Scalar3 sinh_of(const Scalar3& u) { return compose(sinh(u[0]), cosh(u[0]), u); }
Scalar3 cosh_of(const Scalar3& u) { return compose(cosh(u[0]), sinh(u[0]), u); }

TangentJet jet_from_components(const Scalar3& t1, const Scalar3& t2, const Scalar3& t3) {
  TangentJet j;
  for (int n = 0; n < 4; ++n) j.d[n] = FrameVector(t1[n], t2[n], t3[n]);
  j.order = 3;
  return j;
}

Real slope_or_throw(FamilyKind kind, const Real& shape, Branch branch, SlopeMode mode) {
  const SlopePair p = mode == SlopeMode::Quadratic ? solve_slope(kind, shape) : printed_slope(kind, shape);
  return p.pick(branch);
}

std::string branch_name(Branch b) { return b == Branch::Plus ? "+" : "-"; }

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::SpacelikeBiharmonic: return "spacelike";
    case FamilyKind::TimelikeBiharmonic: return "timelike";
    case FamilyKind::SpacelikeHorizontal: return "spacelike-horizontal";
    case FamilyKind::B3ZeroSpacelike: return "b3zero-spacelike";
    case FamilyKind::B3ZeroTimelike: return "b3zero-timelike";
    case FamilyKind::TimelikeHorizontalHelix: return "timelike-horizontal";
    case FamilyKind::Geodesic: return "geodesic";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (FamilyKind k : {FamilyKind::SpacelikeBiharmonic, FamilyKind::TimelikeBiharmonic, FamilyKind::SpacelikeHorizontal,
                       FamilyKind::B3ZeroSpacelike, FamilyKind::B3ZeroTimelike, FamilyKind::TimelikeHorizontalHelix,
                       FamilyKind::Geodesic}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

SlopePair solve_slope(FamilyKind kind, const Real& shape) {
  switch (kind) {
    case FamilyKind::SpacelikeBiharmonic: {
      const Real sh = sinh(shape);
      const Real root = sqrt(5 * sh * sh + 4);
      return {sh + root, sh - root};
    }
    case FamilyKind::TimelikeBiharmonic: {
      const Real ch = cosh(shape);
      const Real root = sqrt(5 * ch * ch - 4);
      return {ch + root, ch - root};
    }
    case FamilyKind::SpacelikeHorizontal: return {Real(2), Real(-2)};
    default: throw RejectedInput("family '" + std::string(to_string(kind)) + "' has no slope equation");
  }
}

SlopePair printed_slope(FamilyKind kind, const Real& shape) {
  switch (kind) {
    case FamilyKind::SpacelikeBiharmonic: {
      const Real sh = sinh(shape);
      const Real root = sqrt(5 * sh * sh + 1);
      return {sh + root, sh - root};
    }
    case FamilyKind::TimelikeBiharmonic: {
      const Real ch = cosh(shape);
      const Real root = sqrt(5 * ch * ch - 1);
      return {ch + root, ch - root};
    }
    case FamilyKind::SpacelikeHorizontal: return {Real(1), Real(-1)};
    default: throw RejectedInput("family '" + std::string(to_string(kind)) + "' has no slope equation");
  }
}

Real slope_quadratic(FamilyKind kind, const Real& shape, const Real& a) {
  switch (kind) {
    case FamilyKind::SpacelikeBiharmonic: {
      const Real sh = sinh(shape);
      return a * a - 2 * a * sh - 4 - 4 * sh * sh;
    }
    case FamilyKind::TimelikeBiharmonic: {
      const Real ch = cosh(shape);
      return a * a - 2 * a * ch + 4 - 4 * ch * ch;
    }
    case FamilyKind::SpacelikeHorizontal: return a * a - 4;
    default: throw RejectedInput("family '" + std::string(to_string(kind)) + "' has no slope equation");
  }
}

ClosedFormCurve make_lemma_helix(const Real& amp, const Real& vertical, const Real& slope, const Real& b,
                                 const std::array<Real, 3>& c, std::string description) {
  if (!isfinite(amp) || !isfinite(vertical) || !isfinite(slope) || !isfinite(b)) {
    throw RejectedInput("helix parameters must be finite");
  }
  for (const Real& ci : c)
    if (!isfinite(ci)) throw RejectedInput("integration constants must be finite");
  if (slope == 0) throw RejectedInput("slope must be non-zero");

  const Real r = amp / slope;
  const Real lin = 2 * (vertical - amp * r);
  const Real zc = 2 * c[0] * r;
  const Real zs = -2 * c[1] * r;
  return ClosedFormCurve(
      [=](const Real& s) {
        const Real beta = slope * s + b;
        const Real sh = sinh(beta), ch = cosh(beta);
        CoordinateJet j{};
        j[0] = {r * sh + c[0], r * ch + c[1], lin * s + zc * ch + zs * sh + c[2]};
        Real ak = 1;
        for (int k = 1; k <= 4; ++k) {
          ak *= slope;
          const bool even = k % 2 == 0;
          const Real& d_sh = even ? sh : ch;  // k-th derivative of sinh / slope^k
          const Real& d_ch = even ? ch : sh;
          j[k] = {r * ak * d_sh, r * ak * d_ch, zc * ak * d_ch + zs * ak * d_sh + (k == 1 ? lin : Real(0))};
        }
        return j;
      },
      std::move(description));
}

ClosedFormCurve make_spacelike_helix(const Real& alpha0, const Real& slope, const Real& b,
                                     const std::array<Real, 3>& c) {
  return make_lemma_helix(cosh(alpha0), sinh(alpha0), slope, b, c,
                          "spacelike helix alpha0=" + fmt(alpha0) + " a=" + fmt(slope) + " b=" + fmt(b));
}

ClosedFormCurve make_timelike_helix(const Real& nu0, const Real& slope, const Real& b, const std::array<Real, 3>& d) {
  if (nu0 == 0) throw GeodesicDegenerate("nu0 = 0 gives T = e3, a geodesic");
  return make_lemma_helix(sinh(nu0), cosh(nu0), slope, b, d,
                          "timelike helix nu0=" + fmt(nu0) + " a=" + fmt(slope) + " b=" + fmt(b));
}

ClosedFormCurve make_spacelike_biharmonic(const Real& alpha0, Branch branch, const Real& b,
                                          const std::array<Real, 3>& c, SlopeMode mode) {
  const Real a = slope_or_throw(FamilyKind::SpacelikeBiharmonic, alpha0, branch, mode);
  return make_lemma_helix(cosh(alpha0), sinh(alpha0), a, b, c,
                          "spacelike biharmonic alpha0=" + fmt(alpha0) + " branch=" + branch_name(branch) +
                              " b=" + fmt(b) + (mode == SlopeMode::AsPrinted ? " (printed slope)" : ""));
}

ClosedFormCurve make_timelike_biharmonic(const Real& nu0, Branch branch, const Real& b, const std::array<Real, 3>& d,
                                         SlopeMode mode) {
  if (nu0 == 0) throw GeodesicDegenerate("nu0 = 0 gives T = e3, a geodesic");
  const Real a = slope_or_throw(FamilyKind::TimelikeBiharmonic, nu0, branch, mode);
  return make_lemma_helix(sinh(nu0), cosh(nu0), a, b, d,
                          "timelike biharmonic nu0=" + fmt(nu0) + " branch=" + branch_name(branch) + " b=" + fmt(b) +
                              (mode == SlopeMode::AsPrinted ? " (printed slope)" : ""));
}

ClosedFormCurve make_spacelike_horizontal(Branch branch, const Real& b, const std::array<Real, 3>& c,
                                          SlopeMode mode) {
  const Real a = slope_or_throw(FamilyKind::SpacelikeHorizontal, Real(0), branch, mode);
  return make_lemma_helix(Real(1), Real(0), a, b, c,
                          "spacelike horizontal a=" + fmt(a) + " b=" + fmt(b) +
                              (mode == SlopeMode::AsPrinted ? " (printed slope)" : ""));
}

Profile linear_profile(const Real& offset, const Real& rate) {
  return {[=](const Real& s) { return Scalar3{offset + rate * s, rate, Real(0), Real(0)}; },
          "alpha(s)=" + fmt(offset) + "+" + fmt(rate) + "s"};
}

Profile cubic_profile(const std::array<Real, 4>& c) {
  return {[=](const Real& s) {
            return Scalar3{c[0] + s * (c[1] + s * (c[2] + s * c[3])), c[1] + s * (2 * c[2] + 3 * c[3] * s),
                           2 * c[2] + 6 * c[3] * s, 6 * c[3]};
          },
          "cubic(" + fmt(c[0]) + "," + fmt(c[1]) + "," + fmt(c[2]) + "," + fmt(c[3]) + ")"};
}

Profile wavy_profile(const Real& offset, const Real& rate, const Real& amplitude, const Real& omega) {
  return {[=](const Real& s) {
            const Real sn = sin(omega * s), cs = cos(omega * s);
            const Real w2 = omega * omega;
            return Scalar3{offset + rate * s + amplitude * sn, rate + amplitude * omega * cs, -amplitude * w2 * sn,
                           -amplitude * w2 * omega * cs};
          },
          "alpha(s)=" + fmt(offset) + "+" + fmt(rate) + "s+" + fmt(amplitude) + "sin(" + fmt(omega) + "s)"};
}

FrameCurve make_b3zero_curve(FamilyKind kind, Profile alpha, const Interval& range) {
  if (kind != FamilyKind::B3ZeroSpacelike && kind != FamilyKind::B3ZeroTimelike) {
    throw RejectedInput("make_b3zero_curve needs a B3-zero family");
  }
  if (!(range.lo < range.hi)) throw RejectedInput("profile range must satisfy lo < hi");
  if (!alpha.jet) throw RejectedInput("profile is empty");

  constexpr int kSamples = 201;
  Real max_rate = 0, min_rate = -1;
  for (int i = 0; i < kSamples; ++i) {
    const Real s = range.lo + (range.hi - range.lo) * Real(i) / Real(kSamples - 1);
    const Scalar3 a = alpha.jet(s);
    for (const Real& v : a)
      if (!isfinite(v)) throw RejectedInput("profile is not finite on the range");
    const Real r = abs(a[1]);
    max_rate = std::max(max_rate, r);
    min_rate = min_rate < 0 ? r : std::min(min_rate, r);
  }
  if (max_rate <= Real(1e-12)) throw GeodesicDegenerate("alpha' vanishes identically: the curve is a geodesic");
  if (min_rate <= Real(1e-9)) throw RejectedInput("alpha' vanishes on the range: the Frenet frame degenerates there");

  const bool spacelike = kind == FamilyKind::B3ZeroSpacelike;
  const Real lo = range.lo;
  auto jet_fn = alpha.jet;
  Profile beta{[jet_fn, lo, spacelike](const Real& s) {
                 auto integrand = [&](const Real& u) {
                   const Real au = jet_fn(u)[0];
                   return 2 * (spacelike ? sinh(au) : cosh(au));
                 };
                 // Gauss-Legendre panels of width <= 1/4, 30 nodes each.
                 Real value = 0;
                 const int panels = static_cast<int>(ceil(abs(s - lo) * 4).convert_to<long long>());
                 for (int i = 0; i < panels; ++i) {
                   const Real u0 = lo + (s - lo) * Real(i) / panels;
                   const Real u1 = lo + (s - lo) * Real(i + 1) / panels;
                   value += boost::math::quadrature::gauss<Real, 30>::integrate(integrand, u0, u1);
                 }
                 // β' = 2 sinh α (spacelike) or 2 cosh α (timelike).
                 const Scalar3 a = jet_fn(s);
                 const Scalar3 drive = spacelike ? sinh_of(a) : cosh_of(a);
                 return Scalar3{value, 2 * drive[0], 2 * drive[1], 2 * drive[2]};
               },
               "beta by quadrature"};
  FrameCurve angle = make_angle_curve(spacelike, std::move(alpha), std::move(beta));
  return FrameCurve([angle](const Real& s) { return angle.tangent_jet(s); },
                    std::string(spacelike ? "spacelike" : "timelike") + " B3=0 curve, " + angle.describe());
}

FrameCurve make_angle_curve(bool spacelike, Profile alpha, Profile beta) {
  if (!alpha.jet || !beta.jet) throw RejectedInput("profile is empty");
  std::string description = alpha.description + ", beta: " + beta.description;
  return FrameCurve(
      [spacelike, a_fn = std::move(alpha.jet), b_fn = std::move(beta.jet)](const Real& s) {
        const Scalar3 a = a_fn(s), b = b_fn(s);
        const Scalar3 sa = sinh_of(a), ca = cosh_of(a);
        const Scalar3 cb = cosh_of(b), sb = sinh_of(b);
        const Scalar3& amp = spacelike ? ca : sa;
        const Scalar3& vertical = spacelike ? sa : ca;
        return jet_from_components(mul(amp, cb), mul(amp, sb), vertical);
      },
      std::move(description));
}

FrameCurve make_timelike_horizontal_helix(const Real& m) {
  if (!isfinite(m)) throw RejectedInput("m must be finite");
  if (m == 0) throw GeodesicDegenerate("m = 0 gives T = e2, a geodesic");
  return FrameCurve(
      [m](const Real& s) {
        const Real sh = sinh(m * s), ch = cosh(m * s);
        TangentJet j;
        Real mk = 1;
        for (int k = 0; k < 4; ++k) {
          const bool even = k % 2 == 0;
          j.d[k] = FrameVector(mk * (even ? sh : ch), mk * (even ? ch : sh), Real(0));
          mk *= m;
        }
        return j;
      },
      "timelike horizontal helix m=" + fmt(m));
}

ClosedFormCurve make_geodesic(int axis) {
  if (axis < 1 || axis > 3) throw RejectedInput("geodesic axis must be 1, 2 or 3");
  const Point3 v = axis == 1 ? Point3{1, 0, 0} : axis == 2 ? Point3{0, 1, 0} : Point3{0, 0, 2};
  return ClosedFormCurve(
      [v](const Real& s) {
        CoordinateJet j{};
        j[0] = s * v;
        j[1] = v;
        return j;
      },
      "geodesic along e" + std::to_string(axis));
}

std::unique_ptr<Curve> make_family(const FamilyParams& p) {
  switch (p.kind) {
    case FamilyKind::SpacelikeBiharmonic:
      return std::make_unique<ClosedFormCurve>(make_spacelike_biharmonic(p.shape, p.branch, p.phase, p.constants, p.mode));
    case FamilyKind::TimelikeBiharmonic:
      return std::make_unique<ClosedFormCurve>(make_timelike_biharmonic(p.shape, p.branch, p.phase, p.constants, p.mode));
    case FamilyKind::SpacelikeHorizontal:
      return std::make_unique<ClosedFormCurve>(make_spacelike_horizontal(p.branch, p.phase, p.constants, p.mode));
    case FamilyKind::B3ZeroSpacelike:
    case FamilyKind::B3ZeroTimelike:
      return std::make_unique<FrameCurve>(make_b3zero_curve(
          p.kind, wavy_profile(p.profile_offset, p.profile_rate, p.profile_amplitude, p.profile_omega), p.range));
    case FamilyKind::TimelikeHorizontalHelix:
      return std::make_unique<FrameCurve>(make_timelike_horizontal_helix(p.shape));
    case FamilyKind::Geodesic: return std::make_unique<ClosedFormCurve>(make_geodesic(p.axis));
  }
  throw RejectedInput("unknown family");
}

}  // namespace hh3
