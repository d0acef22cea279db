#include "hh3/biharmonic.hpp"

#include <algorithm>

namespace hh3 {

FrameVector bitension_direct(const TangentJet& jet) {
  if (jet.order < 3) throw RejectedInput("the bitension needs the tangent to third order");
  const Jet<4>& t = jet.d;
  const Jet<3> a1 = covariant_jet(t, t);
  const Jet<2> a2 = covariant_jet(t, a1);
  const Jet<1> a3 = covariant_jet(t, a2);
  return a3[0] - curvature(t[0], a1[0], t[0]);
}

FrameVector bitension_direct(const Curve& curve, const Real& s) { return bitension_direct(curve.tangent_jet(s)); }

BitensionCoefficients bitension_frenet_coefficients(const FrenetData& f, ExpansionForm form) {
  const Real e1 = Real(f.eps1), e2 = Real(f.eps2), e3 = Real(f.eps3);
  const Real& k1 = f.k1;
  const Real& k2 = f.k2;
  BitensionCoefficients c;
  c.tangent = -3 * k1 * f.dk1 * e1 * e2;
  c.normal = f.d2k1 * e2 - k1 * k1 * k1 * e1 - k1 * k2 * k2 * e3 + k1 * e3 + 4 * k1 * f.B3() * f.B3();
  const Real curvature_term = form == ExpansionForm::Corrected ? -4 * k1 * f.N3() * f.B3()
                                                               : -4 * k1 * e2 * e3 * f.N3() * f.B3();
  c.binormal = 2 * f.dk1 * k2 * e2 * e3 + k1 * f.dk2 * e2 * e3 + curvature_term;
  return c;
}

FrameVector bitension_frenet(const FrenetData& f, ExpansionForm form) {
  const BitensionCoefficients c = bitension_frenet_coefficients(f, form);
  return c.tangent * f.T + c.normal * f.N + c.binormal * f.B;
}

Real residual_norm(const FrameVector& v) { return euclidean_norm(v); }

ConditionValues check_biharmonic_conditions(std::span<const FrenetData> points, const Real& tol) {
  if (points.empty()) throw RejectedInput("no Frenet data to check");
  ConditionValues c;
  std::vector<Real> k1, k2;
  bool k2_zero = true;
  for (const FrenetData& f : points) {
    k1.push_back(f.k1);
    k2.push_back(f.k2);
    const Real e1 = Real(f.eps1), e3 = Real(f.eps3);
    const Real n3b3 = f.N3() * f.B3();
    const Real b3sq = f.B3() * f.B3();
    c.max_abs_n3b3 = std::max(c.max_abs_n3b3, Real(abs(n3b3)));
    c.max_helix_relation =
        std::max(c.max_helix_relation, Real(abs(f.k1 * f.k1 * e1 * e3 + f.k2 * f.k2 - 1 - 4 * e3 * b3sq)));
    c.max_binormal_relation =
        std::max(c.max_binormal_relation, Real(abs(2 * f.dk1 * f.k2 + f.k1 * f.dk2 - 4 * e1 * f.k1 * n3b3)));
    c.max_printed_third_relation = std::max(c.max_printed_third_relation, Real(abs(f.dk2 - n3b3)));
    if (abs(f.k2) > tol) k2_zero = false;
  }
  if (k2_zero) {
    Real worst = 0;
    for (const FrenetData& f : points) {
      const Real rhs = Real(f.eps1) * (Real(f.eps3) + 4 * f.B3() * f.B3());
      worst = std::max(worst, Real(abs(f.k1 * f.k1 - rhs)));
    }
    c.max_k2_zero_relation = worst;
  }
  c.k1 = constancy(k1);
  c.k2 = constancy(k2);
  c.k1_constant_nonzero = c.k1.max_deviation <= tol * (1 + abs(c.k1.mean)) && abs(c.k1.mean) > tol;
  c.k2_constant = c.k2.max_deviation <= tol * (1 + abs(c.k2.mean));
  c.satisfied = c.k1_constant_nonzero && c.k2_constant && c.max_abs_n3b3 <= tol && c.max_helix_relation <= tol;
  return c;
}

BiharmonicReport analyze_biharmonic(const Curve& curve, std::span<const Real> grid, const BiharmonicOptions& options) {
  if (grid.empty()) throw RejectedInput("grid is empty");
  BiharmonicReport r;
  r.s.assign(grid.begin(), grid.end());

  std::vector<TangentJet> jets;
  jets.reserve(grid.size());
  for (const Real& s : grid) {
    jets.push_back(curve.tangent_jet(s));
    const Real res = residual_norm(bitension_direct(jets.back()));
    r.residual_direct.push_back(res);
    r.max_residual_direct = std::max(r.max_residual_direct, res);
  }

  std::vector<FrenetData> frames;
  frames.reserve(grid.size());
  try {
    for (std::size_t i = 0; i < jets.size(); ++i) {
      frames.push_back(compute_frenet(jets[i], options.frenet));
      frames.back().s = grid[i];
    }
  } catch (const DegenerateInput&) {
    r.verdict = Verdict::Geodesic;
    return r;
  }

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Real res = residual_norm(bitension_frenet(frames[i]));
    r.residual_frenet.push_back(res);
    r.max_residual_frenet = std::max(r.max_residual_frenet, res);
  }
  r.conditions = check_biharmonic_conditions(frames, options.tol);
  r.verdict = (r.conditions->satisfied && r.max_residual_direct <= options.tol) ? Verdict::Biharmonic
                                                                                  : Verdict::NotBiharmonic;
  return r;
}

}  // namespace hh3
