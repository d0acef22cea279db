#include "hh3/frenet.hpp"

#include <algorithm>

namespace hh3 {

namespace {

int sign_of(const Real& x) { return x > 0 ? 1 : -1; }

Real euclidean_sq(const FrameVector& v) { return v.u1 * v.u1 + v.u2 * v.u2 + v.u3 * v.u3; }

struct FrameJets {
  FrenetData data;
  Jet<3> N{};
  Jet<2> B{};
  Jet<2> DN{};
  Jet<3> A{};
};

FrameJets frame_jets(const TangentJet& jet, const FrenetOptions& options) {
  if (jet.order < 3) throw RejectedInput("the Frenet apparatus needs the tangent to third order");
  const Jet<4>& t = jet.d;

  FrameJets out;
  FrenetData& f = out.data;
  f.T = t[0];

  const Real tt = inner(t[0], t[0]);
  if (abs(abs(tt) - 1) > options.unit_speed_tol * (1 + euclidean_sq(t[0]))) {
    throw RejectedInput("curve is not parametrized by arclength (|g(T,T)| != 1)");
  }
  f.eps1 = sign_of(tt);

  // ∇_T T and two of its derivatives.
  out.A = covariant_jet(t, t);
  const Jet<3>& a = out.A;
  if (sqrt(euclidean_sq(a[0])) <= options.tol) throw GeodesicDegenerate("∇_T T vanishes (geodesic point)");
  const Real q = inner(a[0], a[0]);
  f.k1 = sqrt(abs(q));
  if (f.k1 <= options.tol) throw NullNormalDegenerate("∇_T T is a non-zero null vector");
  f.eps2 = sign_of(q);

  // k1^2 = ε2 g(A, A), differentiated twice.
  const Real e2 = Real(f.eps2);
  const Real dq = 2 * inner(a[0], a[1]);
  const Real d2q = 2 * (inner(a[1], a[1]) + inner(a[0], a[2]));
  f.dk1 = e2 * dq / (2 * f.k1);
  f.d2k1 = (e2 * d2q / 2 - f.dk1 * f.dk1) / f.k1;

  // N = ε2 A / k1.
  const Real k = f.k1;
  const std::array<Real, 3> r{1 / k, -f.dk1 / (k * k), -f.d2k1 / (k * k) + 2 * f.dk1 * f.dk1 / (k * k * k)};
  for (int n = 0; n < 3; ++n) {
    FrameVector sum{0, 0, 0};
    for (int i = 0; i <= n; ++i) sum += Real(binomial(n, i)) * r[n - i] * a[i];
    out.N[n] = e2 * sum;
  }
  f.N = out.N[0];

  out.B = leibniz<2>(t, out.N, [](const FrameVector& x, const FrameVector& y) { return cross(x, y); });
  f.B = out.B[0];
  f.eps3 = sign_of(inner(f.B, f.B));
  if (f.eps1 * f.eps2 * f.eps3 != 1) throw Error("Frenet frame violates eps1*eps2*eps3 = +1");

  out.DN = covariant_jet(t, out.N);
  f.k2 = inner(out.DN[0], out.B[0]);
  f.dk2 = inner(out.DN[1], out.B[0]) + inner(out.DN[0], out.B[1]);
  return out;
}

}  // namespace

FrenetData compute_frenet(const TangentJet& jet, const FrenetOptions& options) {
  return frame_jets(jet, options).data;
}

FrenetData compute_frenet(const Curve& curve, const Real& s, const FrenetOptions& options) {
  FrenetData f = compute_frenet(curve.tangent_jet(s), options);
  f.s = s;
  return f;
}

ConstancyStats constancy(std::span<const Real> values) {
  ConstancyStats st;
  if (values.empty()) return st;
  Real sum = 0;
  for (const Real& v : values) sum += v;
  st.mean = sum / Real(values.size());
  for (const Real& v : values) st.max_deviation = std::max(st.max_deviation, Real(abs(v - st.mean)));
  return st;
}

FrenetGrid frenet_over_grid(const Curve& curve, std::span<const Real> grid, const FrenetOptions& options) {
  FrenetGrid out;
  out.points.reserve(grid.size());
  for (const Real& s : grid) out.points.push_back(compute_frenet(curve, s, options));

  std::vector<Real> k1, k2, n3, b3;
  for (const FrenetData& f : out.points) {
    k1.push_back(f.k1);
    k2.push_back(f.k2);
    n3.push_back(f.N3());
    b3.push_back(f.B3());
  }
  out.k1 = constancy(k1);
  out.k2 = constancy(k2);
  out.N3 = constancy(n3);
  out.B3 = constancy(b3);
  return out;
}

Real FrenetClosure::max() const { return std::max({tangent, normal, binormal}); }

FrenetClosure frenet_closure(const TangentJet& jet, const FrenetOptions& options) {
  const FrameJets j = frame_jets(jet, options);
  const FrenetData& f = j.data;
  const Real e1 = Real(f.eps1), e2 = Real(f.eps2), e3 = Real(f.eps3);

  const Jet<1> db = covariant_jet(jet.d, j.B);
  FrenetClosure c;
  c.tangent = euclidean_norm(j.A[0] - f.k1 * e2 * f.N);
  c.normal = euclidean_norm(j.DN[0] - (-f.k1 * e1 * f.T + f.k2 * e3 * f.B));
  c.binormal = euclidean_norm(db[0] - (-f.k2 * e2 * f.N));
  return c;
}

}  // namespace hh3
