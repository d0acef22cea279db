#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hh3/frame_algebra.hpp"

namespace hh3 {

// table[i][j] holds the frame value of ∇_{e_i} e_j (or [e_i, e_j] for brackets).
template <class S>
using FrameTable = std::array<std::array<BasicFrameVector<S>, 3>, 3>;

using ConnectionTable = FrameTable<long long>;
using BracketTable = FrameTable<long long>;

// R[a][b][c] = R(e_a, e_b) e_c.
using CurvatureTable = std::array<std::array<std::array<IntFrameVector, 3>, 3>, 3>;

constexpr ConnectionTable standard_connection() {
  const IntFrameVector zero{0, 0, 0};
  const IntFrameVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  return {{
      {zero, e3, -e2},
      {-e3, zero, -e1},
      {-e2, -e1, zero},
  }};
}

constexpr BracketTable standard_brackets() {
  const IntFrameVector zero{0, 0, 0};
  const IntFrameVector two_e3{0, 0, 2};
  return {{
      {zero, two_e3, zero},
      {-two_e3, zero, zero},
      {zero, zero, zero},
  }};
}

/// The six published non-zero values, completed by antisymmetry in (a, b).
constexpr CurvatureTable standard_curvature() {
  CurvatureTable r{};
  auto set = [&r](int a, int b, int c, IntFrameVector v) {
    r[a][b][c] = v;
    r[b][a][c] = -v;
  };
  set(0, 1, 0, {0, 3, 0});
  set(0, 1, 1, {3, 0, 0});
  set(0, 2, 0, {0, 0, -1});
  set(0, 2, 2, {-1, 0, 0});
  set(1, 2, 1, {0, 0, 1});
  set(1, 2, 2, {0, -1, 0});
  return r;
}

/// Σ X_i Y_j table[i][j]: ∇_X Y for constant-coefficient fields X, Y.
template <class S>
constexpr BasicFrameVector<S> contract(const ConnectionTable& table, const BasicFrameVector<S>& x,
                                       const BasicFrameVector<S>& y) {
  BasicFrameVector<S> out{S(0), S(0), S(0)};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const S w = x[i] * y[j];
      const IntFrameVector& g = table[i][j];
      out.u1 += w * S(g.u1);
      out.u2 += w * S(g.u2);
      out.u3 += w * S(g.u3);
    }
  }
  return out;
}

/// Closed form of contract(standard_connection(), x, y).
template <class S>
constexpr BasicFrameVector<S> levi_civita(const BasicFrameVector<S>& x, const BasicFrameVector<S>& y) {
  return {-x.u2 * y.u3 - x.u3 * y.u2, -x.u1 * y.u3 - x.u3 * y.u1, x.u1 * y.u2 - x.u2 * y.u1};
}

/// ∇_T V along a curve with unit tangent T, given the componentwise derivative V'.
template <class S>
constexpr BasicFrameVector<S> covariant_derivative_along(const BasicFrameVector<S>& t, const BasicFrameVector<S>& v,
                                                         const BasicFrameVector<S>& v_prime) {
  return v_prime + levi_civita(t, v);
}

/// R(X, Y) Z, the trilinear extension of standard_curvature().
template <class S>
BasicFrameVector<S> curvature(const BasicFrameVector<S>& x, const BasicFrameVector<S>& y,
                              const BasicFrameVector<S>& z) {
  static constexpr CurvatureTable r = standard_curvature();
  BasicFrameVector<S> out{S(0), S(0), S(0)};
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const S w = x[a] * y[b] - x[b] * y[a];
      for (int c = 0; c < 3; ++c) {
        const IntFrameVector& v = r[a][b][c];
        if (v == IntFrameVector{0, 0, 0}) continue;
        const S wc = w * z[c];
        out.u1 += wc * S(v.u1);
        out.u2 += wc * S(v.u2);
        out.u3 += wc * S(v.u3);
      }
    }
  }
  return out;
}

/// R(X, Y, Z, W) = g(R(X, Y) Z, W).
template <class S>
S riemann_christoffel(const BasicFrameVector<S>& x, const BasicFrameVector<S>& y, const BasicFrameVector<S>& z,
                      const BasicFrameVector<S>& w) {
  return inner(curvature(x, y, z), w);
}

/// [e_i, e_j] recomputed from the coordinate expressions of the frame fields.
BracketTable brackets_from_coordinates();

/// Brute-force R(e_a, e_b) e_c = ∇_a ∇_b e_c - ∇_b ∇_a e_c - ∇_[e_a, e_b] e_c.
CurvatureTable curvature_from_connection(const ConnectionTable& connection = standard_connection(),
                                         const BracketTable& brackets = standard_brackets());

bool is_metric_compatible(const ConnectionTable& connection, const Signature& signature = kSignature);
bool is_torsion_free(const ConnectionTable& connection, const BracketTable& brackets = standard_brackets());

/// Every diagonal signature with g(e1, e1) = +1 for which the table is metric compatible.
std::vector<Signature> compatible_signatures(const ConnectionTable& connection = standard_connection());

// -- Covariant derivatives of jets -------------------------------------------
//
// A jet holds a vector field along the curve and its s-derivatives:
// jet[k] = d^k V / ds^k.

template <std::size_t N>
using Jet = std::array<FrameVector, N>;

constexpr long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Bilinear Leibniz rule: derivatives 0..M-1 of f(a, b).
template <std::size_t M, std::size_t NA, std::size_t NB, class F>
Jet<M> leibniz(const Jet<NA>& a, const Jet<NB>& b, F f) {
  static_assert(NA >= M && NB >= M);
  Jet<M> out{};
  for (std::size_t n = 0; n < M; ++n) {
    FrameVector sum{0, 0, 0};
    for (std::size_t i = 0; i <= n; ++i) {
      sum += Real(binomial(static_cast<int>(n), static_cast<int>(i))) * f(a[i], b[n - i]);
    }
    out[n] = sum;
  }
  return out;
}

/// Jet of ∇_T V: loses one derivative relative to the jet of V.
template <std::size_t NT, std::size_t NV>
Jet<NV - 1> covariant_jet(const Jet<NT>& t, const Jet<NV>& v) {
  static_assert(NV >= 2 && NT >= NV - 1);
  Jet<NV - 1> out = leibniz<NV - 1>(t, v, [](const FrameVector& x, const FrameVector& y) {
    return levi_civita(x, y);
  });
  for (std::size_t k = 0; k + 1 < NV; ++k) out[k] += v[k + 1];
  return out;
}

}  // namespace hh3
