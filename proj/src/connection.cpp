#include "hh3/connection.hpp"

namespace hh3 {

namespace {

IntFrameVector apply(const ConnectionTable& connection, int i, const IntFrameVector& v) {
  return contract(connection, basis<long long>(i), v);
}

long long signed_inner(const Signature& sig, const IntFrameVector& x, const IntFrameVector& y) {
  return sig.s1 * x.u1 * y.u1 + sig.s2 * x.u2 * y.u2 + sig.s3 * x.u3 * y.u3;
}

// Affine coordinate field v(p) = a + M p on R^3.
struct AffineField {
  std::array<long long, 3> a;
  std::array<std::array<long long, 3>, 3> m;
};

// e1 = ∂x - 2y ∂z, e2 = ∂y + 2x ∂z, e3 = 2 ∂z.
constexpr std::array<AffineField, 3> kFrameFields{{
    {{1, 0, 0}, {{{0, 0, 0}, {0, 0, 0}, {0, -2, 0}}}},
    {{0, 1, 0}, {{{0, 0, 0}, {0, 0, 0}, {2, 0, 0}}}},
    {{0, 0, 2}, {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}},
}};

}  // namespace

BracketTable brackets_from_coordinates() {
  BracketTable out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const AffineField& x = kFrameFields[i];
      const AffineField& y = kFrameFields[j];
      // [X, Y] at the origin: (DY) X - (DX) Y. Left-invariant, so this fixes it everywhere.
      std::array<long long, 3> v{};
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) v[r] += y.m[r][c] * x.a[c] - x.m[r][c] * y.a[c];
      // At the origin e1 = ∂x, e2 = ∂y, e3 = 2 ∂z.
      if (v[2] % 2 != 0) throw Error("bracket is not an integer combination of the frame");
      out[i][j] = {v[0], v[1], v[2] / 2};
    }
  }
  return out;
}

CurvatureTable curvature_from_connection(const ConnectionTable& connection, const BracketTable& brackets) {
  CurvatureTable r{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const IntFrameVector first = apply(connection, a, connection[b][c]);
        const IntFrameVector second = apply(connection, b, connection[a][c]);
        const IntFrameVector third = contract(connection, brackets[a][b], basis<long long>(c));
        r[a][b][c] = first - second - third;
      }
    }
  }
  return r;
}

bool is_metric_compatible(const ConnectionTable& connection, const Signature& signature) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const long long lhs = signed_inner(signature, connection[i][j], basis<long long>(k)) +
                              signed_inner(signature, basis<long long>(j), connection[i][k]);
        if (lhs != 0) return false;
      }
    }
  }
  return true;
}

bool is_torsion_free(const ConnectionTable& connection, const BracketTable& brackets) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (connection[i][j] - connection[j][i] != brackets[i][j]) return false;
    }
  }
  return true;
}

std::vector<Signature> compatible_signatures(const ConnectionTable& connection) {
  std::vector<Signature> out;
  for (int s2 : {1, -1}) {
    for (int s3 : {1, -1}) {
      const Signature sig{1, s2, s3};
      if (is_metric_compatible(connection, sig)) out.push_back(sig);
    }
  }
  return out;
}

}  // namespace hh3
