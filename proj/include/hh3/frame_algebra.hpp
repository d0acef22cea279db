#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string_view>
#include <type_traits>

#include "hh3/errors.hpp"
#include "hh3/real.hpp"

namespace hh3 {

enum class CausalCharacter { Spacelike, Timelike, Null };

constexpr std::string_view to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Null: return "null";
  }
  return "?";
}

/// Signs of g(e_i, e_i) on the left-invariant frame.
struct Signature {
  int s1 = 1;
  int s2 = -1;
  int s3 = -1;

  constexpr int operator[](int i) const { return i == 0 ? s1 : (i == 1 ? s2 : s3); }
  friend constexpr bool operator==(const Signature&, const Signature&) = default;
};

// Forced by metric compatibility of the connection table, with g(e1,e1) = +1.
inline constexpr Signature kSignature{1, -1, -1};
static_assert(kSignature.s1 * kSignature.s2 * kSignature.s3 == 1);
static_assert(kSignature.s1 == -kSignature.s2 && kSignature.s1 == -kSignature.s3);

/// Components of a tangent vector in the frame {e1, e2, e3}.
///
/// Instantiated on Real for geometry and on integers for exact table checks.
/// Floating instantiations reject NaN and infinities at construction.
template <class S>
struct BasicFrameVector {
  S u1{};
  S u2{};
  S u3{};

  constexpr BasicFrameVector() = default;
  constexpr BasicFrameVector(S a, S b, S c) : u1(std::move(a)), u2(std::move(b)), u3(std::move(c)) {
    if constexpr (!std::numeric_limits<S>::is_integer) {
      using std::isfinite;
      if (!(isfinite(u1) && isfinite(u2) && isfinite(u3))) {
        throw RejectedInput("frame vector component is not finite");
      }
    }
  }

  constexpr const S& operator[](int i) const { return i == 0 ? u1 : (i == 1 ? u2 : u3); }
  constexpr S& operator[](int i) { return i == 0 ? u1 : (i == 1 ? u2 : u3); }

  template <class T>
  constexpr BasicFrameVector<T> as() const {
    return {static_cast<T>(u1), static_cast<T>(u2), static_cast<T>(u3)};
  }

  constexpr BasicFrameVector& operator+=(const BasicFrameVector& o) { return *this = *this + o; }
  constexpr BasicFrameVector& operator-=(const BasicFrameVector& o) { return *this = *this - o; }

  friend constexpr BasicFrameVector operator+(const BasicFrameVector& a, const BasicFrameVector& b) {
    return {a.u1 + b.u1, a.u2 + b.u2, a.u3 + b.u3};
  }
  friend constexpr BasicFrameVector operator-(const BasicFrameVector& a, const BasicFrameVector& b) {
    return {a.u1 - b.u1, a.u2 - b.u2, a.u3 - b.u3};
  }
  friend constexpr BasicFrameVector operator-(const BasicFrameVector& a) { return {-a.u1, -a.u2, -a.u3}; }
  friend constexpr BasicFrameVector operator*(const S& k, const BasicFrameVector& a) {
    return {k * a.u1, k * a.u2, k * a.u3};
  }
  friend constexpr BasicFrameVector operator*(const BasicFrameVector& a, const S& k) { return k * a; }
  friend constexpr BasicFrameVector operator/(const BasicFrameVector& a, const S& k) {
    return {a.u1 / k, a.u2 / k, a.u3 / k};
  }
  friend constexpr bool operator==(const BasicFrameVector& a, const BasicFrameVector& b) {
    return a.u1 == b.u1 && a.u2 == b.u2 && a.u3 == b.u3;
  }
};

using FrameVector = BasicFrameVector<Real>;
using IntFrameVector = BasicFrameVector<long long>;

/// e_{i+1} for i in 0..2.
template <class S>
constexpr BasicFrameVector<S> basis(int i) {
  return {S(i == 0 ? 1 : 0), S(i == 1 ? 1 : 0), S(i == 2 ? 1 : 0)};
}

/// g(X, Y) in the constant frame metric diag(+1, -1, -1).
template <class S>
constexpr S inner(const BasicFrameVector<S>& x, const BasicFrameVector<S>& y) {
  return S(kSignature.s1) * x.u1 * y.u1 + S(kSignature.s2) * x.u2 * y.u2 + S(kSignature.s3) * x.u3 * y.u3;
}

/// X ∧ Y = -(a2 b3 - a3 b2) e1 - (a1 b3 - a3 b1) e2 + (a1 b2 - a2 b1) e3.
template <class S>
constexpr BasicFrameVector<S> cross(const BasicFrameVector<S>& a, const BasicFrameVector<S>& b) {
  return {-(a.u2 * b.u3 - a.u3 * b.u2), -(a.u1 * b.u3 - a.u3 * b.u1), a.u1 * b.u2 - a.u2 * b.u1};
}

/// (X, Y, Z) = g(X ∧ Y, Z); equals minus the determinant of the component rows.
template <class S>
constexpr S mixed(const BasicFrameVector<S>& x, const BasicFrameVector<S>& y, const BasicFrameVector<S>& z) {
  return inner(cross(x, y), z);
}

template <class S>
S euclidean_norm(const BasicFrameVector<S>& x) {
  using std::sqrt;
  return sqrt(x.u1 * x.u1 + x.u2 * x.u2 + x.u3 * x.u3);
}

template <class S>
CausalCharacter causal_character(const BasicFrameVector<S>& x, const S& tol) {
  if (tol < S(0)) throw RejectedInput("causal tolerance must be non-negative");
  const S q = inner(x, x);
  if (q > tol) return CausalCharacter::Spacelike;
  if (q < -tol) return CausalCharacter::Timelike;
  return CausalCharacter::Null;
}

inline constexpr double kDefaultCausalTolerance = 1e-9;

template <class S>
S max_abs(const BasicFrameVector<S>& v) {
  using std::abs;
  return std::max({S(abs(v.u1)), S(abs(v.u2)), S(abs(v.u3))});
}

template <class S>
S determinant(const BasicFrameVector<S>& x, const BasicFrameVector<S>& y, const BasicFrameVector<S>& z) {
  return x.u1 * (y.u2 * z.u3 - y.u3 * z.u2) - x.u2 * (y.u1 * z.u3 - y.u3 * z.u1) + x.u3 * (y.u1 * z.u2 - y.u2 * z.u1);
}

/// Largest componentwise defect of each cross-product property on one triple:
///   [0] bilinearity in the first slot (scalars a, b) and antisymmetry
///   [1] X ∧ Y orthogonal to X and Y
///   [2] e1 ∧ e2 = e3, e2 ∧ e3 = -e1, e3 ∧ e1 = e2
///   [3] (X ∧ Y) ∧ Z = g(X, Z) Y - g(Y, Z) X
///   [4] (X, Y, Z) = -det and cyclic invariance of the mixed product
///   [5] (X ∧ Y) ∧ Z + (Y ∧ Z) ∧ X + (Z ∧ X) ∧ Y = 0
template <class S>
std::array<S, 6> cross_property_defects(const BasicFrameVector<S>& x, const BasicFrameVector<S>& y,
                                        const BasicFrameVector<S>& z, const S& a, const S& b) {
  using std::abs;
  std::array<S, 6> d{};
  d[0] = std::max(max_abs(cross(a * x + b * y, z) - (a * cross(x, z) + b * cross(y, z))),
                  max_abs(cross(x, y) + cross(y, x)));
  d[1] = std::max(S(abs(inner(cross(x, y), x))), S(abs(inner(cross(x, y), y))));
  const auto e1 = basis<S>(0), e2 = basis<S>(1), e3 = basis<S>(2);
  d[2] = std::max({max_abs(cross(e1, e2) - e3), max_abs(cross(e2, e3) + e1), max_abs(cross(e3, e1) - e2)});
  d[3] = max_abs(cross(cross(x, y), z) - (inner(x, z) * y - inner(y, z) * x));
  const S m = mixed(x, y, z);
  d[4] = std::max({S(abs(m + determinant(x, y, z))), S(abs(m - mixed(y, z, x))), S(abs(m - mixed(z, x, y)))});
  d[5] = max_abs(cross(cross(x, y), z) + cross(cross(y, z), x) + cross(cross(z, x), y));
  return d;
}

}  // namespace hh3
