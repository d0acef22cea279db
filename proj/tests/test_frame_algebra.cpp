#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace hh3;
using test::d;
using test::vec;

namespace {

// Cofactor expansion along the first row, written independently of the library.
Real det3(const FrameVector& a, const FrameVector& b, const FrameVector& c) {
  return a.u1 * (b.u2 * c.u3 - b.u3 * c.u2) - a.u2 * (b.u1 * c.u3 - b.u3 * c.u1) + a.u3 * (b.u1 * c.u2 - b.u2 * c.u1);
}

const FrameVector e1 = basis<Real>(0), e2 = basis<Real>(1), e3 = basis<Real>(2);

}  // namespace

TEST_CASE("inner product has signature (+,-,-)") {
  CHECK(d(inner(e1, e1)) == 1);
  CHECK(d(inner(e2, e2)) == -1);
  CHECK(d(inner(e3, e3)) == -1);
  CHECK(d(inner(e1, e2)) == 0);
  CHECK(d(inner(e2, e3)) == 0);
  CHECK(d(inner(vec(1, 2, 3), vec(4, 5, 6))) == 4 - 10 - 18);
}

TEST_CASE("causal character") {
  const Real tol(kDefaultCausalTolerance);
  CHECK(causal_character(e1, tol) == CausalCharacter::Spacelike);
  CHECK(causal_character(e3, tol) == CausalCharacter::Timelike);
  CHECK(causal_character(e1 + e2, tol) == CausalCharacter::Null);
  CHECK(causal_character(test::vec(1, 1, 1e-4), tol) == CausalCharacter::Timelike);
  CHECK(causal_character(test::vec(1, 1, 1e-4), Real(1e-3)) == CausalCharacter::Null);
  CHECK(to_string(CausalCharacter::Timelike) == "timelike");
}

TEST_CASE("cross product table") {
  CHECK(cross(e1, e2) == e3);
  CHECK(cross(e2, e3) == -e1);
  CHECK(cross(e3, e1) == e2);
  CHECK(cross(e2, e1) == -e3);
  const FrameVector x = vec(1.5, -2, 0.25);
  CHECK(d(max_abs(cross(x, x))) == 0);
}

TEST_CASE("mixed product is minus the determinant") {
  CHECK(d(mixed(e1, e2, e3)) == -1);
  CHECK(d(mixed(e1, e1, e3)) == 0);
  const FrameVector a = vec(1, 2, 3), b = vec(0, 1, 1), c = vec(1, 0, 2);
  CHECK(d(det3(a, b, c)) == 1);
  CHECK(d(mixed(a, b, c)) == -1);
  CHECK(d(determinant(a, b, c)) == 1);
}

TEST_CASE("cross product properties on seeded real triples") {
  SeededUniform rng(17);
  double worst = 0, worst_det = 0;
  for (int i = 0; i < 1000; ++i) {
    const FrameVector x = test::random_vector(rng, -10, 10), y = test::random_vector(rng, -10, 10),
                      z = test::random_vector(rng, -10, 10);
    const auto defects = cross_property_defects(x, y, z, Real(rng(-3, 3)), Real(rng(-3, 3)));
    for (const Real& v : defects) worst = std::max(worst, d(v));
    worst_det = std::max(worst_det, d(abs(mixed(x, y, z) + det3(x, y, z))));
  }
  CHECK(worst <= 1e-12);
  CHECK(worst_det <= 1e-12);
}

TEST_CASE("cross product properties are exact on integers") {
  SeededUniform rng(23);
  for (int i = 0; i < 1000; ++i) {
    const IntFrameVector x = test::random_int_vector(rng, -20, 20), y = test::random_int_vector(rng, -20, 20),
                         z = test::random_int_vector(rng, -20, 20);
    const auto defects = cross_property_defects(x, y, z, rng.integer(-5, 5), rng.integer(-5, 5));
    CHECK(std::all_of(defects.begin(), defects.end(), [](long long v) { return v == 0; }));
  }
}

TEST_CASE("individual identities on a fixed triple") {
  const FrameVector x = vec(1, 2, -1), y = vec(0.5, -3, 2), z = vec(-2, 1, 4);
  CHECK(d(abs(inner(cross(x, y), x))) <= 1e-30);
  CHECK(d(abs(inner(cross(x, y), y))) <= 1e-30);
  const FrameVector lhs = cross(cross(x, y), z);
  const FrameVector rhs = inner(x, z) * y - inner(y, z) * x;
  CHECK(d(test::max_diff(lhs, rhs)) <= 1e-30);
  CHECK(d(abs(mixed(x, y, z) - mixed(y, z, x))) <= 1e-30);
  CHECK(d(abs(mixed(x, y, z) - mixed(z, x, y))) <= 1e-30);
  const FrameVector jacobi = cross(cross(x, y), z) + cross(cross(y, z), x) + cross(cross(z, x), y);
  CHECK(d(max_abs(jacobi)) <= 1e-30);
}

TEST_CASE("frame vectors reject non-finite components") {
  CHECK_THROWS_AS(FrameVector(Real(1), Real(std::nan("")), Real(0)), RejectedInput);
  CHECK_THROWS_AS(FrameVector(Real(1), Real(0), Real(INFINITY)), RejectedInput);
}

TEST_CASE("signature constant") {
  CHECK(kSignature.s1 == 1);
  CHECK(kSignature.s2 == -1);
  CHECK(kSignature.s3 == -1);
}
