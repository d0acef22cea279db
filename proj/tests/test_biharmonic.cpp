#include <algorithm>
#include <functional>

#include "doctest.h"
#include "support.hpp"

#include "hh3/biharmonic.hpp"
#include "hh3/frenet.hpp"
#include "hh3/generators.hpp"

using namespace hh3;
using test::d;

namespace {

using Field = std::function<FrameVector(const Real&)>;

// τ2 from values of T only: each ∇_T is a central difference plus the connection term.
FrameVector bitension_by_differences(const Curve& c, const Real& s) {
  const Real h("1e-5");
  const Field t = [&c](const Real& u) { return c.tangent_jet(u).d[0]; };
  const auto nabla = [&](Field v) -> Field {
    return [=](const Real& u) { return (v(u + h) - v(u - h)) / (2 * h) + levi_civita(t(u), v(u)); };
  };
  const Field a1 = nabla(t);
  const Field a3 = nabla(nabla(a1));
  return a3(s) - curvature(t(s), a1(s), t(s));
}

FrameCurve random_angle_curve(SeededUniform& rng, bool spacelike) {
  return make_angle_curve(spacelike,
                          cubic_profile({Real(rng(0.2, 0.8)), Real(rng(-0.8, 0.8)), Real(rng(-0.3, 0.3)), Real(0)}),
                          cubic_profile({Real(rng(-1, 1)), Real(rng(-2, 2)), Real(rng(-0.5, 0.5)), Real(0)}));
}

}  // namespace

TEST_CASE("horizontal helices against the hand oracle") {
  // T = (cosh(as+b), sinh(as+b), 0) gives τ2 = (a³ - 4a)(sinh(as+b), cosh(as+b), 0).
  for (double a : {-3.0, -2.0, -1.0, 0.5, 1.0, 2.0, 3.0}) {
    const Real b(0.25);
    const ClosedFormCurve c = make_spacelike_helix(Real(0), Real(a), b);
    for (double s : {-1.5, 0.0, 0.8}) {
      const Real phase = Real(a) * Real(s) + b;
      const Real k = Real(a) * a * a - 4 * Real(a);
      const FrameVector expected{k * sinh(phase), k * cosh(phase), Real(0)};
      CHECK(d(test::max_diff(bitension_direct(c, Real(s)), expected)) <= 1e-25);
    }
  }
  const ClosedFormCurve printed = make_spacelike_horizontal(Branch::Plus, Real(0), {}, SlopeMode::AsPrinted);
  CHECK(d(test::max_diff(bitension_direct(printed, Real(0)), test::vec(0, -3, 0))) <= 1e-25);
  CHECK(d(residual_norm(bitension_direct(printed, Real(0)))) == doctest::Approx(3));

  const ClosedFormCurve corrected = make_spacelike_horizontal(Branch::Minus, Real(0.4), {Real(1), Real(-1), Real(0)});
  for (const Real& s : test::grid(-2, 2, 40)) CHECK(d(residual_norm(bitension_direct(corrected, s))) <= 1e-9);
}

TEST_CASE("timelike horizontal helix against the hand oracle") {
  CHECK(d(test::max_diff(bitension_direct(make_timelike_horizontal_helix(Real(1)), Real(0)), test::vec(5, 0, 0))) <=
        1e-25);
  for (double m : {-2.0, 0.1, 0.7, 3.0}) {
    const FrameCurve c = make_timelike_horizontal_helix(Real(m));
    for (double s : {-1.0, 0.4}) {
      const Real k = Real(m) * m * m + 4 * Real(m);
      const Real ms = Real(m) * Real(s);
      const FrameVector expected{k * cosh(ms), k * sinh(ms), Real(0)};
      CHECK(d(test::max_diff(bitension_direct(c, Real(s)), expected)) <= 1e-25);
    }
  }
}

TEST_CASE("direct bitension against nested differences") {
  SeededUniform rng(211);
  double worst = 0;
  for (int i = 0; i < 10; ++i) {
    const FrameCurve c = random_angle_curve(rng, i % 2 == 0);
    for (double s : {-0.5, 0.1, 0.6}) {
      worst = std::max(worst, d(test::max_diff(bitension_direct(c, Real(s)), bitension_by_differences(c, Real(s)))));
    }
  }
  const ClosedFormCurve helix = make_timelike_helix(Real(0.7), Real(1.3), Real(0.2), {Real(0.5), Real(0), Real(1)});
  worst = std::max(worst, d(test::max_diff(bitension_direct(helix, Real(0.3)), bitension_by_differences(helix, Real(0.3)))));
  CHECK(worst <= 1e-7);
}

TEST_CASE("Frenet-form bitension: corrected B-coefficient on all causal types") {
  SeededUniform rng(223);
  double corrected = 0, printed_spacelike = 0, printed_timelike = 0;
  int types[3] = {0, 0, 0};
  for (int i = 0; i < 20; ++i) {
    const FrameCurve c = random_angle_curve(rng, i % 2 == 0);
    for (const Real& s : test::grid(-1, 1, 10)) {
      const TangentJet j = c.tangent_jet(s);
      FrenetData f;
      try {
        f = compute_frenet(j);
      } catch (const DegenerateInput&) {
        continue;
      }
      const FrameVector direct = bitension_direct(j);
      corrected = std::max(corrected, d(test::max_diff(direct, bitension_frenet(f))));
      const double printed = d(test::max_diff(direct, bitension_frenet(f, ExpansionForm::AsPrinted)));
      if (f.eps1 > 0) {
        printed_spacelike = std::max(printed_spacelike, printed);
        ++types[0];
      } else {
        printed_timelike = std::max(printed_timelike, printed);
        ++types[f.eps2 > 0 ? 1 : 2];
      }
    }
  }
  CHECK(types[0] > 0);
  CHECK(types[1] > 0);
  CHECK(types[2] > 0);
  CHECK(corrected <= 1e-9);
  CHECK(printed_spacelike <= 1e-9);
  CHECK(printed_timelike > 1e-3);
}

TEST_CASE("Frenet-form coefficients on helices") {
  // Horizontal helix of slope a: N-coefficient -a³ + 4a, T and B coefficients zero.
  for (double a : {1.0, 2.0, 3.0}) {
    const FrenetData f = compute_frenet(make_spacelike_helix(Real(0), Real(a), Real(0)), Real(0.2));
    const BitensionCoefficients c = bitension_frenet_coefficients(f);
    CHECK(d(c.normal) == doctest::Approx(-a * a * a + 4 * a));
    CHECK(d(abs(c.tangent)) <= 1e-25);
    CHECK(d(abs(c.binormal)) <= 1e-25);
  }
}

TEST_CASE("geodesics have zero bitension") {
  for (int axis = 1; axis <= 3; ++axis) {
    for (double s : {-1.0, 0.5}) CHECK(d(residual_norm(bitension_direct(make_geodesic(axis), Real(s)))) <= 1e-12);
    const BiharmonicReport r = analyze_biharmonic(make_geodesic(axis), test::grid(0, 1, 4));
    CHECK(r.verdict == Verdict::Geodesic);
  }
}

TEST_CASE("condition system examples") {
  const auto g = test::grid(-2, 2, 40);
  const BiharmonicReport ok = analyze_biharmonic(make_spacelike_horizontal(Branch::Plus, Real(0)), g);
  REQUIRE(ok.conditions);
  CHECK(ok.conditions->satisfied);
  CHECK(ok.verdict == Verdict::Biharmonic);
  CHECK(d(ok.conditions->max_helix_relation) <= 1e-20);

  // Slope 3 at alpha0 = 0: k1 = 3, k2 = -1; -9 + 1 differs from 1 - 4 by 5.
  const BiharmonicReport three = analyze_biharmonic(make_spacelike_helix(Real(0), Real(3), Real(0)), g);
  REQUIRE(three.conditions);
  CHECK(d(three.conditions->max_helix_relation) == doctest::Approx(5));
  CHECK(three.verdict == Verdict::NotBiharmonic);

  const BiharmonicReport timelike = analyze_biharmonic(make_timelike_horizontal_helix(Real(1)), g);
  REQUIRE(timelike.conditions);
  CHECK_FALSE(timelike.conditions->satisfied);
  CHECK(timelike.verdict == Verdict::NotBiharmonic);

  CHECK_THROWS_AS(check_biharmonic_conditions(std::vector<FrenetData>{}, Real(1e-8)), RejectedInput);
  CHECK_THROWS_AS(analyze_biharmonic(make_geodesic(1), std::vector<Real>{}), RejectedInput);
}

TEST_CASE("k2 = 0 member satisfies the corollary relation") {
  const Real alpha0 = asinh(sqrt((sqrt(Real(5)) - 1) / 4));
  const BiharmonicReport r = analyze_biharmonic(make_spacelike_biharmonic(alpha0, Branch::Plus, Real(0)),
                                                test::grid(-1, 1, 20));
  REQUIRE(r.conditions);
  REQUIRE(r.conditions->max_k2_zero_relation);
  CHECK(d(*r.conditions->max_k2_zero_relation) <= 1e-20);
  CHECK(r.verdict == Verdict::Biharmonic);
}

TEST_CASE("binormal relation is the B-coefficient of the direct bitension") {
  SeededUniform rng(227);
  for (int i = 0; i < 10; ++i) {
    const FrameCurve c = random_angle_curve(rng, i % 2 == 1);
    const TangentJet j = c.tangent_jet(Real(0.1));
    const FrenetData f = compute_frenet(j);
    const Real direct_b = f.eps3 * inner(bitension_direct(j), f.B);
    const ConditionValues v = check_biharmonic_conditions(std::vector<FrenetData>{f}, Real(1e-8));
    CHECK(d(abs(v.max_binormal_relation - abs(direct_b))) <= 1e-20);
  }
}

TEST_CASE("verdict soundness over the generator set") {
  SeededUniform rng(229);
  const auto g = test::grid(-1, 1, 20);
  const Real tol(kAnalyticVerdictTolerance);
  std::vector<std::unique_ptr<Curve>> curves;
  for (double shape : {-1.0, 0.0, 0.5}) {
    for (Branch br : {Branch::Plus, Branch::Minus}) {
      curves.push_back(std::make_unique<ClosedFormCurve>(make_spacelike_biharmonic(Real(shape), br, Real(rng(-1, 1)))));
      curves.push_back(std::make_unique<ClosedFormCurve>(
          make_spacelike_biharmonic(Real(shape), br, Real(rng(-1, 1)), {}, SlopeMode::AsPrinted)));
      if (shape != 0) {
        curves.push_back(std::make_unique<ClosedFormCurve>(make_timelike_biharmonic(Real(shape), br, Real(0))));
        curves.push_back(std::make_unique<ClosedFormCurve>(
            make_timelike_biharmonic(Real(shape), br, Real(0), {}, SlopeMode::AsPrinted)));
      }
    }
  }
  for (int i = 0; i < 5; ++i) {
    curves.push_back(std::make_unique<ClosedFormCurve>(make_spacelike_helix(Real(rng(-1, 1)), Real(rng(0.5, 3)), Real(0))));
    curves.push_back(std::make_unique<FrameCurve>(make_timelike_horizontal_helix(Real(rng(0.1, 3)))));
    curves.push_back(std::make_unique<FrameCurve>(make_b3zero_curve(
        FamilyKind::B3ZeroSpacelike, wavy_profile(Real(0), Real(1), Real(0.3), Real(2)), {Real(-1), Real(1)})));
  }
  int biharmonic = 0;
  for (const auto& c : curves) {
    const BiharmonicReport r = analyze_biharmonic(*c, g);
    CAPTURE(c->describe());
    CHECK((r.verdict == Verdict::Biharmonic) == (r.max_residual_direct <= tol));
    if (r.verdict == Verdict::Biharmonic) ++biharmonic;
  }
  CHECK(biharmonic == 10);
}

TEST_CASE("residual norm is Euclidean") {
  CHECK(d(residual_norm(test::vec(1, 1, 0))) == doctest::Approx(std::sqrt(2.0)));
  CHECK(d(inner(test::vec(1, 1, 0), test::vec(1, 1, 0))) == 0);
}
