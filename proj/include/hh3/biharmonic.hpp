#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hh3/frenet.hpp"

namespace hh3 {

/// τ2 = ∇_T³T - R(T, ∇_T T) T from three iterated covariant derivatives.
/// Throws RejectedInput if the jet does not carry T'''.
FrameVector bitension_direct(const TangentJet& jet);
FrameVector bitension_direct(const Curve& curve, const Real& s);

/// Coefficients of τ2 on {T, N, B} from the Frenet expansion:
///   T: -3 k1 k1' ε1 ε2
///   N: k1'' ε2 - k1³ ε1 - k1 k2² ε3 + k1 ε3 + 4 k1 B3²
///   B: 2 k1' k2 ε2 ε3 + k1 k2' ε2 ε3 - 4 k1 N3 B3
/// AsPrinted uses -4 k1 ε2 ε3 N3 B3 for the last term. Since ε2 ε3 = ε1 the two
/// agree on spacelike curves only; the direct bitension follows Corrected.
enum class ExpansionForm { Corrected, AsPrinted };

struct BitensionCoefficients {
  Real tangent{0};
  Real normal{0};
  Real binormal{0};
};

BitensionCoefficients bitension_frenet_coefficients(const FrenetData& f,
                                                   ExpansionForm form = ExpansionForm::Corrected);
FrameVector bitension_frenet(const FrenetData& f, ExpansionForm form = ExpansionForm::Corrected);

/// Euclidean norm of the frame components. A null non-zero τ2 has g(τ2,τ2) = 0,
/// so the indefinite norm is not used.
Real residual_norm(const FrameVector& v);

enum class Verdict { Biharmonic, NotBiharmonic, Geodesic };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Biharmonic: return "biharmonic";
    case Verdict::NotBiharmonic: return "not-biharmonic";
    case Verdict::Geodesic: return "geodesic";
  }
  return "?";
}

/// Left-minus-right values of the biharmonicity system over a grid.
struct ConditionValues {
  ConstancyStats k1;
  ConstancyStats k2;
  Real max_abs_n3b3{0};
  // |k1² ε1 ε3 + k2² - 1 - 4 ε3 B3²|
  Real max_helix_relation{0};
  // |2 k1' k2 + k1 k2' - 4 ε1 k1 N3 B3|: the B-coefficient over ε2 ε3, i.e.
  // k2' = 4 ε1 N3 B3 when k1 is constant.
  Real max_binormal_relation{0};
  // |k2' - N3 B3|: the third equation as printed.
  Real max_printed_third_relation{0};
  // |k1² - ε1 (ε3 + 4 B3²)|, evaluated only when |k2| <= tol everywhere.
  std::optional<Real> max_k2_zero_relation;

  bool k1_constant_nonzero = false;
  bool k2_constant = false;
  bool satisfied = false;
};

/// Evaluates: k1 constant and non-zero, k2 constant, N3 B3 = 0, and
/// k1² ε1 ε3 + k2² = 1 + 4 ε3 B3². Constancy means
/// max deviation <= tol * (1 + |mean|).
ConditionValues check_biharmonic_conditions(std::span<const FrenetData> points, const Real& tol);

struct BiharmonicOptions {
  Real tol{1e-8};
  FrenetOptions frenet{};
};

inline constexpr double kAnalyticVerdictTolerance = 1e-8;
inline constexpr double kSampledVerdictTolerance = 1e-4;

struct BiharmonicReport {
  std::vector<Real> s;
  std::vector<Real> residual_direct;
  std::vector<Real> residual_frenet;  // empty when the Frenet frame degenerates
  std::optional<ConditionValues> conditions;
  Real max_residual_direct{0};
  Real max_residual_frenet{0};
  Verdict verdict = Verdict::Geodesic;
};

/// Biharmonic requires the residual bound and every condition; any geodesic
/// or null-normal point gives Geodesic.
BiharmonicReport analyze_biharmonic(const Curve& curve, std::span<const Real> grid,
                                    const BiharmonicOptions& options = {});

}  // namespace hh3
