#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hh3/connection.hpp"

namespace hh3 {

enum class Status { Confirmed, ConfirmedWithErratum, RefutedAsPrinted };

std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view s);

struct ClaimInfo {
  std::string_view id;
  std::string_view anchor;
  Status expected;  // pinned manifest
};

/// Fixed registry; run_all reports in this order.
std::span<const ClaimInfo> claim_registry();

struct CheckRow {
  std::string claim_id;
  std::string anchor;
  Status status = Status::RefutedAsPrinted;
  double max_residual = 0;
  std::string details;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct VerifierConfig {
  std::uint64_t seed = kDefaultSeed;
  // Only the negative-control tests replace this.
  ConnectionTable connection = standard_connection();
  bool parallel = true;
};

struct VerificationReport {
  int schema_version = 1;
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckRow> checks;
};

/// Throws RejectedInput for an id outside the registry.
CheckRow verify_claim(std::string_view claim_id, const VerifierConfig& config = {});

/// Every registered claim. Check failures become rows, never exceptions.
VerificationReport run_all(const VerifierConfig& config = {});

/// "claim: expected X, got Y" for each row whose status differs from the manifest.
std::vector<std::string> manifest_mismatches(const VerificationReport& report);

/// {schema_version, seed, checks: [{claim_id, anchor, status, max_residual, details}]},
/// two-space indent, trailing newline.
std::string to_json(const VerificationReport& report);

}  // namespace hh3
