#pragma once

#include <iosfwd>

namespace hh3 {

inline constexpr int kExitOk = 0;
inline constexpr int kExitManifestMismatch = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIo = 3;

/// Entry point of the `hh3` tool; `out` receives results written to "-",
/// `err` the one-line `error: <kind>: <message>` diagnostics.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hh3
