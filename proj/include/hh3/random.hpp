#pragma once

#include <cstdint>
#include <random>

namespace hh3 {

/// Uniform doubles from mt19937_64. The mapping is written out instead of
/// using std::uniform_real_distribution, whose output is not specified
/// across standard libraries.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}

  double operator()(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  long long integer(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hh3
