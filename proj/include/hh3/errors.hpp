#pragma once

#include <stdexcept>
#include <string>

namespace hh3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Arguments outside an operation's domain: bad ranges, steps, NaNs, unknown ids.
class RejectedInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "rejected-input"; }
};

// The input is well formed but the geometry degenerates.
class DegenerateInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate-input"; }
};

class GeodesicDegenerate : public DegenerateInput {
 public:
  using DegenerateInput::DegenerateInput;
  const char* kind() const noexcept override { return "geodesic"; }
};

class NullNormalDegenerate : public DegenerateInput {
 public:
  using DegenerateInput::DegenerateInput;
  const char* kind() const noexcept override { return "null-normal"; }
};

}  // namespace hh3
