#pragma once

#include <stdexcept>
#include <string>

namespace refosc {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A polynomial operation left the representation space (nonzero constant
// term under division by the variable).
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& msg) : Error(msg) {}
};

// Radial functions from incompatible exponent classes were combined.
struct GammaMismatch : Error {
  explicit GammaMismatch(const std::string& msg) : Error(msg) {}
};

struct NonTerminating : Error {
  explicit NonTerminating(const std::string& msg) : Error(msg) {}
};

struct PoleInC : Error {
  explicit PoleInC(const std::string& msg) : Error(msg) {}
};

struct ParameterOutOfRange : Error {
  explicit ParameterOutOfRange(const std::string& msg) : Error(msg) {}
};

struct VerificationFailure : Error {
  explicit VerificationFailure(const std::string& msg) : Error(msg) {}
};

struct InterpolationUnderdetermined : Error {
  explicit InterpolationUnderdetermined(const std::string& msg) : Error(msg) {}
};

struct NonDiagonal : Error {
  explicit NonDiagonal(const std::string& msg) : Error(msg) {}
};

struct GridSingularity : Error {
  explicit GridSingularity(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace refosc
