#pragma once

#include "waveset/intervals.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace waveset {

/// Malformed or out-of-domain input (bad rational, zero scale, even alpha...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation does not hold. Carries the
/// name of the failed condition and a witness set where it fails.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string condition, IntervalSet witness, const std::string& message)
      : std::runtime_error(message), condition_(std::move(condition)), witness_(std::move(witness)) {}

  const std::string& condition() const noexcept { return condition_; }
  const IntervalSet& witness() const noexcept { return witness_; }

 private:
  std::string condition_;
  IntervalSet witness_;
};

}  // namespace waveset
