#pragma once

#include <stdexcept>
#include <string>

namespace plab {

// Malformed or inconsistent input: unknown ids, bad JSON, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem was asked of an instance that does not meet its hypotheses.
// `details` carries a serialized JSON payload (e.g. a commutativity counterexample).
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(const std::string& what, std::string details = {})
      : std::runtime_error(what), details_(std::move(details)) {}
  const std::string& details() const noexcept { return details_; }

 private:
  std::string details_;
};

}  // namespace plab
