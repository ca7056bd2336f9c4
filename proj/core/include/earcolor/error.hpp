#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace earcolor {

// Malformed input: out-of-range vertices, loops, duplicate arcs, bad moduli.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A hypothesis about cycle residues does not hold. Carries the offending
// cycle as a vertex sequence (closing arc implied).
class HypothesisViolated : public std::runtime_error {
 public:
  HypothesisViolated(const std::string& what, std::vector<int> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

// An exhaustive search exceeded its configured cap or an oracle bound.
// Never recovered by approximation.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant the construction guarantees failed at runtime. Either the
// input contradicted an unchecked hypothesis or the implementation is wrong.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace earcolor
