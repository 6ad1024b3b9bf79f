#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lfb {

// Argument outside the mathematical domain of an operation (e.g. loglog of x <= e).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// One or more named hypotheses of a theorem were violated by the supplied parameters.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::vector<std::string> conditions, const std::string& what)
      : std::runtime_error(what), conditions_(std::move(conditions)) {}
  explicit HypothesisError(const std::string& condition)
      : HypothesisError({condition}, "hypothesis violated: " + condition) {}

  const std::vector<std::string>& conditions() const noexcept { return conditions_; }

 private:
  std::vector<std::string> conditions_;
};

// A numerical procedure failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request exceeds the memory or size limits of an operation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lfb
