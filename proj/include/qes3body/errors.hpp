#pragma once

#include <stdexcept>
#include <string>

namespace qes3body {

/// Two operands live on different variable charts.
class chart_mismatch_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operator composition would need rational-function coefficients outside
/// the supported polynomial subring.
class composition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coefficient denominator vanishes at the evaluation point.
class singular_point_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input point lies outside (or on the boundary of) the configuration space.
class configuration_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operator fails to preserve the requested polynomial subspace.
class invariance_violation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator-assembled operator does not match its direct construction.
class assembly_identity_error : public std::runtime_error {
 public:
  explicit assembly_identity_error(const std::string& msg, std::string witness)
      : std::runtime_error(msg), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A ρ-chart operator does not descend to the τ chart.
class descent_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Floating-point stage failed (eigen iteration, conditioning, ...).
class numerical_failure_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qes3body
