#pragma once

#include <stdexcept>
#include <string>

namespace swkb {

// Two broad classes of failure. Validation errors mean the caller asked for
// something outside a model's domain; numerical errors mean a well-posed
// computation did not converge or hit an unexpected sign.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }
  virtual bool is_validation() const noexcept = 0;

 private:
  std::string kind_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
  bool is_validation() const noexcept override { return true; }
};

class NumericalError : public Error {
 public:
  using Error::Error;
  bool is_validation() const noexcept override { return false; }
};

struct ParameterError : ValidationError {
  explicit ParameterError(const std::string& m) : ValidationError("parameter-domain", m) {}
};

struct DomainError : ValidationError {
  explicit DomainError(const std::string& m) : ValidationError("domain", m) {}
};

struct CapabilityError : ValidationError {
  explicit CapabilityError(const std::string& m) : ValidationError("capability", m) {}
};

struct NoBoundStateError : ValidationError {
  explicit NoBoundStateError(const std::string& m) : ValidationError("no-bound-state", m) {}
};

// Natanzon effective parameters do not exist at this trial energy.
struct TrialEnergyError : ValidationError {
  explicit TrialEnergyError(const std::string& m) : ValidationError("trial-energy-range", m) {}
};

struct IoError : ValidationError {
  explicit IoError(const std::string& m) : ValidationError("io", m) {}
};

struct BracketError : NumericalError {
  explicit BracketError(const std::string& m) : NumericalError("bracket", m) {}
};

struct EvaluationError : NumericalError {
  explicit EvaluationError(const std::string& m) : NumericalError("evaluation", m) {}
};

struct IntegrandSignError : NumericalError {
  explicit IntegrandSignError(const std::string& m) : NumericalError("integrand-sign", m) {}
};

// Carries the best estimate reached before giving up.
struct AccuracyError : NumericalError {
  AccuracyError(const std::string& m, double best, double err)
      : NumericalError("accuracy", m), best_estimate(best), error_estimate(err) {}
  double best_estimate;
  double error_estimate;
};

// Energy at or above the asymptotic value of W^2: a turning point escapes.
struct PlateauError : NumericalError {
  explicit PlateauError(const std::string& m) : NumericalError("plateau", m) {}
};

struct DomainEdgeError : NumericalError {
  explicit DomainEdgeError(const std::string& m) : NumericalError("domain-edge", m) {}
};

struct SearchBoundError : NumericalError {
  explicit SearchBoundError(const std::string& m) : NumericalError("search-bound", m) {}
};

}  // namespace swkb
