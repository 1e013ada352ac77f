#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sesim {

// Base of every library error. Context (scenario, year, file) is prepended
// as the error travels up, keeping the dynamic type intact.
class Error : public std::exception {
 public:
  explicit Error(std::string message) : message_(std::move(message)) {}
  const char* what() const noexcept override { return message_.c_str(); }
  void add_context(const std::string& context) { message_ = context + ": " + message_; }

 private:
  std::string message_;
};

// Bad inputs: documents, bundles, flags. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Failures while simulating valid inputs. The CLI maps these to exit code 3.
class SimulationError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SchemaError : public InputError {
 public:
  SchemaError(std::string field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class RangeError : public InputError {
 public:
  RangeError(std::string field, const std::string& bound);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class SingularEconomyError : public InputError {
 public:
  explicit SingularEconomyError(double spectral_radius);
  double spectral_radius() const { return rho_; }

 private:
  double rho_;
};

class UnknownComponent : public InputError {
 public:
  explicit UnknownComponent(const std::string& id);
};

class MissingUnitCost : public InputError {
 public:
  explicit MissingUnitCost(const std::string& component);
};

class EpsilonDomain : public InputError {
 public:
  explicit EpsilonDomain(double epsilon);
};

class FingerprintMismatch : public InputError {
 public:
  FingerprintMismatch(const std::string& expected, const std::string& found);
};

class NonConvergence : public SimulationError {
 public:
  NonConvergence(const std::string& what, int iterations);
};

class DegenerateProfile : public SimulationError {
 public:
  explicit DegenerateProfile(double freed_hours);
};

class ZeroTarget : public SimulationError {
 public:
  explicit ZeroTarget(int year);
};

class MissingComponent : public SimulationError {
 public:
  explicit MissingComponent(const std::string& id);
};

class DuplicateComponent : public SimulationError {
 public:
  explicit DuplicateComponent(const std::string& id);
};

struct AgentResidual {
  std::string agent;
  double net_lending;
};

class InconsistencyError : public SimulationError {
 public:
  InconsistencyError(int year, double residual, std::vector<AgentResidual> agents);
  int year() const { return year_; }
  double residual() const { return residual_; }
  const std::vector<AgentResidual>& agents() const { return agents_; }

 private:
  int year_;
  double residual_;
  std::vector<AgentResidual> agents_;
};

}  // namespace sesim
