#include "sesim/errors.hpp"

#include <cstdio>

namespace sesim {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

SyntaxError::SyntaxError(const std::string& message, std::size_t line, std::size_t column)
    : InputError("syntax error at line " + std::to_string(line) + ", column " +
                 std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

SchemaError::SchemaError(std::string field, const std::string& message)
    : InputError("schema error in '" + field + "': " + message), field_(std::move(field)) {}

RangeError::RangeError(std::string field, const std::string& bound)
    : InputError("value of '" + field + "' out of range: " + bound), field_(std::move(field)) {}

SingularEconomyError::SingularEconomyError(double spectral_radius)
    : InputError("io coefficient matrix is not productive (spectral radius " +
                 num(spectral_radius) + " >= 1)"),
      rho_(spectral_radius) {}

UnknownComponent::UnknownComponent(const std::string& id)
    : InputError("unknown ISEW component '" + id + "'") {}

MissingUnitCost::MissingUnitCost(const std::string& component)
    : InputError("no unit cost for '" + component + "'") {}

EpsilonDomain::EpsilonDomain(double epsilon)
    : InputError("inequality aversion must be > 0, got " + num(epsilon)) {}

FingerprintMismatch::FingerprintMismatch(const std::string& expected, const std::string& found)
    : InputError("calibration fingerprint mismatch: " + expected + " vs " + found) {}

NonConvergence::NonConvergence(const std::string& what, int iterations)
    : SimulationError(what + " did not converge within " + std::to_string(iterations) +
                      " iterations") {}

DegenerateProfile::DegenerateProfile(double freed_hours)
    : SimulationError("cannot reallocate " + num(freed_hours) +
                      " freed hours: all receiving categories are zero") {}

ZeroTarget::ZeroTarget(int year)
    : SimulationError("emission target for " + std::to_string(year) + " is zero") {}

MissingComponent::MissingComponent(const std::string& id)
    : SimulationError("ledger is missing component '" + id + "'") {}

DuplicateComponent::DuplicateComponent(const std::string& id)
    : SimulationError("ledger has component '" + id + "' more than once") {}

InconsistencyError::InconsistencyError(int year, double residual,
                                       std::vector<AgentResidual> agents)
    : SimulationError([&] {
        std::string m = "stock-flow inconsistency in " + std::to_string(year) +
                        ": net lending sums to " + num(residual) + " (";
        for (std::size_t i = 0; i < agents.size(); ++i) {
          if (i) m += ", ";
          m += agents[i].agent + " " + num(agents[i].net_lending);
        }
        return m + ")";
      }()),
      year_(year),
      residual_(residual),
      agents_(std::move(agents)) {}

}  // namespace sesim
