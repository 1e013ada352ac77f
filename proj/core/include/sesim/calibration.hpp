#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sesim/demographics.hpp"
#include "sesim/doughnut.hpp"
#include "sesim/economy.hpp"
#include "sesim/environment.hpp"
#include "sesim/isew.hpp"
#include "sesim/policy.hpp"

namespace sesim {

// Scenario ----------------------------------------------------------------

struct Horizon {
  int start_year = 2020;
  int end_year = 2070;
  bool operator==(const Horizon&) const = default;
};

struct ScenarioSpec {
  std::string name;
  Horizon horizon;
  std::optional<CarbonTaxParams> carbon_tax;
  std::optional<RedistributionParams> redistribution;
  std::optional<WtrParams> wtr;
  PhaseWindow phase_window;

  bool is_business_as_usual() const { return !carbon_tax && !redistribution && !wtr; }
  bool operator==(const ScenarioSpec&) const = default;
};

ScenarioSpec parse_scenario(std::string_view text);
ScenarioSpec load_scenario(const std::filesystem::path& path);
std::string serialize_scenario(const ScenarioSpec& spec);
void validate_scenario(const ScenarioSpec& spec);

// Calibration -------------------------------------------------------------

struct OwnershipWeights {
  std::array<double, kSkills> employed{};
  double unemployed = 0.0;
  double out_of_labour_force = 0.0;
};

struct EconomyParams {
  Matrix io;  // A, technical coefficients
  Vector consumption_mix, government_mix, investment_mix, export_mix;
  Vector base_final_demand;
  Vector labour_coefficients;  // hours per EUR of output at base productivity
  double productivity_growth = 0.0;
  double standard_hours = 0.0;  // weekly, per worker
  std::array<double, kSkills> hourly_wage{};
  Vector wage_dispersion;  // multipliers within each income group, mean 1
  double government_share = 0.0;
  double import_share = 0.0;
  double exports_base = 0.0;
  double exports_growth = 0.0;
  double capital_output_ratio = 0.0;
  double depreciation_rate = 0.0;
  double investment_adjustment = 0.0;
  double initial_output_growth = 0.0;
  double interest_rate = 0.0;
  double profit_payout = 0.0;
  OwnershipWeights ownership;
  std::array<double, kDeciles> consumption_propensity{};
};

struct FiscalParams {
  FiscalSchedule baseline;
  bool brackets_indexed = true;
};

struct IsewParams {
  ShareOfEndogenous defensive{"individual_consumption", 0.0, 0.0};
  ShareOfEndogenous shadow{"gdp", 0.0, 0.0};
  double nondefensive_gov_share = 0.0;
  double inequality_floor = 0.0;
  std::map<int, double> extreme_weather;
};

struct Valuation {
  double unpaid_wage = 9.04;
  bool unpaid_wage_indexed = true;
  double atkinson_epsilon = 0.8;
};

struct Calibration {
  int base_year = 2020;
  int last_year = 2070;
  std::vector<std::string> sectors;
  EconomyParams economy;
  FiscalParams fiscal;
  CohortGrid cohorts;
  DemographicSchedule demographics;
  TimeUseTable time_use;
  IntensityTable intensities;
  UnitCostTable unit_costs;
  EnergyShares energy;
  BoundarySet boundaries{};
  SocialThresholds thresholds;
  IsewParams isew;
  Valuation valuation;
  std::map<std::string, TargetSeries> emission_targets;
  std::string fingerprint;  // SHA-256 over the bundle files
};

inline constexpr std::array<std::string_view, 8> kBundleFiles = {
    "io_matrix.csv", "final_demand.csv", "labour.csv",     "cohorts.csv",
    "time_use.csv",  "intensities.csv",  "unit_costs.csv", "params.json"};

Calibration parse_calibration(const std::filesystem::path& bundle);

// Checks every invariant; throws RangeError / SchemaError / SingularEconomyError.
void validate_calibration(const Calibration& cal);

ComponentMode component_mode(const Calibration& cal, std::string_view component_id);

// Horizon must start at or after the base year and end within the series.
void check_horizon(const Calibration& cal, const ScenarioSpec& spec);

std::string sha256_hex(std::string_view data);

}  // namespace sesim
