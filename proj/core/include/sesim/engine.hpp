#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sesim/calibration.hpp"
#include "sesim/errors.hpp"

namespace sesim {

struct SectorSystem {
  Vector final_demand;
  Vector output;
  double gdp = 0.0;
  double consumption = 0.0;
  double government_consumption = 0.0;
  double investment = 0.0;
  double exports = 0.0;
  double imports = 0.0;
  double leontief_residual = 0.0;
};

struct HouseholdIncome {
  double wage_bill = 0.0;
  double benefits = 0.0;
  double taxes = 0.0;
  double profits = 0.0;
  double dividends = 0.0;
  double interest = 0.0;
  double disposable_income = 0.0;
  double net_hourly_wage = 0.0;
  DecileTable deciles;
};

struct WorldState {
  int year = 0;
  double productivity = 1.0;
  double standard_hours = 0.0;
  CohortGrid cohorts;
  LabourMarketState labour;
  TimeUseTable time_use;  // profiles in force this year
  SectorSystem sectors;
  HouseholdIncome households;
  FlowMatrix flows;
  CapitalAccount capital;
  PressureAccount pressures;
  CarbonTaxState carbon;
  double emission_reduction = 0.0;
  double atkinson = 0.0;
  double unpaid_hours = 0.0;
  IsewLedger isew;
  DoughnutReport doughnut;
  AuditReport audit;
};

// Named per-year values of one run. Variable ids are stable and sorted.
struct YearSummary {
  int year = 0;
  std::map<std::string, double, std::less<>> values;

  double at(std::string_view variable) const;
  bool operator==(const YearSummary&) const = default;
};

struct Trajectory {
  std::string scenario;
  std::string fingerprint;
  std::vector<YearSummary> years;

  const YearSummary& at_year(int year) const;
  int start_year() const { return years.front().year; }
  int end_year() const { return years.back().year; }
  bool operator==(const Trajectory&) const = default;
};

std::string_view unit_of(std::string_view variable);

YearSummary summarize(const WorldState& state);

// Base-year state, solved as a fixed point of consumption and output.
WorldState initial_state(const ScenarioSpec& spec, const Calibration& cal);

WorldState step_year(const WorldState& state, const ScenarioSpec& spec, const Calibration& cal);

using StateObserver = std::function<void(const WorldState&)>;

// Simulates from the calibration base year and keeps the scenario horizon.
Trajectory run_scenario(const ScenarioSpec& spec, const Calibration& cal,
                        const StateObserver& observer = {});

struct ComparisonRow {
  std::string scenario;
  int year = 0;
  std::string variable;
  double value = 0.0;
  double delta = 0.0;  // against the first trajectory
  double index = 0.0;  // first horizon year = 100; NaN when the base value is 0
};

struct Comparison {
  std::string baseline;
  std::vector<ComparisonRow> rows;
  // variable -> scenarios at the last year, best first
  std::map<std::string, std::vector<std::string>> ranking;
};

inline const std::vector<std::string> kRankedVariables = {
    "gdp_per_capita", "iaew_per_capita", "isew_bce_per_capita", "isew_bcpa_per_capita"};

Comparison compare(const std::vector<Trajectory>& trajectories);

// 100 * value / value at the first year; NaN when the base value is 0.
std::vector<YearSummary> indexed(const Trajectory& trajectory);

}  // namespace sesim
