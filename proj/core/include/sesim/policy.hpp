#pragma once

#include <map>
#include <optional>
#include <string>

#include "sesim/economy.hpp"

namespace sesim {

struct PhaseWindow {
  int start = 2030;
  int end = 2035;
  bool operator==(const PhaseWindow&) const = default;
};

struct PhaseRamp {
  int start = 2030;
  int end = 2035;
  double v_initial = 0.0;
  double v_final = 0.0;
};

double ramp(const PhaseRamp& r, int year);
double ramp(const PhaseWindow& w, double v_initial, double v_final, int year);

using TargetSeries = std::map<int, double>;  // year -> tonnes

struct CarbonTaxParams {
  double tau_max = 0.0;           // EUR per tonne
  double adjustment_speed = 0.0;  // fraction of tau_max per unit relative gap
  std::string target_series_ref;
  double r_max = 0.0;  // emission reduction at tau_max
  bool operator==(const CarbonTaxParams&) const = default;
};

struct CarbonTaxState {
  double tau = 0.0;
};

struct CarbonTaxStep {
  double tau_next = 0.0;
  double reduction = 0.0;
};

// One controller step on the emissions observed in `year`.
CarbonTaxStep carbon_tax_step(const CarbonTaxState& state, const CarbonTaxParams& params,
                              const TargetSeries& target, double actual_emissions, int year,
                              const PhaseWindow& window = {});

struct RedistributionParams {
  double final_low_rate = 0.13;
  double final_high_rate = 0.75;
  double benefit_multiplier_olf = 2.0;
  double benefit_multiplier_unemployed = 1.3;
  bool operator==(const RedistributionParams&) const = default;
};

struct RedistributionYear {
  FiscalSchedule fiscal;
  BenefitMultipliers multipliers;
};

// Final rates shift every bracket; the shift moves linearly in bracket rank
// from the lowest bracket's change to the highest bracket's change.
std::vector<double> final_rates(const FiscalSchedule& baseline, const RedistributionParams& params);

RedistributionYear redistribution_schedule(const FiscalSchedule& baseline,
                                           const std::optional<RedistributionParams>& params,
                                           int year, const PhaseWindow& window = {});

struct WtrParams {
  double hours_reduction = 0.15;
  bool operator==(const WtrParams&) const = default;
};

double wtr_schedule(const std::optional<WtrParams>& params, int year,
                    const PhaseWindow& window = {});

}  // namespace sesim
