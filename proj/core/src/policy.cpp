#include "sesim/policy.hpp"

#include <algorithm>

#include "sesim/errors.hpp"

namespace sesim {

double ramp(const PhaseRamp& r, int year) {
  if (year <= r.start) return r.v_initial;
  if (year >= r.end) return r.v_final;
  const double t = static_cast<double>(year - r.start) / (r.end - r.start);
  return r.v_initial + (r.v_final - r.v_initial) * t;
}

double ramp(const PhaseWindow& w, double v_initial, double v_final, int year) {
  return ramp(PhaseRamp{w.start, w.end, v_initial, v_final}, year);
}

CarbonTaxStep carbon_tax_step(const CarbonTaxState& state, const CarbonTaxParams& params,
                              const TargetSeries& target, double actual_emissions, int year,
                              const PhaseWindow& window) {
  if (year < window.start || params.tau_max <= 0.0) return {};
  const auto it = target.find(year);
  if (it == target.end())
    throw RangeError("carbon_tax.target_series_ref", "no target for " + std::to_string(year));
  if (it->second == 0.0) throw ZeroTarget(year);
  const double gap = (actual_emissions - it->second) / it->second;
  CarbonTaxStep out;
  out.tau_next = std::clamp(state.tau + params.adjustment_speed * params.tau_max * gap, 0.0,
                            params.tau_max);
  out.reduction = params.r_max * out.tau_next / params.tau_max;
  return out;
}

std::vector<double> final_rates(const FiscalSchedule& baseline,
                                const RedistributionParams& params) {
  const auto& b = baseline.brackets;
  std::vector<double> out(b.size());
  if (b.empty()) return out;
  if (b.size() == 1) {
    out[0] = params.final_low_rate;
    return out;
  }
  const double d_low = params.final_low_rate - b.front().marginal_rate;
  const double d_high = params.final_high_rate - b.back().marginal_rate;
  const double n = static_cast<double>(b.size() - 1);
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = b[i].marginal_rate + d_low + (d_high - d_low) * static_cast<double>(i) / n;
  out.back() = params.final_high_rate;
  out.front() = params.final_low_rate;
  return out;
}

RedistributionYear redistribution_schedule(const FiscalSchedule& baseline,
                                           const std::optional<RedistributionParams>& params,
                                           int year, const PhaseWindow& window) {
  RedistributionYear out{baseline, {}};
  if (!params) return out;
  const auto fin = final_rates(baseline, *params);
  for (std::size_t i = 0; i < fin.size(); ++i)
    out.fiscal.brackets[i].marginal_rate =
        ramp(window, baseline.brackets[i].marginal_rate, fin[i], year);
  out.multipliers.olf = ramp(window, 1.0, params->benefit_multiplier_olf, year);
  out.multipliers.unemployed = ramp(window, 1.0, params->benefit_multiplier_unemployed, year);
  return out;
}

double wtr_schedule(const std::optional<WtrParams>& params, int year, const PhaseWindow& window) {
  if (!params) return 1.0;
  return ramp(window, 1.0, 1.0 - params->hours_reduction, year);
}

}  // namespace sesim
