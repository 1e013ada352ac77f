#include "sesim/doughnut.hpp"

#include <algorithm>

#include "sesim/errors.hpp"

namespace sesim {

std::vector<SocialOutcome> social_outcomes(const SocialDrivers& d, const SocialThresholds& t) {
  std::vector<SocialOutcome> out;
  out.reserve(kSocialOutcomes.size());
  for (auto id : kSocialOutcomes) {
    SocialOutcome o{std::string(id)};
    if (id == "job_availability") {
      o.value = std::max(0.0, 1.0 - d.unemployment_rate) / (1.0 - t.max_unemployment_rate);
      o.simulated = true;
    } else if (id == "income_fairness") {
      o.value = std::max(0.0, 1.0 - d.atkinson) / (1.0 - t.max_atkinson);
      o.simulated = true;
    } else if (id == "income_adequacy") {
      o.value = t.income_adequacy_line > 0.0
                    ? std::max(0.0, d.lowest_decile_income_per_adult) / t.income_adequacy_line
                    : 0.0;
      o.simulated = true;
    } else {
      const auto it = t.constant_outcomes.find(id);
      o.value = it == t.constant_outcomes.end() ? 0.0 : it->second;
    }
    out.push_back(std::move(o));
  }
  return out;
}

const SocialOutcome& DoughnutReport::outcome(std::string_view id) const {
  for (const auto& o : social)
    if (o.id == id) return o;
  throw MissingComponent(std::string(id));
}

DoughnutReport doughnut_report(int year, std::string scenario, const BoundaryRatios& boundaries,
                               const SocialDrivers& drivers, const SocialThresholds& thresholds) {
  return {year, std::move(scenario), boundaries, social_outcomes(drivers, thresholds)};
}

}  // namespace sesim
