#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sesim/environment.hpp"

namespace sesim {

inline constexpr std::array<std::string_view, 12> kSocialOutcomes = {
    "life_satisfaction", "life_expectancy", "nutrition",          "sanitation",
    "energy_access",     "education",       "social_support",     "democratic_quality",
    "job_availability",  "gender_equality", "income_fairness",    "income_adequacy"};

struct SocialOutcome {
  std::string id;
  double value = 0.0;  // normalised, 1.0 = threshold
  double threshold = 1.0;
  bool simulated = false;
  bool shortfall() const { return value < threshold; }
};

struct SocialThresholds {
  double max_unemployment_rate = 0.05;
  double max_atkinson = 0.10;
  double income_adequacy_line = 0.0;  // EUR per adult per year
  std::map<std::string, double, std::less<>> constant_outcomes;
};

struct SocialDrivers {
  double unemployment_rate = 0.0;
  double atkinson = 0.0;
  double lowest_decile_income_per_adult = 0.0;
};

std::vector<SocialOutcome> social_outcomes(const SocialDrivers& drivers,
                                           const SocialThresholds& thresholds);

struct DoughnutReport {
  int year = 0;
  std::string scenario;
  BoundaryRatios boundaries{};
  std::vector<SocialOutcome> social;

  const SocialOutcome& outcome(std::string_view id) const;
  int overshoots() const { return overshoot_count(boundaries); }
};

DoughnutReport doughnut_report(int year, std::string scenario, const BoundaryRatios& boundaries,
                               const SocialDrivers& drivers, const SocialThresholds& thresholds);

}  // namespace sesim
