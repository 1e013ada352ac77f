#include "sesim/demographics.hpp"

#include <algorithm>
#include <cmath>

#include "sesim/errors.hpp"

namespace sesim {

double CohortGrid::total_population() const {
  double t = 0.0;
  for (const auto& c : cells_) t += c.population;
  return t;
}

double CohortGrid::adults(Gender g) const {
  double t = 0.0;
  for (int a = kFirstAdultBand; a < kAgeBands; ++a)
    for (int s = 0; s < kSkills; ++s) t += at(index(g), a, s).population;
  return t;
}

double CohortGrid::adults() const { return adults(Gender::female) + adults(Gender::male); }

double CohortGrid::labour_force(Gender g) const {
  double t = 0.0;
  for (int a = 0; a < kAgeBands; ++a)
    for (int s = 0; s < kSkills; ++s) {
      const auto& c = at(index(g), a, s);
      t += c.population * c.participation;
    }
  return t;
}

double CohortGrid::labour_force() const {
  return labour_force(Gender::female) + labour_force(Gender::male);
}

double CohortGrid::labour_force(Skill s) const {
  double t = 0.0;
  for (int g = 0; g < kGenders; ++g)
    for (int a = 0; a < kAgeBands; ++a) {
      const auto& c = at(g, a, index(s));
      t += c.population * c.participation;
    }
  return t;
}

double DemographicSchedule::births(int year) const {
  return births_base * std::pow(1.0 + births_growth, year - base_year);
}

DemographicSchedule DemographicSchedule::identity() {
  DemographicSchedule s;
  s.survival.fill(1.0);
  s.promotion.fill(0.0);
  s.births_base = 0.0;
  s.birth_skill_shares = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  return s;
}

CohortGrid step_cohorts(const CohortGrid& grid, const DemographicSchedule& schedule, int year) {
  CohortGrid next = grid;
  for (int g = 0; g < kGenders; ++g)
    for (int s = 0; s < kSkills; ++s) {
      std::array<double, kAgeBands> moved{};
      for (int a = 0; a < kAgeBands; ++a) {
        const double survivors = grid.at(g, a, s).population * schedule.survival[a];
        moved[a] = survivors * schedule.promotion[a];
        next.at(g, a, s).population = survivors - moved[a];
      }
      for (int a = 1; a < kAgeBands; ++a) next.at(g, a, s).population += moved[a - 1];
    }
  const double b = schedule.births(year);
  if (b > 0.0) {
    for (int s = 0; s < kSkills; ++s) {
      const double share = schedule.birth_skill_shares[s];
      next.at(Gender::female, 0, static_cast<Skill>(s)).population +=
          b * schedule.birth_female_share * share;
      next.at(Gender::male, 0, static_cast<Skill>(s)).population +=
          b * (1.0 - schedule.birth_female_share) * share;
    }
  }
  return next;
}

LabourMarketState employment_partition(const CohortGrid& grid, double labour_demand) {
  LabourMarketState st;
  st.labour_force = grid.labour_force();
  st.employed = std::min(std::max(labour_demand, 0.0), st.labour_force);
  st.unemployed = st.labour_force - st.employed;
  st.out_of_labour_force = grid.adults() - st.labour_force;
  return st;
}

double TimeUseProfile::total() const {
  double t = 0.0;
  for (double h : hours) t += h;
  return t;
}

TimeUseProfile apply_wtr_to_timeuse(const TimeUseProfile& profile, double reduction) {
  TimeUseProfile out = profile;
  const double freed = profile[TimeUse::paid_work] * reduction;
  if (freed == 0.0) return out;
  double others = 0.0;
  for (int c = 1; c < kTimeUseCategories; ++c) others += profile.hours[c];
  if (others <= 0.0) throw DegenerateProfile(freed);
  out[TimeUse::paid_work] = profile[TimeUse::paid_work] * (1.0 - reduction);
  for (int c = 1; c < kTimeUseCategories; ++c)
    out.hours[c] = profile.hours[c] + freed * profile.hours[c] / others;
  return out;
}

StatusByGender split_by_gender(const CohortGrid& grid, const LabourMarketState& state) {
  StatusByGender out{};
  const double rate = state.labour_force > 0 ? state.employed / state.labour_force : 0.0;
  for (int g = 0; g < kGenders; ++g) {
    const auto gender = static_cast<Gender>(g);
    const double lf = grid.labour_force(gender);
    const double employed = lf * rate;
    out[index(Status::employed)][g] = employed;
    out[index(Status::unemployed)][g] = lf - employed;
    out[index(Status::out_of_labour_force)][g] = grid.adults(gender) - lf;
  }
  return out;
}

double aggregate_unpaid_hours(const CohortGrid& grid, const LabourMarketState& state,
                              const TimeUseTable& profiles) {
  const auto persons = split_by_gender(grid, state);
  double weekly = 0.0;
  for (int s = 0; s < kStatuses; ++s)
    for (int g = 0; g < kGenders; ++g)
      weekly += persons[s][g] *
                profiles.at(static_cast<Status>(s), static_cast<Gender>(g))[TimeUse::unpaid_work];
  return weekly * kWeeksPerYear;
}

}  // namespace sesim
