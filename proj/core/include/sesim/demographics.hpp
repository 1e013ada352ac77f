#pragma once

#include <array>

#include "sesim/types.hpp"

namespace sesim {

struct Cohort {
  double population = 0.0;
  double participation = 0.0;
  bool operator==(const Cohort&) const = default;
};

// Population by gender x age band x skill.
class CohortGrid {
 public:
  Cohort& at(Gender g, int band, Skill s) { return cells_[offset(index(g), band, index(s))]; }
  const Cohort& at(Gender g, int band, Skill s) const {
    return cells_[offset(index(g), band, index(s))];
  }
  Cohort& at(int g, int band, int s) { return cells_[offset(g, band, s)]; }
  const Cohort& at(int g, int band, int s) const { return cells_[offset(g, band, s)]; }

  double total_population() const;
  double adults() const;
  double adults(Gender g) const;
  double labour_force() const;
  double labour_force(Gender g) const;
  double labour_force(Skill s) const;

  bool operator==(const CohortGrid&) const = default;

 private:
  static constexpr int offset(int g, int band, int s) { return (g * kAgeBands + band) * kSkills + s; }
  std::array<Cohort, kGenders * kAgeBands * kSkills> cells_{};
};

// Ageing law: survival, then promotion of a fixed fraction to the next band,
// then births into band 0.
struct DemographicSchedule {
  std::array<double, kAgeBands> survival{};
  std::array<double, kAgeBands> promotion{};  // last band must be 0
  double births_base = 0.0;
  double births_growth = 0.0;
  double birth_female_share = 0.5;
  std::array<double, kSkills> birth_skill_shares{};
  int base_year = 2020;

  double births(int year) const;
  static DemographicSchedule identity();
};

struct LabourMarketState {
  double employed = 0.0;
  double unemployed = 0.0;
  double out_of_labour_force = 0.0;
  double labour_force = 0.0;

  double adults() const { return employed + unemployed + out_of_labour_force; }
  double unemployment_rate() const { return labour_force > 0 ? unemployed / labour_force : 0.0; }
};

enum class TimeUse { paid_work, unpaid_work, sleep, physical_care, leisure, residual };
inline constexpr int kTimeUseCategories = 6;

struct TimeUseProfile {
  std::array<double, kTimeUseCategories> hours{};

  double& operator[](TimeUse c) { return hours[static_cast<int>(c)]; }
  double operator[](TimeUse c) const { return hours[static_cast<int>(c)]; }
  double total() const;
  bool operator==(const TimeUseProfile&) const = default;
};

// Weekly profiles keyed by status and gender.
struct TimeUseTable {
  std::array<std::array<TimeUseProfile, kGenders>, kStatuses> profiles{};

  TimeUseProfile& at(Status s, Gender g) { return profiles[index(s)][index(g)]; }
  const TimeUseProfile& at(Status s, Gender g) const { return profiles[index(s)][index(g)]; }
};

// Persons by status and gender under a common employment rate.
using StatusByGender = std::array<std::array<double, kGenders>, kStatuses>;

CohortGrid step_cohorts(const CohortGrid& grid, const DemographicSchedule& schedule, int year);

LabourMarketState employment_partition(const CohortGrid& grid, double labour_demand);

TimeUseProfile apply_wtr_to_timeuse(const TimeUseProfile& profile, double reduction);

StatusByGender split_by_gender(const CohortGrid& grid, const LabourMarketState& state);

double aggregate_unpaid_hours(const CohortGrid& grid, const LabourMarketState& state,
                              const TimeUseTable& profiles);

}  // namespace sesim
