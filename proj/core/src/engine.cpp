#include "sesim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sesim {

namespace {

constexpr int kSpinUpMaxIterations = 1000;
constexpr double kSpinUpTolerance = 1e-13;

struct Policy {
  FiscalSchedule fiscal;
  BenefitMultipliers multipliers;
  double hours_factor = 1.0;
};

Policy policy_for(const ScenarioSpec& spec, const Calibration& cal, int year) {
  const auto r = redistribution_schedule(cal.fiscal.baseline, spec.redistribution, year,
                                         spec.phase_window);
  return {r.fiscal, r.multipliers, wtr_schedule(spec.wtr, year, spec.phase_window)};
}

struct Demand {
  double consumption = 0.0;
  double government = 0.0;
  double investment = 0.0;
  double exports = 0.0;
};

double propensity_consumption(const Calibration& cal, const DecileTable& d) {
  double c = 0.0;
  for (int i = 0; i < kDeciles; ++i) c += cal.economy.consumption_propensity[i] * d.income[i];
  return c;
}

double exports_in(const Calibration& cal, int year) {
  return cal.economy.exports_base *
         std::pow(1.0 + cal.economy.exports_growth, year - cal.base_year);
}

double investment_for(const Calibration& cal, double capital, double gdp_prev) {
  const auto& e = cal.economy;
  return e.depreciation_rate * capital +
         e.investment_adjustment * (e.capital_output_ratio * gdp_prev - capital);
}

// Economy solve for one year: output, labour market, household incomes and
// the monetary flows that follow from them.
void solve_economy(WorldState& s, const Calibration& cal, const Demand& d, const Policy& p,
                   double capital_prev) {
  const auto& e = cal.economy;
  const double m = e.import_share;

  auto& sec = s.sectors;
  sec.consumption = d.consumption;
  sec.government_consumption = d.government;
  sec.investment = d.investment;
  sec.exports = d.exports;
  sec.final_demand.assign(kSectors, 0.0);
  for (int i = 0; i < kSectors; ++i)
    sec.final_demand[i] = (d.consumption * e.consumption_mix[i] +
                           d.government * e.government_mix[i] +
                           d.investment * e.investment_mix[i]) *
                              (1.0 - m) +
                          d.exports * e.export_mix[i];
  sec.output = solve_output(e.io, sec.final_demand);
  sec.leontief_residual = relative_residual(e.io, sec.final_demand, sec.output);
  sec.gdp = sum(sec.final_demand);
  sec.imports = m * (d.consumption + d.government + d.investment);

  s.standard_hours = e.standard_hours * p.hours_factor;
  const double annual_hours = s.standard_hours * kWeeksPerYear;
  const double ld = labour_demand(sec.output, e.labour_coefficients, s.productivity,
                                  s.standard_hours);
  s.labour = employment_partition(s.cohorts, ld);
  const double rate = s.labour.labour_force > 0.0 ? s.labour.employed / s.labour.labour_force : 0.0;

  std::array<double, kSkills> employed{}, wage{};
  double lf_wages = 0.0;
  for (int k = 0; k < kSkills; ++k) {
    const double lf = s.cohorts.labour_force(static_cast<Skill>(k));
    employed[k] = lf * rate;
    wage[k] = e.hourly_wage[k] * s.productivity;
    lf_wages += lf * wage[k];
  }
  // Benefits follow the full-time-equivalent average wage at base hours.
  const double fte_wage = s.labour.labour_force > 0.0
                              ? lf_wages / s.labour.labour_force * e.standard_hours * kWeeksPerYear
                              : 0.0;

  auto& h = s.households;
  h = HouseholdIncome{};
  for (int k = 0; k < kSkills; ++k) h.wage_bill += employed[k] * wage[k] * annual_hours;
  const double ben_u = benefits(fte_wage, Status::unemployed, p.fiscal, p.multipliers);
  const double ben_o = benefits(fte_wage, Status::out_of_labour_force, p.fiscal, p.multipliers);
  h.benefits = s.labour.unemployed * ben_u + s.labour.out_of_labour_force * ben_o;
  h.interest = e.interest_rate * capital_prev;
  h.profits = sec.gdp - h.wage_bill - h.interest;
  h.dividends = e.profit_payout * h.profits;

  // Groups: employed by skill, unemployed, out of the labour force.
  constexpr int kGroups = kSkills + 2;
  std::array<double, kGroups> persons{}, base{}, weight{};
  for (int k = 0; k < kSkills; ++k) {
    persons[k] = employed[k];
    base[k] = wage[k] * annual_hours;
    weight[k] = e.ownership.employed[k];
  }
  persons[kSkills] = s.labour.unemployed;
  base[kSkills] = ben_u;
  weight[kSkills] = e.ownership.unemployed;
  persons[kSkills + 1] = s.labour.out_of_labour_force;
  base[kSkills + 1] = ben_o;
  weight[kSkills + 1] = e.ownership.out_of_labour_force;
  double wsum = 0.0;
  for (int g = 0; g < kGroups; ++g) wsum += persons[g] * weight[g];
  const double pool = h.dividends + h.interest;

  FiscalSchedule taxes = p.fiscal;
  if (cal.fiscal.brackets_indexed)
    for (auto& b : taxes.brackets) b.lower_bound *= s.productivity;

  const auto& disp = e.wage_dispersion;
  const double bins = static_cast<double>(disp.size());
  std::vector<IncomeGroup> groups;
  groups.reserve(kGroups * disp.size());
  double wage_rx = 0.0, benefit_rx = 0.0, property_rx = 0.0;
  double net_wages = 0.0, paid_hours = 0.0;
  for (int g = 0; g < kGroups; ++g) {
    const double property = wsum > 0.0 ? pool * weight[g] / wsum : 0.0;
    const double pp = persons[g] / bins;
    for (double mult : disp) {
      IncomeGroup grp{pp, (base[g] + property) * mult, 0.0};
      grp.tax = income_tax(grp.gross_income, taxes);
      h.taxes += grp.tax * pp;
      property_rx += pp * property * mult;
      if (g < kSkills) {
        const double wg = base[g] * mult;
        wage_rx += pp * wg;
        net_wages += pp * (wg - income_tax(wg, taxes));
        paid_hours += pp * annual_hours;
      } else {
        benefit_rx += pp * base[g] * mult;
      }
      groups.push_back(grp);
    }
  }
  h.net_hourly_wage = paid_hours > 0.0 ? net_wages / paid_hours : 0.0;
  h.deciles = decile_table(std::move(groups));
  h.disposable_income = 0.0;
  for (double v : h.deciles.income) h.disposable_income += v;

  // Each agent books its own side.
  auto& f = s.flows;
  f = FlowMatrix{};
  f.book(Agent::firms, "sales", sec.gdp + sec.imports);
  f.book(Agent::firms, "investment", -d.investment);
  f.book(Agent::firms, "imports", -sec.imports);
  f.book(Agent::firms, "wages", -h.wage_bill);
  f.book(Agent::firms, "interest", -h.interest);
  f.book(Agent::firms, "dividends", -h.dividends);
  f.book(Agent::households, "consumption", -d.consumption);
  f.book(Agent::households, "wages", wage_rx);
  f.book(Agent::households, "benefits", benefit_rx);
  f.book(Agent::households, "property_income", property_rx);
  f.book(Agent::households, "taxes", -h.taxes);
  f.book(Agent::government, "consumption", -d.government);
  f.book(Agent::government, "benefits", -h.benefits);
  f.book(Agent::government, "taxes", h.taxes);
  f.book(Agent::banks, "interest", h.interest);
  f.book(Agent::banks, "interest_paid", -h.interest);
  f.book(Agent::rest_of_world, "exports", -d.exports);
  f.book(Agent::rest_of_world, "imports", sec.imports);
}

// Steps (4) to (7): pressures, ISEW ledger, Doughnut, audit.
void close_year(WorldState& s, const ScenarioSpec& spec, const Calibration& cal,
                const Policy& policy, const DecileTable& consumption_deciles) {
  const auto& e = cal.economy;
  const int year = s.year;

  Vector exports(kSectors);
  for (int i = 0; i < kSectors; ++i) exports[i] = s.sectors.exports * e.export_mix[i];
  const auto export_output = solve_output(e.io, exports);
  s.pressures = apply_emission_reduction(
      compute_pressures(s.sectors.output, export_output, s.sectors.imports, cal.intensities, year),
      s.emission_reduction);

  const double carbon_revenue = s.carbon.tau * s.pressures.at(Pressure::co2).territorial;
  s.flows.transfer(Agent::firms, Agent::government, "carbon_tax", carbon_revenue);
  s.flows.transfer(Agent::government, Agent::firms, "carbon_rebate", carbon_revenue);

  // Time use and unpaid work.
  s.time_use = cal.time_use;
  for (int g = 0; g < kGenders; ++g) {
    auto& prof = s.time_use.at(Status::employed, static_cast<Gender>(g));
    prof = apply_wtr_to_timeuse(prof, 1.0 - policy.hours_factor);
  }
  s.unpaid_hours = aggregate_unpaid_hours(s.cohorts, s.labour, s.time_use);

  Vector dec_consumption(kDeciles);
  for (int i = 0; i < kDeciles; ++i)
    dec_consumption[i] = e.consumption_propensity[i] * consumption_deciles.income[i];
  s.atkinson = atkinson_index(dec_consumption, cal.valuation.atkinson_epsilon);

  const double c = s.sectors.consumption;
  const double unpaid_rate =
      cal.valuation.unpaid_wage * (cal.valuation.unpaid_wage_indexed ? s.productivity : 1.0);
  const double defensive = share_component(c, cal.isew.defensive, year, cal.base_year);
  const auto ew = cal.isew.extreme_weather.find(year);
  if (ew == cal.isew.extreme_weather.end())
    throw RangeError("isew.extreme_weather", "no value for " + std::to_string(year));

  std::vector<ComponentValue> comps = {
      {"individual_consumption", Sign::benefit, c},
      {"unpaid_work", Sign::benefit, unpaid_work_value(s.unpaid_hours, unpaid_rate)},
      {"shadow_economy", Sign::benefit,
       share_component(s.sectors.gdp, cal.isew.shadow, year, cal.base_year)},
      {"government_consumption", Sign::benefit,
       s.sectors.government_consumption * cal.isew.nondefensive_gov_share},
      {"capital_change", Sign::benefit, s.capital.net_change},
      {"dir_expenditure_restored", Sign::benefit, defensive},
      {"defensive_expenditure", Sign::cost, defensive},
      {"inequality_loss", Sign::cost, inequality_loss(c, s.atkinson, cal.isew.inequality_floor)},
  };
  for (Variant v : {Variant::bce, Variant::bcpa})
    for (auto& cv : environmental_costs(s.pressures, cal.unit_costs, v, ew->second, cal.energy))
      comps.push_back(std::move(cv));
  const double population = s.cohorts.total_population();
  s.isew = build_ledger(std::move(comps), population);

  const auto ratios = boundary_status(s.pressures, cal.boundaries, population);
  SocialDrivers drivers{s.labour.unemployment_rate(), s.atkinson,
                        s.households.deciles.persons[0] > 0.0
                            ? s.households.deciles.income[0] / s.households.deciles.persons[0]
                            : 0.0};
  s.doughnut = doughnut_report(year, spec.name, ratios, drivers, cal.thresholds);

  s.audit = stock_flow_audit(s.flows, s.sectors.gdp, year);
}

const TargetSeries* target_series(const ScenarioSpec& spec, const Calibration& cal) {
  if (!spec.carbon_tax) return nullptr;
  const auto it = cal.emission_targets.find(spec.carbon_tax->target_series_ref);
  if (it == cal.emission_targets.end())
    throw SchemaError("carbon_tax.target_series_ref",
                      "no emission target series '" + spec.carbon_tax->target_series_ref + "'");
  return &it->second;
}

double productivity_in(const Calibration& cal, int year) {
  return std::pow(1.0 + cal.economy.productivity_growth, year - cal.base_year);
}

}  // namespace

double YearSummary::at(std::string_view variable) const {
  const auto it = values.find(variable);
  if (it == values.end())
    throw SchemaError("variable", "unknown variable '" + std::string(variable) + "'");
  return it->second;
}

const YearSummary& Trajectory::at_year(int year) const {
  for (const auto& y : years)
    if (y.year == year) return y;
  throw RangeError("year", std::to_string(year) + " is outside the trajectory");
}

std::string_view unit_of(std::string_view v) {
  auto ends = [&](std::string_view s) {
    return v.size() >= s.size() && v.substr(v.size() - s.size()) == s;
  };
  auto starts = [&](std::string_view s) { return v.substr(0, s.size()) == s; };
  if (starts("social:") || ends("_ratio") || ends("_rate") || v == "atkinson_index" ||
      v == "emission_reduction" || v == "labour_force_share")
    return "ratio";
  if (v == "productivity") return "index";
  if (ends("_per_capita")) return "EUR/person";
  if (starts("component:") || starts("isew_") || starts("iaew")) return "EUR";
  if (v == "population" || v == "adults" || v == "labour_force" || v == "employed" ||
      v == "unemployed" || v == "out_of_labour_force")
    return "persons";
  if (v == "standard_hours") return "h/week";
  if (v == "unpaid_hours") return "h/year";
  if (v == "net_hourly_wage") return "EUR/h";
  if (v == "carbon_tax") return "EUR/t";
  if (v == "overshoot_count") return "count";
  if (starts("co2_")) return "t";
  if (starts("nitrogen_")) return "t";
  if (starts("air_pollutants_")) return "t";
  if (starts("primary_energy_")) return "GJ";
  if (starts("land_system_")) return "ha";
  return "EUR";
}

YearSummary summarize(const WorldState& s) {
  YearSummary y;
  y.year = s.year;
  auto& v = y.values;
  const double pop = s.cohorts.total_population();
  v["population"] = pop;
  v["adults"] = s.labour.adults();
  v["labour_force"] = s.labour.labour_force;
  v["employed"] = s.labour.employed;
  v["unemployed"] = s.labour.unemployed;
  v["out_of_labour_force"] = s.labour.out_of_labour_force;
  v["unemployment_rate"] = s.labour.unemployment_rate();
  v["labour_force_share"] = pop > 0.0 ? s.labour.labour_force / pop : 0.0;
  v["standard_hours"] = s.standard_hours;
  v["unpaid_hours"] = s.unpaid_hours;
  v["productivity"] = s.productivity;

  v["gdp"] = s.sectors.gdp;
  v["gdp_per_capita"] = s.sectors.gdp / pop;
  v["consumption"] = s.sectors.consumption;
  v["government_consumption"] = s.sectors.government_consumption;
  v["investment"] = s.sectors.investment;
  v["exports"] = s.sectors.exports;
  v["imports"] = s.sectors.imports;
  v["capital_stock"] = s.capital.capital_stock;
  v["wage_bill"] = s.households.wage_bill;
  v["benefits"] = s.households.benefits;
  v["taxes"] = s.households.taxes;
  v["profits"] = s.households.profits;
  v["dividends"] = s.households.dividends;
  v["disposable_income"] = s.households.disposable_income;
  v["net_hourly_wage"] = s.households.net_hourly_wage;
  v["atkinson_index"] = s.atkinson;
  v["leontief_residual"] = s.sectors.leontief_residual;
  v["audit_residual"] = s.audit.residual;

  for (const auto& c : s.isew.components) v["component:" + c.id] = c.value;
  const std::pair<Variant, const char*> names[] = {
      {Variant::bce, "isew_bce"}, {Variant::bcpa, "isew_bcpa"}, {Variant::iaew, "iaew"}};
  for (const auto& [var, name] : names) {
    const auto& t = s.isew.at(var);
    v[std::string(name)] = t.total;
    v[std::string(name) + "_gross"] = t.gross;
    v[std::string(name) + "_per_capita"] = t.per_capita;
  }

  for (Pressure p : kAllPressures) {
    const std::string id(to_string(p));
    v[id + "_territorial"] = s.pressures.at(p).territorial;
    v[id + "_footprint"] = s.pressures.at(p).footprint;
    v[id + "_overshoot_ratio"] = s.doughnut.boundaries[index(p)];
  }
  v["overshoot_count"] = s.doughnut.overshoots();
  v["carbon_tax"] = s.carbon.tau;
  v["emission_reduction"] = s.emission_reduction;
  for (const auto& o : s.doughnut.social) v["social:" + o.id] = o.value;
  return y;
}

WorldState initial_state(const ScenarioSpec& spec, const Calibration& cal) {
  const auto& e = cal.economy;
  WorldState s;
  s.year = cal.base_year;
  s.productivity = productivity_in(cal, s.year);
  s.cohorts = cal.cohorts;
  const auto policy = policy_for(spec, cal, s.year);

  double gdp = sum(e.base_final_demand);
  double c = 0.5 * gdp;
  double capital_prev = 0.0;
  Demand d;
  bool converged = false;
  for (int it = 0; it < kSpinUpMaxIterations && !converged; ++it) {
    capital_prev = e.capital_output_ratio * gdp / (1.0 + e.initial_output_growth);
    d = {c, e.government_share * gdp, investment_for(cal, capital_prev, gdp),
         exports_in(cal, s.year)};
    solve_economy(s, cal, d, policy, capital_prev);
    const double c_next = propensity_consumption(cal, s.households.deciles);
    converged = std::abs(c_next - c) <= kSpinUpTolerance * std::abs(c) &&
                std::abs(s.sectors.gdp - gdp) <= kSpinUpTolerance * std::abs(gdp);
    if (!converged) {
      c = c_next;
      gdp = s.sectors.gdp;
    }
  }
  if (!converged) throw NonConvergence("base-year spin-up", kSpinUpMaxIterations);

  s.capital = capital_step({capital_prev, 0, 0, 0}, d.investment, e.depreciation_rate).account;
  close_year(s, spec, cal, policy, s.households.deciles);
  return s;
}

WorldState step_year(const WorldState& prev, const ScenarioSpec& spec, const Calibration& cal) {
  const auto& e = cal.economy;
  WorldState s;
  s.year = prev.year + 1;
  const int year = s.year;

  // (1) policy schedules and the carbon controller
  const auto policy = policy_for(spec, cal, year);
  if (const auto* target = target_series(spec, cal)) {
    const auto step = carbon_tax_step(prev.carbon, *spec.carbon_tax, *target,
                                      prev.pressures.at(Pressure::co2).territorial, prev.year,
                                      spec.phase_window);
    s.carbon.tau = step.tau_next;
    s.emission_reduction = step.reduction;
  }

  // (2) demographics
  s.cohorts = step_cohorts(prev.cohorts, cal.demographics, year);
  s.productivity = productivity_in(cal, year);

  // (3) economy, demand from last year's incomes
  const double k_prev = prev.capital.capital_stock;
  const Demand d{propensity_consumption(cal, prev.households.deciles),
                 e.government_share * prev.sectors.gdp,
                 investment_for(cal, k_prev, prev.sectors.gdp), exports_in(cal, year)};
  solve_economy(s, cal, d, policy, k_prev);
  s.capital = capital_step(prev.capital, d.investment, e.depreciation_rate).account;

  // (4)-(7)
  close_year(s, spec, cal, policy, prev.households.deciles);
  return s;
}

Trajectory run_scenario(const ScenarioSpec& spec, const Calibration& cal,
                        const StateObserver& observer) {
  validate_scenario(spec);
  check_horizon(cal, spec);
  Trajectory t;
  t.scenario = spec.name;
  t.fingerprint = cal.fingerprint;
  int year = cal.base_year;
  try {
    WorldState s = initial_state(spec, cal);
    while (true) {
      if (s.year >= spec.horizon.start_year) {
        if (observer) observer(s);
        t.years.push_back(summarize(s));
      }
      if (s.year >= spec.horizon.end_year) break;
      year = s.year + 1;
      s = step_year(s, spec, cal);
    }
  } catch (Error& err) {
    err.add_context("scenario '" + spec.name + "', year " + std::to_string(year));
    throw;
  }
  return t;
}

std::vector<YearSummary> indexed(const Trajectory& t) {
  std::vector<YearSummary> out;
  if (t.years.empty()) return out;
  const auto& base = t.years.front().values;
  for (const auto& y : t.years) {
    YearSummary ix{y.year, {}};
    for (const auto& [k, v] : y.values) {
      const auto it = base.find(k);
      const double b = it == base.end() ? 0.0 : it->second;
      ix.values[k] = b != 0.0 ? 100.0 * v / b : std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(std::move(ix));
  }
  return out;
}

Comparison compare(const std::vector<Trajectory>& ts) {
  if (ts.size() < 2) throw InputError("compare needs at least two trajectories");
  const auto& ref = ts.front();
  for (const auto& t : ts) {
    if (t.fingerprint != ref.fingerprint) throw FingerprintMismatch(ref.fingerprint, t.fingerprint);
    if (t.years.empty() || t.start_year() != ref.start_year() || t.end_year() != ref.end_year() ||
        t.years.size() != ref.years.size())
      throw RangeError("horizon", "trajectories '" + ref.scenario + "' and '" + t.scenario +
                                      "' cover different years");
  }
  Comparison c;
  c.baseline = ref.scenario;
  for (const auto& t : ts) {
    const auto ix = indexed(t);
    for (std::size_t i = 0; i < t.years.size(); ++i) {
      const auto& y = t.years[i];
      for (const auto& [k, v] : y.values) {
        const auto it = ref.years[i].values.find(k);
        const double base = it == ref.years[i].values.end() ? 0.0 : it->second;
        c.rows.push_back({t.scenario, y.year, k, v, v - base, ix[i].values.at(k)});
      }
    }
  }
  for (const auto& var : kRankedVariables) {
    std::vector<std::pair<double, std::string>> order;
    for (const auto& t : ts) order.emplace_back(t.years.back().at(var), t.scenario);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    auto& r = c.ranking[var];
    for (auto& [v, name] : order) r.push_back(name);
  }
  return c;
}

}  // namespace sesim
