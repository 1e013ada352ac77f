// Runs the ten acceptance criteria on the reference bundle and prints one
// line per criterion. Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sesim/engine.hpp"
#include "sesim/reporting.hpp"
#include "support.hpp"

using namespace sesim;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

using Runs = std::map<std::string, Trajectory>;

double v(const Runs& r, const std::string& s, int year, const std::string& var) {
  return r.at(s).at_year(year).at(var);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

void identities(Check& c) {
  const auto& cal = test::reference();
  double worst_leontief = 0.0, worst_audit = 0.0;
  for (const auto& name : test::kScenarioNames) {
    run_scenario(test::scenario(name), cal, [&](const WorldState& s) {
      const std::string at = name + " " + std::to_string(s.year);
      worst_leontief = std::max(worst_leontief, s.sectors.leontief_residual);
      worst_audit = std::max(worst_audit, std::abs(s.audit.residual) / s.sectors.gdp);
      for (Variant var : kAllVariants) {
        double want = 0.0;
        for (const auto& comp : s.isew.components)
          if (component_def(comp.id).member_of(var)) want += comp.signed_value();
        c.expect(s.isew.at(var).total == want, "ledger total " + at);
      }
      for (const auto& row : s.time_use.profiles)
        for (const auto& p : row)
          c.expect(std::abs(p.total() - kHoursPerWeek) <= 1e-9, "time use " + at);
      const auto& l = s.labour;
      c.expect(l.unemployed == l.labour_force - l.employed &&
                   l.out_of_labour_force == s.cohorts.adults() - l.labour_force,
               "partition " + at);
    });
  }
  c.expect(worst_leontief <= 1e-10, "leontief residual " + fmt(worst_leontief));
  c.expect(worst_audit <= 1e-9, "audit residual " + fmt(worst_audit));

  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : test::kScenarioNames) run_scenario(test::scenario(name), cal);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 5.0, "batch took " + fmt(secs) + " s");
  c.detail << (c.ok ? "" : "; ") << "max leontief " << fmt(worst_leontief) << ", max audit "
           << fmt(worst_audit) << ", batch " << fmt(secs) << " s";
}

// Consumption is measured against the gross component total; the other
// shares against the net variant total.
void component_structure(const Runs& r, Check& c) {
  auto y = [&](const std::string& var) { return v(r, "bau", 2020, var); };
  const double bce = y("isew_bce"), bcpa = y("isew_bcpa");
  const double linked = y("component:shadow_economy") + y("component:defensive_expenditure");
  const std::pair<std::string, std::pair<double, double>> shares[] = {
      {"consumption/bce_gross", {y("component:individual_consumption") / y("isew_bce_gross"), 0.48}},
      {"consumption/bcpa_gross", {y("component:individual_consumption") / y("isew_bcpa_gross"), 0.40}},
      {"unpaid/bce", {y("component:unpaid_work") / bce, 0.34}},
      {"inequality/bce", {y("component:inequality_loss") / bce, 0.12}},
      {"government/bce", {y("component:government_consumption") / bce, 0.07}},
      {"linked/bce", {linked / bce, 0.18}},
      {"linked/bcpa", {linked / bcpa, 0.23}},
  };
  for (const auto& [name, sv] : shares) {
    c.expect(std::abs(sv.first - sv.second) <= 0.02 + 1e-12, name + " off target");
    c.detail << (c.detail.tellp() > 0 ? ", " : "") << name << " " << fmt(100 * sv.first);
  }
}

void ordering_2070(const Runs& r, Check& c) {
  for (const std::string var : {"isew_bce_per_capita", "isew_bcpa_per_capita"}) {
    const double all = v(r, "all_three", 2070, var), bau = v(r, "bau", 2070, var);
    for (const std::string s : {"carbon_tax", "redistribution", "wtr"}) {
      c.expect(all > v(r, s, 2070, var), var + " all_three <= " + s);
      c.expect(v(r, s, 2070, var) >= bau, var + " " + s + " < bau");
    }
    const double gain = all / bau - 1.0;
    const bool bce = var == "isew_bce_per_capita";
    c.expect(bce ? gain >= 0.01 && gain <= 0.04 : gain >= 0.12 && gain <= 0.25,
             var + " gain out of band");
    c.detail << (bce ? "" : ", ") << var << " gain " << fmt(100 * gain) << "%";
  }
}

void carbon_split(const Runs& r, Check& c) {
  double worst = 0.0;
  for (int y = 2020; y <= 2070; ++y) {
    const double b = v(r, "bau", y, "isew_bce_per_capita");
    worst = std::max(worst, std::abs(v(r, "carbon_tax", y, "isew_bce_per_capita") - b) / std::abs(b));
    if (y >= 2031)
      c.expect(v(r, "carbon_tax", y, "isew_bcpa_per_capita") > v(r, "bau", y, "isew_bcpa_per_capita"),
               "bcpa not above bau in " + std::to_string(y));
  }
  c.expect(worst <= 0.01, "bce deviation " + fmt(worst));
  c.detail << (c.ok ? "" : "; ") << "max bce deviation " << fmt(100 * worst) << "%";
}

void redistribution(const Runs& r, Check& c) {
  const double cut = 1.0 - v(r, "redistribution", 2036, "component:inequality_loss") /
                               v(r, "redistribution", 2029, "component:inequality_loss");
  c.expect(cut >= 0.15 && cut <= 0.35, "inequality cut " + fmt(cut));
  double worst = 0.0;
  for (int y = 2020; y <= 2070; ++y) {
    const double b = v(r, "bau", y, "consumption");
    worst = std::max(worst, std::abs(v(r, "redistribution", y, "consumption") - b) / b);
  }
  c.expect(worst <= 0.02, "consumption deviation " + fmt(worst));
  c.detail << (c.ok ? "" : "; ") << "inequality loss cut " << fmt(100 * cut)
           << "%, max consumption deviation " << fmt(100 * worst) << "%";
}

void wtr(const Runs& r, Check& c) {
  for (int y = 2035; y <= 2070; ++y)
    c.expect(v(r, "wtr", y, "unemployment_rate") < v(r, "bau", y, "unemployment_rate"),
             "unemployment " + std::to_string(y));
  for (int y = 2031; y <= 2035; ++y)
    c.expect(v(r, "wtr", y, "unpaid_hours") < v(r, "bau", y, "unpaid_hours"),
             "unpaid hours not below bau in " + std::to_string(y));
  c.expect(v(r, "wtr", 2070, "unpaid_hours") > v(r, "bau", 2070, "unpaid_hours"),
           "unpaid hours not above bau in 2070");
  for (int y = 2036; y <= 2038; ++y)
    c.expect(v(r, "wtr", y, "isew_bce_per_capita") < v(r, "bau", y, "isew_bce_per_capita"),
             "bce not below bau in " + std::to_string(y));
  int crossover = 0;
  for (int y = 2036; y <= 2070 && !crossover; ++y)
    if (v(r, "wtr", y, "unpaid_hours") > v(r, "bau", y, "unpaid_hours")) crossover = y;
  c.detail << (c.ok ? "" : "; ") << "unpaid-hours crossover in " << crossover;
}

void doughnut(const Runs& r, Check& c) {
  const int start = static_cast<int>(v(r, "bau", 2020, "overshoot_count"));
  const int end = static_cast<int>(v(r, "bau", 2070, "overshoot_count"));
  const double ratio = v(r, "all_three", 2070, "co2_overshoot_ratio") /
                       v(r, "bau", 2070, "co2_overshoot_ratio");
  c.expect(start == 3, "2020 overshoots " + std::to_string(start));
  c.expect(end == 5, "bau 2070 overshoots " + std::to_string(end));
  c.expect(ratio < 0.6, "co2 ratio " + fmt(ratio));
  const double job_all = v(r, "all_three", 2070, "social:job_availability");
  const double job_bau = v(r, "bau", 2070, "social:job_availability");
  c.expect(job_all >= 1.0, "job availability not met under all_three");
  c.expect(job_bau < 1.0, "job availability met under bau");
  c.detail << (c.ok ? "" : "; ") << "overshoots " << start << " -> " << end << ", co2 ratio "
           << fmt(ratio) << ", job availability " << fmt(job_all) << " vs " << fmt(job_bau);
}

void start_ordering(const Runs& r, Check& c) {
  const double bcpa = v(r, "bau", 2020, "isew_bcpa_per_capita");
  const double bce = v(r, "bau", 2020, "isew_bce_per_capita");
  const double gdp = v(r, "bau", 2020, "gdp_per_capita");
  c.expect(bcpa < bce && bce < gdp, "2020 ordering");
  const auto last = indexed(r.at("bau")).back();
  const double ib = last.at("isew_bce_per_capita"), ip = last.at("isew_bcpa_per_capita"),
               ig = last.at("gdp_per_capita");
  c.expect(ib > ig && ip > ig, "2070 indices");
  c.detail << (c.ok ? "" : "; ") << "2070 index bce " << fmt(ib) << ", bcpa " << fmt(ip)
           << ", gdp " << fmt(ig);
}

void oracles(Check& c) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  double worst_atk = 0.0;
  for (double eps : {0.25, 0.5, 0.8, 1.0, 1.5, 2.5})
    for (int t = 0; t < 40; ++t) {
      Vector y(2 + t % 3), w(y.size());
      for (auto& x : y) x = u(rng);
      for (auto& x : w) x = t % 2 ? u(rng) : 1.0;
      worst_atk = std::max(worst_atk,
                           std::abs(atkinson_index(y, eps, w) - test::brute_force_atkinson(y, eps, w)));
    }
  c.expect(worst_atk <= 1e-6, "atkinson " + fmt(worst_atk));

  double worst_io = 0.0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 200; ++t) {
      const auto a = test::random_productive(n, rng);
      Vector f(n);
      for (auto& x : f) x = u(rng);
      const auto x = solve_output(a, f);
      const auto ref = test::dense_leontief(a, f);
      for (std::size_t i = 0; i < n; ++i)
        worst_io = std::max(worst_io, std::abs(x[i] - ref[i]) / std::abs(ref[i]));
    }
  c.expect(worst_io <= 1e-8, "leontief " + fmt(worst_io));

  const FiscalSchedule s{{{0, 0.19}, {12450, 0.24}, {20200, 0.30}, {35200, 0.37}, {60000, 0.45}}, 0, 0};
  c.expect(income_tax(15000, s) == 12450 * 0.19 + (15000 - 12450) * 0.24 &&
               income_tax(50000, s) == 12450 * 0.19 + (20200 - 12450) * 0.24 +
                                           (35200 - 20200) * 0.30 + (50000 - 35200) * 0.37 &&
               income_tax(100000, s) == 12450 * 0.19 + (20200 - 12450) * 0.24 +
                                            (35200 - 20200) * 0.30 + (60000 - 35200) * 0.37 +
                                            (100000 - 60000) * 0.45,
           "income tax battery");

  for (const auto& [a, b] : {std::pair{0.19, 0.13}, {0.47, 0.75}, {1.0, 2.0}, {1.0, 1.3}, {1.0, 0.85}}) {
    const PhaseRamp r{2030, 2035, a, b};
    c.expect(ramp(r, 2029) == a && ramp(r, 2035) == b &&
                 (ramp(r, 2032) + ramp(r, 2033)) / 2.0 == (a + b) / 2.0,
             "ramp " + fmt(a) + "->" + fmt(b));
  }
  c.detail << (c.ok ? "" : "; ") << "atkinson max error " << fmt(worst_atk)
           << ", leontief max relative error " << fmt(worst_io);
}

void determinism(const Runs& r, Check& c) {
  for (const auto& name : test::kScenarioNames) {
    const auto again = run_scenario(test::scenario(name), test::reference());
    c.expect(serialize_trajectory(again) == serialize_trajectory(r.at(name)), name + " differs");
  }
  auto neutral = test::scenario("bau");
  neutral.carbon_tax = CarbonTaxParams{0.0, 0.25, "linear_3pct", 0.5};
  neutral.redistribution = RedistributionParams{0.19, 0.47, 1.0, 1.0};
  neutral.wtr = WtrParams{0.0};
  auto t = run_scenario(neutral, test::reference());
  t.scenario = "bau";
  c.expect(serialize_trajectory(t) == serialize_trajectory(r.at("bau")), "neutral run differs from bau");
  c.detail << (c.ok ? "" : "; ") << "5 scenarios re-run byte-identical, neutral policies == bau";
}

}  // namespace

int main() {
  try {
    const auto& runs = test::reference_runs();
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"accounting identities and runtime", identities},
        {"component structure 2020", [&](Check& c) { component_structure(runs, c); }},
        {"scenario ordering 2070", [&](Check& c) { ordering_2070(runs, c); }},
        {"carbon tax split", [&](Check& c) { carbon_split(runs, c); }},
        {"redistribution", [&](Check& c) { redistribution(runs, c); }},
        {"working-time reduction", [&](Check& c) { wtr(runs, c); }},
        {"doughnut pattern", [&](Check& c) { doughnut(runs, c); }},
        {"start ordering and indexed growth", [&](Check& c) { start_ordering(runs, c); }},
        {"oracle suites", oracles},
        {"determinism", [&](Check& c) { determinism(runs, c); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      Check c;
      try {
        criteria[i].second(c);
      } catch (const std::exception& e) {
        c.expect(false, std::string("error: ") + e.what());
      }
      failed += !c.ok;
      std::printf("criterion %zu: %s %s (%s)\n", i + 1, c.ok ? "PASS" : "FAIL",
                  criteria[i].first.c_str(), c.detail.str().c_str());
    }
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 2;
  }
}
