#pragma once

#include <array>
#include <string>
#include <vector>

#include "sesim/demographics.hpp"
#include "sesim/types.hpp"

namespace sesim {

// Leontief quantity model -------------------------------------------------

// Perron root of a nonnegative matrix, to relative tolerance `tol`.
double spectral_radius(const Matrix& a, double tol = 1e-10, int max_iter = 100000);

inline constexpr double kOutputTolerance = 1e-10;
inline constexpr int kOutputMaxIterations = 10000;

// Fixed-point iteration x <- A x + f.
Vector solve_output(const Matrix& a, const Vector& f);

double relative_residual(const Matrix& a, const Vector& f, const Vector& x);

// Value added per sector: x_j minus intermediate inputs bought by j.
Vector value_added(const Matrix& a, const Vector& x);

double labour_demand(const Vector& x, const Vector& labour_coeff, double productivity,
                     double standard_hours);

// Fiscal ------------------------------------------------------------------

struct Bracket {
  double lower_bound = 0.0;
  double marginal_rate = 0.0;
  bool operator==(const Bracket&) const = default;
};

struct FiscalSchedule {
  std::vector<Bracket> brackets;
  double benefit_rate_olf = 0.0;
  double benefit_rate_unemployed = 0.0;
  bool operator==(const FiscalSchedule&) const = default;
};

struct BenefitMultipliers {
  double olf = 1.0;
  double unemployed = 1.0;
  bool operator==(const BenefitMultipliers&) const = default;
};

double income_tax(double income, const FiscalSchedule& schedule);

double benefits(double avg_wage, Status status, const FiscalSchedule& schedule,
                const BenefitMultipliers& multipliers);

struct HouseholdAccount {
  double disposable_income = 0.0;
  double consumption = 0.0;
  double saving = 0.0;
};

HouseholdAccount household_accounts(double wages, double benefits, double taxes,
                                    double propensity, double property_income = 0.0);

// Capital -----------------------------------------------------------------

struct CapitalAccount {
  double capital_stock = 0.0;
  double investment = 0.0;
  double depreciation = 0.0;
  double net_change = 0.0;
};

struct DepletionEvent {
  double shortfall = 0.0;  // stock that would have gone negative
};

struct CapitalStep {
  CapitalAccount account;
  bool depleted = false;
  DepletionEvent event;
};

CapitalStep capital_step(const CapitalAccount& account, double investment,
                         double depreciation_rate);

// Stock-flow accounting ---------------------------------------------------

enum class Agent { households, firms, government, banks, rest_of_world };
inline constexpr int kAgents = 5;
std::string_view to_string(Agent a);

// Each agent books its own side of every transaction: receipts positive,
// payments negative. A flow booked on one side only leaves a residual.
class FlowMatrix {
 public:
  struct Entry {
    Agent agent;
    std::string item;
    double amount;
  };

  void book(Agent agent, std::string item, double amount);
  void transfer(Agent payer, Agent payee, const std::string& item, double amount);

  double net_lending(Agent a) const;
  double total() const;
  double flow(Agent a, const std::string& item) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Entry>& entries() { return entries_; }

 private:
  std::vector<Entry> entries_;
};

struct AuditReport {
  std::array<double, kAgents> net_lending{};
  double residual = 0.0;
  double tolerance = 0.0;
};

inline constexpr double kAuditTolerance = 1e-9;

AuditReport stock_flow_audit(const FlowMatrix& flows, double gdp, int year);

// Household income distribution -------------------------------------------

struct IncomeGroup {
  double persons = 0.0;
  double gross_income = 0.0;  // per person
  double tax = 0.0;           // per person
  double net_income() const { return gross_income - tax; }
};

struct DecileTable {
  std::array<double, kDeciles> income{};   // total disposable income per decile
  std::array<double, kDeciles> persons{};
};

// Sort groups by per-person net income and cut into ten equal-population slices.
DecileTable decile_table(std::vector<IncomeGroup> groups);

}  // namespace sesim
