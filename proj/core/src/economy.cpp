#include "sesim/economy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sesim/errors.hpp"

namespace sesim {

namespace {

double norm_inf(const Vector& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

}  // namespace

double spectral_radius(const Matrix& a, double tol, int max_iter) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw RangeError("io_matrix", "matrix must be square");
  if (n == 0) return 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(a(i, j) >= 0.0)) throw RangeError("io_matrix", "entries must be >= 0");

  // Collatz-Wielandt bounds on B = A + I. The shift keeps the iterate
  // strictly positive and removes periodicity.
  Vector v(n, 1.0);
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    Vector w = a * v;
    double rlo = std::numeric_limits<double>::infinity();
    double rhi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] += v[i];
      const double r = w[i] / v[i];
      rlo = std::min(rlo, r);
      rhi = std::max(rhi, r);
    }
    lo = std::max(lo, rlo);
    hi = std::min(hi, rhi);
    if (hi - lo <= tol * hi) break;
    const double scale = norm_inf(w);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / scale;
  }
  return 0.5 * (lo + hi) - 1.0;
}

double relative_residual(const Matrix& a, const Vector& f, const Vector& x) {
  Vector r = a * x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = x[i] - r[i] - f[i];
  const double scale = norm_inf(x);
  return scale > 0.0 ? norm_inf(r) / scale : norm_inf(r);
}

Vector solve_output(const Matrix& a, const Vector& f) {
  const std::size_t n = a.rows();
  if (a.cols() != n || f.size() != n) throw RangeError("final_demand", "dimension mismatch");
  for (double v : f)
    if (!(v >= 0.0)) throw RangeError("final_demand", "entries must be >= 0");

  double max_col = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(a(i, j) >= 0.0)) throw RangeError("io_matrix", "entries must be >= 0");
      c += a(i, j);
    }
    max_col = std::max(max_col, c);
  }
  if (max_col >= 1.0) {
    const double rho = spectral_radius(a);
    if (rho >= 1.0) throw SingularEconomyError(rho);
  }

  Vector x = f;
  for (int it = 0; it < kOutputMaxIterations; ++it) {
    if (relative_residual(a, f, x) <= kOutputTolerance) return x;
    Vector next = a * x;
    for (std::size_t i = 0; i < n; ++i) next[i] += f[i];
    x = std::move(next);
  }
  if (relative_residual(a, f, x) <= kOutputTolerance) return x;
  throw NonConvergence("output solve", kOutputMaxIterations);
}

Vector value_added(const Matrix& a, const Vector& x) {
  Vector va(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    double inputs = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) inputs += a(i, j) * x[j];
    va[j] = x[j] - inputs;
  }
  return va;
}

double labour_demand(const Vector& x, const Vector& labour_coeff, double productivity,
                     double standard_hours) {
  double hours = 0.0;
  for (std::size_t s = 0; s < x.size(); ++s) hours += x[s] * labour_coeff[s];
  return hours / productivity / (standard_hours * kWeeksPerYear);
}

double income_tax(double income, const FiscalSchedule& schedule) {
  const auto& b = schedule.brackets;
  double tax = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (income <= b[i].lower_bound) break;
    const double upper =
        i + 1 < b.size() ? std::min(income, b[i + 1].lower_bound) : income;
    tax += (upper - b[i].lower_bound) * b[i].marginal_rate;
  }
  return tax;
}

double benefits(double avg_wage, Status status, const FiscalSchedule& schedule,
                const BenefitMultipliers& multipliers) {
  switch (status) {
    case Status::unemployed:
      return avg_wage * schedule.benefit_rate_unemployed * multipliers.unemployed;
    case Status::out_of_labour_force:
      return avg_wage * schedule.benefit_rate_olf * multipliers.olf;
    case Status::employed:
      break;
  }
  return 0.0;
}

HouseholdAccount household_accounts(double wages, double benefit_income, double taxes,
                                    double propensity, double property_income) {
  HouseholdAccount h;
  h.disposable_income = wages + benefit_income + property_income - taxes;
  h.consumption = propensity * h.disposable_income;
  h.saving = h.disposable_income - h.consumption;
  return h;
}

CapitalStep capital_step(const CapitalAccount& account, double investment,
                         double depreciation_rate) {
  CapitalStep out;
  auto& acc = out.account;
  acc.investment = investment;
  acc.depreciation = depreciation_rate * account.capital_stock;
  acc.net_change = investment - acc.depreciation;
  acc.capital_stock = account.capital_stock + acc.net_change;
  if (acc.capital_stock <= 0.0 && (acc.capital_stock < 0.0 || acc.depreciation > 0.0)) {
    out.depleted = true;
    out.event.shortfall = -acc.capital_stock;
    acc.capital_stock = 0.0;
  }
  return out;
}

std::string_view to_string(Agent a) {
  static constexpr std::array<std::string_view, kAgents> names = {
      "households", "firms", "government", "banks", "rest_of_world"};
  return names[static_cast<int>(a)];
}

void FlowMatrix::book(Agent agent, std::string item, double amount) {
  entries_.push_back({agent, std::move(item), amount});
}

void FlowMatrix::transfer(Agent payer, Agent payee, const std::string& item, double amount) {
  book(payer, item, -amount);
  book(payee, item, amount);
}

double FlowMatrix::net_lending(Agent a) const {
  double t = 0.0;
  for (const auto& e : entries_)
    if (e.agent == a) t += e.amount;
  return t;
}

double FlowMatrix::total() const {
  double t = 0.0;
  for (const auto& e : entries_) t += e.amount;
  return t;
}

double FlowMatrix::flow(Agent a, const std::string& item) const {
  double t = 0.0;
  for (const auto& e : entries_)
    if (e.agent == a && e.item == item) t += e.amount;
  return t;
}

AuditReport stock_flow_audit(const FlowMatrix& flows, double gdp, int year) {
  AuditReport r;
  for (int i = 0; i < kAgents; ++i) r.net_lending[i] = flows.net_lending(static_cast<Agent>(i));
  for (double v : r.net_lending) r.residual += v;
  r.tolerance = kAuditTolerance * std::abs(gdp);
  if (std::abs(r.residual) > r.tolerance) {
    std::vector<AgentResidual> parts;
    for (int i = 0; i < kAgents; ++i)
      parts.push_back({std::string(to_string(static_cast<Agent>(i))), r.net_lending[i]});
    throw InconsistencyError(year, r.residual, std::move(parts));
  }
  return r;
}

DecileTable decile_table(std::vector<IncomeGroup> groups) {
  std::stable_sort(groups.begin(), groups.end(), [](const IncomeGroup& a, const IncomeGroup& b) {
    return a.net_income() < b.net_income();
  });
  double total = 0.0;
  for (const auto& g : groups) total += g.persons;
  DecileTable t;
  if (total <= 0.0) return t;
  const double step = total / kDeciles;
  int d = 0;
  double room = step;
  for (const auto& g : groups) {
    double p = g.persons;
    const double y = g.net_income();
    while (p > 1e-9 && d < kDeciles) {
      const double take = std::min(p, room);
      t.income[d] += take * y;
      t.persons[d] += take;
      p -= take;
      room -= take;
      if (room <= 1e-9 * step) {
        ++d;
        room = step;
      }
    }
  }
  return t;
}

}  // namespace sesim
