#include "sesim/isew.hpp"

#include <cmath>
#include <set>

#include "sesim/errors.hpp"

namespace sesim {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::bce: return "bce";
    case Variant::bcpa: return "bcpa";
    case Variant::iaew: return "iaew";
  }
  return "";
}

const ComponentDef& component_def(std::string_view id) {
  for (const auto& c : kComponents)
    if (c.id == id) return c;
  throw UnknownComponent(std::string(id));
}

std::vector<std::string_view> members(Variant v) {
  std::vector<std::string_view> out;
  for (const auto& c : kComponents)
    if (c.member_of(v)) out.push_back(c.id);
  return out;
}

double IsewLedger::value(std::string_view id) const {
  for (const auto& c : components)
    if (c.id == id) return c.value;
  throw MissingComponent(std::string(id));
}

double unpaid_work_value(double hours, double rate) { return hours * rate; }

double atkinson_index(const Vector& values, double epsilon, const Vector& weights) {
  if (!(epsilon > 0.0)) throw EpsilonDomain(epsilon);
  if (!weights.empty() && weights.size() != values.size())
    throw RangeError("weights", "must match the number of values");
  double wsum = 0.0;
  double mean = 0.0;
  bool has_zero = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    if (values[i] < 0.0 || w < 0.0) throw RangeError("values", "must be >= 0");
    wsum += w;
    mean += w * values[i];
    if (values[i] == 0.0 && w > 0.0) has_zero = true;
  }
  if (wsum <= 0.0 || mean <= 0.0) return 0.0;
  mean /= wsum;
  bool equal = true;
  for (std::size_t i = 0; i < values.size() && equal; ++i)
    if ((weights.empty() || weights[i] > 0.0) && values[i] != values[0]) equal = false;
  if (equal) return 0.0;
  if (has_zero && epsilon >= 1.0) return 1.0;

  double ede;
  if (std::abs(epsilon - 1.0) < 1e-12) {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double w = weights.empty() ? 1.0 : weights[i];
      if (w > 0.0) acc += w * std::log(values[i]);
    }
    ede = std::exp(acc / wsum);
  } else {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double w = weights.empty() ? 1.0 : weights[i];
      acc += w * std::pow(values[i], 1.0 - epsilon);
    }
    ede = std::pow(acc / wsum, 1.0 / (1.0 - epsilon));
  }
  return std::max(0.0, 1.0 - ede / mean);
}

double inequality_loss(double consumption, double atkinson, double floor) {
  return consumption * std::max(0.0, atkinson - floor);
}

double share_component(double base_value, const ShareOfEndogenous& mode, int year,
                       int base_year) {
  return base_value * mode.share_0 * std::pow(1.0 + mode.drift, year - base_year);
}

namespace {

const UnitCost& cost_for(const UnitCostTable& t, std::string_view id) {
  const auto it = t.find(id);
  if (it == t.end()) throw MissingUnitCost(std::string(id));
  return it->second;
}

ComponentValue priced(const PressureAccount& acc, const UnitCostTable& t, std::string_view id,
                      double share = 1.0) {
  const auto& uc = cost_for(t, id);
  return {std::string(id), Sign::cost, acc.on_basis(uc.pressure, uc.basis) * share * uc.eur_per_unit};
}

}  // namespace

std::vector<ComponentValue> environmental_costs(const PressureAccount& account,
                                                const UnitCostTable& unit_costs, Variant variant,
                                                double extreme_weather,
                                                const EnergyShares& energy) {
  std::vector<ComponentValue> out;
  switch (variant) {
    case Variant::bce:
      out.push_back(priced(account, unit_costs, "air_pollution_narrow"));
      out.push_back(priced(account, unit_costs, "nitrogen_pollution_narrow"));
      out.push_back({"extreme_weather", Sign::cost, extreme_weather});
      break;
    case Variant::bcpa:
      out.push_back(priced(account, unit_costs, "air_pollution_broad"));
      out.push_back(priced(account, unit_costs, "nitrogen_pollution_broad"));
      out.push_back(priced(account, unit_costs, "climate_breakdown"));
      out.push_back(priced(account, unit_costs, "nonrenewable_depletion", energy.nonrenewable));
      out.push_back(priced(account, unit_costs, "nuclear_power", energy.nuclear));
      break;
    case Variant::iaew:
      break;
  }
  return out;
}

VariantTotals assemble(Variant variant, const std::vector<ComponentValue>& components,
                       double population) {
  std::set<std::string_view> seen;
  VariantTotals t;
  for (const auto& c : components) {
    const auto& def = component_def(c.id);
    if (!def.member_of(variant)) continue;
    if (!seen.insert(def.id).second) throw DuplicateComponent(c.id);
    t.total += static_cast<int>(def.sign) * c.value;
    t.gross += std::abs(c.value);
  }
  for (auto id : members(variant))
    if (!seen.count(id)) throw MissingComponent(std::string(id));
  if (!(population > 0.0)) throw RangeError("population", "must be > 0");
  t.per_capita = t.total / population;
  return t;
}

IsewLedger build_ledger(std::vector<ComponentValue> components, double population) {
  IsewLedger l;
  l.components = std::move(components);
  for (Variant v : kAllVariants) l.totals[static_cast<int>(v)] = assemble(v, l.components, population);
  return l;
}

}  // namespace sesim
