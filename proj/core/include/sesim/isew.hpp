#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sesim/environment.hpp"
#include "sesim/types.hpp"

namespace sesim {

enum class Variant { bce, bcpa, iaew };
inline constexpr int kVariants = 3;
inline constexpr std::array<Variant, kVariants> kAllVariants = {Variant::bce, Variant::bcpa,
                                                                Variant::iaew};
std::string_view to_string(Variant v);

enum class Sign { benefit = 1, cost = -1 };

struct ComponentDef {
  std::string_view id;
  Sign sign;
  bool bce;
  bool bcpa;
  bool iaew;

  bool member_of(Variant v) const {
    return v == Variant::bce ? bce : v == Variant::bcpa ? bcpa : iaew;
  }
};

// The registered component set and variant membership.
inline constexpr std::array<ComponentDef, 16> kComponents = {{
    {"individual_consumption", Sign::benefit, true, true, true},
    {"unpaid_work", Sign::benefit, true, true, true},
    {"shadow_economy", Sign::benefit, true, true, true},
    {"government_consumption", Sign::benefit, true, true, true},
    {"capital_change", Sign::benefit, false, true, true},
    {"dir_expenditure_restored", Sign::benefit, false, false, true},
    {"defensive_expenditure", Sign::cost, true, true, false},
    {"inequality_loss", Sign::cost, true, true, false},
    {"air_pollution_narrow", Sign::cost, true, false, false},
    {"nitrogen_pollution_narrow", Sign::cost, true, false, false},
    {"extreme_weather", Sign::cost, true, false, false},
    {"air_pollution_broad", Sign::cost, false, true, false},
    {"nitrogen_pollution_broad", Sign::cost, false, true, false},
    {"climate_breakdown", Sign::cost, false, true, false},
    {"nonrenewable_depletion", Sign::cost, false, true, false},
    {"nuclear_power", Sign::cost, false, true, false},
}};

const ComponentDef& component_def(std::string_view id);  // throws UnknownComponent
std::vector<std::string_view> members(Variant v);

struct Endogenous {
  bool operator==(const Endogenous&) const = default;
};
struct ShareOfEndogenous {
  std::string base_variable;
  double share_0 = 0.0;
  double drift = 0.0;
  bool operator==(const ShareOfEndogenous&) const = default;
};
struct Exogenous {
  std::map<int, double> series;
  bool operator==(const Exogenous&) const = default;
};
using ComponentMode = std::variant<Endogenous, ShareOfEndogenous, Exogenous>;

// Ledger ------------------------------------------------------------------

struct ComponentValue {
  std::string id;
  Sign sign = Sign::benefit;
  double value = 0.0;  // magnitude, >= 0 for costs in normal operation
  double signed_value() const { return static_cast<int>(sign) * value; }
};

struct VariantTotals {
  double total = 0.0;
  double gross = 0.0;  // sum of absolute member values
  double per_capita = 0.0;
};

struct IsewLedger {
  std::vector<ComponentValue> components;
  std::array<VariantTotals, kVariants> totals{};

  const VariantTotals& at(Variant v) const { return totals[static_cast<int>(v)]; }
  double value(std::string_view id) const;  // throws MissingComponent
};

// Operations --------------------------------------------------------------

double unpaid_work_value(double hours, double rate = 9.04);

// Weighted Atkinson index; equal weights when `weights` is empty.
double atkinson_index(const Vector& values, double epsilon, const Vector& weights = {});

double inequality_loss(double consumption, double atkinson, double floor);

double share_component(double base_value, const ShareOfEndogenous& mode, int year,
                       int base_year = 2020);

struct UnitCost {
  Pressure pressure = Pressure::co2;
  Basis basis = Basis::territorial;
  double eur_per_unit = 0.0;
};

using UnitCostTable = std::map<std::string, UnitCost, std::less<>>;

struct EnergyShares {
  double nonrenewable = 0.0;
  double nuclear = 0.0;
};

// Cost components of one variant. IAEW has none.
std::vector<ComponentValue> environmental_costs(const PressureAccount& account,
                                                const UnitCostTable& unit_costs, Variant variant,
                                                double extreme_weather = 0.0,
                                                const EnergyShares& energy = {});

VariantTotals assemble(Variant variant, const std::vector<ComponentValue>& components,
                       double population);

IsewLedger build_ledger(std::vector<ComponentValue> components, double population);

}  // namespace sesim
