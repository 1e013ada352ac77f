#include "sesim/environment.hpp"

#include <cmath>

#include "sesim/errors.hpp"

namespace sesim {

double IntensityTable::factor(Pressure p, int year) const {
  return std::pow(1.0 - at(p).decline, year - base_year);
}

PressureAccount compute_pressures(const Vector& x, const Vector& export_output, double imports,
                                  const IntensityTable& intensities, int year) {
  PressureAccount acc;
  for (Pressure p : kAllPressures) {
    const auto& in = intensities.at(p);
    const double k = intensities.factor(p, year);
    double terr = 0.0;
    double exported = 0.0;
    for (std::size_t s = 0; s < x.size(); ++s) {
      terr += in.sector[s] * k * x[s];
      exported += in.sector[s] * k * export_output[s];
    }
    auto& f = acc.at(p);
    f.territorial = terr;
    f.footprint = terr - exported + in.imports * k * imports;
  }
  return acc;
}

PressureAccount apply_emission_reduction(const PressureAccount& account, double reduction) {
  if (!(reduction >= 0.0 && reduction <= 1.0))
    throw RangeError("reduction", "must lie in [0, 1]");
  PressureAccount out = account;
  auto& co2 = out.at(Pressure::co2);
  co2.territorial *= 1.0 - reduction;
  co2.footprint *= 1.0 - reduction;
  return out;
}

BoundaryRatios boundary_status(const PressureAccount& account, const BoundarySet& boundaries,
                               double population) {
  if (!(population > 0.0)) throw RangeError("population", "must be > 0");
  BoundaryRatios r{};
  for (Pressure p : kAllPressures) {
    const auto& b = boundaries[index(p)];
    r[index(p)] = account.on_basis(p, b.basis) / (b.per_capita_limit * population);
  }
  return r;
}

int overshoot_count(const BoundaryRatios& ratios) {
  int n = 0;
  for (double r : ratios)
    if (r > 1.0) ++n;
  return n;
}

}  // namespace sesim
