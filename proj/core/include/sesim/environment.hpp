#pragma once

#include <array>

#include "sesim/types.hpp"

namespace sesim {

struct PressureIntensity {
  Vector sector;          // physical units per EUR of gross output, base year
  double imports = 0.0;   // physical units per EUR of imports, base year
  double decline = 0.0;   // annual fractional decline
};

struct IntensityTable {
  std::array<PressureIntensity, kPressures> pressures;
  int base_year = 2020;

  const PressureIntensity& at(Pressure p) const { return pressures[index(p)]; }
  PressureIntensity& at(Pressure p) { return pressures[index(p)]; }
  double factor(Pressure p, int year) const;
};

struct PressureFlow {
  double territorial = 0.0;
  double footprint = 0.0;
  bool operator==(const PressureFlow&) const = default;
};

struct PressureAccount {
  std::array<PressureFlow, kPressures> flows{};

  const PressureFlow& at(Pressure p) const { return flows[index(p)]; }
  PressureFlow& at(Pressure p) { return flows[index(p)]; }
  double on_basis(Pressure p, Basis b) const {
    return b == Basis::territorial ? at(p).territorial : at(p).footprint;
  }
  bool operator==(const PressureAccount&) const = default;
};

struct Boundary {
  double per_capita_limit = 1.0;
  Basis basis = Basis::footprint;
};

using BoundarySet = std::array<Boundary, kPressures>;
using BoundaryRatios = std::array<double, kPressures>;

// `export_output` is the gross output needed to deliver exports,
// i.e. (I - A)^-1 applied to the export vector.
PressureAccount compute_pressures(const Vector& x, const Vector& export_output, double imports,
                                  const IntensityTable& intensities, int year);

PressureAccount apply_emission_reduction(const PressureAccount& account, double reduction);

BoundaryRatios boundary_status(const PressureAccount& account, const BoundarySet& boundaries,
                               double population);

int overshoot_count(const BoundaryRatios& ratios);

}  // namespace sesim
