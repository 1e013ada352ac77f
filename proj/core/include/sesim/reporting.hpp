#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sesim/engine.hpp"

namespace sesim {

struct OutputRow {
  std::string scenario;
  int year = 0;
  std::string variable;
  double value = 0.0;
  std::string unit;
  bool operator==(const OutputRow&) const = default;
};

enum class Format { csv, json };

// Twelve significant digits; "nan" for undefined values.
std::string format_value(double v);

// Sorted by (year, variable).
std::vector<OutputRow> timeseries_rows(const Trajectory& t);
std::vector<OutputRow> indexed_rows(const Trajectory& t);

std::string render_rows(const std::vector<OutputRow>& rows, Format format);
std::vector<OutputRow> parse_rows_csv(const std::string& text);

std::string render_doughnut(const Trajectory& t, Format format);
std::string render_isew_components(const Trajectory& t, Format format);
std::string render_comparison(const Comparison& c, Format format);
std::string render_ranking(const Comparison& c, Format format);

// Writes <scenario>_timeseries, <scenario>_timeseries_indexed,
// <scenario>_doughnut and <scenario>_isew_components.
std::vector<std::filesystem::path> emit_scenario(const Trajectory& t,
                                                 const std::filesystem::path& dir, Format format);
std::vector<std::filesystem::path> emit_comparison(const Comparison& c,
                                                   const std::filesystem::path& dir, Format format);

void write_text(const std::filesystem::path& path, const std::string& text);

// Trajectory files (.traj): JSON with exact doubles.
std::string serialize_trajectory(const Trajectory& t);
Trajectory parse_trajectory(const std::string& text);
void save_trajectory(const Trajectory& t, const std::filesystem::path& path);
Trajectory load_trajectory(const std::filesystem::path& path);

}  // namespace sesim
