#include "sesim/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json_reader.hpp"

namespace sesim {

namespace {

using detail::json;
namespace fs = std::filesystem;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// Header + lines, or an array of objects with the same keys.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

  std::string render(Format f) const {
    if (f == Format::json) {
      json arr = json::array();
      for (const auto& r : rows_) {
        json o = json::object();
        for (std::size_t i = 0; i < columns_.size(); ++i) o[columns_[i]] = r[i];
        arr.push_back(std::move(o));
      }
      return arr.dump(1) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + columns_[i];
    out += '\n';
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ',';
        const auto& c = r[i];
        if (c.is_string())
          out += c.get<std::string>();
        else if (c.is_number_integer())
          out += std::to_string(c.get<long long>());
        else if (c.is_number())
          out += format_value(c.get<double>());
        else if (c.is_null())
          out += "nan";
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<json>> rows_;
};

std::string extension(Format f) { return f == Format::csv ? ".csv" : ".json"; }

std::vector<OutputRow> rows_of(const std::string& scenario, const std::vector<YearSummary>& ys) {
  std::vector<OutputRow> rows;
  for (const auto& y : ys)
    for (const auto& [k, v] : y.values)
      rows.push_back({scenario, y.year, k, v, std::string(unit_of(k))});
  std::stable_sort(rows.begin(), rows.end(), [](const OutputRow& a, const OutputRow& b) {
    return a.year != b.year ? a.year < b.year : a.variable < b.variable;
  });
  return rows;
}

}  // namespace

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<OutputRow> timeseries_rows(const Trajectory& t) { return rows_of(t.scenario, t.years); }

std::vector<OutputRow> indexed_rows(const Trajectory& t) {
  auto rows = rows_of(t.scenario, indexed(t));
  for (auto& r : rows) r.unit = "index";
  return rows;
}

std::string render_rows(const std::vector<OutputRow>& rows, Format format) {
  Table t({"scenario", "year", "variable", "value", "unit"});
  for (const auto& r : rows)
    t.add({r.scenario, r.year, r.variable, number_or_null(r.value), r.unit});
  return t.render(format);
}

std::vector<OutputRow> parse_rows_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<OutputRow> rows;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    if (++lineno == 1 || line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 5) throw SyntaxError("expected 5 fields", lineno, 1);
    rows.push_back({cells[0], std::stoi(cells[1]), cells[2], std::strtod(cells[3].c_str(), nullptr),
                    cells[4]});
  }
  return rows;
}

std::string render_doughnut(const Trajectory& t, Format format) {
  Table tab({"scenario", "year", "ring", "indicator", "value", "threshold", "status"});
  for (const auto& y : t.years) {
    for (Pressure p : kAllPressures) {
      const std::string id(to_string(p));
      const double v = y.at(id + "_overshoot_ratio");
      tab.add({t.scenario, y.year, "ecological_ceiling", id, v, 1.0,
               v > 1.0 ? "overshoot" : "within"});
    }
    for (auto id : kSocialOutcomes) {
      const double v = y.at("social:" + std::string(id));
      tab.add({t.scenario, y.year, "social_foundation", std::string(id), v, 1.0,
               v < 1.0 ? "shortfall" : "met"});
    }
  }
  return tab.render(format);
}

std::string render_isew_components(const Trajectory& t, Format format) {
  Table tab({"scenario", "year", "variant", "component", "sign", "value", "share_of_total",
             "share_of_gross"});
  const std::pair<Variant, const char*> prefix[] = {
      {Variant::bce, "isew_bce"}, {Variant::bcpa, "isew_bcpa"}, {Variant::iaew, "iaew"}};
  for (const auto& y : t.years)
    for (const auto& [var, name] : prefix) {
      const double total = y.at(name);
      const double gross = y.at(std::string(name) + "_gross");
      auto ids = members(var);
      std::sort(ids.begin(), ids.end());
      for (auto id : ids) {
        const auto& def = component_def(id);
        const double v = y.at("component:" + std::string(id));
        const double signed_v = static_cast<int>(def.sign) * v;
        tab.add({t.scenario, y.year, std::string(to_string(var)), std::string(id),
                 def.sign == Sign::benefit ? "+" : "-", v,
                 number_or_null(total != 0.0 ? signed_v / total : NAN),
                 number_or_null(gross != 0.0 ? std::abs(v) / gross : NAN)});
      }
    }
  return tab.render(format);
}

std::string render_comparison(const Comparison& c, Format format) {
  auto rows = c.rows;
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    if (a.year != b.year) return a.year < b.year;
    if (a.variable != b.variable) return a.variable < b.variable;
    return a.scenario < b.scenario;
  });
  Table tab({"scenario", "year", "variable", "value", "delta_vs_" + c.baseline, "index", "unit"});
  for (const auto& r : rows)
    tab.add({r.scenario, r.year, r.variable, number_or_null(r.value), number_or_null(r.delta),
             number_or_null(r.index), std::string(unit_of(r.variable))});
  return tab.render(format);
}

std::string render_ranking(const Comparison& c, Format format) {
  Table tab({"variable", "rank", "scenario"});
  for (const auto& [var, order] : c.ranking)
    for (std::size_t i = 0; i < order.size(); ++i)
      tab.add({var, static_cast<int>(i + 1), order[i]});
  return tab.render(format);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (out) out << text;
  if (!out) throw InputError("cannot write " + path.string());
}

std::vector<fs::path> emit_scenario(const Trajectory& t, const fs::path& dir, Format format) {
  const auto ext = extension(format);
  const std::vector<std::pair<fs::path, std::string>> files = {
      {dir / (t.scenario + "_timeseries" + ext), render_rows(timeseries_rows(t), format)},
      {dir / (t.scenario + "_timeseries_indexed" + ext), render_rows(indexed_rows(t), format)},
      {dir / (t.scenario + "_doughnut" + ext), render_doughnut(t, format)},
      {dir / (t.scenario + "_isew_components" + ext), render_isew_components(t, format)},
  };
  std::vector<fs::path> out;
  for (const auto& [p, text] : files) {
    write_text(p, text);
    out.push_back(p);
  }
  return out;
}

std::vector<fs::path> emit_comparison(const Comparison& c, const fs::path& dir, Format format) {
  const auto ext = extension(format);
  const fs::path table = dir / ("comparison" + ext);
  const fs::path ranking = dir / ("ranking" + ext);
  write_text(table, render_comparison(c, format));
  write_text(ranking, render_ranking(c, format));
  return {table, ranking};
}

std::string serialize_trajectory(const Trajectory& t) {
  json j;
  j["scenario"] = t.scenario;
  j["fingerprint"] = t.fingerprint;
  json years = json::array();
  for (const auto& y : t.years) {
    json values = json::object();
    for (const auto& [k, v] : y.values) values[k] = v;
    years.push_back({{"year", y.year}, {"values", std::move(values)}});
  }
  j["years"] = std::move(years);
  return j.dump() + "\n";
}

Trajectory parse_trajectory(const std::string& text) {
  const json doc = detail::parse_json(text);
  detail::ObjectReader r(doc, "trajectory");
  Trajectory t;
  t.scenario = r.string("scenario");
  t.fingerprint = r.string("fingerprint");
  const auto& years = r.required("years");
  if (!years.is_array() || years.empty())
    throw SchemaError("trajectory.years", "expected a non-empty array");
  for (std::size_t i = 0; i < years.size(); ++i) {
    detail::ObjectReader y(years[i], "trajectory.years[" + std::to_string(i) + "]");
    YearSummary s;
    s.year = y.integer("year");
    const auto& values = y.required("values");
    if (!values.is_object()) throw SchemaError(y.field("values"), "expected an object");
    for (const auto& [k, v] : values.items()) {
      if (!v.is_number()) throw SchemaError(y.field("values") + "." + k, "expected a number");
      s.values[k] = v.get<double>();
    }
    y.finish();
    if (!t.years.empty() && s.year != t.years.back().year + 1)
      throw SchemaError("trajectory.years", "years must be contiguous");
    t.years.push_back(std::move(s));
  }
  r.finish();
  return t;
}

void save_trajectory(const Trajectory& t, const fs::path& path) {
  write_text(path, serialize_trajectory(t));
}

Trajectory load_trajectory(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_trajectory(ss.str());
  } catch (Error& e) {
    e.add_context(path.string());
    throw;
  }
}

}  // namespace sesim
