#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "json_reader.hpp"
#include "sesim/calibration.hpp"

namespace sesim {

namespace detail {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw SyntaxError(msg, line, column);
  }
}

ObjectReader::ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) throw SchemaError(path_.empty() ? "<root>" : path_, "expected an object");
}

std::string ObjectReader::field(std::string_view key) const {
  return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
}

bool ObjectReader::has(std::string_view key) const { return j_.contains(key); }

const json& ObjectReader::required(std::string_view key) {
  const auto it = j_.find(key);
  if (it == j_.end()) throw SchemaError(field(key), "missing field");
  used_.insert(std::string(key));
  return *it;
}

double ObjectReader::number(std::string_view key) {
  const auto& v = required(key);
  if (!v.is_number()) throw SchemaError(field(key), "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw RangeError(field(key), "must be finite");
  return d;
}

int ObjectReader::integer(std::string_view key) {
  const auto& v = required(key);
  if (!v.is_number_integer()) throw SchemaError(field(key), "expected an integer");
  return v.get<int>();
}

std::string ObjectReader::string(std::string_view key) {
  const auto& v = required(key);
  if (!v.is_string()) throw SchemaError(field(key), "expected a string");
  return v.get<std::string>();
}

bool ObjectReader::boolean(std::string_view key) {
  const auto& v = required(key);
  if (!v.is_boolean()) throw SchemaError(field(key), "expected a boolean");
  return v.get<bool>();
}

ObjectReader ObjectReader::object(std::string_view key) {
  return ObjectReader(required(key), field(key));
}

std::vector<double> ObjectReader::numbers(std::string_view key) {
  const auto& v = required(key);
  if (!v.is_array()) throw SchemaError(field(key), "expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw SchemaError(field(key), "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

void ObjectReader::finish() const {
  for (const auto& [k, v] : j_.items())
    if (!used_.count(k)) throw SchemaError(field(k), "unknown field");
}

}  // namespace detail

namespace {

using detail::json;
using detail::ObjectReader;

void require(bool ok, const std::string& field, const std::string& bound) {
  if (!ok) throw RangeError(field, bound);
}

}  // namespace

void validate_scenario(const ScenarioSpec& s) {
  static const std::regex ident("[A-Za-z0-9_][A-Za-z0-9_.-]*");
  require(std::regex_match(s.name, ident), "name", "must be a non-empty identifier");
  require(s.horizon.start_year < s.horizon.end_year, "horizon",
          "start_year must be < end_year");
  require(s.phase_window.start < s.phase_window.end, "phase_window", "start must be < end");
  if (const auto& c = s.carbon_tax) {
    require(c->tau_max >= 0.0, "carbon_tax.tau_max_eur_per_tonne", ">= 0");
    require(c->adjustment_speed > 0.0 && c->adjustment_speed <= 1.0,
            "carbon_tax.adjustment_speed", "in (0, 1]");
    require(c->r_max > 0.0 && c->r_max <= 1.0, "carbon_tax.r_max", "in (0, 1]");
    require(!c->target_series_ref.empty(), "carbon_tax.target_series_ref", "must be non-empty");
  }
  if (const auto& r = s.redistribution) {
    require(r->final_low_rate >= 0.0 && r->final_low_rate < 1.0, "redistribution.final_low_rate",
            "in [0, 1)");
    require(r->final_high_rate >= 0.0 && r->final_high_rate < 1.0,
            "redistribution.final_high_rate", "in [0, 1)");
    require(r->final_low_rate <= r->final_high_rate, "redistribution.final_high_rate",
            ">= final_low_rate");
    require(r->benefit_multiplier_olf >= 0.0, "redistribution.benefit_multiplier_olf", ">= 0");
    require(r->benefit_multiplier_unemployed >= 0.0,
            "redistribution.benefit_multiplier_unemployed", ">= 0");
  }
  if (const auto& w = s.wtr)
    require(w->hours_reduction >= 0.0 && w->hours_reduction < 1.0, "wtr.hours_reduction",
            "in [0, 1)");
}

ScenarioSpec parse_scenario(std::string_view text) {
  const json doc = detail::parse_json(text);
  ObjectReader root(doc, "");
  ScenarioSpec s;
  s.name = root.string("name");
  {
    auto h = root.object("horizon");
    s.horizon.start_year = h.integer("start_year");
    s.horizon.end_year = h.integer("end_year");
    h.finish();
  }
  if (root.has("phase_window")) {
    auto w = root.object("phase_window");
    s.phase_window.start = w.integer("start");
    s.phase_window.end = w.integer("end");
    w.finish();
  }
  if (root.has("carbon_tax")) {
    auto c = root.object("carbon_tax");
    CarbonTaxParams p;
    p.tau_max = c.number("tau_max_eur_per_tonne");
    p.adjustment_speed = c.number("adjustment_speed");
    p.target_series_ref = c.string("target_series_ref");
    p.r_max = c.number("r_max");
    c.finish();
    s.carbon_tax = p;
  }
  if (root.has("redistribution")) {
    auto r = root.object("redistribution");
    RedistributionParams p;
    p.final_low_rate = r.number("final_low_rate");
    p.final_high_rate = r.number("final_high_rate");
    p.benefit_multiplier_olf = r.number("benefit_multiplier_olf");
    p.benefit_multiplier_unemployed = r.number("benefit_multiplier_unemployed");
    r.finish();
    s.redistribution = p;
  }
  if (root.has("wtr")) {
    auto w = root.object("wtr");
    s.wtr = WtrParams{w.number("hours_reduction")};
    w.finish();
  }
  root.finish();
  validate_scenario(s);
  return s;
}

ScenarioSpec load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read scenario file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario(ss.str());
  } catch (Error& e) {
    e.add_context(path.string());
    throw;
  }
}

std::string serialize_scenario(const ScenarioSpec& s) {
  json j;
  j["name"] = s.name;
  j["horizon"] = {{"start_year", s.horizon.start_year}, {"end_year", s.horizon.end_year}};
  if (s.phase_window != PhaseWindow{})
    j["phase_window"] = {{"start", s.phase_window.start}, {"end", s.phase_window.end}};
  if (const auto& c = s.carbon_tax)
    j["carbon_tax"] = {{"tau_max_eur_per_tonne", c->tau_max},
                       {"adjustment_speed", c->adjustment_speed},
                       {"target_series_ref", c->target_series_ref},
                       {"r_max", c->r_max}};
  if (const auto& r = s.redistribution)
    j["redistribution"] = {{"final_low_rate", r->final_low_rate},
                           {"final_high_rate", r->final_high_rate},
                           {"benefit_multiplier_olf", r->benefit_multiplier_olf},
                           {"benefit_multiplier_unemployed", r->benefit_multiplier_unemployed}};
  if (const auto& w = s.wtr) j["wtr"] = {{"hours_reduction", w->hours_reduction}};
  return j.dump(2) + "\n";
}

}  // namespace sesim
