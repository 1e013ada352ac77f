#include "sesim/calibration.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json_reader.hpp"

namespace sesim {

namespace {

using detail::json;
using detail::ObjectReader;
namespace fs = std::filesystem;

constexpr double kTimeUseTolerance = 1e-9;
constexpr double kShareSumTolerance = 1e-9;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Minimal headered CSV: comma separated, no quoting.
struct Csv {
  std::string file;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;
  std::vector<std::vector<std::size_t>> columns;  // 1-based char column of each cell

  double number(std::size_t r, std::size_t c, const std::string& what) const {
    const auto& s = rows[r][c];
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty())
      throw SyntaxError(file + ": '" + s + "' is not a number (" + what + ")", lines[r],
                        columns[r][c]);
    if (!std::isfinite(v)) throw RangeError(file + ":" + what, "must be finite");
    return v;
  }
};

std::vector<std::string> split(const std::string& line, std::vector<std::size_t>& cols) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto p = line.find(',', start);
    cols.push_back(start + 1);
    out.push_back(line.substr(start, p == std::string::npos ? std::string::npos : p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

Csv read_csv(const fs::path& dir, const std::string& name,
             const std::vector<std::string>& header) {
  Csv csv;
  csv.file = name;
  std::istringstream in(read_file(dir / name));
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line.empty()) continue;
    std::vector<std::size_t> cols;
    auto cells = split(line, cols);
    if (!have_header) {
      if (!header.empty() && cells != header) {
        std::string want;
        for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
        throw SchemaError(name + ":header", "expected '" + want + "'");
      }
      csv.rows.push_back(std::move(cells));
      csv.lines.push_back(lineno);
      csv.columns.push_back(std::move(cols));
      have_header = true;
      continue;
    }
    if (cells.size() != csv.rows.front().size())
      throw SyntaxError(name + ": expected " + std::to_string(csv.rows.front().size()) +
                            " fields, found " + std::to_string(cells.size()),
                        lineno, cols.back());
    csv.rows.push_back(std::move(cells));
    csv.lines.push_back(lineno);
    csv.columns.push_back(std::move(cols));
  }
  if (!have_header) throw SchemaError(name + ":header", "file is empty");
  // drop header row from the data view
  csv.rows.erase(csv.rows.begin());
  csv.lines.erase(csv.lines.begin());
  csv.columns.erase(csv.columns.begin());
  return csv;
}

void require(bool ok, const std::string& field, const std::string& bound) {
  if (!ok) throw RangeError(field, bound);
}

void require_share(double v, const std::string& field) {
  require(v >= 0.0 && v <= 1.0, field, "must lie in [0, 1]");
}

std::size_t sector_index(const Calibration& cal, const Csv& csv, std::size_t r) {
  const auto& name = csv.rows[r][0];
  for (std::size_t i = 0; i < cal.sectors.size(); ++i)
    if (cal.sectors[i] == name) return i;
  throw SchemaError(csv.file + ":sector", "unknown sector '" + name + "' on line " +
                                              std::to_string(csv.lines[r]));
}

void read_io(Calibration& cal, const fs::path& dir) {
  auto csv = read_csv(dir, "io_matrix.csv", {});
  std::istringstream in(read_file(dir / "io_matrix.csv"));
  std::string header;
  std::getline(in, header);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header.rfind("\xEF\xBB\xBF", 0) == 0) header.erase(0, 3);
  std::vector<std::size_t> cols;
  auto names = split(header, cols);
  if (names.empty() || names[0] != "sector")
    throw SchemaError("io_matrix.csv:header", "first column must be 'sector'");
  names.erase(names.begin());
  if (names.size() != kSectors)
    throw SchemaError("io_matrix.csv:header", "expected " + std::to_string(kSectors) + " sectors");
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) throw SchemaError("io_matrix.csv:header", "duplicate sector");
  cal.sectors = names;
  if (csv.rows.size() != kSectors)
    throw SchemaError("io_matrix.csv", "expected " + std::to_string(kSectors) + " rows");
  cal.economy.io = Matrix(kSectors, kSectors);
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    if (csv.rows[r][0] != names[r])
      throw SchemaError("io_matrix.csv:sector", "row " + std::to_string(r + 1) +
                                                    " must be '" + names[r] + "'");
    for (std::size_t c = 0; c < kSectors; ++c)
      cal.economy.io(r, c) = csv.number(r, c + 1, "io_matrix[" + names[r] + "," + names[c] + "]");
  }
}

void read_final_demand(Calibration& cal, const fs::path& dir) {
  auto csv = read_csv(dir, "final_demand.csv",
                      {"sector", "consumption_mix", "government_mix", "investment_mix",
                       "export_mix", "base_final_demand"});
  auto& e = cal.economy;
  for (auto* v : {&e.consumption_mix, &e.government_mix, &e.investment_mix, &e.export_mix,
                  &e.base_final_demand})
    v->assign(kSectors, 0.0);
  std::set<std::size_t> seen;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto i = sector_index(cal, csv, r);
    if (!seen.insert(i).second)
      throw SchemaError("final_demand.csv:sector", "duplicate sector " + cal.sectors[i]);
    e.consumption_mix[i] = csv.number(r, 1, "consumption_mix");
    e.government_mix[i] = csv.number(r, 2, "government_mix");
    e.investment_mix[i] = csv.number(r, 3, "investment_mix");
    e.export_mix[i] = csv.number(r, 4, "export_mix");
    e.base_final_demand[i] = csv.number(r, 5, "base_final_demand");
  }
  if (seen.size() != kSectors) throw SchemaError("final_demand.csv:sector", "missing sectors");
}

void read_labour(Calibration& cal, const fs::path& dir) {
  auto csv = read_csv(dir, "labour.csv", {"sector", "hours_per_eur"});
  cal.economy.labour_coefficients.assign(kSectors, 0.0);
  std::set<std::size_t> seen;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto i = sector_index(cal, csv, r);
    if (!seen.insert(i).second)
      throw SchemaError("labour.csv:sector", "duplicate sector " + cal.sectors[i]);
    cal.economy.labour_coefficients[i] = csv.number(r, 1, "hours_per_eur");
  }
  if (seen.size() != kSectors) throw SchemaError("labour.csv:sector", "missing sectors");
}

void read_cohorts(Calibration& cal, const fs::path& dir) {
  auto csv = read_csv(dir, "cohorts.csv",
                      {"gender", "age_group", "skill", "population", "participation_rate"});
  std::vector<std::string> bands;
  std::set<int> seen;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto g = gender_from_string(csv.rows[r][0]);
    if (!g) throw SchemaError("cohorts.csv:gender", "unknown gender '" + csv.rows[r][0] + "'");
    const auto s = skill_from_string(csv.rows[r][2]);
    if (!s) throw SchemaError("cohorts.csv:skill", "unknown skill '" + csv.rows[r][2] + "'");
    int band = -1;
    for (std::size_t b = 0; b < bands.size(); ++b)
      if (bands[b] == csv.rows[r][1]) band = static_cast<int>(b);
    if (band < 0) {
      if (bands.size() == kAgeBands)
        throw SchemaError("cohorts.csv:age_group", "more than " + std::to_string(kAgeBands) +
                                                       " age groups");
      bands.push_back(csv.rows[r][1]);
      band = static_cast<int>(bands.size()) - 1;
    }
    const int key = (index(*g) * kAgeBands + band) * kSkills + index(*s);
    if (!seen.insert(key).second)
      throw SchemaError("cohorts.csv", "duplicate cell on line " + std::to_string(csv.lines[r]));
    auto& c = cal.cohorts.at(*g, band, *s);
    c.population = csv.number(r, 3, "population");
    c.participation = csv.number(r, 4, "participation_rate");
  }
  if (seen.size() != kGenders * kAgeBands * kSkills)
    throw SchemaError("cohorts.csv", "expected " + std::to_string(kGenders * kAgeBands * kSkills) +
                                         " gender x age_group x skill cells");
}

void read_time_use(Calibration& cal, const fs::path& dir) {
  auto csv = read_csv(dir, "time_use.csv",
                      {"status", "gender", "paid_work", "unpaid_work", "sleep", "physical_care",
                       "leisure", "residual"});
  std::set<int> seen;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto st = status_from_string(csv.rows[r][0]);
    if (!st) throw SchemaError("time_use.csv:status", "unknown status '" + csv.rows[r][0] + "'");
    const auto g = gender_from_string(csv.rows[r][1]);
    if (!g) throw SchemaError("time_use.csv:gender", "unknown gender '" + csv.rows[r][1] + "'");
    if (!seen.insert(index(*st) * kGenders + index(*g)).second)
      throw SchemaError("time_use.csv", "duplicate profile on line " + std::to_string(csv.lines[r]));
    auto& p = cal.time_use.at(*st, *g);
    for (int c = 0; c < kTimeUseCategories; ++c) p.hours[c] = csv.number(r, 2 + c, "hours");
  }
  if (seen.size() != kStatuses * kGenders)
    throw SchemaError("time_use.csv", "expected one profile per status and gender");
}

void read_intensities(Calibration& cal, const fs::path& dir) {
  auto csv = read_csv(dir, "intensities.csv", {"sector", "pressure", "intensity", "annual_decline"});
  for (auto& p : cal.intensities.pressures) p.sector.assign(kSectors, 0.0);
  std::set<std::pair<int, int>> seen;  // (pressure, sector or -1 for imports)
  std::array<std::optional<double>, kPressures> decline;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto p = pressure_from_string(csv.rows[r][1]);
    if (!p)
      throw SchemaError("intensities.csv:pressure", "unknown pressure '" + csv.rows[r][1] + "'");
    const bool imports = csv.rows[r][0] == "imports";
    const int s = imports ? -1 : static_cast<int>(sector_index(cal, csv, r));
    if (!seen.insert({index(*p), s}).second)
      throw SchemaError("intensities.csv", "duplicate row on line " + std::to_string(csv.lines[r]));
    const std::string field = "intensities.csv:" + std::string(to_string(*p));
    const double v = csv.number(r, 2, "intensity");
    const double d = csv.number(r, 3, "annual_decline");
    if (decline[index(*p)] && *decline[index(*p)] != d)
      throw RangeError(field + ".annual_decline", "must be equal across rows of one pressure");
    decline[index(*p)] = d;
    auto& pi = cal.intensities.at(*p);
    pi.decline = d;
    if (imports)
      pi.imports = v;
    else
      pi.sector[s] = v;
  }
  if (seen.size() != kPressures * (kSectors + 1))
    throw SchemaError("intensities.csv",
                      "expected every pressure for every sector and for imports");
}

void read_unit_costs(Calibration& cal, const fs::path& dir) {
  auto csv = read_csv(dir, "unit_costs.csv", {"component", "pressure", "basis", "eur_per_unit"});
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& id = csv.rows[r][0];
    component_def(id);
    const auto p = pressure_from_string(csv.rows[r][1]);
    if (!p) throw SchemaError("unit_costs.csv:pressure", "unknown pressure '" + csv.rows[r][1] + "'");
    const auto b = basis_from_string(csv.rows[r][2]);
    if (!b) throw SchemaError("unit_costs.csv:basis", "unknown basis '" + csv.rows[r][2] + "'");
    if (cal.unit_costs.count(id)) throw SchemaError("unit_costs.csv", "duplicate component " + id);
    cal.unit_costs[id] = UnitCost{*p, *b, csv.number(r, 3, "eur_per_unit")};
  }
}

std::map<int, double> year_series(ObjectReader& parent, std::string_view key) {
  const auto& j = parent.required(key);
  const auto field = parent.field(key);
  if (!j.is_object()) throw SchemaError(field, "expected an object of year -> value");
  std::map<int, double> out;
  for (const auto& [k, v] : j.items()) {
    int year = 0;
    const auto res = std::from_chars(k.data(), k.data() + k.size(), year);
    if (res.ec != std::errc() || res.ptr != k.data() + k.size())
      throw SchemaError(field + "." + k, "key must be a year");
    if (!v.is_number()) throw SchemaError(field + "." + k, "expected a number");
    out[year] = v.get<double>();
  }
  return out;
}

template <std::size_t N>
std::array<double, N> fixed(ObjectReader& r, std::string_view key) {
  const auto v = r.numbers(key);
  if (v.size() != N)
    throw SchemaError(r.field(key), "expected " + std::to_string(N) + " values");
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

void read_params(Calibration& cal, const fs::path& dir) {
  const auto text = read_file(dir / "params.json");
  json doc;
  try {
    doc = detail::parse_json(text);
  } catch (Error& e) {
    e.add_context("params.json");
    throw;
  }
  ObjectReader root(doc, "params.json");
  cal.base_year = root.integer("base_year");
  cal.last_year = root.integer("last_year");

  {
    auto d = root.object("demographics");
    auto& s = cal.demographics;
    const auto widths = fixed<kAgeBands>(d, "band_width_years");
    for (int a = 0; a < kAgeBands; ++a) {
      require(widths[a] >= 0.0, d.field("band_width_years"), ">= 0");
      s.promotion[a] = widths[a] > 0.0 ? 1.0 / widths[a] : 0.0;
    }
    require(widths[kAgeBands - 1] == 0.0, d.field("band_width_years"),
            "last band must be open (width 0)");
    s.survival = fixed<kAgeBands>(d, "survival");
    s.births_base = d.number("births_base");
    s.births_growth = d.number("births_growth");
    s.birth_female_share = d.number("birth_female_share");
    s.birth_skill_shares = fixed<kSkills>(d, "birth_skill_shares");
    s.base_year = cal.base_year;
    d.finish();
  }
  {
    auto e = root.object("economy");
    auto& p = cal.economy;
    p.productivity_growth = e.number("productivity_growth");
    p.standard_hours = e.number("standard_hours");
    p.hourly_wage = fixed<kSkills>(e, "hourly_wage_by_skill");
    p.wage_dispersion = e.numbers("wage_dispersion");
    p.government_share = e.number("government_share_of_gdp");
    p.import_share = e.number("import_share");
    p.exports_base = e.number("exports_base");
    p.exports_growth = e.number("exports_growth");
    p.capital_output_ratio = e.number("capital_output_ratio");
    p.depreciation_rate = e.number("depreciation_rate");
    p.investment_adjustment = e.number("investment_adjustment");
    p.initial_output_growth = e.number("initial_output_growth");
    p.interest_rate = e.number("interest_rate");
    p.profit_payout = e.number("profit_payout");
    {
      auto o = e.object("ownership_weights");
      p.ownership.employed = {o.number("employed_low"), o.number("employed_mid"),
                              o.number("employed_high")};
      p.ownership.unemployed = o.number("unemployed");
      p.ownership.out_of_labour_force = o.number("out_of_labour_force");
      o.finish();
    }
    p.consumption_propensity = fixed<kDeciles>(e, "consumption_propensity_by_decile");
    e.finish();
  }
  {
    auto f = root.object("fiscal");
    const auto bounds = f.numbers("bracket_lower_bounds");
    const auto rates = f.numbers("marginal_rates");
    if (bounds.size() != rates.size() || bounds.empty())
      throw SchemaError(f.field("marginal_rates"), "needs one rate per bracket lower bound");
    cal.fiscal.baseline.brackets.clear();
    for (std::size_t i = 0; i < bounds.size(); ++i)
      cal.fiscal.baseline.brackets.push_back({bounds[i], rates[i]});
    cal.fiscal.brackets_indexed = f.boolean("brackets_indexed_to_productivity");
    cal.fiscal.baseline.benefit_rate_olf = f.number("benefit_share_olf");
    cal.fiscal.baseline.benefit_rate_unemployed = f.number("benefit_share_unemployed");
    f.finish();
  }
  {
    auto i = root.object("isew");
    auto& p = cal.isew;
    p.defensive = {"individual_consumption", i.number("defensive_share_of_consumption"),
                   i.number("defensive_drift")};
    p.shadow = {"gdp", i.number("shadow_share_of_gdp"), i.number("shadow_drift")};
    p.nondefensive_gov_share = i.number("nondefensive_gov_share");
    p.inequality_floor = i.number("inequality_floor");
    p.extreme_weather = year_series(i, "extreme_weather");
    i.finish();
  }
  {
    auto v = root.object("valuation");
    cal.valuation.unpaid_wage = v.number("unpaid_wage");
    cal.valuation.unpaid_wage_indexed = v.boolean("unpaid_wage_indexed_to_productivity");
    cal.valuation.atkinson_epsilon = v.number("atkinson_epsilon");
    v.finish();
  }
  {
    auto e = root.object("energy");
    cal.energy.nonrenewable = e.number("nonrenewable_share");
    cal.energy.nuclear = e.number("nuclear_share");
    e.finish();
  }
  {
    auto b = root.object("boundaries");
    for (Pressure p : kAllPressures) {
      auto one = b.object(to_string(p));
      auto& bd = cal.boundaries[index(p)];
      bd.per_capita_limit = one.number("per_capita_limit");
      const auto basis = basis_from_string(one.string("basis"));
      if (!basis) throw SchemaError(one.field("basis"), "must be territorial or footprint");
      bd.basis = *basis;
      one.finish();
    }
    b.finish();
  }
  {
    auto t = root.object("thresholds");
    auto& th = cal.thresholds;
    th.max_unemployment_rate = t.number("max_unemployment_rate");
    th.max_atkinson = t.number("max_atkinson");
    th.income_adequacy_line = t.number("income_adequacy_line");
    auto c = t.object("constant_outcomes");
    th.constant_outcomes.clear();
    for (auto id : kSocialOutcomes) {
      if (id == "job_availability" || id == "income_fairness" || id == "income_adequacy") continue;
      th.constant_outcomes[std::string(id)] = c.number(id);
    }
    c.finish();
    t.finish();
  }
  {
    auto e = root.object("emission_targets");
    const auto& j = root.required("emission_targets");
    cal.emission_targets.clear();
    for (const auto& [name, v] : j.items()) {
      (void)v;
      cal.emission_targets[name] = year_series(e, name);
    }
    e.finish();
  }
  root.finish();
}

std::string fingerprint(const fs::path& dir) {
  std::string all;
  for (auto name : kBundleFiles) {
    all += name;
    all.push_back('\0');
    all += read_file(dir / name);
    all.push_back('\0');
  }
  return sha256_hex(all);
}

void require_series(const std::map<int, double>& s, const Calibration& cal,
                    const std::string& field) {
  for (int y = cal.base_year; y <= cal.last_year; ++y) {
    const auto it = s.find(y);
    if (it == s.end()) throw RangeError(field, "missing year " + std::to_string(y));
    require(it->second >= 0.0 && std::isfinite(it->second), field + "." + std::to_string(y), ">= 0");
  }
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xF]);
  }
  return out;
}

void validate_calibration(const Calibration& cal) {
  require(cal.last_year > cal.base_year, "params.json.last_year", "> base_year");

  const auto& e = cal.economy;
  for (std::size_t i = 0; i < kSectors; ++i)
    for (std::size_t j = 0; j < kSectors; ++j)
      require(e.io(i, j) >= 0.0,
              "io_matrix.csv:" + cal.sectors[i] + "," + cal.sectors[j], ">= 0");
  const double rho = spectral_radius(e.io);
  if (rho >= 1.0) throw SingularEconomyError(rho);

  const std::pair<const Vector*, const char*> mixes[] = {{&e.consumption_mix, "consumption_mix"},
                                                         {&e.government_mix, "government_mix"},
                                                         {&e.investment_mix, "investment_mix"},
                                                         {&e.export_mix, "export_mix"}};
  for (const auto& [v, name] : mixes) {
    for (std::size_t i = 0; i < v->size(); ++i)
      require_share((*v)[i], std::string("final_demand.csv:") + name + "." + cal.sectors[i]);
    require(std::abs(sum(*v) - 1.0) <= kShareSumTolerance,
            std::string("final_demand.csv:") + name, "must sum to 1");
  }
  for (std::size_t i = 0; i < kSectors; ++i) {
    require(e.base_final_demand[i] >= 0.0, "final_demand.csv:base_final_demand." + cal.sectors[i],
            ">= 0");
    require(e.labour_coefficients[i] >= 0.0, "labour.csv:hours_per_eur." + cal.sectors[i], ">= 0");
  }

  const std::string ep = "params.json.economy.";
  require(e.productivity_growth > -1.0, ep + "productivity_growth", "> -1");
  require(e.standard_hours > 0.0 && e.standard_hours <= kHoursPerWeek, ep + "standard_hours",
          "in (0, 168]");
  for (double w : e.hourly_wage) require(w > 0.0, ep + "hourly_wage_by_skill", "> 0");
  require(!e.wage_dispersion.empty(), ep + "wage_dispersion", "must be non-empty");
  for (double m : e.wage_dispersion) require(m > 0.0, ep + "wage_dispersion", "> 0");
  require(std::abs(sum(e.wage_dispersion) / e.wage_dispersion.size() - 1.0) <= kShareSumTolerance,
          ep + "wage_dispersion", "must have mean 1");
  require_share(e.government_share, ep + "government_share_of_gdp");
  require_share(e.import_share, ep + "import_share");
  require(e.exports_base >= 0.0, ep + "exports_base", ">= 0");
  require(e.exports_growth > -1.0, ep + "exports_growth", "> -1");
  require(e.capital_output_ratio > 0.0, ep + "capital_output_ratio", "> 0");
  require_share(e.depreciation_rate, ep + "depreciation_rate");
  require_share(e.investment_adjustment, ep + "investment_adjustment");
  require(e.initial_output_growth > -1.0, ep + "initial_output_growth", "> -1");
  require(e.interest_rate >= 0.0, ep + "interest_rate", ">= 0");
  require_share(e.profit_payout, ep + "profit_payout");
  for (double w : e.ownership.employed) require(w >= 0.0, ep + "ownership_weights", ">= 0");
  require(e.ownership.unemployed >= 0.0 && e.ownership.out_of_labour_force >= 0.0,
          ep + "ownership_weights", ">= 0");
  for (double p : e.consumption_propensity)
    require_share(p, ep + "consumption_propensity_by_decile");

  const auto& b = cal.fiscal.baseline.brackets;
  const std::string fp = "params.json.fiscal.";
  require(!b.empty(), fp + "marginal_rates", "needs at least one bracket");
  require(b.front().lower_bound == 0.0, fp + "bracket_lower_bounds", "first bound must be 0");
  for (std::size_t i = 0; i < b.size(); ++i) {
    require(b[i].marginal_rate >= 0.0 && b[i].marginal_rate < 1.0, fp + "marginal_rates",
            "in [0, 1)");
    if (i > 0)
      require(b[i].lower_bound > b[i - 1].lower_bound, fp + "bracket_lower_bounds",
              "must be strictly increasing");
  }
  require(std::abs(b.front().marginal_rate - 0.19) < 1e-12, fp + "marginal_rates",
          "baseline lowest rate must be 0.19");
  require(std::abs(b.back().marginal_rate - 0.47) < 1e-12, fp + "marginal_rates",
          "baseline highest rate must be 0.47");
  require_share(cal.fiscal.baseline.benefit_rate_olf, fp + "benefit_share_olf");
  require_share(cal.fiscal.baseline.benefit_rate_unemployed, fp + "benefit_share_unemployed");

  for (int g = 0; g < kGenders; ++g)
    for (int a = 0; a < kAgeBands; ++a)
      for (int s = 0; s < kSkills; ++s) {
        const auto& c = cal.cohorts.at(g, a, s);
        const std::string cell = "cohorts.csv:" + std::string(to_string(static_cast<Gender>(g))) +
                                 "/" + std::to_string(a) + "/" +
                                 std::string(to_string(static_cast<Skill>(s)));
        require(c.population >= 0.0, cell + ".population", ">= 0");
        require_share(c.participation, cell + ".participation_rate");
        if (a < kFirstAdultBand)
          require(c.participation == 0.0, cell + ".participation_rate",
                  "must be 0 below working age");
      }

  const auto& d = cal.demographics;
  const std::string dp = "params.json.demographics.";
  for (double s : d.survival) require_share(s, dp + "survival");
  require(d.births_base >= 0.0, dp + "births_base", ">= 0");
  require(d.births_growth > -1.0, dp + "births_growth", "> -1");
  require_share(d.birth_female_share, dp + "birth_female_share");
  double bs = 0.0;
  for (double s : d.birth_skill_shares) {
    require_share(s, dp + "birth_skill_shares");
    bs += s;
  }
  require(std::abs(bs - 1.0) <= kShareSumTolerance, dp + "birth_skill_shares", "must sum to 1");

  for (int st = 0; st < kStatuses; ++st)
    for (int g = 0; g < kGenders; ++g) {
      const auto& p = cal.time_use.at(static_cast<Status>(st), static_cast<Gender>(g));
      const std::string row = "time_use.csv:" + std::string(to_string(static_cast<Status>(st))) +
                              "/" + std::string(to_string(static_cast<Gender>(g)));
      for (double h : p.hours) require(h >= 0.0, row, "hours must be >= 0");
      require(std::abs(p.total() - kHoursPerWeek) <= kTimeUseTolerance, row,
              "row must sum to 168 h");
      if (static_cast<Status>(st) != Status::employed)
        require(p[TimeUse::paid_work] == 0.0, row + ".paid_work", "must be 0 when not employed");
    }

  for (Pressure p : kAllPressures) {
    const auto& in = cal.intensities.at(p);
    const std::string f = "intensities.csv:" + std::string(to_string(p));
    for (double v : in.sector) require(v >= 0.0, f + ".intensity", ">= 0");
    require(in.imports >= 0.0, f + ".imports", ">= 0");
    require(in.decline >= 0.0 && in.decline < 1.0, f + ".annual_decline", "in [0, 1)");
    const auto& bd = cal.boundaries[index(p)];
    require(bd.per_capita_limit > 0.0,
            "params.json.boundaries." + std::string(to_string(p)) + ".per_capita_limit", "> 0");
  }
  for (const auto& [id, uc] : cal.unit_costs)
    require(uc.eur_per_unit >= 0.0, "unit_costs.csv:" + id, ">= 0");
  for (const auto& c : kComponents) {
    const bool priced = c.id.find("pollution") != std::string_view::npos ||
                        c.id == "climate_breakdown" || c.id == "nonrenewable_depletion" ||
                        c.id == "nuclear_power";
    if (priced && !cal.unit_costs.count(c.id)) throw MissingUnitCost(std::string(c.id));
  }
  require_share(cal.energy.nonrenewable, "params.json.energy.nonrenewable_share");
  require_share(cal.energy.nuclear, "params.json.energy.nuclear_share");

  const std::string ip = "params.json.isew.";
  require_share(cal.isew.defensive.share_0, ip + "defensive_share_of_consumption");
  require(cal.isew.defensive.drift > -1.0, ip + "defensive_drift", "> -1");
  require_share(cal.isew.shadow.share_0, ip + "shadow_share_of_gdp");
  require(cal.isew.shadow.drift > -1.0, ip + "shadow_drift", "> -1");
  require_share(cal.isew.nondefensive_gov_share, ip + "nondefensive_gov_share");
  require(cal.isew.inequality_floor >= 0.0 && cal.isew.inequality_floor < 1.0,
          ip + "inequality_floor", "in [0, 1)");
  require_series(cal.isew.extreme_weather, cal, ip + "extreme_weather");

  require(cal.valuation.unpaid_wage >= 0.0, "params.json.valuation.unpaid_wage", ">= 0");
  if (!(cal.valuation.atkinson_epsilon > 0.0)) throw EpsilonDomain(cal.valuation.atkinson_epsilon);

  const auto& th = cal.thresholds;
  const std::string tp = "params.json.thresholds.";
  require(th.max_unemployment_rate >= 0.0 && th.max_unemployment_rate < 1.0,
          tp + "max_unemployment_rate", "in [0, 1)");
  require(th.max_atkinson >= 0.0 && th.max_atkinson < 1.0, tp + "max_atkinson", "in [0, 1)");
  require(th.income_adequacy_line > 0.0, tp + "income_adequacy_line", "> 0");
  for (const auto& [id, v] : th.constant_outcomes)
    require(v >= 0.0, tp + "constant_outcomes." + id, ">= 0");

  for (const auto& [name, s] : cal.emission_targets)
    require_series(s, cal, "params.json.emission_targets." + name);
}

Calibration parse_calibration(const fs::path& bundle) {
  if (!fs::is_directory(bundle))
    throw InputError("calibration bundle " + bundle.string() + " is not a directory");
  Calibration cal;
  try {
    read_io(cal, bundle);
    read_final_demand(cal, bundle);
    read_labour(cal, bundle);
    read_cohorts(cal, bundle);
    read_time_use(cal, bundle);
    read_intensities(cal, bundle);
    read_unit_costs(cal, bundle);
    read_params(cal, bundle);
    cal.intensities.base_year = cal.base_year;
    validate_calibration(cal);
    cal.fingerprint = fingerprint(bundle);
  } catch (Error& e) {
    e.add_context(bundle.string());
    throw;
  }
  return cal;
}

ComponentMode component_mode(const Calibration& cal, std::string_view id) {
  const auto& def = component_def(id);
  if (def.id == "defensive_expenditure" || def.id == "dir_expenditure_restored")
    return cal.isew.defensive;
  if (def.id == "shadow_economy") return cal.isew.shadow;
  if (def.id == "extreme_weather") return Exogenous{cal.isew.extreme_weather};
  return Endogenous{};
}

void check_horizon(const Calibration& cal, const ScenarioSpec& spec) {
  require(spec.horizon.start_year >= cal.base_year, "horizon.start_year",
          ">= calibration base year " + std::to_string(cal.base_year));
  require(spec.horizon.end_year <= cal.last_year, "horizon.end_year",
          "<= calibration last year " + std::to_string(cal.last_year));
  require(spec.phase_window.start >= cal.base_year && spec.phase_window.end <= cal.last_year,
          "phase_window", "must lie inside the calibration years");
  if (spec.carbon_tax && !cal.emission_targets.count(spec.carbon_tax->target_series_ref))
    throw SchemaError("carbon_tax.target_series_ref",
                      "no emission target series '" + spec.carbon_tax->target_series_ref + "'");
}

}  // namespace sesim
