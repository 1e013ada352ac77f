#pragma once

#include <set>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sesim/errors.hpp"

namespace sesim::detail {

using json = nlohmann::json;

json parse_json(std::string_view text);

// Strict reader over one JSON object: every key must be consumed.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path);

  std::string field(std::string_view key) const;
  bool has(std::string_view key) const;
  const json& required(std::string_view key);

  double number(std::string_view key);
  int integer(std::string_view key);
  std::string string(std::string_view key);
  bool boolean(std::string_view key);
  ObjectReader object(std::string_view key);
  std::vector<double> numbers(std::string_view key);

  void finish() const;

 private:
  const json& j_;
  std::string path_;
  std::set<std::string, std::less<>> used_;
};

}  // namespace sesim::detail
