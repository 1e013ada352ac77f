#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sesim::test {

const Calibration& reference() {
  static const Calibration cal = parse_calibration(kReferenceDir);
  return cal;
}

ScenarioSpec scenario(const std::string& name) {
  return load_scenario(kScenarioDir / (name + ".json"));
}

const std::map<std::string, Trajectory>& reference_runs() {
  static const std::map<std::string, Trajectory> runs = [] {
    std::map<std::string, Trajectory> out;
    for (const auto& n : kScenarioNames) out[n] = run_scenario(scenario(n), reference());
    return out;
  }();
  return runs;
}

std::filesystem::path copy_bundle(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("sesim_bundle_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  for (auto name : kBundleFiles)
    std::filesystem::copy_file(kReferenceDir / name, dir / name);
  return dir;
}

void replace_in_file(const std::filesystem::path& file, const std::string& from,
                     const std::string& to) {
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  const auto pos = text.find(from);
  if (pos == std::string::npos) throw std::runtime_error("pattern not found in " + file.string());
  text.replace(pos, from.size(), to);
  std::ofstream(file, std::ios::trunc) << text;
}

}  // namespace sesim::test
