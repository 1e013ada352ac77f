#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "sesim/engine.hpp"

namespace sesim::test {

inline const std::filesystem::path kReferenceDir = SESIM_REFERENCE_DIR;
inline const std::filesystem::path kScenarioDir = SESIM_SCENARIO_DIR;

inline const std::vector<std::string> kScenarioNames = {"bau", "carbon_tax", "redistribution",
                                                        "wtr", "all_three"};

const Calibration& reference();
ScenarioSpec scenario(const std::string& name);

// Reference trajectories, computed once per process.
const std::map<std::string, Trajectory>& reference_runs();

// Scratch copy of the reference bundle that tests may edit.
std::filesystem::path copy_bundle(const std::string& tag);
void replace_in_file(const std::filesystem::path& file, const std::string& from,
                     const std::string& to);

}  // namespace sesim::test
