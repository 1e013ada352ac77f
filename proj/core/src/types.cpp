#include "sesim/types.hpp"

#include <cassert>
#include <numeric>

namespace sesim {

namespace {

constexpr std::array<std::string_view, 2> kGenderNames = {"F", "M"};
constexpr std::array<std::string_view, 3> kSkillNames = {"low", "mid", "high"};
constexpr std::array<std::string_view, 3> kStatusNames = {"employed", "unemployed",
                                                          "out_of_labour_force"};
constexpr std::array<std::string_view, 5> kPressureNames = {
    "co2", "nitrogen", "air_pollutants", "primary_energy", "land_system"};
constexpr std::array<std::string_view, 2> kBasisNames = {"territorial", "footprint"};

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::string_view, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == s) return static_cast<E>(i);
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Gender g) { return kGenderNames[index(g)]; }
std::string_view to_string(Skill s) { return kSkillNames[index(s)]; }
std::string_view to_string(Status s) { return kStatusNames[index(s)]; }
std::string_view to_string(Pressure p) { return kPressureNames[index(p)]; }
std::string_view to_string(Basis b) { return kBasisNames[static_cast<int>(b)]; }

std::optional<Gender> gender_from_string(std::string_view s) {
  return lookup<Gender>(kGenderNames, s);
}
std::optional<Skill> skill_from_string(std::string_view s) { return lookup<Skill>(kSkillNames, s); }
std::optional<Status> status_from_string(std::string_view s) {
  return lookup<Status>(kStatusNames, s);
}
std::optional<Pressure> pressure_from_string(std::string_view s) {
  return lookup<Pressure>(kPressureNames, s);
}
std::optional<Basis> basis_from_string(std::string_view s) { return lookup<Basis>(kBasisNames, s); }

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::operator*(const Vector& v) const {
  assert(v.size() == cols_);
  Vector out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += data_[i * cols_ + j] * v[j];
    out[i] = acc;
  }
  return out;
}

double sum(const Vector& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace sesim
