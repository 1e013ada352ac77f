#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace sesim {

inline constexpr int kSectors = 6;
inline constexpr int kGenders = 2;
inline constexpr int kAgeBands = 10;
inline constexpr int kSkills = 3;
inline constexpr int kStatuses = 3;
inline constexpr int kPressures = 5;
inline constexpr int kDeciles = 10;
inline constexpr int kFirstAdultBand = 1;  // band 0 holds children

inline constexpr double kWeeksPerYear = 52.0;
inline constexpr double kHoursPerWeek = 168.0;

enum class Gender { female, male };
enum class Skill { low, mid, high };
enum class Status { employed, unemployed, out_of_labour_force };
enum class Pressure { co2, nitrogen, air_pollutants, primary_energy, land_system };
enum class Basis { territorial, footprint };

inline constexpr std::array<Pressure, kPressures> kAllPressures = {
    Pressure::co2, Pressure::nitrogen, Pressure::air_pollutants, Pressure::primary_energy,
    Pressure::land_system};

std::string_view to_string(Gender g);
std::string_view to_string(Skill s);
std::string_view to_string(Status s);
std::string_view to_string(Pressure p);
std::string_view to_string(Basis b);

std::optional<Gender> gender_from_string(std::string_view s);
std::optional<Skill> skill_from_string(std::string_view s);
std::optional<Status> status_from_string(std::string_view s);
std::optional<Pressure> pressure_from_string(std::string_view s);
std::optional<Basis> basis_from_string(std::string_view s);

constexpr int index(Gender g) { return static_cast<int>(g); }
constexpr int index(Skill s) { return static_cast<int>(s); }
constexpr int index(Status s) { return static_cast<int>(s); }
constexpr int index(Pressure p) { return static_cast<int>(p); }

using Vector = std::vector<double>;

// Dense row-major square or rectangular matrix. Only what the model needs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double sum(const Vector& v);

}  // namespace sesim
