#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fuzzysoft {

// Two membership values are considered equal when they differ by at most
// kEqTol. Comparisons against the paper's two-decimal tables use kPaperTol
// to absorb print rounding.
inline constexpr double kEqTol = 1e-9;
inline constexpr double kPaperTol = 5e-3;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable/unwritable paths. The CLI maps these to usage errors (exit 2).
class FileError : public Error {
 public:
  using Error::Error;
};

// Malformed interchange documents (bad schema, ragged rows, out-of-range
// memberships, duplicate labels).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Violated operation preconditions: mismatched frames, unknown labels,
// undefined cells, radius out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

inline bool approx_equal(double a, double b, double tol = kEqTol) {
  return a >= b - tol && a <= b + tol;
}

// A grade of membership, constrained to [0,1] at construction.
class Membership {
 public:
  Membership() = default;
  explicit Membership(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("membership value " + std::to_string(v) +
                        " outside [0,1]");
    }
  }
  operator double() const { return v_; }

 private:
  double v_ = 0.0;
};

using Row = std::vector<Membership>;

// One parameter slice of a fuzzy soft set: the paper's e_i(F_A).
struct SoftPoint {
  std::string parameter;
  Row row;
};

// Per-object minimum across all parameter rows; what the distance compares.
struct ObjectProfile {
  Row values;
};

// A fuzzy soft set over a finite universe: an ordered parameter list, an
// ordered object list, and a parameters x objects membership grid. Object
// order is load-bearing (convexity is defined over object positions);
// operations never reorder labels. Instances are immutable after
// construction.
class FuzzySoftSet {
 public:
  FuzzySoftSet(std::vector<std::string> universe,
               std::vector<std::string> parameters,
               const std::vector<std::vector<double>>& memberships);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  std::size_t object_count() const { return universe_.size(); }
  std::size_t parameter_count() const { return parameters_.size(); }

  double value(std::size_t param, std::size_t object) const {
    return grid_[param][object];
  }
  const Row& row(std::size_t param) const { return grid_[param]; }

  // Index of a parameter label; throws DomainError when unknown.
  std::size_t parameter_index(std::string_view label) const;

  // True when the other set has identical universe and parameter lists,
  // labels and order both.
  bool same_frame(const FuzzySoftSet& other) const;

  // Constant-valued set over the given frame; v=0 is the paper's phi,
  // v=1 its E-tilde.
  static FuzzySoftSet uniform(std::vector<std::string> universe,
                              std::vector<std::string> parameters, double v);

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  std::vector<Row> grid_;
};

// Interchange format: {"universe": [...], "parameters": [...],
// "memberships": [[...], ...]}. parse and serialize round-trip.
FuzzySoftSet parse_set(const nlohmann::json& doc);
FuzzySoftSet parse_set(std::string_view text);
FuzzySoftSet load_set(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const FuzzySoftSet& set);

// Cell-wise max / min / 1-minus. Binary operations require identical frames.
FuzzySoftSet set_union(const FuzzySoftSet& f, const FuzzySoftSet& g);
FuzzySoftSet set_intersection(const FuzzySoftSet& f, const FuzzySoftSet& g);
FuzzySoftSet complement(const FuzzySoftSet& f);

ObjectProfile profile(const FuzzySoftSet& f);
SoftPoint soft_point(const FuzzySoftSet& f, std::string_view parameter);

// Cell-wise containment within kEqTol.
bool subset_of(const FuzzySoftSet& f, const FuzzySoftSet& g);
// Same frame and cell-wise equal within tol.
bool sets_equal(const FuzzySoftSet& f, const FuzzySoftSet& g,
                double tol = kEqTol);

}  // namespace fuzzysoft
