#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzzysoft/core.hpp"

namespace fuzzysoft {

struct CellRef {
  std::size_t param = 0;
  std::size_t object = 0;
};

// Result of an arithmetic operation: a membership grid plus a per-cell
// defined mask. Multiplication and division leave a cell undefined exactly
// where both operands are 0 (denominator max = 0); addition and
// subtraction are total. Undefined cells carry value 0 as a placeholder
// that must not be read as a membership.
class ArithResult {
 public:
  ArithResult(std::vector<std::string> universe,
              std::vector<std::string> parameters,
              std::vector<std::vector<double>> grid,
              std::vector<std::vector<std::uint8_t>> defined);

  // All-defined lift of a plain set, for chaining masked operations.
  static ArithResult lift(const FuzzySoftSet& f);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  std::size_t object_count() const { return universe_.size(); }
  std::size_t parameter_count() const { return parameters_.size(); }

  double value(std::size_t i, std::size_t t) const { return grid_[i][t]; }
  bool defined(std::size_t i, std::size_t t) const { return mask_[i][t] != 0; }

  bool all_defined() const;
  std::optional<CellRef> first_undefined() const;
  bool same_frame(const ArithResult& other) const {
    return universe_ == other.universe_ && parameters_ == other.parameters_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  std::vector<std::vector<double>> grid_;
  std::vector<std::vector<std::uint8_t>> mask_;
};

// The four operations, cell-wise over identical frames:
//   add: a + b - ab            (total)
//   sub: ab                    (total)
//   mul: ab / max(a,b)         (undefined at max = 0)
//   div: a / max(a,b)          (undefined at max = 0)
// mul deliberately computes the quotient form; its equality with min(a,b)
// on defined cells is a tested identity, not an implementation shortcut.
ArithResult add(const FuzzySoftSet& f, const FuzzySoftSet& g);
ArithResult sub(const FuzzySoftSet& f, const FuzzySoftSet& g);
ArithResult mul(const FuzzySoftSet& f, const FuzzySoftSet& g);
ArithResult div(const FuzzySoftSet& f, const FuzzySoftSet& g);

// Masked variants propagate undefinedness: an output cell is defined only
// where both inputs are, and (mul/div) where the denominator is nonzero.
ArithResult masked_add(const ArithResult& f, const ArithResult& g);
ArithResult masked_sub(const ArithResult& f, const ArithResult& g);
ArithResult masked_mul(const ArithResult& f, const ArithResult& g);
ArithResult masked_div(const ArithResult& f, const ArithResult& g);
ArithResult masked_union(const ArithResult& f, const ArithResult& g);
ArithResult masked_intersection(const ArithResult& f, const ArithResult& g);
ArithResult masked_complement(const ArithResult& f);

// Strips the mask; throws DomainError naming the first undefined cell's
// labels when one exists.
FuzzySoftSet to_fuzzy_soft_set(const ArithResult& r);

// Cell-wise equality restricted to cells defined on both sides.
bool equal_on_defined(const ArithResult& a, const ArithResult& b,
                      double tol = kEqTol, CellRef* mismatch = nullptr);
bool masks_equal(const ArithResult& a, const ArithResult& b);

// {"universe", "parameters", "memberships", "defined"}.
nlohmann::ordered_json to_json(const ArithResult& r);

}  // namespace fuzzysoft
