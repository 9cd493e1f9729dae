#include "fuzzysoft/arith.hpp"

#include <algorithm>

namespace fuzzysoft {

ArithResult::ArithResult(std::vector<std::string> universe,
                         std::vector<std::string> parameters,
                         std::vector<std::vector<double>> grid,
                         std::vector<std::vector<std::uint8_t>> defined)
    : universe_(std::move(universe)),
      parameters_(std::move(parameters)),
      grid_(std::move(grid)),
      mask_(std::move(defined)) {
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    for (std::size_t t = 0; t < grid_[i].size(); ++t) {
      if (mask_[i][t] && !(grid_[i][t] >= 0.0 && grid_[i][t] <= 1.0)) {
        throw DomainError("arithmetic produced a value outside [0,1]");
      }
    }
  }
}

ArithResult ArithResult::lift(const FuzzySoftSet& f) {
  std::vector<std::vector<double>> grid(f.parameter_count());
  std::vector<std::vector<std::uint8_t>> mask(
      f.parameter_count(),
      std::vector<std::uint8_t>(f.object_count(), std::uint8_t{1}));
  for (std::size_t i = 0; i < f.parameter_count(); ++i) {
    grid[i].reserve(f.object_count());
    for (std::size_t t = 0; t < f.object_count(); ++t) {
      grid[i].push_back(f.value(i, t));
    }
  }
  return ArithResult(f.universe(), f.parameters(), std::move(grid),
                     std::move(mask));
}

bool ArithResult::all_defined() const { return !first_undefined().has_value(); }

std::optional<CellRef> ArithResult::first_undefined() const {
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    for (std::size_t t = 0; t < mask_[i].size(); ++t) {
      if (!mask_[i][t]) return CellRef{i, t};
    }
  }
  return std::nullopt;
}

namespace {

// op(a, b) -> (value, defined); inputs' masks are combined first.
template <typename Op>
ArithResult combine(const ArithResult& f, const ArithResult& g, Op op,
                    const char* name) {
  if (!f.same_frame(g)) {
    throw DomainError(std::string(name) +
                      " requires identical universe and parameter lists");
  }
  const std::size_t n = f.parameter_count(), m = f.object_count();
  std::vector<std::vector<double>> grid(n, std::vector<double>(m, 0.0));
  std::vector<std::vector<std::uint8_t>> mask(
      n, std::vector<std::uint8_t>(m, std::uint8_t{0}));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < m; ++t) {
      if (!f.defined(i, t) || !g.defined(i, t)) continue;
      auto [v, ok] = op(f.value(i, t), g.value(i, t));
      grid[i][t] = ok ? v : 0.0;
      mask[i][t] = ok ? 1 : 0;
    }
  }
  return ArithResult(f.universe(), f.parameters(), std::move(grid),
                     std::move(mask));
}

std::pair<double, bool> cell_add(double a, double b) {
  return {a + b - a * b, true};
}
std::pair<double, bool> cell_sub(double a, double b) { return {a * b, true}; }
std::pair<double, bool> cell_mul(double a, double b) {
  const double mx = std::max(a, b);
  if (mx == 0.0) return {0.0, false};
  return {a * b / mx, true};
}
std::pair<double, bool> cell_div(double a, double b) {
  const double mx = std::max(a, b);
  if (mx == 0.0) return {0.0, false};
  return {a / mx, true};
}
std::pair<double, bool> cell_max(double a, double b) {
  return {std::max(a, b), true};
}
std::pair<double, bool> cell_min(double a, double b) {
  return {std::min(a, b), true};
}

}  // namespace

ArithResult masked_add(const ArithResult& f, const ArithResult& g) {
  return combine(f, g, cell_add, "add");
}
ArithResult masked_sub(const ArithResult& f, const ArithResult& g) {
  return combine(f, g, cell_sub, "sub");
}
ArithResult masked_mul(const ArithResult& f, const ArithResult& g) {
  return combine(f, g, cell_mul, "mul");
}
ArithResult masked_div(const ArithResult& f, const ArithResult& g) {
  return combine(f, g, cell_div, "div");
}
ArithResult masked_union(const ArithResult& f, const ArithResult& g) {
  return combine(f, g, cell_max, "union");
}
ArithResult masked_intersection(const ArithResult& f, const ArithResult& g) {
  return combine(f, g, cell_min, "intersection");
}

ArithResult masked_complement(const ArithResult& f) {
  const std::size_t n = f.parameter_count(), m = f.object_count();
  std::vector<std::vector<double>> grid(n, std::vector<double>(m, 0.0));
  std::vector<std::vector<std::uint8_t>> mask(
      n, std::vector<std::uint8_t>(m, std::uint8_t{0}));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < m; ++t) {
      if (!f.defined(i, t)) continue;
      grid[i][t] = 1.0 - f.value(i, t);
      mask[i][t] = 1;
    }
  }
  return ArithResult(f.universe(), f.parameters(), std::move(grid),
                     std::move(mask));
}

ArithResult add(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  return masked_add(ArithResult::lift(f), ArithResult::lift(g));
}
ArithResult sub(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  return masked_sub(ArithResult::lift(f), ArithResult::lift(g));
}
ArithResult mul(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  return masked_mul(ArithResult::lift(f), ArithResult::lift(g));
}
ArithResult div(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  return masked_div(ArithResult::lift(f), ArithResult::lift(g));
}

FuzzySoftSet to_fuzzy_soft_set(const ArithResult& r) {
  if (auto c = r.first_undefined()) {
    throw DomainError("undefined cell at (" + r.parameters()[c->param] + ", " +
                      r.universe()[c->object] + ")");
  }
  std::vector<std::vector<double>> grid(r.parameter_count());
  for (std::size_t i = 0; i < r.parameter_count(); ++i) {
    grid[i].reserve(r.object_count());
    for (std::size_t t = 0; t < r.object_count(); ++t) {
      grid[i].push_back(r.value(i, t));
    }
  }
  return FuzzySoftSet(r.universe(), r.parameters(), grid);
}

bool equal_on_defined(const ArithResult& a, const ArithResult& b, double tol,
                      CellRef* mismatch) {
  if (!a.same_frame(b)) return false;
  for (std::size_t i = 0; i < a.parameter_count(); ++i) {
    for (std::size_t t = 0; t < a.object_count(); ++t) {
      if (!a.defined(i, t) || !b.defined(i, t)) continue;
      if (!approx_equal(a.value(i, t), b.value(i, t), tol)) {
        if (mismatch) *mismatch = CellRef{i, t};
        return false;
      }
    }
  }
  return true;
}

bool masks_equal(const ArithResult& a, const ArithResult& b) {
  if (!a.same_frame(b)) return false;
  for (std::size_t i = 0; i < a.parameter_count(); ++i) {
    for (std::size_t t = 0; t < a.object_count(); ++t) {
      if (a.defined(i, t) != b.defined(i, t)) return false;
    }
  }
  return true;
}

nlohmann::ordered_json to_json(const ArithResult& r) {
  nlohmann::ordered_json doc;
  doc["universe"] = r.universe();
  doc["parameters"] = r.parameters();
  auto rows = nlohmann::ordered_json::array();
  auto mask = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.parameter_count(); ++i) {
    auto row = nlohmann::ordered_json::array();
    auto mrow = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < r.object_count(); ++t) {
      row.push_back(r.value(i, t));
      mrow.push_back(r.defined(i, t));
    }
    rows.push_back(std::move(row));
    mask.push_back(std::move(mrow));
  }
  doc["memberships"] = std::move(rows);
  doc["defined"] = std::move(mask);
  return doc;
}

}  // namespace fuzzysoft
