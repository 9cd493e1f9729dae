#include "fuzzysoft/core.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fuzzysoft {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* kind) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw ParseError(std::string("duplicate ") + kind + " label '" + l + "'");
    }
  }
}

}  // namespace

FuzzySoftSet::FuzzySoftSet(std::vector<std::string> universe,
                           std::vector<std::string> parameters,
                           const std::vector<std::vector<double>>& memberships)
    : universe_(std::move(universe)), parameters_(std::move(parameters)) {
  if (universe_.empty()) throw ParseError("empty universe");
  if (parameters_.empty()) throw ParseError("empty parameter list");
  require_unique(universe_, "object");
  require_unique(parameters_, "parameter");
  if (memberships.size() != parameters_.size()) {
    throw ParseError("memberships has " + std::to_string(memberships.size()) +
                     " rows, expected " + std::to_string(parameters_.size()));
  }
  grid_.reserve(memberships.size());
  for (std::size_t i = 0; i < memberships.size(); ++i) {
    const auto& in = memberships[i];
    if (in.size() != universe_.size()) {
      throw ParseError("row " + std::to_string(i) + " has " +
                       std::to_string(in.size()) + " cells, expected " +
                       std::to_string(universe_.size()));
    }
    Row row;
    row.reserve(in.size());
    for (std::size_t t = 0; t < in.size(); ++t) {
      if (!(in[t] >= 0.0 && in[t] <= 1.0)) {
        throw ParseError("memberships[" + std::to_string(i) + "][" +
                         std::to_string(t) + "] = " + std::to_string(in[t]) +
                         " outside [0,1]");
      }
      row.emplace_back(in[t]);
    }
    grid_.push_back(std::move(row));
  }
}

std::size_t FuzzySoftSet::parameter_index(std::string_view label) const {
  auto it = std::find(parameters_.begin(), parameters_.end(), label);
  if (it == parameters_.end()) {
    throw DomainError("unknown parameter '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - parameters_.begin());
}

bool FuzzySoftSet::same_frame(const FuzzySoftSet& other) const {
  return universe_ == other.universe_ && parameters_ == other.parameters_;
}

FuzzySoftSet FuzzySoftSet::uniform(std::vector<std::string> universe,
                                   std::vector<std::string> parameters,
                                   double v) {
  std::vector<std::vector<double>> grid(
      parameters.size(), std::vector<double>(universe.size(), v));
  return FuzzySoftSet(std::move(universe), std::move(parameters), grid);
}

FuzzySoftSet parse_set(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("set document must be a JSON object");
  for (const char* key : {"universe", "parameters", "memberships"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("set document missing '") + key + "'");
    }
  }
  auto labels = [&](const char* key) {
    std::vector<std::string> out;
    const auto& arr = doc.at(key);
    if (!arr.is_array()) throw ParseError(std::string(key) + " must be an array");
    for (const auto& x : arr) {
      if (!x.is_string()) throw ParseError(std::string(key) + " entries must be strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  };
  const auto& rows = doc.at("memberships");
  if (!rows.is_array()) throw ParseError("memberships must be an array of rows");
  std::vector<std::vector<double>> grid;
  for (const auto& r : rows) {
    if (!r.is_array()) throw ParseError("memberships rows must be arrays");
    std::vector<double> row;
    for (const auto& x : r) {
      if (!x.is_number()) throw ParseError("membership cells must be numbers");
      row.push_back(x.get<double>());
    }
    grid.push_back(std::move(row));
  }
  return FuzzySoftSet(labels("universe"), labels("parameters"), grid);
}

FuzzySoftSet parse_set(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_set(doc);
}

FuzzySoftSet load_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_set(std::string_view(buf.str()));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json to_json(const FuzzySoftSet& set) {
  nlohmann::ordered_json doc;
  doc["universe"] = set.universe();
  doc["parameters"] = set.parameters();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < set.parameter_count(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < set.object_count(); ++t) {
      row.push_back(set.value(i, t));
    }
    rows.push_back(std::move(row));
  }
  doc["memberships"] = std::move(rows);
  return doc;
}

namespace {

template <typename Op>
FuzzySoftSet cellwise(const FuzzySoftSet& f, const FuzzySoftSet& g, Op op,
                      const char* name) {
  if (!f.same_frame(g)) {
    throw DomainError(std::string(name) +
                      " requires identical universe and parameter lists");
  }
  std::vector<std::vector<double>> grid(f.parameter_count());
  for (std::size_t i = 0; i < f.parameter_count(); ++i) {
    grid[i].reserve(f.object_count());
    for (std::size_t t = 0; t < f.object_count(); ++t) {
      grid[i].push_back(op(f.value(i, t), g.value(i, t)));
    }
  }
  return FuzzySoftSet(f.universe(), f.parameters(), grid);
}

}  // namespace

FuzzySoftSet set_union(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  return cellwise(f, g, [](double a, double b) { return std::max(a, b); },
                  "union");
}

FuzzySoftSet set_intersection(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  return cellwise(f, g, [](double a, double b) { return std::min(a, b); },
                  "intersection");
}

FuzzySoftSet complement(const FuzzySoftSet& f) {
  std::vector<std::vector<double>> grid(f.parameter_count());
  for (std::size_t i = 0; i < f.parameter_count(); ++i) {
    grid[i].reserve(f.object_count());
    for (std::size_t t = 0; t < f.object_count(); ++t) {
      grid[i].push_back(1.0 - f.value(i, t));
    }
  }
  return FuzzySoftSet(f.universe(), f.parameters(), grid);
}

ObjectProfile profile(const FuzzySoftSet& f) {
  ObjectProfile p;
  p.values.reserve(f.object_count());
  for (std::size_t t = 0; t < f.object_count(); ++t) {
    double m = f.value(0, t);
    for (std::size_t i = 1; i < f.parameter_count(); ++i) {
      m = std::min(m, f.value(i, t));
    }
    p.values.emplace_back(m);
  }
  return p;
}

SoftPoint soft_point(const FuzzySoftSet& f, std::string_view parameter) {
  std::size_t i = f.parameter_index(parameter);
  return SoftPoint{std::string(parameter), f.row(i)};
}

bool subset_of(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  if (!f.same_frame(g)) {
    throw DomainError("subset check requires identical universe and parameter lists");
  }
  for (std::size_t i = 0; i < f.parameter_count(); ++i) {
    for (std::size_t t = 0; t < f.object_count(); ++t) {
      if (f.value(i, t) > g.value(i, t) + kEqTol) return false;
    }
  }
  return true;
}

bool sets_equal(const FuzzySoftSet& f, const FuzzySoftSet& g, double tol) {
  if (!f.same_frame(g)) return false;
  for (std::size_t i = 0; i < f.parameter_count(); ++i) {
    for (std::size_t t = 0; t < f.object_count(); ++t) {
      if (!approx_equal(f.value(i, t), g.value(i, t), tol)) return false;
    }
  }
  return true;
}

}  // namespace fuzzysoft
