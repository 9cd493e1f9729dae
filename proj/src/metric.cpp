#include "fuzzysoft/metric.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fuzzysoft {

namespace {

double row_distance(const Row& a, const Row& b) {
  double best = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    best = std::max(best, std::abs(a[t] - b[t]));
  }
  return best;
}

void check_frames(const FuzzySoftSet& f, const FuzzySoftSet& g,
                  const char* name) {
  if (!f.same_frame(g)) {
    throw DomainError(std::string(name) +
                      " requires identical universe and parameter lists");
  }
}

}  // namespace

double distance(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  check_frames(f, g, "distance");
  return row_distance(profile(f).values, profile(g).values);
}

double point_set_distance(const SoftPoint& pt, const FuzzySoftSet& g) {
  if (pt.row.size() != g.object_count()) {
    throw DomainError("soft point length does not match the set's universe");
  }
  return row_distance(pt.row, profile(g).values);
}

double point_point_distance(const SoftPoint& p, const SoftPoint& q) {
  if (p.row.size() != q.row.size()) {
    throw DomainError("soft points have different lengths");
  }
  return row_distance(p.row, q.row);
}

double diameter(const FuzzySoftSet& f) {
  double best = 0.0;
  for (std::size_t i = 0; i < f.parameter_count(); ++i) {
    for (std::size_t j = i + 1; j < f.parameter_count(); ++j) {
      best = std::max(best, row_distance(f.row(i), f.row(j)));
    }
  }
  return best;
}

double distance_to_complement(const FuzzySoftSet& f) {
  return distance(f, complement(f));
}

namespace {

std::vector<std::size_t> sphere(const FuzzySoftSet& center, double r,
                                std::span<const FuzzySoftSet> collection,
                                bool closed) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("sphere radius must lie in (0,1)");
  }
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < collection.size(); ++k) {
    const double d = distance(center, collection[k]);
    if (closed ? d <= r : d < r) members.push_back(k);
  }
  return members;
}

}  // namespace

std::vector<std::size_t> open_sphere(const FuzzySoftSet& center, double r,
                                     std::span<const FuzzySoftSet> collection) {
  return sphere(center, r, collection, /*closed=*/false);
}

std::vector<std::size_t> closed_sphere(const FuzzySoftSet& center, double r,
                                       std::span<const FuzzySoftSet> collection) {
  return sphere(center, r, collection, /*closed=*/true);
}

NeighborhoodResult is_neighborhood(const std::vector<std::size_t>& sub,
                                   std::size_t center,
                                   std::span<const FuzzySoftSet> collection) {
  if (center >= collection.size()) {
    throw DomainError("neighborhood center is not in the collection");
  }
  for (std::size_t k : sub) {
    if (k >= collection.size()) {
      throw DomainError("subclass member is not in the collection");
    }
  }
  // Candidate radii: the distances from the center, midpoints between
  // consecutive spectrum values, and a midpoint toward 1, all restricted to
  // (0,1). The sphere predicate is constant between spectrum values, so
  // this scan decides the existential exactly.
  std::set<double> spectrum;
  for (const auto& g : collection) {
    spectrum.insert(distance(collection[center], g));
  }
  std::set<double> candidates;
  double prev = 0.0;
  for (double d : spectrum) {
    if (d > 0.0 && d < 1.0) candidates.insert(d);
    const double mid = (prev + d) / 2.0;
    if (mid > 0.0 && mid < 1.0) candidates.insert(mid);
    prev = d;
  }
  const double top = (prev + 1.0) / 2.0;
  if (top > 0.0 && top < 1.0) candidates.insert(top);
  if (candidates.empty()) candidates.insert(0.5);

  const std::vector<std::size_t> sorted_sub = [&] {
    auto s = sub;
    std::sort(s.begin(), s.end());
    return s;
  }();
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const auto ball = open_sphere(collection[center], *it, collection);
    if (std::includes(sorted_sub.begin(), sorted_sub.end(), ball.begin(),
                      ball.end())) {
      return NeighborhoodResult{true, *it};
    }
  }
  return NeighborhoodResult{false, 0.0};
}

bool is_open(const std::vector<std::size_t>& sub,
             std::span<const FuzzySoftSet> collection) {
  for (std::size_t k : sub) {
    if (!is_neighborhood(sub, k, collection).verdict) return false;
  }
  return true;
}

AxiomReport check_metric_axioms(std::span<const FuzzySoftSet> collection) {
  AxiomReport report;
  const std::size_t n = collection.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = distance(collection[i], collection[j]);
    }
  }
  for (std::size_t i = 0; i < n && report.nonnegativity; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] < 0.0) {
        report.nonnegativity = false;
        report.nonnegativity_witness = AxiomViolation{i, j, 0, d[i][j], 0.0};
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n && report.identity_on_profiles; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool profiles_equal =
          row_distance(profile(collection[i]).values,
                       profile(collection[j]).values) <= kEqTol;
      const bool zero = d[i][j] <= kEqTol;
      if (zero != profiles_equal) {
        report.identity_on_profiles = false;
        report.identity_witness = AxiomViolation{i, j, 0, d[i][j], 0.0};
        break;
      }
      if (zero && !sets_equal(collection[i], collection[j]) &&
          !report.distinct_sets_at_zero) {
        report.distinct_sets_at_zero = true;
        report.pseudometric_pair = {i, j};
      }
    }
  }
  for (std::size_t i = 0; i < n && report.symmetry; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!approx_equal(d[i][j], d[j][i])) {
        report.symmetry = false;
        report.symmetry_witness = AxiomViolation{i, j, 0, d[i][j], d[j][i]};
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n && report.triangle; ++i) {
    for (std::size_t j = 0; j < n && report.triangle; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d[i][k] > d[i][j] + d[j][k] + kEqTol) {
          report.triangle = false;
          report.triangle_witness =
              AxiomViolation{i, j, k, d[i][k], d[i][j] + d[j][k]};
          break;
        }
      }
    }
  }
  report.structure = report.distinct_sets_at_zero
                         ? "pseudometric on sets / metric on profiles"
                         : "metric on profiles (no distinct sets at distance "
                           "0 in this collection)";
  return report;
}

nlohmann::ordered_json to_json(const AxiomReport& report) {
  auto axiom = [](bool pass, const std::optional<AxiomViolation>& w) {
    nlohmann::ordered_json j;
    j["pass"] = pass;
    if (w) {
      j["witness"] = {{"i", w->i}, {"j", w->j}, {"k", w->k},
                      {"lhs", w->lhs}, {"rhs", w->rhs}};
    }
    return j;
  };
  nlohmann::ordered_json doc;
  doc["nonnegativity"] = axiom(report.nonnegativity, report.nonnegativity_witness);
  doc["identity_on_profiles"] =
      axiom(report.identity_on_profiles, report.identity_witness);
  doc["symmetry"] = axiom(report.symmetry, report.symmetry_witness);
  doc["triangle"] = axiom(report.triangle, report.triangle_witness);
  doc["distinct_sets_at_zero"] = report.distinct_sets_at_zero;
  if (report.pseudometric_pair) {
    doc["pseudometric_pair"] = {report.pseudometric_pair->first,
                                report.pseudometric_pair->second};
  }
  doc["structure"] = report.structure;
  return doc;
}

}  // namespace fuzzysoft
