#include "fuzzysoft/classify.hpp"

#include <algorithm>

namespace fuzzysoft {

namespace {

// Scans triples t1 < t < t2 in lexicographic order and returns the first
// violation of value(t) >= min(value(t1), value(t2)) - kEqTol (or the dual
// with max/+ when concave is set).
std::optional<TripleWitness> scan_row(const Row& row, const std::string& label,
                                      bool concave) {
  const std::size_t m = row.size();
  for (std::size_t t1 = 0; t1 + 2 < m; ++t1) {
    for (std::size_t t = t1 + 1; t + 1 < m; ++t) {
      for (std::size_t t2 = t + 1; t2 < m; ++t2) {
        const double a = row[t1], v = row[t], b = row[t2];
        const bool bad = concave ? v > std::max(a, b) + kEqTol
                                 : v < std::min(a, b) - kEqTol;
        if (bad) {
          return TripleWitness{label, t1 + 1, t + 1, t2 + 1, a, v, b};
        }
      }
    }
  }
  return std::nullopt;
}

ClassificationResult shape_check(const FuzzySoftSet& f, bool concave) {
  ClassificationResult r;
  for (std::size_t i = 0; i < f.parameter_count(); ++i) {
    if (auto w = scan_row(f.row(i), f.parameters()[i], concave)) {
      r.verdict = false;
      r.triple = std::move(w);
      r.reason = (concave ? "quasiconvexity" : "quasiconcavity") +
                 std::string(" violated in row ") + r.triple->row;
      return r;
    }
  }
  if (auto w = scan_row(profile(f).values, kProfileRow, concave)) {
    r.verdict = false;
    r.triple = std::move(w);
    r.reason = (concave ? "quasiconvexity" : "quasiconcavity") +
               std::string(" violated in the intersection profile");
    return r;
  }
  r.verdict = true;
  return r;
}

bool reaches_one(const Row& row) {
  return std::any_of(row.begin(), row.end(),
                     [](double v) { return v >= 1.0 - kEqTol; });
}

}  // namespace

ClassificationResult is_convex(const FuzzySoftSet& f) {
  return shape_check(f, /*concave=*/false);
}

ClassificationResult is_concave(const FuzzySoftSet& f) {
  return shape_check(f, /*concave=*/true);
}

ClassificationResult is_normalized(const FuzzySoftSet& f) {
  ClassificationResult r;
  for (std::size_t i = 0; i < f.parameter_count(); ++i) {
    if (!reaches_one(f.row(i))) {
      r.verdict = false;
      r.unnormalized_row = f.parameters()[i];
      r.reason = "row " + f.parameters()[i] + " never reaches membership 1";
      return r;
    }
  }
  if (!reaches_one(profile(f).values)) {
    r.verdict = false;
    r.unnormalized_row = kProfileRow;
    r.reason = "the intersection profile never reaches membership 1";
    return r;
  }
  r.verdict = true;
  return r;
}

ClassificationResult is_fuzzy_soft_number(const FuzzySoftSet& f) {
  ClassificationResult c = is_convex(f);
  if (!c.verdict) {
    c.reason = "not convex: " + c.reason;
    return c;
  }
  ClassificationResult n = is_normalized(f);
  if (!n.verdict) {
    n.reason = "not normalized: " + n.reason;
    return n;
  }
  ClassificationResult r;
  r.verdict = true;
  const Row p = profile(f).values;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] >= 1.0 - kEqTol) r.peak_objects.push_back(t + 1);
  }
  r.reason =
      "convex and normalized; upper semi-continuity and compact support "
      "trivially satisfied (finite universe)";
  return r;
}

}  // namespace fuzzysoft
