#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzysoft/core.hpp"

namespace fuzzysoft {

// Row label used for violations found on the intersection profile rather
// than on a parameter row.
inline constexpr const char* kProfileRow = "∩-profile";

// A quasiconcavity/quasiconvexity violation: object positions t1 < t < t2
// (1-based) in the named row, with the observed membership values.
struct TripleWitness {
  std::string row;
  std::size_t t1 = 0, t = 0, t2 = 0;
  double v1 = 0, v = 0, v2 = 0;
};

struct ClassificationResult {
  bool verdict = false;
  // Present when a convexity/concavity check fails; lexicographically first
  // by (row index, t1, t, t2), profile row last.
  std::optional<TripleWitness> triple;
  // Present when a normalization check fails: the first row (or the
  // profile) with no membership reaching 1.
  std::optional<std::string> unnormalized_row;
  // For passing fuzzy-soft-number checks: 1-based object positions where
  // the intersection profile reaches 1. Nonempty whenever verdict holds.
  std::vector<std::size_t> peak_objects;
  std::string reason;

  explicit operator bool() const { return verdict; }
};

// Every parameter row and the intersection profile must satisfy the
// discrete quasiconcavity condition: value(t) >= min(value(t1), value(t2))
// for all object positions t1 < t < t2.
ClassificationResult is_convex(const FuzzySoftSet& f);

// Dual condition: value(t) <= max(value(t1), value(t2)).
ClassificationResult is_concave(const FuzzySoftSet& f);

// Every parameter row reaches membership 1, and so does the intersection
// profile (hence all rows reach 1 at a common object).
ClassificationResult is_normalized(const FuzzySoftSet& f);

// Convex and normalized. Upper semi-continuity and compact support hold
// automatically over a finite discrete universe and are not computed; the
// result's reason notes this. On success peak_objects lists the common
// peak positions.
ClassificationResult is_fuzzy_soft_number(const FuzzySoftSet& f);

}  // namespace fuzzysoft
