#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzysoft/core.hpp"

namespace fuzzysoft {

// Chebyshev distance between the two intersection profiles. Always in
// [0,1]; a pseudometric on sets (distinct sets can share a profile) and a
// metric on profiles.
double distance(const FuzzySoftSet& f, const FuzzySoftSet& g);

// Chebyshev distance between a soft point's row and g's profile.
double point_set_distance(const SoftPoint& pt, const FuzzySoftSet& g);

// Chebyshev distance between two rows of equal length.
double point_point_distance(const SoftPoint& p, const SoftPoint& q);

// Max over parameter pairs of the row-to-row distance; 0 for a single
// parameter.
double diameter(const FuzzySoftSet& f);

// distance(f, complement(f)); exactly 1 for every normalized set.
double distance_to_complement(const FuzzySoftSet& f);

// Indices of collection members strictly within / within r of the center.
// Requires 0 < r < 1.
std::vector<std::size_t> open_sphere(const FuzzySoftSet& center, double r,
                                     std::span<const FuzzySoftSet> collection);
std::vector<std::size_t> closed_sphere(const FuzzySoftSet& center, double r,
                                       std::span<const FuzzySoftSet> collection);

struct NeighborhoodResult {
  bool verdict = false;
  // Largest radius from the candidate spectrum whose open sphere stays
  // inside the subclass; meaningful only when verdict holds.
  double radius = 0.0;
};

// True when some open sphere around collection[center] lies inside the
// subclass (given as sorted member indices). Candidate radii come from the
// finite distance spectrum plus midpoints, so the search is exact.
NeighborhoodResult is_neighborhood(const std::vector<std::size_t>& sub,
                                   std::size_t center,
                                   std::span<const FuzzySoftSet> collection);

// True when the subclass is a neighborhood of each of its members.
bool is_open(const std::vector<std::size_t>& sub,
             std::span<const FuzzySoftSet> collection);

struct AxiomViolation {
  std::size_t i = 0, j = 0, k = 0;
  double lhs = 0, rhs = 0;
};

// Metric-axiom scan over all pairs/triples of a collection. The identity
// axiom is checked at profile granularity: d = 0 iff equal profiles.
// distinct_sets_at_zero reports when two non-equal sets sit at distance 0,
// which makes the structure a pseudometric on sets.
struct AxiomReport {
  bool nonnegativity = true;
  bool identity_on_profiles = true;
  bool symmetry = true;
  bool triangle = true;
  std::optional<AxiomViolation> nonnegativity_witness;
  std::optional<AxiomViolation> identity_witness;
  std::optional<AxiomViolation> symmetry_witness;
  std::optional<AxiomViolation> triangle_witness;
  bool distinct_sets_at_zero = false;
  std::optional<std::pair<std::size_t, std::size_t>> pseudometric_pair;
  std::string structure;

  bool all_pass() const {
    return nonnegativity && identity_on_profiles && symmetry && triangle;
  }
};

AxiomReport check_metric_axioms(std::span<const FuzzySoftSet> collection);

nlohmann::ordered_json to_json(const AxiomReport& report);

}  // namespace fuzzysoft
