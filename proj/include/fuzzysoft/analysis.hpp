#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzysoft/classify.hpp"
#include "fuzzysoft/core.hpp"

namespace fuzzysoft {

// A pair of label maps (objects, parameters) from one frame to another.
// Both maps must be total on the source labels and land inside the target
// labels. Bijectivity and object-order preservation are computed at
// construction; a mapping transports fuzzy soft numbers to fuzzy soft
// numbers exactly when the object map is an order-preserving bijection.
class MappingSpec {
 public:
  MappingSpec(std::map<std::string, std::string> object_map,
              std::map<std::string, std::string> parameter_map,
              std::vector<std::string> source_universe,
              std::vector<std::string> source_parameters,
              std::vector<std::string> target_universe,
              std::vector<std::string> target_parameters);

  const std::map<std::string, std::string>& object_map() const { return p_; }
  const std::map<std::string, std::string>& parameter_map() const { return q_; }
  const std::vector<std::string>& source_universe() const { return src_u_; }
  const std::vector<std::string>& source_parameters() const { return src_e_; }
  const std::vector<std::string>& target_universe() const { return tgt_u_; }
  const std::vector<std::string>& target_parameters() const { return tgt_e_; }

  bool p_bijective() const { return p_bijective_; }
  bool p_order_preserving() const { return p_order_preserving_; }
  bool q_bijective() const { return q_bijective_; }
  bool number_mapping() const { return p_bijective_ && p_order_preserving_; }

  // Object/parameter index translation (source index -> target index).
  std::size_t map_object(std::size_t t) const { return p_idx_[t]; }
  std::size_t map_parameter(std::size_t i) const { return q_idx_[i]; }

 private:
  std::map<std::string, std::string> p_, q_;
  std::vector<std::string> src_u_, src_e_, tgt_u_, tgt_e_;
  std::vector<std::size_t> p_idx_, q_idx_;
  bool p_bijective_ = false;
  bool p_order_preserving_ = false;
  bool q_bijective_ = false;
};

// map.json: label->label tables plus the four label lists.
MappingSpec parse_mapping(const nlohmann::json& doc);
MappingSpec load_mapping(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const MappingSpec& f);

// Forward image over the target frame: cell (beta, y) is the max of the
// source memberships over q^-1(beta) x p^-1(y), 0 when the preimage is
// empty. The input must live on the mapping's source frame.
FuzzySoftSet image(const MappingSpec& f, const FuzzySoftSet& set);

// Preimage by substitution: cell (alpha, x) = target(q(alpha), p(x)). The
// input must live on the mapping's target frame.
FuzzySoftSet preimage(const MappingSpec& f, const FuzzySoftSet& set);

struct PreservationReport {
  bool preserved = true;
  // Classification of each sample's image, aligned with the input order.
  std::vector<ClassificationResult> images;
  std::optional<std::size_t> first_failed;
};

// Classifies image(f, sample) for every sample; preserved when every image
// is a fuzzy soft number.
PreservationReport is_number_preserving(const MappingSpec& f,
                                        std::span<const FuzzySoftSet> samples);

struct IsometryReport {
  bool isometric = true;
  struct Witness {
    std::size_t i = 0, j = 0;
    double source_distance = 0, image_distance = 0;
  };
  std::optional<Witness> witness;
};

// Compares source distances with image distances over all sample pairs.
IsometryReport check_isometry(const MappingSpec& f,
                              std::span<const FuzzySoftSet> samples);

struct ContinuityReport {
  struct PerEpsilon {
    double epsilon = 0;
    bool pass = false;
    double delta = 0;  // largest working candidate when pass
    // When failing: a source pair within every candidate delta whose images
    // land farther than epsilon apart (at-point checks pair the center with
    // the offending member).
    std::optional<std::pair<std::size_t, std::size_t>> witness;
  };
  bool all_pass = true;
  std::vector<PerEpsilon> checks;
  // What the verdict was decided over (collection size, spectrum size).
  std::string scope;
};

// Epsilon-delta continuity of the image transform at collection[center],
// decided over the collection's finite distance spectrum.
ContinuityReport check_continuity_at(const MappingSpec& f, std::size_t center,
                                     std::span<const FuzzySoftSet> collection,
                                     std::span<const double> epsilons);

// One delta per epsilon must serve every pair in the collection.
ContinuityReport check_uniform_continuity(const MappingSpec& f,
                                          std::span<const FuzzySoftSet> collection,
                                          std::span<const double> epsilons);

// q one-one and onto; the object map is unconstrained.
bool is_homeomorphism(const MappingSpec& f);

// Finite-prefix sequence analysis. Verdicts are consistency checks against
// the observed prefix, not proofs about the infinite sequence. The N scans
// range over [1, prefix_length-1] so that a verdict always rests on at
// least one tail element/pair; a 1-element prefix passes vacuously.
struct SequenceReport {
  std::size_t prefix_length = 0;
  double epsilon = 0;

  bool bounded = true;   // always holds on a finite prefix
  double bound_beta = 0; // max pairwise distance observed

  bool cauchy_consistent = false;
  std::size_t cauchy_from = 0;  // minimal N when consistent (1-based)
  std::optional<std::pair<std::size_t, std::size_t>> cauchy_witness;

  std::optional<bool> convergent_consistent;  // only with a candidate limit
  std::size_t convergent_from = 0;
  std::optional<std::size_t> convergent_witness;

  std::string note;
};

SequenceReport analyze_sequence(std::span<const FuzzySoftSet> prefix,
                                const FuzzySoftSet* candidate_limit,
                                double epsilon);

nlohmann::ordered_json to_json(const SequenceReport& report);

}  // namespace fuzzysoft
