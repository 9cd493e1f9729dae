#include "fuzzysoft/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "fuzzysoft/metric.hpp"

namespace fuzzysoft {

namespace {

std::size_t index_of(const std::vector<std::string>& labels,
                     const std::string& label, const char* kind) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw DomainError(std::string("label '") + label + "' is not a " + kind);
  }
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

MappingSpec::MappingSpec(std::map<std::string, std::string> object_map,
                         std::map<std::string, std::string> parameter_map,
                         std::vector<std::string> source_universe,
                         std::vector<std::string> source_parameters,
                         std::vector<std::string> target_universe,
                         std::vector<std::string> target_parameters)
    : p_(std::move(object_map)),
      q_(std::move(parameter_map)),
      src_u_(std::move(source_universe)),
      src_e_(std::move(source_parameters)),
      tgt_u_(std::move(target_universe)),
      tgt_e_(std::move(target_parameters)) {
  p_idx_.reserve(src_u_.size());
  for (const auto& x : src_u_) {
    auto it = p_.find(x);
    if (it == p_.end()) {
      throw DomainError("object map is not total: no image for '" + x + "'");
    }
    p_idx_.push_back(index_of(tgt_u_, it->second, "target object"));
  }
  q_idx_.reserve(src_e_.size());
  for (const auto& a : src_e_) {
    auto it = q_.find(a);
    if (it == q_.end()) {
      throw DomainError("parameter map is not total: no image for '" + a + "'");
    }
    q_idx_.push_back(index_of(tgt_e_, it->second, "target parameter"));
  }
  auto injective = [](const std::vector<std::size_t>& idx) {
    std::set<std::size_t> seen(idx.begin(), idx.end());
    return seen.size() == idx.size();
  };
  p_bijective_ = injective(p_idx_) && p_idx_.size() == tgt_u_.size();
  q_bijective_ = injective(q_idx_) && q_idx_.size() == tgt_e_.size();
  p_order_preserving_ = true;
  for (std::size_t t = 1; t < p_idx_.size(); ++t) {
    if (p_idx_[t] <= p_idx_[t - 1]) {
      p_order_preserving_ = false;
      break;
    }
  }
}

MappingSpec parse_mapping(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("mapping document must be a JSON object");
  auto labels = [&](const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
      throw ParseError(std::string("mapping document needs array '") + key + "'");
    }
    return doc.at(key).get<std::vector<std::string>>();
  };
  auto table = [&](const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_object()) {
      throw ParseError(std::string("mapping document needs table '") + key + "'");
    }
    return doc.at(key).get<std::map<std::string, std::string>>();
  };
  return MappingSpec(table("p"), table("q"), labels("source_universe"),
                     labels("source_parameters"), labels("target_universe"),
                     labels("target_parameters"));
}

MappingSpec load_mapping(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": invalid JSON: " + e.what());
  }
  return parse_mapping(doc);
}

nlohmann::ordered_json to_json(const MappingSpec& f) {
  nlohmann::ordered_json doc;
  doc["source_universe"] = f.source_universe();
  doc["source_parameters"] = f.source_parameters();
  doc["target_universe"] = f.target_universe();
  doc["target_parameters"] = f.target_parameters();
  doc["p"] = f.object_map();
  doc["q"] = f.parameter_map();
  return doc;
}

FuzzySoftSet image(const MappingSpec& f, const FuzzySoftSet& set) {
  if (set.universe() != f.source_universe() ||
      set.parameters() != f.source_parameters()) {
    throw DomainError("image input does not live on the mapping's source frame");
  }
  const std::size_t n = f.target_parameters().size();
  const std::size_t m = f.target_universe().size();
  // Union over preimage cells; empty preimages stay at the fuzzy empty set.
  std::vector<std::vector<double>> grid(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < set.parameter_count(); ++i) {
    for (std::size_t t = 0; t < set.object_count(); ++t) {
      auto& cell = grid[f.map_parameter(i)][f.map_object(t)];
      cell = std::max(cell, set.value(i, t));
    }
  }
  return FuzzySoftSet(f.target_universe(), f.target_parameters(), grid);
}

FuzzySoftSet preimage(const MappingSpec& f, const FuzzySoftSet& set) {
  if (set.universe() != f.target_universe() ||
      set.parameters() != f.target_parameters()) {
    throw DomainError("preimage input does not live on the mapping's target frame");
  }
  const std::size_t n = f.source_parameters().size();
  const std::size_t m = f.source_universe().size();
  std::vector<std::vector<double>> grid(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < m; ++t) {
      grid[i][t] = set.value(f.map_parameter(i), f.map_object(t));
    }
  }
  return FuzzySoftSet(f.source_universe(), f.source_parameters(), grid);
}

PreservationReport is_number_preserving(const MappingSpec& f,
                                        std::span<const FuzzySoftSet> samples) {
  PreservationReport report;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    report.images.push_back(is_fuzzy_soft_number(image(f, samples[k])));
    if (!report.images.back().verdict && !report.first_failed) {
      report.preserved = false;
      report.first_failed = k;
    }
  }
  return report;
}

IsometryReport check_isometry(const MappingSpec& f,
                              std::span<const FuzzySoftSet> samples) {
  IsometryReport report;
  for (std::size_t i = 0; i < samples.size() && report.isometric; ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const double d1 = distance(samples[i], samples[j]);
      const double d2 = distance(image(f, samples[i]), image(f, samples[j]));
      if (!approx_equal(d1, d2)) {
        report.isometric = false;
        report.witness = IsometryReport::Witness{i, j, d1, d2};
        break;
      }
    }
  }
  return report;
}

namespace {

// Candidate deltas for the epsilon-delta searches: the positive values of
// the given distance spectrum plus midpoints between consecutive values.
// The implication is piecewise constant between spectrum values, so these
// candidates decide it exactly.
std::vector<double> delta_candidates(const std::set<double>& spectrum) {
  std::vector<double> out;
  double prev = 0.0;
  for (double d : spectrum) {
    if (d > 0.0) {
      const double mid = (prev + d) / 2.0;
      if (mid > 0.0) out.push_back(mid);
      out.push_back(d);
    }
    prev = d;
  }
  if (out.empty()) out.push_back(0.5);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

ContinuityReport check_continuity_at(const MappingSpec& f, std::size_t center,
                                     std::span<const FuzzySoftSet> collection,
                                     std::span<const double> epsilons) {
  if (center >= collection.size()) {
    throw DomainError("continuity center is not in the collection");
  }
  ContinuityReport report;
  std::vector<double> d1(collection.size()), d2(collection.size());
  std::set<double> spectrum;
  for (std::size_t k = 0; k < collection.size(); ++k) {
    d1[k] = distance(collection[k], collection[center]);
    d2[k] = distance(image(f, collection[k]), image(f, collection[center]));
    spectrum.insert(d1[k]);
  }
  const auto candidates = delta_candidates(spectrum);
  for (double eps : epsilons) {
    ContinuityReport::PerEpsilon check;
    check.epsilon = eps;
    for (double delta : candidates) {
      bool ok = true;
      for (std::size_t k = 0; k < collection.size(); ++k) {
        if (d1[k] <= delta && d2[k] > eps + kEqTol) {
          ok = false;
          break;
        }
      }
      if (ok) {
        check.pass = true;
        check.delta = delta;
        break;
      }
    }
    if (!check.pass) {
      // No positive delta can exclude a member at source distance 0.
      for (std::size_t k = 0; k < collection.size(); ++k) {
        if (d1[k] <= kEqTol && d2[k] > eps + kEqTol) {
          check.witness = {center, k};
          break;
        }
      }
    }
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(check);
  }
  report.scope = "decided over a collection of " +
                 std::to_string(collection.size()) + " sets";
  return report;
}

ContinuityReport check_uniform_continuity(const MappingSpec& f,
                                          std::span<const FuzzySoftSet> collection,
                                          std::span<const double> epsilons) {
  ContinuityReport report;
  const std::size_t n = collection.size();
  std::vector<FuzzySoftSet> images;
  images.reserve(n);
  for (const auto& x : collection) images.push_back(image(f, x));
  struct Pair {
    double d1, d2;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  std::set<double> spectrum;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.push_back({distance(collection[i], collection[j]),
                       distance(images[i], images[j]), i, j});
      spectrum.insert(pairs.back().d1);
    }
  }
  const auto candidates = delta_candidates(spectrum);
  for (double eps : epsilons) {
    ContinuityReport::PerEpsilon check;
    check.epsilon = eps;
    for (double delta : candidates) {
      bool ok = true;
      for (const auto& pr : pairs) {
        if (pr.d1 <= delta && pr.d2 > eps + kEqTol) {
          ok = false;
          break;
        }
      }
      if (ok) {
        check.pass = true;
        check.delta = delta;
        break;
      }
    }
    if (!check.pass) {
      for (const auto& pr : pairs) {
        if (pr.d1 <= kEqTol && pr.d2 > eps + kEqTol) {
          check.witness = {pr.i, pr.j};
          break;
        }
      }
    }
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(check);
  }
  report.scope = "decided over all pairs of a collection of " +
                 std::to_string(n) + " sets";
  return report;
}

bool is_homeomorphism(const MappingSpec& f) { return f.q_bijective(); }

SequenceReport analyze_sequence(std::span<const FuzzySoftSet> prefix,
                                const FuzzySoftSet* candidate_limit,
                                double epsilon) {
  if (prefix.empty()) throw DomainError("sequence prefix is empty");
  SequenceReport report;
  report.prefix_length = prefix.size();
  report.epsilon = epsilon;
  report.note =
      "verdicts are consistency checks on the observed prefix, not proofs "
      "about the infinite sequence";

  const std::size_t L = prefix.size();
  std::vector<std::vector<double>> d(L, std::vector<double>(L, 0.0));
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) {
      d[i][j] = d[j][i] = distance(prefix[i], prefix[j]);
      report.bound_beta = std::max(report.bound_beta, d[i][j]);
    }
  }
  report.bounded = true;

  // Cauchy: some N <= L-1 with all tail pairs within epsilon.
  report.cauchy_consistent = false;
  if (L == 1) {
    report.cauchy_consistent = true;
    report.cauchy_from = 1;
  } else {
    for (std::size_t N = 0; N + 1 < L && !report.cauchy_consistent; ++N) {
      bool ok = true;
      for (std::size_t i = N; i < L && ok; ++i) {
        for (std::size_t j = i + 1; j < L; ++j) {
          if (d[i][j] > epsilon + kEqTol) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        report.cauchy_consistent = true;
        report.cauchy_from = N + 1;
      }
    }
    if (!report.cauchy_consistent) {
      for (std::size_t i = 0; i < L && !report.cauchy_witness; ++i) {
        for (std::size_t j = i + 1; j < L; ++j) {
          if (d[i][j] > epsilon + kEqTol) {
            report.cauchy_witness = {i + 1, j + 1};
            break;
          }
        }
      }
    }
  }

  if (candidate_limit) {
    std::vector<double> dl(L);
    for (std::size_t i = 0; i < L; ++i) {
      dl[i] = distance(prefix[i], *candidate_limit);
    }
    bool pass = false;
    std::size_t from = 1;
    if (L == 1) {
      pass = true;
    } else {
      for (std::size_t N = 0; N + 1 < L && !pass; ++N) {
        bool ok = true;
        for (std::size_t i = N; i < L; ++i) {
          if (dl[i] > epsilon + kEqTol) {
            ok = false;
            break;
          }
        }
        if (ok) {
          pass = true;
          from = N + 1;
        }
      }
    }
    report.convergent_consistent = pass;
    report.convergent_from = from;
    if (!pass) {
      for (std::size_t i = 0; i < L; ++i) {
        if (dl[i] > epsilon + kEqTol) {
          report.convergent_witness = i + 1;
          break;
        }
      }
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const SequenceReport& report) {
  nlohmann::ordered_json doc;
  doc["prefix_length"] = report.prefix_length;
  doc["epsilon"] = report.epsilon;
  doc["bounded"] = {{"pass", report.bounded}, {"beta", report.bound_beta}};
  nlohmann::ordered_json cauchy;
  cauchy["pass"] = report.cauchy_consistent;
  if (report.cauchy_consistent) cauchy["from_n"] = report.cauchy_from;
  if (report.cauchy_witness) {
    cauchy["witness"] = {report.cauchy_witness->first,
                         report.cauchy_witness->second};
  }
  doc["cauchy_consistent"] = std::move(cauchy);
  if (report.convergent_consistent.has_value()) {
    nlohmann::ordered_json conv;
    conv["pass"] = *report.convergent_consistent;
    if (*report.convergent_consistent) conv["from_n"] = report.convergent_from;
    if (report.convergent_witness) conv["witness"] = *report.convergent_witness;
    doc["convergent_consistent"] = std::move(conv);
  }
  doc["note"] = report.note;
  return doc;
}

}  // namespace fuzzysoft
