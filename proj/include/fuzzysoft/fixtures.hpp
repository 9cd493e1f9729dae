#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fuzzysoft/analysis.hpp"
#include "fuzzysoft/core.hpp"

namespace fuzzysoft::fixtures {

// The worked-example sets from the source tables, by their published names.
FuzzySoftSet P_A();        // convex example
FuzzySoftSet N_A();        // concave example
FuzzySoftSet K_A();        // normalized example
FuzzySoftSet F_A();        // arithmetic operand
FuzzySoftSet G_A();        // arithmetic operand
FuzzySoftSet L_A();        // chain fixture
FuzzySoftSet M_A();        // chain fixture
FuzzySoftSet H_A_prime();  // chain fixture (the distance-chain H)
FuzzySoftSet H_A();        // 3-parameter mapping fixture
FuzzySoftSet H_B_prime();  // target-frame fixture
FuzzySoftSet Q_A();        // isometry fixture

// The worked mapping between (h1..h5, e1..e3) and (k1..k5, e1', e2').
MappingSpec map_4_22();
// Same parameter map with the order-scrambling object permutation used to
// break number preservation.
MappingSpec map_4_22_permuted();

struct NamedSet {
  std::string name;
  FuzzySoftSet set;
};
std::vector<NamedSet> all_sets();

// Writes <name>.json for every fixture plus map_4_22.json into outdir,
// overwriting idempotently. Returns the file names written.
std::vector<std::string> emit(const std::filesystem::path& outdir);

}  // namespace fuzzysoft::fixtures
