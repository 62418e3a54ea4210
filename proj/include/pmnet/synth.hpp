#ifndef PMNET_SYNTH_HPP_
#define PMNET_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pmnet/cluster_tree.hpp"
#include "pmnet/distribution.hpp"
#include "pmnet/graph.hpp"

namespace pmnet {

struct GeneratorConfig {
  std::size_t n = 0;
  std::vector<std::size_t> cardinalities;  // one per variable
  double support_fraction = 1.0;           // in (0, 1]
  std::uint64_t seed = 0;
};

// Throws ConfigInvalid unless cardinalities has n positive entries,
// support_fraction is in (0, 1] and keeps at least one cell.
void validate(const GeneratorConfig& cfg);

// Variables named X1..Xn with the given cardinalities.
std::vector<VariableSpec> numbered_specs(const std::vector<std::size_t>& cards);

// Four binary variables, uniform on the eight configurations
// 0000 1000 1100 1110 1111 0111 0011 0001.
JointDistribution moussouris();

// Picks ceil(support_fraction * |state space|) distinct cells with a seeded
// mt19937_64 (Floyd's sampling), gives each a weight uniform on [0.1, 1),
// and normalizes. Identical configs give identical distributions.
JointDistribution random_distribution(const GeneratorConfig& cfg);

// Path tree {1,2,8}-{2,7,8}-{3,7,8}-{4,7,8}-{4,5,7}-{4,5,6} over eight
// variables (0-based indices in the returned sets).
ClusterTree figure3_tree();

// random_distribution(cfg) projected onto `tree`; factorizes exactly over it.
JointDistribution jt_structured_distribution(const GeneratorConfig& cfg,
                                             const ClusterTree& tree);

struct SaturatedDraw {
  JointDistribution distribution;
  std::uint64_t seed;      // seed that produced the draw
  std::size_t attempts;    // 1 when the first seed was already saturated
};

// jt_structured_distribution with seeds cfg.seed, cfg.seed + 1, ... until the
// projection passes saturation_check at `tol`. Throws CheckFailed after
// `max_attempts` unsaturated draws.
SaturatedDraw saturated_jt_distribution(const GeneratorConfig& cfg,
                                        const ClusterTree& tree, double tol,
                                        std::size_t max_attempts = 100);

}  // namespace pmnet

#endif  // PMNET_SYNTH_HPP_
