#ifndef PMNET_DISCOVERY_HPP_
#define PMNET_DISCOVERY_HPP_

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmnet/distribution.hpp"
#include "pmnet/graph.hpp"

namespace pmnet {

inline constexpr double kDefaultZeroTolerance = 1e-9;
// Information contents and pair divergences are nonnegative in exact
// arithmetic; values down to -kNegativeSlack are rounding noise.
inline constexpr double kNegativeSlack = 1e-9;

using VarPair = std::pair<VarIndex, VarIndex>;

// Information contents of the full scope V, of every V \ {i}, and of every
// V \ {i,j} with i < j.
struct InfoContentCache {
  VarSet scope;
  double full = 0.0;
  std::map<VarIndex, double> minus_one;
  std::map<VarPair, double> minus_two;
  // Number of information contents computed to fill the cache.
  std::size_t evaluations = 0;
};

struct PairReport {
  VarPair pair;
  double kl = 0.0;
  bool adjacent = false;
};

struct DiscoveryResult {
  InfoContentCache cache;
  std::vector<PairReport> pairs;  // lexicographic by pair
  UndirectedGraph graph;
};

// Each (n-1)-marginal is taken from P once; every (n-2)-marginal is taken from
// an (n-1)-marginal. Throws ScopeTooSmall when the scope has fewer than two
// variables.
InfoContentCache precompute(const JointDistribution& dist);

// KL(P || P_J) for the two-cluster tree V\{i}, V\{j}:
//   I(V) - I(V\{i}) - I(V\{j}) + I(V\{i,j}).
// Zero exactly when X_i and X_j are conditionally independent given the rest.
// Values in [-1e-9, 0) are clamped to 0; anything lower is NumericalIntegrity.
double pair_kl(const InfoContentCache& cache, VarIndex i, VarIndex j);

// Pairwise Markov graph: {i,j} is an edge iff pair_kl > tol.
DiscoveryResult discover(const JointDistribution& dist,
                         double tol = kDefaultZeroTolerance);

// Two TSV sections: SUBSET/INFO_CONTENT for V, each V\{i} and each V\{i,j},
// then PAIR/KL/ADJACENT for each pair. Values use six decimals.
void write_report(std::ostream& out, const DiscoveryResult& result,
                  std::span<const std::string> names);

}  // namespace pmnet

#endif  // PMNET_DISCOVERY_HPP_
