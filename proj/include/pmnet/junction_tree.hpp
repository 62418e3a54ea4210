#ifndef PMNET_JUNCTION_TREE_HPP_
#define PMNET_JUNCTION_TREE_HPP_

#include "pmnet/cluster_tree.hpp"
#include "pmnet/distribution.hpp"

namespace pmnet {

// Sum deviation beyond which a projection is treated as a broken tree.
inline constexpr double kProjectionNormalizationAlarm = 1e-6;

// P_J(x) = prod_C P(x_C) / prod_edges P(x_S), evaluated on every assignment
// whose cluster marginals are all positive. The tree must be valid and its
// clusters must cover exactly dist.scope(). Every cell of `dist` is also a
// cell of the result.
JointDistribution junction_tree_distribution(const JointDistribution& dist,
                                             const ClusterTree& tree);

// sum_C I(X_C) - sum_S (nu_S - 1) I(X_S), in bits.
double junction_tree_weight(const JointDistribution& dist,
                            const ClusterTree& tree);

// KL(P || P_J) computed as I(X) - I_J without building P_J. Throws
// NumericalIntegrity if the result is below -1e-9.
double kl_via_decomposition(const JointDistribution& dist,
                            const ClusterTree& tree);

// True iff no pair of variables sharing a cluster is conditionally
// independent given all remaining variables, i.e. every in-cluster pair has
// pair KL above `tol`.
bool saturation_check(const JointDistribution& dist, const ClusterTree& tree,
                      double tol);

}  // namespace pmnet

#endif  // PMNET_JUNCTION_TREE_HPP_
