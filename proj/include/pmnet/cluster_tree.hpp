#ifndef PMNET_CLUSTER_TREE_HPP_
#define PMNET_CLUSTER_TREE_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pmnet/varset.hpp"

namespace pmnet {

// Clusters joined by tree edges. Each edge carries the separator
// C_a n C_b of its endpoints, computed at construction. Structural validity
// (tree shape, no subsumed clusters, running intersection) is checked by
// validate_running_intersection rather than by the constructor, so invalid
// trees can be built and reported on.
class ClusterTree {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  // Throws InvalidArgument for empty clusters and NotATree for edges with
  // out-of-range or identical endpoints.
  ClusterTree(std::vector<VarSet> clusters, std::vector<Edge> edges);

  // A tree with a single cluster.
  explicit ClusterTree(VarSet cluster);

  const std::vector<VarSet>& clusters() const { return clusters_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VarSet>& separators() const { return separators_; }
  VarSet variables() const;

  // Cluster indices along the path from `from` to `to`, both included.
  // Empty when the two are not connected.
  std::vector<std::size_t> path(std::size_t from, std::size_t to) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency() const;

  std::vector<VarSet> clusters_;
  std::vector<Edge> edges_;
  std::vector<VarSet> separators_;
};

// Returns normally iff the edges form a tree (NotATree), no cluster is a
// subset of another (ClusterSubsumed), and every pairwise intersection lies in
// each cluster on the path between the pair (RIPViolation).
void validate_running_intersection(const ClusterTree& tree);

// Number of tree edges carrying each distinct separator set. For a separator
// S shared by k edges this is the exponent nu_S - 1 = k of P(x_S) in the
// junction tree distribution. Counts sum to |clusters| - 1.
std::map<VarSet, std::size_t> separator_multiplicities(const ClusterTree& tree);

// Breadth-first numbering from cluster 0. In this order every cluster after
// the first meets the union of its predecessors exactly in the separator to
// its parent.
std::vector<std::size_t> running_intersection_order(const ClusterTree& tree);

}  // namespace pmnet

#endif  // PMNET_CLUSTER_TREE_HPP_
