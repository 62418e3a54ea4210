#include "pmnet/cluster_tree.hpp"

#include <deque>

#include "pmnet/error.hpp"

namespace pmnet {

ClusterTree::ClusterTree(std::vector<VarSet> clusters, std::vector<Edge> edges)
    : clusters_(std::move(clusters)), edges_(std::move(edges)) {
  for (std::size_t k = 0; k < clusters_.size(); ++k) {
    if (clusters_[k].empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "cluster " + std::to_string(k) + " is empty");
    }
  }
  separators_.reserve(edges_.size());
  for (const auto& [a, b] : edges_) {
    if (a >= clusters_.size() || b >= clusters_.size()) {
      throw Error(ErrorCode::NotATree,
                  "edge " + std::to_string(a) + "-" + std::to_string(b) +
                      " refers to a missing cluster");
    }
    if (a == b) {
      throw Error(ErrorCode::NotATree,
                  "edge " + std::to_string(a) + "-" + std::to_string(b) +
                      " is a self-loop");
    }
    separators_.push_back(clusters_[a].intersect(clusters_[b]));
  }
}

ClusterTree::ClusterTree(VarSet cluster)
    : ClusterTree(std::vector<VarSet>{std::move(cluster)}, {}) {}

VarSet ClusterTree::variables() const {
  VarSet out;
  for (const VarSet& c : clusters_) out = out.unite(c);
  return out;
}

std::vector<std::vector<std::size_t>> ClusterTree::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(clusters_.size());
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<std::size_t> ClusterTree::path(std::size_t from,
                                           std::size_t to) const {
  const auto adj = adjacency();
  const std::size_t none = clusters_.size();
  std::vector<std::size_t> parent(clusters_.size(), none);
  parent[from] = from;
  std::deque<std::size_t> queue{from};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (std::size_t v : adj[u]) {
      if (parent[v] == none) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[to] == none) return {};
  std::vector<std::size_t> out{to};
  while (out.back() != from) out.push_back(parent[out.back()]);
  return {out.rbegin(), out.rend()};
}

void validate_running_intersection(const ClusterTree& tree) {
  const auto& clusters = tree.clusters();
  const std::size_t k = clusters.size();
  if (k == 0) throw Error(ErrorCode::NotATree, "no clusters");
  if (tree.edges().size() != k - 1) {
    throw Error(ErrorCode::NotATree,
                std::to_string(k) + " clusters need " + std::to_string(k - 1) +
                    " edges, got " + std::to_string(tree.edges().size()));
  }
  // With k - 1 edges, connectivity is equivalent to acyclicity.
  if (running_intersection_order(tree).size() != k) {
    throw Error(ErrorCode::NotATree, "cluster graph is not connected");
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && clusters[a].is_subset_of(clusters[b])) {
        throw Error(ErrorCode::ClusterSubsumed,
                    "cluster " + to_string(clusters[a]) + " is contained in " +
                        to_string(clusters[b]));
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const VarSet shared = clusters[a].intersect(clusters[b]);
      if (shared.empty()) continue;
      for (std::size_t s : tree.path(a, b)) {
        if (!shared.is_subset_of(clusters[s])) {
          throw Error(ErrorCode::RIPViolation,
                      to_string(clusters[a]) + " n " + to_string(clusters[b]) +
                          " = " + to_string(shared) + " is not contained in " +
                          to_string(clusters[s]) + " on the path between them");
        }
      }
    }
  }
}

std::map<VarSet, std::size_t> separator_multiplicities(const ClusterTree& tree) {
  std::map<VarSet, std::size_t> out;
  for (const VarSet& s : tree.separators()) ++out[s];
  return out;
}

std::vector<std::size_t> running_intersection_order(const ClusterTree& tree) {
  const std::size_t k = tree.clusters().size();
  if (k == 0) return {};
  std::vector<std::vector<std::size_t>> adj(k);
  for (const auto& [a, b] : tree.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> order{0};
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t v : adj[order[head]]) {
      if (!seen[v]) {
        seen[v] = true;
        order.push_back(v);
      }
    }
  }
  return order;
}

}  // namespace pmnet
