#ifndef PMNET_GRAPH_HPP_
#define PMNET_GRAPH_HPP_

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmnet/cluster_tree.hpp"
#include "pmnet/varset.hpp"

namespace pmnet {

class UndirectedGraph {
 public:
  // Stored with first < second.
  using Edge = std::pair<VarIndex, VarIndex>;

  UndirectedGraph() = default;
  explicit UndirectedGraph(VarSet vertices);
  UndirectedGraph(VarSet vertices, const std::vector<Edge>& edges);

  // Throws InvalidArgument on self-loops, UnknownVertex for endpoints outside
  // the vertex set.
  void add_edge(VarIndex a, VarIndex b);

  const VarSet& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool adjacent(VarIndex a, VarIndex b) const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  VarSet vertices_;
  std::set<Edge> edges_;
};

VarSet neighbors(const UndirectedGraph& graph, VarIndex v);

// True iff every path from A to B passes through C.
bool separates(const UndirectedGraph& graph, const VarSet& a, const VarSet& b,
               const VarSet& c);

// Vertices are the union of the clusters; {i,j} is an edge iff some cluster
// holds both.
UndirectedGraph junction_tree_graph(const ClusterTree& tree);

enum class GraphFormat { Dot, AdjacencyTsv };

// "dot" or "tsv"/"adjacency-tsv"; anything else is UnknownFormat.
GraphFormat parse_graph_format(std::string_view name);

// Vertices are written by name when `names` covers them, by index otherwise.
// Output order is vertex index order, then edge (first, second) order.
std::string export_graph(const UndirectedGraph& graph, GraphFormat format,
                         std::span<const std::string> names);

}  // namespace pmnet

#endif  // PMNET_GRAPH_HPP_
