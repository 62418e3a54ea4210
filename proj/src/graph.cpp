#include "pmnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "pmnet/error.hpp"

namespace pmnet {
namespace {

std::string vertex_name(VarIndex v, std::span<const std::string> names) {
  return v < names.size() ? names[v] : std::to_string(v);
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

UndirectedGraph::UndirectedGraph(VarSet vertices)
    : vertices_(std::move(vertices)) {}

UndirectedGraph::UndirectedGraph(VarSet vertices, const std::vector<Edge>& edges)
    : vertices_(std::move(vertices)) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

void UndirectedGraph::add_edge(VarIndex a, VarIndex b) {
  if (a == b) {
    throw Error(ErrorCode::InvalidArgument,
                "self-loop on vertex " + std::to_string(a));
  }
  for (VarIndex v : {a, b}) {
    if (!vertices_.contains(v)) {
      throw Error(ErrorCode::UnknownVertex,
                  "vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  edges_.insert(std::minmax(a, b));
}

bool UndirectedGraph::adjacent(VarIndex a, VarIndex b) const {
  return edges_.count(std::minmax(a, b)) > 0;
}

VarSet neighbors(const UndirectedGraph& graph, VarIndex v) {
  if (!graph.vertices().contains(v)) {
    throw Error(ErrorCode::UnknownVertex,
                "vertex " + std::to_string(v) + " is not in the graph");
  }
  std::vector<VarIndex> out;
  for (const auto& [a, b] : graph.edges()) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return VarSet(std::move(out));
}

bool separates(const UndirectedGraph& graph, const VarSet& a, const VarSet& b,
               const VarSet& c) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::EmptyABSet, "separation needs nonempty A and B");
  }
  if (!a.disjoint_with(b) || !a.disjoint_with(c) || !b.disjoint_with(c)) {
    throw Error(ErrorCode::OverlappingSets,
                "sets " + to_string(a) + ", " + to_string(b) + ", " +
                    to_string(c) + " are not pairwise disjoint");
  }
  const VarSet all = a.unite(b).unite(c);
  if (!all.is_subset_of(graph.vertices())) {
    throw Error(ErrorCode::UnknownVertex,
                "vertices " + to_string(all.minus(graph.vertices())) +
                    " are not in the graph");
  }
  const VarSet& vertices = graph.vertices();
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [u, v] : graph.edges()) {
    adj[vertices.position(u)].push_back(vertices.position(v));
    adj[vertices.position(v)].push_back(vertices.position(u));
  }
  std::vector<bool> blocked(vertices.size(), false);
  for (VarIndex v : c) blocked[vertices.position(v)] = true;

  std::deque<std::size_t> queue;
  for (VarIndex v : a) {
    blocked[vertices.position(v)] = true;
    queue.push_back(vertices.position(v));
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[u]) {
      if (blocked[w]) continue;
      if (b.contains(vertices[w])) return false;
      blocked[w] = true;
      queue.push_back(w);
    }
  }
  return true;
}

UndirectedGraph junction_tree_graph(const ClusterTree& tree) {
  UndirectedGraph graph(tree.variables());
  for (const VarSet& cluster : tree.clusters()) {
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      for (std::size_t j = i + 1; j < cluster.size(); ++j) {
        graph.add_edge(cluster[i], cluster[j]);
      }
    }
  }
  return graph;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::Dot;
  if (name == "tsv" || name == "adjacency-tsv") return GraphFormat::AdjacencyTsv;
  throw Error(ErrorCode::UnknownFormat,
              "unknown graph format '" + std::string(name) + "'");
}

std::string export_graph(const UndirectedGraph& graph, GraphFormat format,
                         std::span<const std::string> names) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::Dot:
      out << "graph G {\n";
      for (VarIndex v : graph.vertices()) {
        out << "  " << dot_quote(vertex_name(v, names)) << ";\n";
      }
      for (const auto& [a, b] : graph.edges()) {
        out << "  " << dot_quote(vertex_name(a, names)) << " -- "
            << dot_quote(vertex_name(b, names)) << ";\n";
      }
      out << "}\n";
      break;
    case GraphFormat::AdjacencyTsv:
      for (VarIndex v : graph.vertices()) out << '\t' << vertex_name(v, names);
      out << '\n';
      for (VarIndex u : graph.vertices()) {
        out << vertex_name(u, names);
        for (VarIndex v : graph.vertices()) {
          out << '\t' << (graph.adjacent(u, v) ? 1 : 0);
        }
        out << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace pmnet
