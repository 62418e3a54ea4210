#include "pmnet/junction_tree.hpp"

#include <cmath>
#include <map>

#include "pmnet/discovery.hpp"
#include "pmnet/error.hpp"

namespace pmnet {
namespace {

void check_tree_against(const JointDistribution& dist, const ClusterTree& tree) {
  validate_running_intersection(tree);
  if (tree.variables() != dist.scope()) {
    throw Error(ErrorCode::ScopeMismatch,
                "clusters cover " + to_string(tree.variables()) +
                    " but the distribution has scope " + to_string(dist.scope()));
  }
}

struct PartialRow {
  std::vector<State> states;  // indexed by position in the full scope
  long double value;
};

}  // namespace

JointDistribution junction_tree_distribution(const JointDistribution& dist,
                                             const ClusterTree& tree) {
  check_tree_against(dist, tree);
  const VarSet& scope = dist.scope();
  const auto& clusters = tree.clusters();

  // Parent edge of every cluster in breadth-first order from cluster 0.
  const std::vector<std::size_t> order = running_intersection_order(tree);
  std::vector<std::size_t> parent_edge(clusters.size(), tree.edges().size());
  {
    std::vector<bool> placed(clusters.size(), false);
    placed[order.front()] = true;
    for (std::size_t c : order) {
      for (std::size_t e = 0; e < tree.edges().size(); ++e) {
        const auto [a, b] = tree.edges()[e];
        const std::size_t other = a == c ? b : (b == c ? a : clusters.size());
        if (other != clusters.size() && !placed[other]) {
          placed[other] = true;
          parent_edge[other] = e;
        }
      }
    }
  }

  std::vector<PartialRow> rows;
  {
    const JointDistribution root = marginalize(dist, clusters[order.front()]);
    for (const Cell& cell : root.cells()) {
      PartialRow row{std::vector<State>(scope.size(), 0), cell.probability};
      const std::vector<State> states = root.decode(cell.index);
      for (std::size_t k = 0; k < states.size(); ++k) {
        row.states[scope.position(root.scope()[k])] = states[k];
      }
      rows.push_back(std::move(row));
    }
  }

  // Each later cluster meets the variables placed so far exactly in its
  // parent separator, so extending rows is a join on that separator.
  for (std::size_t step = 1; step < order.size(); ++step) {
    const std::size_t c = order[step];
    const VarSet& separator = tree.separators()[parent_edge[c]];
    const JointDistribution marginal = marginalize(dist, clusters[c]);

    struct Group {
      std::vector<std::vector<State>> cells;
      std::vector<double> probabilities;
      long double separator_probability = 0.0L;
    };
    std::map<std::vector<State>, Group> groups;
    for (const Cell& cell : marginal.cells()) {
      std::vector<State> states = marginal.decode(cell.index);
      std::vector<State> key;
      for (VarIndex v : separator) {
        key.push_back(states[marginal.scope().position(v)]);
      }
      Group& g = groups[key];
      g.cells.push_back(std::move(states));
      g.probabilities.push_back(cell.probability);
      g.separator_probability += cell.probability;
    }

    std::vector<PartialRow> next;
    std::vector<State> key;
    for (const PartialRow& row : rows) {
      key.clear();
      for (VarIndex v : separator) key.push_back(row.states[scope.position(v)]);
      auto it = groups.find(key);
      if (it == groups.end()) continue;
      const Group& g = it->second;
      for (std::size_t k = 0; k < g.cells.size(); ++k) {
        PartialRow extended = row;
        for (std::size_t pos = 0; pos < g.cells[k].size(); ++pos) {
          extended.states[scope.position(marginal.scope()[pos])] =
              g.cells[k][pos];
        }
        extended.value *= g.probabilities[k] / g.separator_probability;
        next.push_back(std::move(extended));
      }
    }
    rows = std::move(next);
  }

  long double sum = 0.0L;
  for (const PartialRow& row : rows) sum += row.value;
  if (std::fabs(static_cast<double>(sum) - 1.0) > kProjectionNormalizationAlarm) {
    throw Error(ErrorCode::NotNormalizedResult,
                "junction tree product sums to " +
                    std::to_string(static_cast<double>(sum)));
  }
  std::vector<Cell> cells;
  cells.reserve(rows.size());
  for (const PartialRow& row : rows) {
    cells.push_back({dist.encode(row.states),
                     static_cast<double>(row.value / sum)});
  }
  return JointDistribution::from_cells(dist.shared_specs(), scope,
                                       std::move(cells));
}

double junction_tree_weight(const JointDistribution& dist,
                            const ClusterTree& tree) {
  check_tree_against(dist, tree);
  long double weight = 0.0L;
  for (const VarSet& c : tree.clusters()) weight += information_content(dist, c);
  for (const VarSet& s : tree.separators()) {
    weight -= information_content(dist, s);
  }
  return static_cast<double>(weight);
}

double kl_via_decomposition(const JointDistribution& dist,
                            const ClusterTree& tree) {
  const double weight = junction_tree_weight(dist, tree);
  const double kl = information_content(dist) - weight;
  if (kl < -kNegativeSlack) {
    throw Error(ErrorCode::NumericalIntegrity,
                "decomposed KL divergence is " + std::to_string(kl));
  }
  return kl;
}

bool saturation_check(const JointDistribution& dist, const ClusterTree& tree,
                      double tol) {
  check_tree_against(dist, tree);
  if (dist.scope().size() < 2) return true;
  const InfoContentCache cache = precompute(dist);
  for (const VarSet& cluster : tree.clusters()) {
    for (std::size_t a = 0; a < cluster.size(); ++a) {
      for (std::size_t b = a + 1; b < cluster.size(); ++b) {
        if (pair_kl(cache, cluster[a], cluster[b]) <= tol) return false;
      }
    }
  }
  return true;
}

}  // namespace pmnet
