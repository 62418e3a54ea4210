#ifndef PMNET_TESTS_ORACLES_HPP_
#define PMNET_TESTS_ORACLES_HPP_

// Brute-force reference computations for the tests. They work on plain maps
// keyed by full state vectors and enumerate whole Cartesian products, so they
// share nothing with the library's sparse index arithmetic beyond reading the
// cells once.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "pmnet/cluster_tree.hpp"
#include "pmnet/distribution.hpp"

namespace oracle {

using States = std::vector<pmnet::State>;
using Table = std::map<States, double>;

struct Dense {
  std::vector<std::size_t> cards;  // per scope position
  Table cells;
};

inline Dense to_dense(const pmnet::JointDistribution& dist) {
  Dense out;
  for (pmnet::VarIndex v : dist.scope()) out.cards.push_back(dist.cardinality(v));
  for (const pmnet::Cell& c : dist.cells()) {
    out.cells[dist.decode(c.index)] = c.probability;
  }
  return out;
}

// Calls f(states) for every assignment of the given cardinalities.
template <typename F>
void for_each_assignment(const std::vector<std::size_t>& cards, F&& f) {
  States x(cards.size(), 0);
  while (true) {
    f(static_cast<const States&>(x));
    std::size_t k = cards.size();
    while (k > 0) {
      --k;
      if (++x[k] < cards[k]) break;
      x[k] = 0;
      if (k == 0) return;
    }
    if (cards.empty()) return;
  }
}

inline double lookup(const Table& t, const States& x) {
  auto it = t.find(x);
  return it == t.end() ? 0.0 : it->second;
}

// Marginal over the given scope positions (ascending), summing over the
// whole Cartesian product.
inline Table marginal(const Dense& d, const std::vector<std::size_t>& positions) {
  Table out;
  for_each_assignment(d.cards, [&](const States& x) {
    const double p = lookup(d.cells, x);
    if (p == 0.0) return;
    States key;
    for (std::size_t pos : positions) key.push_back(x[pos]);
    out[key] += p;
  });
  return out;
}

inline double entropy(const Table& t) {
  double h = 0.0;
  for (const auto& [x, p] : t) {
    if (p > 0.0) h -= p * std::log(p) / std::log(2.0);
  }
  return h;
}

inline double info(const Dense& d, const std::vector<std::size_t>& positions) {
  if (positions.size() < 2) return 0.0;
  double singles = 0.0;
  for (std::size_t pos : positions) singles += entropy(marginal(d, {pos}));
  return singles - entropy(marginal(d, positions));
}

inline double kl(const Dense& p, const Dense& q) {
  double sum = 0.0;
  for_each_assignment(p.cards, [&](const States& x) {
    const double px = lookup(p.cells, x);
    if (px > 0.0) sum += px * std::log(px / lookup(q.cells, x)) / std::log(2.0);
  });
  return sum;
}

inline std::vector<std::size_t> positions_of(const pmnet::JointDistribution& d,
                                             const pmnet::VarSet& vars) {
  std::vector<std::size_t> out;
  for (pmnet::VarIndex v : vars) out.push_back(d.scope().position(v));
  return out;
}

// P(abc) P(c) == P(ac) P(bc) over every assignment of the full product.
inline bool conditional_independence(const pmnet::JointDistribution& dist,
                                     const pmnet::VarSet& a,
                                     const pmnet::VarSet& b,
                                     const pmnet::VarSet& c, double tol) {
  const Dense d = to_dense(dist);
  const auto pa = positions_of(dist, a);
  const auto pb = positions_of(dist, b);
  const auto pc = positions_of(dist, c);
  auto concat = [](std::vector<std::size_t> x, const std::vector<std::size_t>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  const Table abc = marginal(d, concat(concat(pa, pb), pc));
  const Table ac = marginal(d, concat(pa, pc));
  const Table bc = marginal(d, concat(pb, pc));
  const Table cc = marginal(d, pc);
  std::vector<std::size_t> cards;
  for (std::size_t pos : concat(concat(pa, pb), pc)) cards.push_back(d.cards[pos]);
  bool ok = true;
  for_each_assignment(cards, [&](const States& x) {
    const States xa(x.begin(), x.begin() + pa.size());
    const States xb(x.begin() + pa.size(), x.begin() + pa.size() + pb.size());
    const States xc(x.begin() + pa.size() + pb.size(), x.end());
    States xac = xa;
    xac.insert(xac.end(), xc.begin(), xc.end());
    States xbc = xb;
    xbc.insert(xbc.end(), xc.begin(), xc.end());
    const double p_c = pc.empty() ? 1.0 : lookup(cc, xc);
    if (std::fabs(lookup(abc, x) * p_c - lookup(ac, xac) * lookup(bc, xbc)) > tol) {
      ok = false;
    }
  });
  return ok;
}

// Junction tree product evaluated on every assignment of the full product.
inline Dense projection(const pmnet::JointDistribution& dist,
                        const pmnet::ClusterTree& tree) {
  const Dense d = to_dense(dist);
  std::vector<std::vector<std::size_t>> cluster_pos;
  std::vector<Table> cluster_tables;
  for (const pmnet::VarSet& c : tree.clusters()) {
    cluster_pos.push_back(positions_of(dist, c));
    cluster_tables.push_back(marginal(d, cluster_pos.back()));
  }
  std::vector<std::vector<std::size_t>> sep_pos;
  std::vector<Table> sep_tables;
  for (const pmnet::VarSet& s : tree.separators()) {
    sep_pos.push_back(positions_of(dist, s));
    sep_tables.push_back(marginal(d, sep_pos.back()));
  }
  auto project = [](const States& x, const std::vector<std::size_t>& pos) {
    States out;
    for (std::size_t p : pos) out.push_back(x[p]);
    return out;
  };
  Dense out{d.cards, {}};
  for_each_assignment(d.cards, [&](const States& x) {
    double value = 1.0;
    for (std::size_t k = 0; k < cluster_pos.size(); ++k) {
      value *= lookup(cluster_tables[k], project(x, cluster_pos[k]));
    }
    if (value == 0.0) return;
    for (std::size_t k = 0; k < sep_pos.size(); ++k) {
      if (!sep_pos[k].empty()) value /= lookup(sep_tables[k], project(x, sep_pos[k]));
    }
    out.cells[x] = value;
  });
  return out;
}

// Random valid cluster tree over variables 0..n-1: each new cluster is a
// proper subset of an existing cluster plus at least one fresh variable, and
// is attached to that cluster.
inline pmnet::ClusterTree random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<pmnet::VarIndex> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  auto draw = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::size_t next = draw(1, std::min<std::size_t>(n, 3));
  std::vector<pmnet::VarSet> clusters{
      pmnet::VarSet(std::vector<pmnet::VarIndex>(order.begin(), order.begin() + next))};
  std::vector<pmnet::ClusterTree::Edge> edges;
  while (next < n) {
    const std::size_t parent = draw(0, clusters.size() - 1);
    std::vector<pmnet::VarIndex> members(clusters[parent].begin(),
                                         clusters[parent].end());
    std::shuffle(members.begin(), members.end(), rng);
    members.resize(draw(0, members.size() - 1));
    const std::size_t fresh = draw(1, std::min<std::size_t>(n - next, 2));
    for (std::size_t k = 0; k < fresh; ++k) members.push_back(order[next++]);
    clusters.emplace_back(std::move(members));
    edges.emplace_back(parent, clusters.size() - 1);
  }
  return pmnet::ClusterTree(std::move(clusters), std::move(edges));
}

}  // namespace oracle

#endif  // PMNET_TESTS_ORACLES_HPP_
