#include "pmnet/discovery.hpp"

#include <cstdio>

#include "pmnet/error.hpp"

namespace pmnet {
namespace {

// Multiinformation of `marginal` given precomputed single-variable entropies.
double info_from_marginal(const JointDistribution& marginal,
                          const std::map<VarIndex, double>& single_entropy) {
  if (marginal.scope().size() < 2) return 0.0;
  long double singles = 0.0L;
  for (VarIndex v : marginal.scope()) singles += single_entropy.at(v);
  return static_cast<double>(singles - entropy(marginal));
}

std::string fixed6(double value) {
  if (value < 0.0 && value > -5e-7) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string removed_label(const VarSet& removed,
                          std::span<const std::string> names) {
  return "V\\" + to_string(removed, names);
}

}  // namespace

InfoContentCache precompute(const JointDistribution& dist) {
  const VarSet& scope = dist.scope();
  if (scope.size() < 2) {
    throw Error(ErrorCode::ScopeTooSmall,
                "pairwise discovery needs at least 2 variables, got " +
                    std::to_string(scope.size()));
  }
  std::map<VarIndex, double> single_entropy;
  for (VarIndex v : scope) single_entropy[v] = entropy(marginalize(dist, {v}));

  InfoContentCache cache;
  cache.scope = scope;
  cache.full = info_from_marginal(dist, single_entropy);
  ++cache.evaluations;

  for (VarIndex i : scope) {
    const JointDistribution without_i = marginalize(dist, scope.without(i));
    cache.minus_one[i] = info_from_marginal(without_i, single_entropy);
    ++cache.evaluations;
    for (VarIndex j : scope) {
      if (j <= i) continue;
      const VarSet rest = without_i.scope().without(j);
      cache.minus_two[{i, j}] =
          rest.empty() ? 0.0
                       : info_from_marginal(marginalize(without_i, rest),
                                            single_entropy);
      ++cache.evaluations;
    }
  }
  return cache;
}

double pair_kl(const InfoContentCache& cache, VarIndex i, VarIndex j) {
  if (i == j || !cache.scope.contains(i) || !cache.scope.contains(j)) {
    throw Error(ErrorCode::BadPair, "pair (" + std::to_string(i) + "," +
                                        std::to_string(j) +
                                        ") is not two distinct in-scope variables");
  }
  const VarPair key = std::minmax(i, j);
  const double kl = cache.full - cache.minus_one.at(i) - cache.minus_one.at(j) +
                    cache.minus_two.at(key);
  if (kl < -kNegativeSlack) {
    throw Error(ErrorCode::NumericalIntegrity,
                "pair KL for (" + std::to_string(key.first) + "," +
                    std::to_string(key.second) + ") is " + std::to_string(kl));
  }
  return kl < 0.0 ? 0.0 : kl;
}

DiscoveryResult discover(const JointDistribution& dist, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  DiscoveryResult result;
  result.cache = precompute(dist);
  result.graph = UndirectedGraph(dist.scope());
  for (const auto& [pair, unused] : result.cache.minus_two) {
    PairReport report{pair, pair_kl(result.cache, pair.first, pair.second),
                      false};
    report.adjacent = report.kl > tol;
    if (report.adjacent) result.graph.add_edge(pair.first, pair.second);
    result.pairs.push_back(report);
  }
  return result;
}

void write_report(std::ostream& out, const DiscoveryResult& result,
                  std::span<const std::string> names) {
  const InfoContentCache& cache = result.cache;
  out << "SUBSET\tINFO_CONTENT\n";
  out << "V\t" << fixed6(cache.full) << '\n';
  for (const auto& [i, value] : cache.minus_one) {
    out << removed_label({i}, names) << '\t' << fixed6(value) << '\n';
  }
  for (const auto& [pair, value] : cache.minus_two) {
    out << removed_label({pair.first, pair.second}, names) << '\t'
        << fixed6(value) << '\n';
  }
  out << '\n';
  out << "PAIR\tKL\tADJACENT\n";
  for (const PairReport& r : result.pairs) {
    const VarSet pair{r.pair.first, r.pair.second};
    std::string label = to_string(pair, names);
    label = label.substr(1, label.size() - 2);
    out << label << '\t' << fixed6(r.kl) << '\t' << (r.adjacent ? 1 : 0) << '\n';
  }
}

}  // namespace pmnet
