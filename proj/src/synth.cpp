#include "pmnet/synth.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "pmnet/error.hpp"
#include "pmnet/junction_tree.hpp"

namespace pmnet {
namespace {

std::uint64_t state_space(const GeneratorConfig& cfg) {
  std::uint64_t total = 1;
  for (std::size_t card : cfg.cardinalities) {
    if (total > std::numeric_limits<std::uint64_t>::max() / card) {
      throw Error(ErrorCode::ConfigInvalid, "state space exceeds 64 bits");
    }
    total *= card;
  }
  return total;
}

std::uint64_t support_cells(const GeneratorConfig& cfg) {
  const std::uint64_t total = state_space(cfg);
  // The small offset keeps exact products such as (1/256) * 256 from
  // rounding up to an extra cell.
  const double want =
      std::ceil(cfg.support_fraction * static_cast<double>(total) - 1e-9);
  return std::min<std::uint64_t>(total, static_cast<std::uint64_t>(want));
}

}  // namespace

void validate(const GeneratorConfig& cfg) {
  if (cfg.n == 0) throw Error(ErrorCode::ConfigInvalid, "n must be positive");
  if (cfg.cardinalities.size() != cfg.n) {
    throw Error(ErrorCode::ConfigInvalid,
                "expected " + std::to_string(cfg.n) + " cardinalities, got " +
                    std::to_string(cfg.cardinalities.size()));
  }
  for (std::size_t card : cfg.cardinalities) {
    if (card < 1) throw Error(ErrorCode::ConfigInvalid, "cardinality 0");
  }
  if (!(cfg.support_fraction > 0.0) || cfg.support_fraction > 1.0) {
    throw Error(ErrorCode::ConfigInvalid,
                "support fraction " + std::to_string(cfg.support_fraction) +
                    " is outside (0, 1]");
  }
  if (cfg.support_fraction * static_cast<double>(state_space(cfg)) <
      1.0 - 1e-12) {
    throw Error(ErrorCode::ConfigInvalid,
                "support fraction " + std::to_string(cfg.support_fraction) +
                    " keeps no cells");
  }
}

std::vector<VariableSpec> numbered_specs(const std::vector<std::size_t>& cards) {
  std::vector<VariableSpec> specs;
  for (std::size_t k = 0; k < cards.size(); ++k) {
    specs.push_back({"X" + std::to_string(k + 1), cards[k]});
  }
  return specs;
}

JointDistribution moussouris() {
  RawDistribution raw{numbered_specs({2, 2, 2, 2}), {}};
  for (const char* row : {"0000", "1000", "1100", "1110", "1111", "0111",
                          "0011", "0001"}) {
    RawCell cell;
    for (const char* ch = row; *ch; ++ch) {
      cell.states.push_back(static_cast<State>(*ch - '0'));
    }
    cell.probability = 0.125;
    raw.cells.push_back(std::move(cell));
  }
  return JointDistribution::from_raw(raw);
}

JointDistribution random_distribution(const GeneratorConfig& cfg) {
  validate(cfg);
  const std::uint64_t total = state_space(cfg);
  const std::uint64_t k = support_cells(cfg);

  std::mt19937_64 rng(cfg.seed);
  std::set<std::uint64_t> chosen;
  if (k == total) {
    for (std::uint64_t i = 0; i < total; ++i) chosen.insert(chosen.end(), i);
  } else {
    for (std::uint64_t j = total - k; j < total; ++j) {
      const std::uint64_t t =
          std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
  }

  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::vector<Cell> cells;
  cells.reserve(chosen.size());
  long double sum = 0.0L;
  for (std::uint64_t index : chosen) {
    cells.push_back({index, weight(rng)});
    sum += cells.back().probability;
  }
  for (Cell& c : cells) {
    c.probability = static_cast<double>(c.probability / sum);
  }
  auto specs = std::make_shared<const std::vector<VariableSpec>>(
      numbered_specs(cfg.cardinalities));
  return JointDistribution::from_cells(specs, VarSet::range(cfg.n),
                                       std::move(cells),
                                       kInputNormalizationTolerance);
}

ClusterTree figure3_tree() {
  // 1-based labels from the original example, shifted to 0-based indices.
  std::vector<VarSet> clusters = {{0, 1, 7}, {1, 6, 7}, {2, 6, 7},
                                  {3, 6, 7}, {3, 4, 6}, {3, 4, 5}};
  return ClusterTree(std::move(clusters),
                     {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

JointDistribution jt_structured_distribution(const GeneratorConfig& cfg,
                                             const ClusterTree& tree) {
  return junction_tree_distribution(random_distribution(cfg), tree);
}

SaturatedDraw saturated_jt_distribution(const GeneratorConfig& cfg,
                                        const ClusterTree& tree, double tol,
                                        std::size_t max_attempts) {
  GeneratorConfig attempt = cfg;
  for (std::size_t k = 1; k <= max_attempts; ++k, ++attempt.seed) {
    JointDistribution dist = jt_structured_distribution(attempt, tree);
    if (saturation_check(dist, tree, tol)) {
      return {std::move(dist), attempt.seed, k};
    }
  }
  throw Error(ErrorCode::CheckFailed,
              "no saturated draw in " + std::to_string(max_attempts) +
                  " seeds starting at " + std::to_string(cfg.seed));
}

}  // namespace pmnet
