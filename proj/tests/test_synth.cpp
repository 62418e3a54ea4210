#include <doctest.h>

#include <cmath>

#include "pmnet/discovery.hpp"
#include "pmnet/error.hpp"
#include "pmnet/junction_tree.hpp"
#include "pmnet/synth.hpp"

using namespace pmnet;

TEST_CASE("Moussouris construction") {
  const JointDistribution p = moussouris();
  CHECK_NOTHROW(validate(p));
  CHECK(p.support_size() == 8);
  for (const Cell& c : p.cells()) CHECK(c.probability == 0.125);
  // All 11 published information contents and 6 pair divergences.
  const InfoContentCache cache = precompute(p);
  CHECK(std::fabs(cache.full - 1.0) <= 1e-5);
  for (VarIndex i = 0; i < 4; ++i) {
    CHECK(std::fabs(cache.minus_one.at(i) - 0.5) <= 1e-5);
    for (VarIndex j = i + 1; j < 4; ++j) {
      const bool opposite = (j - i) == 2;
      const double expected = opposite ? 0.0 : 0.188722;
      CHECK(std::fabs(cache.minus_two.at({i, j}) - expected) <= 1e-5);
      CHECK(std::fabs(pair_kl(cache, i, j) - expected) <= 1e-5);
    }
  }
}

TEST_CASE("random_distribution") {
  GeneratorConfig cfg{2, {2, 2}, 1.0, 42};
  const JointDistribution a = random_distribution(cfg);
  CHECK(a.support_size() == 4);
  CHECK(std::fabs(a.total() - 1.0) <= 1e-12);

  const JointDistribution b = random_distribution(cfg);
  REQUIRE(a.support_size() == b.support_size());
  for (std::size_t k = 0; k < a.support_size(); ++k) {
    CHECK(a.cells()[k].index == b.cells()[k].index);
    CHECK(a.cells()[k].probability == b.cells()[k].probability);
  }
  cfg.seed = 43;
  CHECK(random_distribution(cfg).cells()[0].probability != a.cells()[0].probability);

  GeneratorConfig point{8, std::vector<std::size_t>(8, 2), 1.0 / 256, 5};
  const JointDistribution one = random_distribution(point);
  CHECK(one.support_size() == 1);
  CHECK(entropy(one) == 0.0);

  GeneratorConfig partial{3, {3, 3, 3}, 0.3, 9};
  CHECK(random_distribution(partial).support_size() == 9);  // ceil(0.3 * 27)
}

TEST_CASE("generator config validation") {
  auto code = [](GeneratorConfig cfg) {
    try {
      random_distribution(cfg);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::CheckFailed;
  };
  CHECK(code({2, {2, 2}, 0.0, 1}) == ErrorCode::ConfigInvalid);
  CHECK(code({2, {2, 2}, 1.5, 1}) == ErrorCode::ConfigInvalid);
  CHECK(code({2, {2}, 1.0, 1}) == ErrorCode::ConfigInvalid);
  CHECK(code({2, {2, 0}, 1.0, 1}) == ErrorCode::ConfigInvalid);
  CHECK(code({2, {2, 2}, 0.1, 1}) == ErrorCode::ConfigInvalid);  // 0.4 cells
}

TEST_CASE("figure 3 cluster tree") {
  const ClusterTree tree = figure3_tree();
  CHECK_NOTHROW(validate_running_intersection(tree));
  CHECK(tree.clusters().size() == 6);
  CHECK(tree.variables() == VarSet::range(8));
  CHECK(junction_tree_graph(tree).edges().size() == 13);
}

TEST_CASE("junction-tree-structured generation") {
  GeneratorConfig cfg{4, {2, 2, 2, 2}, 1.0, 12};
  const JointDistribution whole = jt_structured_distribution(cfg, ClusterTree(VarSet::range(4)));
  const JointDistribution plain = random_distribution(cfg);
  REQUIRE(whole.support_size() == plain.support_size());
  for (std::size_t k = 0; k < plain.support_size(); ++k) {
    CHECK(whole.cells()[k].probability ==
          doctest::Approx(plain.cells()[k].probability).epsilon(1e-12));
  }

  const ClusterTree split({{0, 1, 3}, {1, 2, 3}}, {{0, 1}});
  const JointDistribution pj = jt_structured_distribution(cfg, split);
  CHECK(std::fabs(kl_via_decomposition(pj, split)) <= 1e-9);
  CHECK(pair_kl(precompute(pj), 0, 2) <= 1e-9);
  CHECK(conditional_independence(pj, {0}, {2}, {1, 3}, 1e-9));

  GeneratorConfig fig{8, std::vector<std::size_t>(8, 2), 1.0, 100};
  const JointDistribution f = jt_structured_distribution(fig, figure3_tree());
  CHECK(std::fabs(kl_via_decomposition(f, figure3_tree())) <= 1e-9);
}
