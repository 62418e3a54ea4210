#include "pmnet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "pmnet/discovery.hpp"
#include "pmnet/distribution.hpp"
#include "pmnet/error.hpp"
#include "pmnet/graph.hpp"
#include "pmnet/junction_tree.hpp"
#include "pmnet/synth.hpp"
#include "pmnet/text_format.hpp"

namespace pmnet::cli {
namespace {

// Brute-force KL is only attempted on state spaces up to this size.
constexpr std::uint64_t kBruteForceLimit = std::uint64_t{1} << 20;
constexpr double kTableTolerance = 1e-5;
constexpr std::uint64_t kDefaultSeed = 1;

std::string fixed6(double value) {
  if (value < 0.0 && value > -5e-7) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string scientific(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

GeneratorConfig figure3_config(std::uint64_t seed) {
  return {8, std::vector<std::size_t>(8, 2), 1.0, seed};
}

JointDistribution load_distribution(const std::string& arg) {
  if (!std::filesystem::exists(arg)) {
    if (arg == "moussouris") return moussouris();
    if (arg == "figure3") {
      return saturated_jt_distribution(figure3_config(kDefaultSeed),
                                       figure3_tree(), kDefaultZeroTolerance)
          .distribution;
    }
  }
  return read_distribution_file(arg);
}

ClusterTree load_tree(const std::string& arg,
                      std::span<const std::string> names) {
  if (!std::filesystem::exists(arg) && arg == "figure3") return figure3_tree();
  return read_cluster_tree_file(arg, names);
}

std::vector<std::string> split_formats(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  for (std::string item; std::getline(stream, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  file << contents;
}

// Oracle path for cmd_kl: KL against the explicitly built projection.
std::optional<double> brute_force_kl(const JointDistribution& dist,
                                     const ClusterTree& tree) {
  if (dist.state_space_size() > kBruteForceLimit) return std::nullopt;
  return kl_divergence(dist, junction_tree_distribution(dist, tree));
}

void cmd_info(const std::string& path, std::ostream& out) {
  const JointDistribution dist = load_distribution(path);
  out << "n\t" << dist.scope().size() << '\n';
  out << "cardinalities\t";
  for (std::size_t k = 0; k < dist.scope().size(); ++k) {
    if (k) out << ' ';
    out << dist.specs()[dist.scope()[k]].name << ':'
        << dist.cardinality(dist.scope()[k]);
  }
  out << '\n';
  out << "support\t" << dist.support_size() << '\n';
  out << "H(X)\t" << fixed6(entropy(dist)) << '\n';
  out << "I(X)\t" << fixed6(information_content(dist)) << '\n';
  if (dist.scope().size() < 2) return;

  DiscoveryResult view;
  view.cache = precompute(dist);
  std::ostringstream report;
  write_report(report, view, dist.names());
  // Only the information content section; pairs belong to `discover`.
  const std::string text = report.str();
  out << '\n' << text.substr(0, text.find("\n\n") + 1);
}

void cmd_discover(const std::string& path, double tol,
                  const std::string& formats, const std::string& prefix,
                  std::ostream& out) {
  std::vector<GraphFormat> wanted;
  for (const std::string& f : split_formats(formats)) {
    wanted.push_back(parse_graph_format(f));
  }
  const JointDistribution dist = load_distribution(path);
  const DiscoveryResult result = discover(dist, tol);
  const std::vector<std::string> names = dist.names();

  std::ostringstream report;
  write_report(report, result, names);
  out << report.str();
  if (!prefix.empty()) write_file(prefix + ".report.tsv", report.str());

  for (GraphFormat format : wanted) {
    const std::string text = export_graph(result.graph, format, names);
    if (prefix.empty()) {
      out << '\n' << text;
    } else {
      const std::string path_out =
          prefix + (format == GraphFormat::Dot ? ".dot" : ".adj.tsv");
      write_file(path_out, text);
      out << "\nwrote " << path_out << '\n';
    }
  }
}

void cmd_kl(const std::string& dist_path, const std::string& tree_path,
            std::ostream& out) {
  const JointDistribution dist = load_distribution(dist_path);
  const ClusterTree tree = load_tree(tree_path, dist.names());
  const double weight = junction_tree_weight(dist, tree);
  const double kl = kl_via_decomposition(dist, tree);
  out << "I(X)\t" << fixed6(information_content(dist)) << '\n';
  out << "I_J\t" << fixed6(weight) << '\n';
  out << "KL\t" << fixed6(kl) << '\n';
  if (const auto brute = brute_force_kl(dist, tree)) {
    out << "KL_brute_force\t" << fixed6(*brute) << '\n';
    out << "abs_difference\t" << scientific(std::fabs(*brute - kl)) << '\n';
  }
}

void cmd_project(const std::string& dist_path, const std::string& tree_path,
                 const std::string& out_path, std::ostream& out) {
  const JointDistribution dist = load_distribution(dist_path);
  const ClusterTree tree = load_tree(tree_path, dist.names());
  std::ostringstream text;
  write_distribution(text, junction_tree_distribution(dist, tree));
  if (out_path.empty()) {
    out << text.str();
  } else {
    write_file(out_path, text.str());
  }
}

struct GenerateOptions {
  std::size_t n = 0;
  std::vector<std::size_t> cards;
  double support_fraction = 1.0;
  std::uint64_t seed = kDefaultSeed;
  std::string tree;
  std::string out_path;
};

void cmd_generate(const GenerateOptions& opt, std::ostream& out) {
  GeneratorConfig cfg;
  cfg.seed = opt.seed;
  cfg.support_fraction = opt.support_fraction;
  cfg.n = opt.n;
  if (cfg.n == 0) cfg.n = opt.tree == "figure3" ? 8 : opt.cards.size();
  if (cfg.n == 0) throw Error(ErrorCode::ConfigInvalid, "--n is required");
  if (opt.cards.empty()) {
    cfg.cardinalities.assign(cfg.n, 2);
  } else if (opt.cards.size() == 1) {
    cfg.cardinalities.assign(cfg.n, opt.cards.front());
  } else {
    cfg.cardinalities = opt.cards;
  }
  validate(cfg);

  JointDistribution dist = random_distribution(cfg);
  if (!opt.tree.empty()) {
    std::vector<std::string> names;
    for (const VariableSpec& s : numbered_specs(cfg.cardinalities)) {
      names.push_back(s.name);
    }
    dist = junction_tree_distribution(dist, load_tree(opt.tree, names));
  }
  std::ostringstream text;
  text << "# seed " << cfg.seed << '\n';
  write_distribution(text, dist);
  if (opt.out_path.empty()) {
    out << text.str();
  } else {
    write_file(opt.out_path, text.str());
    out << "seed\t" << cfg.seed << '\n';
  }
}

class CheckLog {
 public:
  explicit CheckLog(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& line) {
    out_ << (ok ? "ok    " : "FAIL  ") << line << '\n';
    if (!ok) failures_.push_back(line);
  }

  void finish(const std::string& summary) {
    if (failures_.empty()) {
      out_ << "PASS " << summary << '\n';
      return;
    }
    out_ << "FAIL " << failures_.size() << " check(s)\n";
    std::string joined;
    for (const std::string& f : failures_) joined += "\n  " + f;
    throw Error(ErrorCode::CheckFailed, "demo mismatches:" + joined);
  }

 private:
  std::ostream& out_;
  std::vector<std::string> failures_;
};

void demo_moussouris(std::ostream& out) {
  const JointDistribution dist = moussouris();
  const std::vector<std::string> names = dist.names();
  const DiscoveryResult result = discover(dist, kDefaultZeroTolerance);
  const InfoContentCache& cache = result.cache;
  CheckLog log(out);

  // Published reference values, 1-based variable labels.
  struct Row {
    std::vector<VarIndex> removed;
    double info;
    double kl;  // negative when the table has no KL entry
  };
  const std::vector<Row> table = {
      {{}, 1.0, -1},           {{4}, 0.5, -1},          {{3}, 0.5, -1},
      {{2}, 0.5, -1},          {{1}, 0.5, -1},          {{3, 4}, 0.188722, 0.188722},
      {{2, 4}, 0.0, 0.0},      {{2, 3}, 0.188722, 0.188722},
      {{1, 4}, 0.188722, 0.188722},
      {{1, 3}, 0.0, 0.0},      {{1, 2}, 0.188722, 0.188722},
  };

  out << "information contents and pair KL divergences (bits)\n";
  std::size_t info_ok = 0;
  std::size_t kl_ok = 0;
  for (const Row& row : table) {
    std::vector<VarIndex> zero_based;
    for (VarIndex v : row.removed) zero_based.push_back(v - 1);
    const VarSet removed(zero_based);
    double info = cache.full;
    if (removed.size() == 1) info = cache.minus_one.at(removed[0]);
    if (removed.size() == 2) info = cache.minus_two.at({removed[0], removed[1]});
    const std::string label =
        removed.empty() ? std::string("V") : "V\\" + to_string(removed, names);
    const bool good = std::fabs(info - row.info) <= kTableTolerance;
    info_ok += good;
    log.check(good, "I(" + label + ") expected " + fixed6(row.info) + " got " +
                        fixed6(info));
    if (row.kl >= 0) {
      const double kl = pair_kl(cache, removed[0], removed[1]);
      const bool kl_good = std::fabs(kl - row.kl) <= kTableTolerance;
      kl_ok += kl_good;
      log.check(kl_good, "KL(" + label + ") expected " + fixed6(row.kl) +
                             " got " + fixed6(kl));
    }
  }

  const UndirectedGraph cycle(dist.scope(), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::string edges;
  for (const auto& [a, b] : result.graph.edges()) {
    edges += ' ' + names[a] + '-' + names[b];
  }
  log.check(result.graph == cycle, "pairwise Markov graph:" + edges +
                                       " (expected X1-X2 X1-X4 X2-X3 X3-X4)");

  for (const auto& pair : {std::pair<VarSet, VarSet>{{0, 1, 3}, {1, 2, 3}},
                           std::pair<VarSet, VarSet>{{0, 2, 3}, {0, 1, 2}}}) {
    const ClusterTree tree({pair.first, pair.second}, {{0, 1}});
    const double formula = kl_via_decomposition(dist, tree);
    const double brute = *brute_force_kl(dist, tree);
    log.check(std::fabs(formula) <= kDefaultZeroTolerance &&
                  std::fabs(brute) <= kDefaultZeroTolerance,
              "KL against clusters " + to_string(pair.first, names) + " " +
                  to_string(pair.second, names) + ": formula " +
                  scientific(formula) + ", brute force " + scientific(brute));
  }
  log.finish("(" + std::to_string(info_ok) + " information contents, " +
             std::to_string(kl_ok) + " KL values)");
}

// Published adjacent pairs of the eight-variable example, 1-based.
const std::vector<std::pair<VarIndex, VarIndex>>& figure3_edges() {
  static const std::vector<std::pair<VarIndex, VarIndex>> edges = {
      {7, 8}, {5, 7}, {5, 6}, {4, 8}, {4, 7}, {4, 6}, {4, 5},
      {3, 8}, {3, 7}, {2, 8}, {2, 7}, {1, 8}, {1, 2}};
  return edges;
}

void demo_figure3(std::uint64_t seed, std::ostream& out) {
  const ClusterTree tree = figure3_tree();
  const SaturatedDraw draw = saturated_jt_distribution(
      figure3_config(seed), tree, kDefaultZeroTolerance);
  const JointDistribution& dist = draw.distribution;
  const std::vector<std::string> names = dist.names();
  out << "seed\t" << draw.seed << "\tattempts\t" << draw.attempts << '\n';
  out << "support\t" << dist.support_size() << '\n';

  const DiscoveryResult result = discover(dist, kDefaultZeroTolerance);
  write_report(out, result, names);
  out << '\n';

  UndirectedGraph expected(VarSet::range(8));
  for (const auto& [a, b] : figure3_edges()) expected.add_edge(a - 1, b - 1);

  CheckLog log(out);
  std::size_t edges_ok = 0;
  std::size_t non_edges_ok = 0;
  for (const PairReport& r : result.pairs) {
    const bool want = expected.adjacent(r.pair.first, r.pair.second);
    const bool good = want == r.adjacent;
    (want ? edges_ok : non_edges_ok) += good;
    log.check(good, names[r.pair.first] + "-" + names[r.pair.second] +
                        (want ? " edge" : " non-edge") + ", KL " +
                        fixed6(r.kl));
  }
  log.check(result.graph == junction_tree_graph(tree),
            "recovered graph equals the junction tree graph of the clusters");
  const double kl = kl_via_decomposition(dist, tree);
  log.check(std::fabs(kl) <= kDefaultZeroTolerance,
            "KL against the cluster tree " + scientific(kl));
  log.finish("(" + std::to_string(edges_ok) + "/13 edges, " +
             std::to_string(non_edges_ok) + "/15 non-edges)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Pairwise Markov network discovery from known distributions",
               "pmnet"};
  app.require_subcommand(1);

  std::string dist_path;
  std::string tree_path;
  std::string out_path;
  double tol = kDefaultZeroTolerance;
  std::string formats = "dot,tsv";
  GenerateOptions gen;
  std::string demo_name;
  std::uint64_t demo_seed = kDefaultSeed;

  auto* info = app.add_subcommand("info", "Summarize a distribution");
  info->add_option("dist", dist_path, "Distribution file or built-in name")
      ->required();

  auto* disc = app.add_subcommand("discover", "Discover the pairwise Markov graph");
  disc->add_option("dist", dist_path, "Distribution file or built-in name")
      ->required();
  disc->add_option("--tol", tol, "Zero threshold for pair KL (bits)")
      ->capture_default_str();
  disc->add_option("--format", formats, "Graph formats: dot, tsv")
      ->capture_default_str();
  disc->add_option("--out", out_path, "Output prefix for report and graphs");

  auto* kl = app.add_subcommand("kl", "KL divergence to a junction tree projection");
  kl->add_option("dist", dist_path, "Distribution file or built-in name")
      ->required();
  kl->add_option("tree", tree_path, "Cluster tree file or 'figure3'")->required();

  auto* project = app.add_subcommand("project", "Project onto a junction tree");
  project->add_option("dist", dist_path, "Distribution file or built-in name")
      ->required();
  project->add_option("tree", tree_path, "Cluster tree file or 'figure3'")
      ->required();
  project->add_option("--out", out_path, "Output distribution file");

  auto* generate = app.add_subcommand("generate", "Generate a random distribution");
  generate->add_option("--n", gen.n, "Number of variables");
  generate->add_option("--card", gen.cards,
                       "Cardinality for all variables, or one per variable");
  generate->add_option("--support-fraction", gen.support_fraction,
                       "Fraction of cells with positive probability")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Generator seed")
      ->capture_default_str();
  generate->add_option("--tree", gen.tree,
                       "Project onto this cluster tree file or 'figure3'");
  generate->add_option("--out", gen.out_path, "Output distribution file");

  auto* demo = app.add_subcommand("demo", "Run a built-in worked example");
  demo->add_option("name", demo_name, "moussouris or figure3")
      ->required()
      ->check(CLI::IsMember({"moussouris", "figure3"}));
  demo->add_option("--seed", demo_seed, "First seed for the figure3 draw")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!(tol > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "--tol must be positive");
    }
    if (*info) cmd_info(dist_path, out);
    if (*disc) cmd_discover(dist_path, tol, formats, out_path, out);
    if (*kl) cmd_kl(dist_path, tree_path, out);
    if (*project) cmd_project(dist_path, tree_path, out_path, out);
    if (*generate) cmd_generate(gen, out);
    if (*demo) {
      if (demo_name == "moussouris") demo_moussouris(out);
      if (demo_name == "figure3") demo_figure3(demo_seed, out);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace pmnet::cli
