#include "pmnet/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "pmnet/error.hpp"

namespace pmnet {
namespace {

std::string describe_states(std::span<const State> states) {
  std::string out = "(";
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(states[k]);
  }
  return out + ")";
}

std::string describe_cell(const RawCell& cell) {
  std::string out = "cell " + describe_states(cell.states);
  if (cell.line) out += " at line " + std::to_string(cell.line);
  return out;
}

// Maps a cell index over `from`'s scope onto the mixed-radix index over a
// subset of that scope.
class Projection {
 public:
  Projection(const JointDistribution& from, const VarSet& subset) {
    const VarSet& scope = from.scope();
    std::uint64_t stride = 1;
    std::vector<std::uint64_t> from_strides(scope.size());
    for (std::size_t k = scope.size(); k-- > 0;) {
      from_strides[k] = stride;
      stride *= from.cardinality(scope[k]);
    }
    std::uint64_t sub_stride = 1;
    for (std::size_t k = subset.size(); k-- > 0;) {
      const std::size_t pos = scope.position(subset[k]);
      digits_.push_back(
          {from_strides[pos], from.cardinality(subset[k]), sub_stride});
      sub_stride *= from.cardinality(subset[k]);
    }
  }

  std::uint64_t operator()(std::uint64_t index) const {
    std::uint64_t out = 0;
    for (const Digit& d : digits_) {
      out += ((index / d.from_stride) % d.radix) * d.to_stride;
    }
    return out;
  }

 private:
  struct Digit {
    std::uint64_t from_stride;
    std::uint64_t radix;
    std::uint64_t to_stride;
  };
  std::vector<Digit> digits_;
};

void check_subset_of_scope(const JointDistribution& dist, const VarSet& subset) {
  if (!subset.is_subset_of(dist.scope())) {
    throw Error(ErrorCode::IndexOutOfScope,
                "variables " + to_string(subset.minus(dist.scope())) +
                    " are not in scope " + to_string(dist.scope()));
  }
}

}  // namespace

JointDistribution::JointDistribution(
    std::shared_ptr<const std::vector<VariableSpec>> specs, VarSet scope)
    : specs_(std::move(specs)), scope_(std::move(scope)) {
  strides_.resize(scope_.size());
  for (std::size_t k = scope_.size(); k-- > 0;) {
    strides_[k] = state_space_;
    const std::uint64_t card = (*specs_)[scope_[k]].cardinality;
    if (state_space_ > std::numeric_limits<std::uint64_t>::max() / card) {
      throw Error(ErrorCode::InvalidArgument,
                  "state space of scope " + to_string(scope_) +
                      " does not fit in 64 bits");
    }
    state_space_ *= card;
  }
}

JointDistribution JointDistribution::from_raw(const RawDistribution& raw) {
  validate(raw);
  auto specs = std::make_shared<const std::vector<VariableSpec>>(raw.specs);
  JointDistribution dist(specs, VarSet::range(raw.specs.size()));
  dist.cells_.reserve(raw.cells.size());
  for (const RawCell& cell : raw.cells) {
    dist.cells_.push_back({dist.encode(cell.states), cell.probability});
  }
  std::sort(dist.cells_.begin(), dist.cells_.end(),
            [](const Cell& a, const Cell& b) { return a.index < b.index; });
  return dist;
}

JointDistribution JointDistribution::from_cells(
    std::shared_ptr<const std::vector<VariableSpec>> specs, VarSet scope,
    std::vector<Cell> cells, double tolerance) {
  if (!scope.empty() && scope[scope.size() - 1] >= specs->size()) {
    throw Error(ErrorCode::IndexOutOfScope,
                "scope " + to_string(scope) + " exceeds the variable list");
  }
  JointDistribution dist(std::move(specs), std::move(scope));
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return a.index < b.index; });
  long double sum = 0.0L;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    if (c.index >= dist.state_space_) {
      throw Error(ErrorCode::OutOfRangeState,
                  "cell index " + std::to_string(c.index) + " out of range");
    }
    if (k > 0 && cells[k - 1].index == c.index) {
      throw Error(ErrorCode::DuplicateAssignment,
                  "cell " + describe_states(dist.decode(c.index)) +
                      " appears twice");
    }
    if (!(c.probability > 0.0) || !std::isfinite(c.probability)) {
      throw Error(ErrorCode::NonPositiveEntry,
                  "cell " + describe_states(dist.decode(c.index)) +
                      " has probability " + std::to_string(c.probability));
    }
    sum += c.probability;
  }
  if (std::fabs(static_cast<double>(sum) - 1.0) > tolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << static_cast<double>(sum);
    throw Error(ErrorCode::NotNormalized, msg.str());
  }
  dist.cells_ = std::move(cells);
  return dist;
}

std::vector<std::string> JointDistribution::names() const {
  std::vector<std::string> out;
  out.reserve(specs_->size());
  for (const VariableSpec& s : *specs_) out.push_back(s.name);
  return out;
}

double JointDistribution::total() const {
  long double sum = 0.0L;
  for (const Cell& c : cells_) sum += c.probability;
  return static_cast<double>(sum);
}

std::uint64_t JointDistribution::encode(std::span<const State> states) const {
  if (states.size() != scope_.size()) {
    throw Error(ErrorCode::OutOfRangeState,
                "assignment " + describe_states(states) + " has " +
                    std::to_string(states.size()) + " states, scope has " +
                    std::to_string(scope_.size()));
  }
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k] >= cardinality(scope_[k])) {
      throw Error(ErrorCode::OutOfRangeState,
                  "assignment " + describe_states(states) + " has state " +
                      std::to_string(states[k]) + " for variable " +
                      (*specs_)[scope_[k]].name);
    }
    index += states[k] * strides_[k];
  }
  return index;
}

std::vector<State> JointDistribution::decode(std::uint64_t index) const {
  std::vector<State> states(scope_.size());
  for (std::size_t k = 0; k < scope_.size(); ++k) {
    states[k] = static_cast<State>((index / strides_[k]) %
                                   cardinality(scope_[k]));
  }
  return states;
}

Assignment JointDistribution::assignment(const Cell& cell) const {
  return {scope_, decode(cell.index)};
}

double JointDistribution::probability(std::span<const State> states) const {
  return probability_at(encode(states));
}

double JointDistribution::probability_at(std::uint64_t index) const {
  auto it = std::lower_bound(
      cells_.begin(), cells_.end(), index,
      [](const Cell& c, std::uint64_t i) { return c.index < i; });
  return (it != cells_.end() && it->index == index) ? it->probability : 0.0;
}

void validate(const RawDistribution& raw) {
  std::set<std::string> names;
  for (const VariableSpec& s : raw.specs) {
    if (s.cardinality < 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "variable " + s.name + " has cardinality 0");
    }
    if (s.name.empty()) {
      throw Error(ErrorCode::InvalidArgument, "variable with empty name");
    }
    if (!names.insert(s.name).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "variable name " + s.name + " declared twice");
    }
  }
  // Checks the state space size.
  JointDistribution shape = JointDistribution::from_cells(
      std::make_shared<const std::vector<VariableSpec>>(raw.specs),
      VarSet::range(raw.specs.size()), {{0, 1.0}});

  std::vector<std::pair<std::uint64_t, std::size_t>> seen;
  seen.reserve(raw.cells.size());
  long double sum = 0.0L;
  for (std::size_t k = 0; k < raw.cells.size(); ++k) {
    const RawCell& cell = raw.cells[k];
    if (cell.states.size() != raw.specs.size()) {
      throw Error(ErrorCode::OutOfRangeState,
                  describe_cell(cell) + " has " +
                      std::to_string(cell.states.size()) + " states, expected " +
                      std::to_string(raw.specs.size()));
    }
    for (std::size_t v = 0; v < cell.states.size(); ++v) {
      if (cell.states[v] >= raw.specs[v].cardinality) {
        throw Error(ErrorCode::OutOfRangeState,
                    describe_cell(cell) + " has state " +
                        std::to_string(cell.states[v]) + " for variable " +
                        raw.specs[v].name + " of cardinality " +
                        std::to_string(raw.specs[v].cardinality));
      }
    }
    if (!(cell.probability > 0.0) || !std::isfinite(cell.probability)) {
      throw Error(ErrorCode::NonPositiveEntry,
                  describe_cell(cell) + " has probability " +
                      std::to_string(cell.probability));
    }
    seen.emplace_back(shape.encode(cell.states), k);
    sum += cell.probability;
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 1; k < seen.size(); ++k) {
    if (seen[k].first == seen[k - 1].first) {
      const RawCell& second = raw.cells[std::max(seen[k].second, seen[k - 1].second)];
      throw Error(ErrorCode::DuplicateAssignment,
                  describe_cell(second) + " repeats an earlier cell");
    }
  }
  if (std::fabs(static_cast<double>(sum) - 1.0) > kInputNormalizationTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << static_cast<double>(sum);
    throw Error(ErrorCode::NotNormalized, msg.str());
  }
}

void validate(const JointDistribution& dist) {
  for (std::size_t k = 0; k < dist.cells().size(); ++k) {
    const Cell& c = dist.cells()[k];
    if (c.index >= dist.state_space_size()) {
      throw Error(ErrorCode::OutOfRangeState,
                  "cell index " + std::to_string(c.index) + " out of range");
    }
    if (k > 0 && dist.cells()[k - 1].index >= c.index) {
      throw Error(ErrorCode::DuplicateAssignment,
                  "cell " + describe_states(dist.decode(c.index)) +
                      " is duplicated or out of order");
    }
    if (!(c.probability > 0.0)) {
      throw Error(ErrorCode::NonPositiveEntry,
                  "cell " + describe_states(dist.decode(c.index)) +
                      " is not positive");
    }
  }
  if (std::fabs(dist.total() - 1.0) > kDerivedNormalizationTolerance) {
    throw Error(ErrorCode::NotNormalized,
                "probabilities sum to " + std::to_string(dist.total()));
  }
}

JointDistribution marginalize(const JointDistribution& dist,
                              const VarSet& subset) {
  if (subset.empty()) {
    throw Error(ErrorCode::EmptySubset, "cannot marginalize onto the empty set");
  }
  check_subset_of_scope(dist, subset);
  if (subset == dist.scope()) return dist;

  const Projection project(dist, subset);
  std::vector<std::pair<std::uint64_t, double>> mapped;
  mapped.reserve(dist.support_size());
  for (const Cell& c : dist.cells()) {
    mapped.emplace_back(project(c.index), c.probability);
  }
  std::stable_sort(mapped.begin(), mapped.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Cell> cells;
  for (std::size_t k = 0; k < mapped.size();) {
    const std::uint64_t index = mapped[k].first;
    long double sum = 0.0L;
    for (; k < mapped.size() && mapped[k].first == index; ++k) {
      sum += mapped[k].second;
    }
    cells.push_back({index, static_cast<double>(sum)});
  }
  return JointDistribution::from_cells(dist.shared_specs(), subset,
                                       std::move(cells));
}

double entropy(const JointDistribution& dist) {
  long double h = 0.0L;
  for (const Cell& c : dist.cells()) {
    const long double p = c.probability;
    h -= p * std::log2(p);
  }
  return static_cast<double>(h);
}

double information_content(const JointDistribution& dist, const VarSet& subset) {
  check_subset_of_scope(dist, subset);
  if (subset.size() < 2) return 0.0;
  return information_content(marginalize(dist, subset));
}

double information_content(const JointDistribution& dist) {
  if (dist.scope().size() < 2) return 0.0;
  long double singles = 0.0L;
  for (VarIndex v : dist.scope()) singles += entropy(marginalize(dist, {v}));
  return static_cast<double>(singles - entropy(dist));
}

double kl_divergence(const JointDistribution& p, const JointDistribution& q) {
  if (p.scope() != q.scope() ||
      (p.shared_specs() != q.shared_specs() && p.specs() != q.specs())) {
    throw Error(ErrorCode::ScopeMismatch,
                "KL divergence needs identical variables and scope, got " +
                    to_string(p.scope()) + " and " + to_string(q.scope()));
  }
  long double kl = 0.0L;
  auto qit = q.cells().begin();
  for (const Cell& pc : p.cells()) {
    while (qit != q.cells().end() && qit->index < pc.index) ++qit;
    if (qit == q.cells().end() || qit->index != pc.index) {
      throw Error(ErrorCode::SupportViolation,
                  "assignment " + describe_states(p.decode(pc.index)) +
                      " has p > 0 but q = 0");
    }
    kl += static_cast<long double>(pc.probability) *
          std::log2(static_cast<long double>(pc.probability) / qit->probability);
  }
  return static_cast<double>(kl);
}

bool conditional_independence(const JointDistribution& dist, const VarSet& a,
                              const VarSet& b, const VarSet& c, double tol) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::EmptyABSet,
                "conditional independence needs nonempty A and B");
  }
  if (!a.disjoint_with(b) || !a.disjoint_with(c) || !b.disjoint_with(c)) {
    throw Error(ErrorCode::OverlappingSets,
                "sets " + to_string(a) + ", " + to_string(b) + ", " +
                    to_string(c) + " are not pairwise disjoint");
  }
  const VarSet abc = a.unite(b).unite(c);
  check_subset_of_scope(dist, abc);

  const JointDistribution p_abc = marginalize(dist, abc);
  const JointDistribution p_ac = marginalize(p_abc, a.unite(c));
  const JointDistribution p_bc = marginalize(p_abc, b.unite(c));

  // Group the A u C and B u C tables by their C part. Only assignments with
  // P(ac) P(bc) > 0 can make either side of the test nonzero, since
  // P(abc) > 0 implies both.
  auto group_by_c = [&](const JointDistribution& side) {
    std::map<std::vector<State>, std::vector<const Cell*>> groups;
    for (const Cell& cell : side.cells()) {
      const std::vector<State> states = side.decode(cell.index);
      std::vector<State> c_states;
      for (VarIndex v : c) c_states.push_back(states[side.scope().position(v)]);
      groups[c_states].push_back(&cell);
    }
    return groups;
  };
  const auto ac_groups = group_by_c(p_ac);
  const auto bc_groups = group_by_c(p_bc);

  std::vector<State> abc_states(abc.size());
  for (const auto& [c_states, ac_cells] : ac_groups) {
    auto bc_it = bc_groups.find(c_states);
    if (bc_it == bc_groups.end()) continue;
    double pc = 1.0;
    if (!c.empty()) {
      long double sum = 0.0L;
      for (const Cell* cell : ac_cells) sum += cell->probability;
      pc = static_cast<double>(sum);
    }
    for (const Cell* ac : ac_cells) {
      const std::vector<State> ac_states = p_ac.decode(ac->index);
      for (std::size_t k = 0; k < ac_states.size(); ++k) {
        abc_states[abc.position(p_ac.scope()[k])] = ac_states[k];
      }
      for (const Cell* bc : bc_it->second) {
        const std::vector<State> bc_states = p_bc.decode(bc->index);
        for (std::size_t k = 0; k < bc_states.size(); ++k) {
          abc_states[abc.position(p_bc.scope()[k])] = bc_states[k];
        }
        const double joint = p_abc.probability(abc_states);
        if (std::fabs(joint * pc - ac->probability * bc->probability) > tol) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace pmnet
