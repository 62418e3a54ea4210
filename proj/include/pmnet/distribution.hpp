#ifndef PMNET_DISTRIBUTION_HPP_
#define PMNET_DISTRIBUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pmnet/varset.hpp"

namespace pmnet {

using State = std::uint32_t;

struct VariableSpec {
  std::string name;
  std::size_t cardinality = 1;

  friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

// States listed in the order of `scope`.
struct Assignment {
  VarSet scope;
  std::vector<State> states;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// One stored cell. `index` is the mixed-radix rank of the assignment over the
// owning distribution's scope, first scope variable most significant, so
// ascending index order is lexicographic assignment order.
struct Cell {
  std::uint64_t index = 0;
  double probability = 0.0;
};

// Unchecked table as read from a file or built by hand. `line` is carried
// into error messages when nonzero.
struct RawCell {
  std::vector<State> states;
  double probability = 0.0;
  std::size_t line = 0;
};

struct RawDistribution {
  std::vector<VariableSpec> specs;
  std::vector<RawCell> cells;
};

inline constexpr double kInputNormalizationTolerance = 1e-12;
inline constexpr double kDerivedNormalizationTolerance = 1e-9;

// Sparse joint distribution over a subset (`scope`) of a shared list of
// variables. Zero-probability cells are never stored. Instances are immutable
// and cheap to copy; marginals share the variable list with their parent.
class JointDistribution {
 public:
  // Checks every invariant (see validate) and builds a distribution over all
  // of raw.specs.
  static JointDistribution from_raw(const RawDistribution& raw);

  // Builds a derived table. Cells may arrive in any order but must have
  // unique in-range indices and positive probabilities, and must sum to one
  // within `tolerance`.
  static JointDistribution from_cells(
      std::shared_ptr<const std::vector<VariableSpec>> specs, VarSet scope,
      std::vector<Cell> cells,
      double tolerance = kDerivedNormalizationTolerance);

  const std::vector<VariableSpec>& specs() const { return *specs_; }
  const std::shared_ptr<const std::vector<VariableSpec>>& shared_specs() const {
    return specs_;
  }
  const VarSet& scope() const { return scope_; }
  std::vector<std::string> names() const;
  std::size_t cardinality(VarIndex v) const { return (*specs_)[v].cardinality; }

  std::span<const Cell> cells() const { return cells_; }
  std::size_t support_size() const { return cells_.size(); }
  // Product of the cardinalities in scope.
  std::uint64_t state_space_size() const { return state_space_; }
  double total() const;

  std::uint64_t encode(std::span<const State> states) const;
  std::vector<State> decode(std::uint64_t index) const;
  Assignment assignment(const Cell& cell) const;

  // Zero for assignments that are not stored.
  double probability(std::span<const State> states) const;
  double probability_at(std::uint64_t index) const;

 private:
  JointDistribution(std::shared_ptr<const std::vector<VariableSpec>> specs,
                    VarSet scope);

  std::shared_ptr<const std::vector<VariableSpec>> specs_;
  VarSet scope_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t state_space_ = 1;
  std::vector<Cell> cells_;
};

// Throws NotNormalized, OutOfRangeState, NonPositiveEntry or
// DuplicateAssignment naming the first offending cell.
void validate(const RawDistribution& raw);
void validate(const JointDistribution& dist);

// Marginal over `subset`, which must be a nonempty subset of dist.scope().
JointDistribution marginalize(const JointDistribution& dist,
                              const VarSet& subset);

// Shannon entropy in bits.
double entropy(const JointDistribution& dist);

// Multiinformation of the variables in `subset`: the sum of their individual
// entropies minus their joint entropy. Exactly zero when |subset| < 2.
double information_content(const JointDistribution& dist, const VarSet& subset);

// Multiinformation over the whole scope of `dist`.
double information_content(const JointDistribution& dist);

// KL(p || q) in bits. Both must share variables and scope, and the support of
// p must lie inside the support of q.
double kl_divergence(const JointDistribution& p, const JointDistribution& q);

// Tests P(abc) P(c) == P(ac) P(bc) within `tol` for every assignment of
// A u B u C. An empty C reduces to marginal independence of A and B.
bool conditional_independence(const JointDistribution& dist, const VarSet& a,
                              const VarSet& b, const VarSet& c, double tol);

}  // namespace pmnet

#endif  // PMNET_DISTRIBUTION_HPP_
