#ifndef PMNET_VARSET_HPP_
#define PMNET_VARSET_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pmnet {

using VarIndex = std::size_t;

// A set of variable indices kept sorted and duplicate-free. Ordering is
// lexicographic over the sorted elements, which is what report and export
// code relies on.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<VarIndex> vars);
  explicit VarSet(std::vector<VarIndex> vars);

  // Every index in [0, n).
  static VarSet range(std::size_t n);

  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }
  auto begin() const noexcept { return vars_.begin(); }
  auto end() const noexcept { return vars_.end(); }
  VarIndex operator[](std::size_t pos) const { return vars_[pos]; }
  std::span<const VarIndex> elements() const noexcept { return vars_; }

  bool contains(VarIndex v) const;
  // Position of v inside the sorted set; v must be present.
  std::size_t position(VarIndex v) const;
  bool is_subset_of(const VarSet& other) const;
  bool disjoint_with(const VarSet& other) const;

  VarSet unite(const VarSet& other) const;
  VarSet intersect(const VarSet& other) const;
  VarSet minus(const VarSet& other) const;
  VarSet without(VarIndex v) const;

  friend auto operator<=>(const VarSet&, const VarSet&) = default;
  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<VarIndex> vars_;
};

// "{a,b,c}" using 0-based indices.
std::string to_string(const VarSet& set);

// "{X1,X3}" using the supplied variable names.
std::string to_string(const VarSet& set, std::span<const std::string> names);

}  // namespace pmnet

#endif  // PMNET_VARSET_HPP_
