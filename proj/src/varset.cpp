#include "pmnet/varset.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <numeric>

namespace pmnet {

VarSet::VarSet(std::initializer_list<VarIndex> vars)
    : VarSet(std::vector<VarIndex>(vars)) {}

VarSet::VarSet(std::vector<VarIndex> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

VarSet VarSet::range(std::size_t n) {
  std::vector<VarIndex> v(n);
  std::iota(v.begin(), v.end(), VarIndex{0});
  return VarSet(std::move(v));
}

bool VarSet::contains(VarIndex v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

std::size_t VarSet::position(VarIndex v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  assert(it != vars_.end() && *it == v);
  return static_cast<std::size_t>(it - vars_.begin());
}

bool VarSet::is_subset_of(const VarSet& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(),
                       vars_.end());
}

bool VarSet::disjoint_with(const VarSet& other) const {
  return intersect(other).empty();
}

VarSet VarSet::unite(const VarSet& other) const {
  VarSet out;
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(),
                 other.vars_.end(), std::back_inserter(out.vars_));
  return out;
}

VarSet VarSet::intersect(const VarSet& other) const {
  VarSet out;
  std::set_intersection(vars_.begin(), vars_.end(), other.vars_.begin(),
                        other.vars_.end(), std::back_inserter(out.vars_));
  return out;
}

VarSet VarSet::minus(const VarSet& other) const {
  VarSet out;
  std::set_difference(vars_.begin(), vars_.end(), other.vars_.begin(),
                      other.vars_.end(), std::back_inserter(out.vars_));
  return out;
}

VarSet VarSet::without(VarIndex v) const { return minus(VarSet{v}); }

std::string to_string(const VarSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(set[k]);
  }
  return out + "}";
}

std::string to_string(const VarSet& set, std::span<const std::string> names) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ',';
    out += set[k] < names.size() ? names[set[k]] : std::to_string(set[k]);
  }
  return out + "}";
}

}  // namespace pmnet
