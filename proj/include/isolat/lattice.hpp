#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isolat/subgroup.hpp"

namespace isolat {

/// A finite poset of classes ordered by subconjugation. Classes are kept in
/// the ClassTag total order, which is a linear extension of the partial
/// order, so `hasse` edges (i, j) always have i < j.
class IsotropyLattice {
 public:
  const std::vector<ClassTag>& classes() const { return classes_; }
  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }
  std::size_t size() const { return classes_.size(); }

  std::optional<int> index_of(const ClassTag& t) const;
  bool contains(const ClassTag& t) const { return index_of(t).has_value(); }
  /// Non-strict order between stored classes.
  bool leq(int i, int j) const { return order_[static_cast<std::size_t>(i) * size() + j]; }
  /// The unique minimum; only meaningful when has_unique_minimum().
  const ClassTag& minimum() const { return classes_.front(); }
  bool has_unique_minimum() const;

  friend bool operator==(const IsotropyLattice& a, const IsotropyLattice& b) {
    return a.classes_ == b.classes_;
  }

 private:
  friend IsotropyLattice build_lattice(const std::set<ClassTag>& classes, bool require_unique_min);
  std::vector<ClassTag> classes_;
  std::vector<char> order_;
  std::vector<std::pair<int, int>> hasse_;
};

/// Builds the poset from is_subconjugate. Throws ValidationError on an empty
/// set and NoUniqueMinimum when more than one class is minimal (skipped when
/// `require_unique_min` is false, used for restricted sub-posets).
IsotropyLattice build_lattice(const std::set<ClassTag>& classes, bool require_unique_min = true);
IsotropyLattice build_lattice(const std::vector<ClassTag>& classes, bool require_unique_min = true);

/// Longest covering chain from the minimum.
std::map<ClassTag, int> compute_depths(const IsotropyLattice& l);

/// {s : t <= s}. Throws ClassNotInLattice.
std::set<ClassTag> up_set(const IsotropyLattice& l, const ClassTag& t);

/// Strict order pairs (i, j) with classes[i] < classes[j], from the Hasse
/// edges by transitive closure.
std::set<std::pair<int, int>> transitive_closure(std::size_t n,
                                                 const std::vector<std::pair<int, int>>& edges);

std::string to_dot(const IsotropyLattice& l);

}  // namespace isolat
