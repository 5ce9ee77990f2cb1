#include "isolat/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "isolat/error.hpp"

namespace isolat {

std::optional<int> IsotropyLattice::index_of(const ClassTag& t) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), t);
  if (it == classes_.end() || *it != t) return std::nullopt;
  return static_cast<int>(it - classes_.begin());
}

bool IsotropyLattice::has_unique_minimum() const {
  if (classes_.empty()) return false;
  for (std::size_t j = 0; j < size(); ++j) {
    if (!leq(0, static_cast<int>(j))) return false;
  }
  return true;
}

IsotropyLattice build_lattice(const std::set<ClassTag>& classes, bool require_unique_min) {
  if (require_unique_min && classes.empty()) {
    throw ValidationError("isotropy lattice must contain at least one class");
  }
  IsotropyLattice l;
  l.classes_.assign(classes.begin(), classes.end());
  const std::size_t n = l.classes_.size();
  l.order_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      l.order_[i * n + j] = is_subconjugate(l.classes_[i], l.classes_[j]) ? 1 : 0;
    }
  }
  if (require_unique_min && !l.has_unique_minimum()) {
    std::string names;
    for (std::size_t j = 0; j < n; ++j) {
      bool minimal = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j && l.order_[i * n + j]) minimal = false;
      }
      if (minimal) names += (names.empty() ? "" : ", ") + display_name(l.classes_[j]);
    }
    throw NoUniqueMinimum("lattice has several minimal classes: " + names);
  }
  // Transitive reduction: i < j is a cover iff no k strictly between.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!l.order_[i * n + j]) continue;
      bool cover = true;
      for (std::size_t k = i + 1; k < j && cover; ++k) {
        if (l.order_[i * n + k] && l.order_[k * n + j]) cover = false;
      }
      if (cover) l.hasse_.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return l;
}

IsotropyLattice build_lattice(const std::vector<ClassTag>& classes, bool require_unique_min) {
  return build_lattice(std::set<ClassTag>(classes.begin(), classes.end()), require_unique_min);
}

std::map<ClassTag, int> compute_depths(const IsotropyLattice& l) {
  std::vector<int> depth(l.size(), 0);
  // Classes are stored in a linear extension, so one forward sweep suffices.
  for (const auto& [i, j] : l.hasse()) {
    depth[static_cast<std::size_t>(j)] =
        std::max(depth[static_cast<std::size_t>(j)], depth[static_cast<std::size_t>(i)] + 1);
  }
  std::map<ClassTag, int> out;
  for (std::size_t i = 0; i < l.size(); ++i) out[l.classes()[i]] = depth[i];
  return out;
}

std::set<ClassTag> up_set(const IsotropyLattice& l, const ClassTag& t) {
  const auto idx = l.index_of(t);
  if (!idx) throw ClassNotInLattice(display_name(t) + " is not a class of the lattice");
  std::set<ClassTag> out;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (l.leq(*idx, static_cast<int>(j))) out.insert(l.classes()[j]);
  }
  return out;
}

std::set<std::pair<int, int>> transitive_closure(std::size_t n,
                                                 const std::vector<std::pair<int, int>>& edges) {
  std::vector<char> reach(n * n, 0);
  for (const auto& [i, j] : edges) reach[static_cast<std::size_t>(i) * n + j] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k * n + j]) reach[i * n + j] = 1;
      }
    }
  }
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i * n + j]) out.emplace(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

std::string to_dot(const IsotropyLattice& l) {
  std::ostringstream os;
  os << "digraph isotropy_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    os << "  n" << i << " [label=\"" << display_name(l.classes()[i]) << "\"];\n";
  }
  for (const auto& [i, j] : l.hasse()) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace isolat
