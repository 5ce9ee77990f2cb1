#include "isolat/lift.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "isolat/adjoint.hpp"
#include "isolat/error.hpp"

namespace isolat {

ClassTag AmbientGroup::tag() const {
  switch (kind) {
    case Kind::SO3: return ClassTag::full();
    case Kind::Circle: return ClassTag::circle();
    case Kind::Finite: return classify_finite(group);
  }
  return ClassTag::full();
}

void check_realizable(const AmbientGroup& g, const IsotropyLattice& base) {
  const ClassTag outer = g.tag();
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& t = base.classes()[i];
    if (!is_subconjugate(t, outer)) {
      throw NotRealizableInG(display_name(t) + " is not a subgroup class of " + display_name(outer),
                             "/base_lattice");
    }
  }
}

namespace {

struct WorkItem {
  ClassTag h1, h2, k;
  ConcreteSubgroup embedding, h2_rep, k_rep;
};

LiftResult fast_path(const AmbientGroup& g, const IsotropyLattice& base) {
  // Finite G: g = 0, so ann h = 0 and K = H2, giving L = H1.
  // Circle: the adjoint action is trivial, so again K = H2.
  LiftResult r{g.kind, base, base, {}};
  for (const auto& t : base.classes()) {
    const auto rep = canonical_rep(t);
    r.witnesses.push_back({t, t, t, t, rep, rep, rep});
  }
  return r;
}

std::vector<ClassTag> depth_order(const IsotropyLattice& base) {
  const auto depths = compute_depths(base);
  std::vector<ClassTag> order(base.classes());
  std::stable_sort(order.begin(), order.end(), [&](const ClassTag& a, const ClassTag& b) {
    return depths.at(a) < depths.at(b);
  });
  return order;
}

// Visits every (H2, H1, embedding, K) in the deterministic traversal order.
template <typename Fn>
void for_each_item(const IsotropyLattice& base, Fn&& fn) {
  for (const ClassTag& h2 : depth_order(base)) {
    const ConcreteSubgroup h2_rep = canonical_rep(h2);
    const AnnIsotropy ks = isotropy_on_ann(h2_rep);
    for (const ClassTag& h1 : base.classes()) {
      if (!is_subconjugate(h1, h2)) continue;
      const EmbeddingList emb = embeddings_of_class_in(h1, h2_rep);
      for (const auto& e : emb.subgroups) {
        for (const auto& k : ks.classes) fn(WorkItem{h1, h2, k.label, e, h2_rep, k.representative});
      }
    }
  }
}

LiftResult assemble(const AmbientGroup& g, const IsotropyLattice& base,
                    const std::vector<WorkItem>& items, const std::vector<ClassTag>& tags) {
  std::map<ClassTag, std::size_t> first;
  for (std::size_t i = 0; i < items.size(); ++i) first.emplace(tags[i], i);
  std::set<ClassTag> classes;
  for (const auto& [t, _] : first) classes.insert(t);
  LiftResult r{g.kind, base, build_lattice(classes), {}};
  for (const auto& [t, i] : first) {
    const auto& it = items[i];
    r.witnesses.push_back({t, it.h1, it.h2, it.k, it.embedding, it.h2_rep, it.k_rep});
  }
  return r;
}

}  // namespace

LiftResult lifted_lattice_serial(const AmbientGroup& g, const IsotropyLattice& base) {
  check_realizable(g, base);
  if (g.kind != AmbientGroup::Kind::SO3) return fast_path(g, base);
  std::vector<WorkItem> items;
  std::vector<ClassTag> tags;
  for_each_item(base, [&](WorkItem item) {
    tags.push_back(g_class_of(intersect(item.embedding, item.k_rep)));
    items.push_back(std::move(item));
  });
  return assemble(g, base, items, tags);
}

LiftResult lifted_lattice(const AmbientGroup& g, const IsotropyLattice& base) {
  check_realizable(g, base);
  if (g.kind != AmbientGroup::Kind::SO3) return fast_path(g, base);
  std::vector<WorkItem> items;
  for_each_item(base, [&](WorkItem item) { items.push_back(std::move(item)); });

  const long n = static_cast<long>(items.size());
  std::vector<ClassTag> tags(items.size());
  std::vector<std::optional<std::string>> failures(items.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      tags[static_cast<std::size_t>(i)] =
          g_class_of(intersect(items[static_cast<std::size_t>(i)].embedding,
                               items[static_cast<std::size_t>(i)].k_rep));
    } catch (const std::exception& ex) {
      failures[static_cast<std::size_t>(i)] = ex.what();
    }
  }
  for (const auto& f : failures) {
    if (f) throw UnclassifiableGroup("lift intersection: " + *f);
  }
  return assemble(g, base, items, tags);
}

LiftResult cotangent_lifted_lattice(const AmbientGroup& g, const IsotropyLattice& base) {
  return lifted_lattice(g, base);
}

bool lift_witness_check(const LiftResult& r) {
  try {
    if (r.witnesses.size() != r.lifted.size()) return false;
    for (const auto& w : r.witnesses) {
      if (!r.lifted.contains(w.lifted)) return false;
      if (!r.base.contains(w.h1) || !r.base.contains(w.h2)) return false;
      if (!is_subconjugate(w.h1, w.h2)) return false;
      if (g_class_of(w.h1_rep) != w.h1 || g_class_of(w.h2_rep) != w.h2) return false;
      if (g_class_of(w.k_rep) != w.k) return false;
      if (!is_subgroup(w.h1_rep, w.h2_rep)) return false;
      if (r.ambient == AmbientGroup::Kind::SO3) {
        const auto ks = isotropy_on_ann(w.h2_rep);
        const bool member = std::any_of(ks.classes.begin(), ks.classes.end(), [&](const AnnClass& c) {
          return same_subgroup(c.representative, w.k_rep);
        });
        if (!member) return false;
      } else if (!same_subgroup(w.k_rep, w.h2_rep)) {
        return false;
      }
      if (g_class_of(intersect(w.h1_rep, w.k_rep)) != w.lifted) return false;
    }
    for (const auto& t : r.lifted.classes()) {
      const auto hits = std::count_if(r.witnesses.begin(), r.witnesses.end(),
                                      [&](const Witness& w) { return w.lifted == t; });
      if (hits != 1) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace isolat
