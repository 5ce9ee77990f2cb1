#include "isolat/adjoint.hpp"

#include <algorithm>
#include <numbers>

namespace isolat {

SubspaceDescriptor ann_h(const ConcreteSubgroup& h) {
  if (std::holds_alternative<FiniteSub>(h)) return {SubspaceDescriptor::Kind::Full3, {}};
  if (const auto* c = std::get_if<CircleSub>(&h)) {
    return {SubspaceDescriptor::Kind::Plane, canonical_axis(normalized(c->axis))};
  }
  if (const auto* o = std::get_if<OrthCircleSub>(&h)) {
    return {SubspaceDescriptor::Kind::Plane, canonical_axis(normalized(o->axis))};
  }
  return {SubspaceDescriptor::Kind::Zero, {}};
}

std::vector<AxisOrbit> axis_orbits(const FiniteRotationGroup& h) {
  std::vector<std::pair<Vec3, int>> axes;  // canonical axis, axial order
  for (const auto& e : h.elements()) {
    const auto aa = axis_angle_of(e);
    if (!aa) continue;
    auto it = std::find_if(axes.begin(), axes.end(),
                           [&](const auto& p) { return same_line(p.first, aa->axis); });
    if (it == axes.end()) {
      axes.emplace_back(aa->axis, 2);
    } else {
      ++it->second;
    }
  }
  std::vector<char> assigned(axes.size(), 0);
  std::vector<AxisOrbit> out;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (assigned[i]) continue;
    AxisOrbit orbit;
    orbit.axial_order = axes[i].second;
    for (const auto& g : h.elements()) {
      const Vec3 image = apply(g, axes[i].first);
      for (std::size_t j = 0; j < axes.size(); ++j) {
        if (!assigned[j] && same_line(axes[j].first, image)) {
          assigned[j] = 1;
          orbit.members.push_back(canonical_axis(axes[j].first));
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end(), axis_less);
    orbit.representative = orbit.members.back();
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const AxisOrbit& a, const AxisOrbit& b) {
    if (a.axial_order != b.axial_order) return a.axial_order < b.axial_order;
    return axis_less(a.representative, b.representative);
  });
  return out;
}

AnnIsotropy isotropy_on_ann(const ConcreteSubgroup& h) {
  AnnIsotropy out;
  const auto add = [&](ConcreteSubgroup rep) {
    for (const auto& c : out.classes) {
      if (same_subgroup(c.representative, rep)) return;
    }
    const ClassTag label = g_class_of(rep);
    out.classes.push_back({label, std::move(rep)});
  };

  if (const auto* f = std::get_if<FiniteSub>(&h)) {
    if (f->group.order() > 1) add(trivial_subgroup());  // generic vector
    for (const auto& orbit : axis_orbits(f->group)) {
      // A nonzero vector on a rotation axis is fixed exactly by the axial
      // rotations about that line.
      add(intersect(h, CircleSub{orbit.representative}));
    }
    add(h);
    // The origin entry must come last even when it coincided with an axis
    // entry (cyclic H).
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const AnnClass& c) { return same_subgroup(c.representative, h); });
    std::rotate(it, it + 1, out.classes.end());
    return out;
  }
  if (std::holds_alternative<CircleSub>(h)) {
    add(trivial_subgroup());
    add(h);
    return out;
  }
  if (const auto* o = std::get_if<OrthCircleSub>(&h)) {
    // Nonzero v in the plane: only the flip about v itself fixes it.
    const Vec3 v = direction_at_phase(o->axis, o->flip_phase);
    const std::vector<Rotation> gens{Rotation::about(v, std::numbers::pi)};
    add(make_finite(close_group(gens)));
    add(h);
    return out;
  }
  add(h);
  return out;
}

}  // namespace isolat
