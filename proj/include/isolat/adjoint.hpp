#pragma once

#include <vector>

#include "isolat/subgroup.hpp"

namespace isolat {

/// ann h inside g* ~ R^3 (identified equivariantly through the Euclidean
/// inner product; the adjoint action of SO(3) is the standard rotation action).
struct SubspaceDescriptor {
  enum class Kind { Zero, Plane, Full3 };
  Kind kind = Kind::Full3;
  Vec3 axis{};  // normal of the plane when kind == Plane
};

SubspaceDescriptor ann_h(const ConcreteSubgroup& h);

struct AnnClass {
  ClassTag label;  // G-class of the representative
  ConcreteSubgroup representative;
};

/// One entry per H-conjugacy class of stabilizers for H acting on ann h.
/// Entries with the same label but different positions (e.g. the two flip
/// orbits of Dihedral(2k)) are kept apart. The last entry is always H itself,
/// the stabilizer of the origin.
struct AnnIsotropy {
  std::vector<AnnClass> classes;
};

AnnIsotropy isotropy_on_ann(const ConcreteSubgroup& h);

/// Rotation axes of a finite group grouped into H-orbits; each orbit is
/// represented by its lexicographically largest canonical axis.
struct AxisOrbit {
  Vec3 representative;
  int axial_order = 0;
  std::vector<Vec3> members;
};
std::vector<AxisOrbit> axis_orbits(const FiniteRotationGroup& h);

}  // namespace isolat
