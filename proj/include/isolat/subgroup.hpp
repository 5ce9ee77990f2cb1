#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "isolat/rotation.hpp"

namespace isolat {

/// Conjugacy classes of closed subgroups of SO(3).
enum class Kind { Trivial, Cyclic, Dihedral, Tetra, Octa, Icosa, Circle, OrthCircle, Full };

/// A conjugacy class of closed subgroups. `n` is meaningful only for Cyclic
/// and Dihedral and is zero otherwise.
struct ClassTag {
  Kind kind = Kind::Trivial;
  int n = 0;

  static ClassTag trivial() { return {Kind::Trivial, 0}; }
  static ClassTag cyclic(int n);
  static ClassTag dihedral(int n);
  static ClassTag tetra() { return {Kind::Tetra, 0}; }
  static ClassTag octa() { return {Kind::Octa, 0}; }
  static ClassTag icosa() { return {Kind::Icosa, 0}; }
  static ClassTag circle() { return {Kind::Circle, 0}; }
  static ClassTag orth_circle() { return {Kind::OrthCircle, 0}; }
  static ClassTag full() { return {Kind::Full, 0}; }

  bool is_finite() const { return kind < Kind::Circle; }
  /// Group order for finite classes, 0 for continuous ones.
  int order() const;

  friend bool operator==(const ClassTag&, const ClassTag&) = default;
  /// Total order that is a linear extension of subconjugation:
  /// (dimension, order, kind, n).
  friend std::strong_ordering operator<=>(const ClassTag& a, const ClassTag& b);
};

/// "1", "C4", "D3", "T", "O", "I", "SO2", "O2", "SO3".
std::string display_name(const ClassTag& t);
/// Inverse of display_name; nullopt on malformed input.
std::optional<ClassTag> parse_display_name(const std::string& s);

struct FiniteSub {
  FiniteRotationGroup group;
};
struct CircleSub {
  Vec3 axis;
};
/// O(2) about `axis`: axial rotations plus pi-flips about every perpendicular
/// axis. `flip_phase` does not affect membership; it anchors the flip used to
/// position finite subgroups inside it (phase measured in perp_frame(axis)).
struct OrthCircleSub {
  Vec3 axis;
  double flip_phase = 0.0;
};
struct FullSub {};

/// A positioned closed subgroup of SO(3).
using ConcreteSubgroup = std::variant<FiniteSub, CircleSub, OrthCircleSub, FullSub>;

ConcreteSubgroup make_finite(FiniteRotationGroup g);
ConcreteSubgroup trivial_subgroup();

/// Orthonormal (e1, e2) spanning the plane perpendicular to the unit `axis`;
/// for axis z this is (x, y).
std::pair<Vec3, Vec3> perp_frame(Vec3 axis);
/// Unit direction at `phase` radians in the plane perpendicular to `axis`.
Vec3 direction_at_phase(Vec3 axis, double phase);
/// Phase in [0, pi) of the line through `dir` (assumed perpendicular to axis).
double phase_of(Vec3 axis, Vec3 dir);

ClassTag classify_finite(const FiniteRotationGroup& f);
ClassTag g_class_of(const ConcreteSubgroup& s);

ConcreteSubgroup canonical_rep(const ClassTag& t);
/// Canonical generators of a finite class (empty for Trivial).
std::vector<Rotation> canonical_generators(const ClassTag& t);

bool is_subconjugate(const ClassTag& t1, const ClassTag& t2);

/// All subgroups of `f`, deterministically ordered by (order, tag, principal
/// axis, elements).
std::vector<FiniteRotationGroup> subgroups_of(const FiniteRotationGroup& f);

ConcreteSubgroup intersect(const ConcreteSubgroup& a, const ConcreteSubgroup& b);

/// Same positioned subgroup (element sets for finite; axes for continuous).
bool same_subgroup(const ConcreteSubgroup& a, const ConcreteSubgroup& b);
bool is_subgroup(const ConcreteSubgroup& a, const ConcreteSubgroup& b);
bool contains(const ConcreteSubgroup& s, const Rotation& r);

/// Axis used for deterministic ordering: the axis of a cyclic group, the
/// n-fold axis of a dihedral group, otherwise the lexicographically largest
/// canonical axis among those of highest order. Zero vector for Trivial/Full.
Vec3 principal_axis(const ConcreteSubgroup& s);

/// Result of embeddings_of_class_in. For a FullSub ambient only the canonical
/// representative is returned and `canonical_only` is set.
struct EmbeddingList {
  std::vector<ConcreteSubgroup> subgroups;
  bool canonical_only = false;
};

/// Positioned subgroups of `h2` whose class is `t`. Complete for finite h2;
/// for continuous h2 one representative per relative position with respect
/// to the stabilizer positions produced by isotropy_on_ann.
EmbeddingList embeddings_of_class_in(const ClassTag& t, const ConcreteSubgroup& h2);

/// Replaces CircleSub by Cyclic(m) and OrthCircleSub by Dihedral(m) (flip at
/// the stored phase) about the same axis. Finite subgroups pass through;
/// FullSub is not truncatable and is returned unchanged.
ConcreteSubgroup truncate(const ConcreteSubgroup& s, int m = 60);

}  // namespace isolat
