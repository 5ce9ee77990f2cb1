#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "isolat/config.hpp"

namespace isolat {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(Vec3 a);
Vec3 normalized(Vec3 a);

/// Flips `a` so that its first component exceeding the tolerance is positive.
Vec3 canonical_axis(Vec3 a);

/// Component-wise comparison within tolerance.
bool near(Vec3 a, Vec3 b, double tol = tolerance());

/// True when the unit vectors span the same line.
bool same_line(Vec3 a, Vec3 b);
bool perpendicular(Vec3 a, Vec3 b);

/// Lexicographic order on (canonicalized) axes, with ties inside tolerance.
bool axis_less(Vec3 a, Vec3 b);

/// Unit quaternion w + xi + yj + zk acting on R^3 by conjugation. Always
/// stored normalized and in canonical sign (first component above the
/// tolerance is positive), so q and -q share one representation.
class Rotation {
 public:
  Rotation() = default;
  Rotation(double w, double x, double y, double z);

  static Rotation identity() { return {}; }
  /// Rotation by `angle` radians about `axis` (need not be unit).
  static Rotation about(Vec3 axis, double angle);
  static Rotation from_degrees(Vec3 axis, double angle_deg);

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  Rotation inverse() const { return {w_, -x_, -y_, -z_}; }
  bool is_identity() const;

 private:
  double w_ = 1.0, x_ = 0.0, y_ = 0.0, z_ = 0.0;
};

/// compose(a, b) applies b first, then a.
Rotation compose(const Rotation& a, const Rotation& b);
Vec3 apply(const Rotation& r, Vec3 v);
bool eq(const Rotation& a, const Rotation& b);
Rotation conjugate_by(const Rotation& g, const Rotation& h);  // g h g^-1

/// Axis-angle view of a non-identity rotation. The axis is sign-canonical and
/// the angle lies in (-pi, pi]; `order` is 0 when the rotation has infinite
/// (or over-cap) order.
struct AxisAngle {
  Vec3 axis;
  double angle = 0.0;
  int order = 0;
};

/// nullopt is the identity marker.
std::optional<AxisAngle> axis_angle_of(const Rotation& r);

/// A finite rotation group, stored as a deduplicated element list with the
/// identity first.
class FiniteRotationGroup {
 public:
  FiniteRotationGroup() : elements_{Rotation::identity()} {}

  /// Builds from an element list already known to be closed (no check).
  static FiniteRotationGroup from_closed(std::vector<Rotation> elements);

  std::span<const Rotation> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Rotation& r) const;
  std::optional<std::size_t> index_of(const Rotation& r) const;

  /// Re-verifies identity, closure under composition and inverses.
  bool is_closed() const;

  /// Row-major multiplication table in element indices:
  /// table[i * order() + j] = index_of(compose(e_i, e_j)).
  std::vector<int> cayley_table() const;

  /// Element sets compared up to tolerance; order of storage is ignored.
  friend bool same_elements(const FiniteRotationGroup& a, const FiniteRotationGroup& b);

 private:
  std::vector<Rotation> elements_;
};

/// Smallest composition-closed set containing `generators` and the identity.
/// Throws GroupTooLarge when the closure exceeds `cap` elements.
FiniteRotationGroup close_group(std::span<const Rotation> generators,
                                int cap = kDefaultClosureCap);

/// Conjugates every element: g F g^-1.
FiniteRotationGroup conjugate_group(const Rotation& g, const FiniteRotationGroup& f);

}  // namespace isolat
