#pragma once

// Test-only oracles. Everything here works with plain 3x3 matrices built by
// Rodrigues' formula, independent of the quaternion code under test.

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "isolat/rotation.hpp"

namespace isolat::testing {

using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 rodrigues(Vec3 axis, double angle) {
  const double n = std::sqrt(axis.x * axis.x + axis.y * axis.y + axis.z * axis.z);
  const double x = axis.x / n, y = axis.y / n, z = axis.z / n;
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  return {{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
           {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
           {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}};
}

inline Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Vec3 matvec(const Mat3& m, Vec3 v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

inline Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

inline bool mat_near(const Mat3& a, const Mat3& b, double tol = 1e-9) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(a[i][j] - b[i][j]) > tol) return false;
  return true;
}

/// Matrix of a rotation, read off from its action on the basis vectors.
inline Mat3 matrix_of(const Rotation& r) {
  const Vec3 c0 = apply(r, {1, 0, 0}), c1 = apply(r, {0, 1, 0}), c2 = apply(r, {0, 0, 1});
  return {{{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}}};
}

/// Closure of a set of matrices by brute-force products.
inline std::vector<Mat3> matrix_closure(std::vector<Mat3> gens, std::size_t cap = 300) {
  std::vector<Mat3> out{identity3()};
  const auto has = [&](const Mat3& m) {
    for (const auto& e : out)
      if (mat_near(e, m, 1e-7)) return true;
    return false;
  };
  for (std::size_t head = 0; head < out.size() && out.size() <= cap; ++head) {
    for (const auto& g : gens) {
      const Mat3 p = matmul(out[head], g);
      if (!has(p)) out.push_back(p);
    }
  }
  return out;
}

inline Rotation random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Rotation(g(rng), g(rng), g(rng), g(rng));
}

inline Vec3 random_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng), g(rng)};
}

inline constexpr double kPi = std::numbers::pi;

}  // namespace isolat::testing

#include "isolat/subgroup.hpp"

namespace isolat::testing {

/// Every finite catalog tag with n <= n_max, plus T, O, I.
inline std::vector<ClassTag> finite_tags(int n_max) {
  std::vector<ClassTag> out{ClassTag::trivial()};
  for (int n = 2; n <= n_max; ++n) out.push_back(ClassTag::cyclic(n));
  for (int n = 2; n <= n_max; ++n) out.push_back(ClassTag::dihedral(n));
  out.push_back(ClassTag::tetra());
  out.push_back(ClassTag::octa());
  out.push_back(ClassTag::icosa());
  return out;
}

inline const FiniteRotationGroup& finite_of(const ConcreteSubgroup& s) {
  return std::get<FiniteSub>(s).group;
}

/// Number of subgroups of a finite group, counted as distinct closures of
/// element pairs. Valid for groups whose subgroups are all 2-generated,
/// which covers every finite rotation group.
inline std::size_t two_generated_subgroup_count(const FiniteRotationGroup& f) {
  using Key = std::array<long long, 9>;
  const auto key = [](const Mat3& m) {
    Key k{};
    for (int i = 0; i < 9; ++i) k[static_cast<std::size_t>(i)] = std::llround(m[i / 3][i % 3] * 1e6);
    return k;
  };
  std::vector<Mat3> mats;
  for (const auto& e : f.elements()) mats.push_back(matrix_of(e));
  std::set<std::set<Key>> found;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i; j < mats.size(); ++j) {
      std::vector<Mat3> elems{identity3()};
      std::set<Key> keys{key(identity3())};
      for (std::size_t h = 0; h < elems.size(); ++h) {
        for (const Mat3* g : {&mats[i], &mats[j]}) {
          const Mat3 p = matmul(elems[h], *g);
          if (keys.insert(key(p)).second) elems.push_back(p);
        }
      }
      found.insert(std::move(keys));
    }
  }
  return found.size();
}

inline Vec3 axis_of(const ConcreteSubgroup& s) {
  if (const auto* c = std::get_if<CircleSub>(&s)) return c->axis;
  return std::get<OrthCircleSub>(s).axis;
}

/// D60 only holds 60 of the flips of O(2); anchor them on the flip axis that
/// the intersection with `other` can use (the other axis when perpendicular,
/// otherwise the common perpendicular).
inline ConcreteSubgroup aligned_truncation(const ConcreteSubgroup& s, const ConcreteSubgroup& other) {
  const auto* o = std::get_if<OrthCircleSub>(&s);
  if (!o || std::holds_alternative<FiniteSub>(other)) return truncate(s);
  const Vec3 b = axis_of(other);
  if (same_line(o->axis, b)) return truncate(s);
  const Vec3 dir = perpendicular(o->axis, b) ? b : normalized(cross(o->axis, b));
  return truncate(OrthCircleSub{o->axis, phase_of(o->axis, dir)});
}

}  // namespace isolat::testing
