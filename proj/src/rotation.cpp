#include "isolat/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "isolat/error.hpp"

namespace isolat {

double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(Vec3 a) {
  const double n = norm(a);
  return n > 0.0 ? (1.0 / n) * a : a;
}

Vec3 canonical_axis(Vec3 a) {
  const double tau = tolerance();
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(a[i]) > tau) return a[i] > 0.0 ? a : -a;
  }
  return a;
}

bool near(Vec3 a, Vec3 b, double tol) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

bool same_line(Vec3 a, Vec3 b) { return norm(cross(a, b)) <= tolerance(); }
bool perpendicular(Vec3 a, Vec3 b) { return std::abs(dot(a, b)) <= tolerance(); }

bool axis_less(Vec3 a, Vec3 b) {
  const double tau = tolerance();
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] < b[i] - tau) return true;
    if (a[i] > b[i] + tau) return false;
  }
  return false;
}

Rotation::Rotation(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n; x /= n; y /= n; z /= n;
  const double tau = tolerance();
  const double comps[4] = {w, x, y, z};
  double sign = 1.0;
  for (double c : comps) {
    if (std::abs(c) > tau) {
      sign = c > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  w_ = sign * w; x_ = sign * x; y_ = sign * y; z_ = sign * z;
}

Rotation Rotation::about(Vec3 axis, double angle) {
  const Vec3 a = normalized(axis);
  const double s = std::sin(angle / 2.0);
  return {std::cos(angle / 2.0), s * a.x, s * a.y, s * a.z};
}

Rotation Rotation::from_degrees(Vec3 axis, double angle_deg) {
  return about(axis, angle_deg * std::numbers::pi / 180.0);
}

bool Rotation::is_identity() const { return eq(*this, identity()); }

Rotation compose(const Rotation& a, const Rotation& b) {
  return {a.w() * b.w() - a.x() * b.x() - a.y() * b.y() - a.z() * b.z(),
          a.w() * b.x() + a.x() * b.w() + a.y() * b.z() - a.z() * b.y(),
          a.w() * b.y() - a.x() * b.z() + a.y() * b.w() + a.z() * b.x(),
          a.w() * b.z() + a.x() * b.y() - a.y() * b.x() + a.z() * b.w()};
}

Vec3 apply(const Rotation& r, Vec3 v) {
  // v + 2w (u x v) + 2 u x (u x v), u the vector part
  const Vec3 u{r.x(), r.y(), r.z()};
  const Vec3 t = 2.0 * cross(u, v);
  return v + r.w() * t + cross(u, t);
}

bool eq(const Rotation& a, const Rotation& b) {
  const double tau = tolerance();
  const auto close = [&](double s) {
    return std::abs(a.w() - s * b.w()) <= tau && std::abs(a.x() - s * b.x()) <= tau &&
           std::abs(a.y() - s * b.y()) <= tau && std::abs(a.z() - s * b.z()) <= tau;
  };
  return close(1.0) || close(-1.0);
}

Rotation conjugate_by(const Rotation& g, const Rotation& h) {
  return compose(compose(g, h), g.inverse());
}

std::optional<AxisAngle> axis_angle_of(const Rotation& r) {
  if (r.is_identity()) return std::nullopt;
  const Vec3 v{r.x(), r.y(), r.z()};
  const double s = norm(v);
  Vec3 axis = (1.0 / s) * v;
  double angle = 2.0 * std::atan2(s, r.w());  // in [0, 2pi]
  if (angle > std::numbers::pi) angle -= 2.0 * std::numbers::pi;
  const Vec3 canon = canonical_axis(axis);
  if (!near(canon, axis, 0.0)) {
    axis = canon;
    angle = -angle;
  }
  if (std::abs(std::abs(angle) - std::numbers::pi) <= tolerance()) angle = std::numbers::pi;

  AxisAngle out{axis, angle, 0};
  const double turns = std::abs(angle) / (2.0 * std::numbers::pi);
  for (int k = 1; k <= kDefaultClosureCap; ++k) {
    const double m = k * turns;
    if (std::abs(m - std::round(m)) <= tolerance()) {
      out.order = k;
      break;
    }
  }
  return out;
}

namespace {

// Rounded-coordinate buckets (6 decimal digits); lookups confirm with eq and
// also probe the neighbouring bucket of any coordinate sitting near a
// rounding boundary.
using Key = std::array<long long, 4>;

class RotationIndex {
 public:
  void insert(const Rotation& r, int idx) { buckets_[key_of(r)].push_back(idx); }

  std::optional<int> find(const Rotation& r, std::span<const Rotation> pool) const {
    const double c[4] = {r.w(), r.x(), r.y(), r.z()};
    long long base[4], alt[4];
    for (int i = 0; i < 4; ++i) {
      const double v = c[i] * 1e6;
      base[i] = std::llround(v);
      const double frac = v - static_cast<double>(base[i]);
      alt[i] = frac > 0.4 ? base[i] + 1 : (frac < -0.4 ? base[i] - 1 : base[i]);
    }
    for (int mask = 0; mask < 16; ++mask) {
      Key k{};
      bool dup = false;
      for (int i = 0; i < 4; ++i) {
        const bool use_alt = (mask >> i) & 1;
        if (use_alt && alt[i] == base[i]) dup = true;
        k[i] = use_alt ? alt[i] : base[i];
      }
      if (dup) continue;
      if (auto hit = probe(k, r, pool)) return hit;
      Key neg{-k[0], -k[1], -k[2], -k[3]};
      if (auto hit = probe(neg, r, pool)) return hit;
    }
    return std::nullopt;
  }

 private:
  static Key key_of(const Rotation& r) {
    return {std::llround(r.w() * 1e6), std::llround(r.x() * 1e6), std::llround(r.y() * 1e6),
            std::llround(r.z() * 1e6)};
  }

  std::optional<int> probe(const Key& k, const Rotation& r, std::span<const Rotation> pool) const {
    auto it = buckets_.find(k);
    if (it == buckets_.end()) return std::nullopt;
    for (int idx : it->second) {
      if (eq(pool[idx], r)) return idx;
    }
    return std::nullopt;
  }

  std::map<Key, std::vector<int>> buckets_;
};

}  // namespace

FiniteRotationGroup FiniteRotationGroup::from_closed(std::vector<Rotation> elements) {
  FiniteRotationGroup g;
  g.elements_.clear();
  g.elements_.push_back(Rotation::identity());
  for (const auto& e : elements) {
    if (!g.contains(e)) g.elements_.push_back(e);
  }
  return g;
}

std::optional<std::size_t> FiniteRotationGroup::index_of(const Rotation& r) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (eq(elements_[i], r)) return i;
  }
  return std::nullopt;
}

bool FiniteRotationGroup::contains(const Rotation& r) const { return index_of(r).has_value(); }

bool FiniteRotationGroup::is_closed() const {
  if (!contains(Rotation::identity())) return false;
  for (const auto& a : elements_) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : elements_) {
      if (!contains(compose(a, b))) return false;
    }
  }
  return true;
}

std::vector<int> FiniteRotationGroup::cayley_table() const {
  const std::size_t n = elements_.size();
  RotationIndex index;
  for (std::size_t i = 0; i < n; ++i) index.insert(elements_[i], static_cast<int>(i));
  std::vector<int> table(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto hit = index.find(compose(elements_[i], elements_[j]), elements_);
      if (!hit) throw InvariantViolation("rotation group is not closed under composition");
      table[i * n + j] = *hit;
    }
  }
  return table;
}

bool same_elements(const FiniteRotationGroup& a, const FiniteRotationGroup& b) {
  if (a.order() != b.order()) return false;
  return std::all_of(a.elements_.begin(), a.elements_.end(),
                     [&](const Rotation& r) { return b.contains(r); });
}

FiniteRotationGroup close_group(std::span<const Rotation> generators, int cap) {
  std::vector<Rotation> gens;
  for (const auto& g : generators) {
    if (!g.is_identity()) gens.push_back(g);
  }
  std::vector<Rotation> elems{Rotation::identity()};
  RotationIndex index;
  index.insert(elems[0], 0);
  // Breadth-first: right-multiplying by generators reaches every product;
  // inverses are powers in a finite group.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      const Rotation p = compose(elems[head], g);
      if (index.find(p, elems)) continue;
      if (static_cast<int>(elems.size()) >= cap) {
        throw GroupTooLarge("closure exceeds " + std::to_string(cap) + " elements");
      }
      index.insert(p, static_cast<int>(elems.size()));
      elems.push_back(p);
    }
  }
  return FiniteRotationGroup::from_closed(std::move(elems));
}

FiniteRotationGroup conjugate_group(const Rotation& g, const FiniteRotationGroup& f) {
  std::vector<Rotation> out;
  out.reserve(f.order());
  for (const auto& e : f.elements()) out.push_back(conjugate_by(g, e));
  return FiniteRotationGroup::from_closed(std::move(out));
}

}  // namespace isolat
