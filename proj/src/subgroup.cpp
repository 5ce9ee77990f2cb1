#include "isolat/subgroup.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <tuple>

#include "isolat/error.hpp"

namespace isolat {

namespace {

constexpr double kPi = std::numbers::pi;

std::tuple<int, int, int, int> order_key(const ClassTag& t) {
  switch (t.kind) {
    case Kind::Circle: return {1, 1, static_cast<int>(t.kind), 0};
    case Kind::OrthCircle: return {1, 2, static_cast<int>(t.kind), 0};
    case Kind::Full: return {3, 0, static_cast<int>(t.kind), 0};
    default: return {0, t.order(), static_cast<int>(t.kind), t.n};
  }
}

bool divides(int m, int n) { return m > 0 && n % m == 0; }

bool is_pi_rotation(const AxisAngle& aa) { return std::abs(aa.angle - kPi) <= tolerance(); }

FiniteRotationGroup group_from(std::vector<Rotation> elems) {
  return FiniteRotationGroup::from_closed(std::move(elems));
}

FiniteRotationGroup cyclic_about(Vec3 axis, int n) {
  const Rotation g = Rotation::about(axis, 2.0 * kPi / n);
  const std::vector<Rotation> gens{g};
  return close_group(gens);
}

FiniteRotationGroup dihedral_about(Vec3 axis, int n, double phase) {
  const std::vector<Rotation> gens{Rotation::about(axis, 2.0 * kPi / n),
                                   Rotation::about(direction_at_phase(axis, phase), kPi)};
  return close_group(gens);
}

FiniteRotationGroup two_element(Vec3 axis) {
  return group_from({Rotation::about(axis, kPi)});
}

struct AxisInfo {
  Vec3 axis;
  int order;
};

std::vector<AxisInfo> axis_profile(const FiniteRotationGroup& f) {
  std::vector<AxisInfo> out;
  for (const auto& e : f.elements()) {
    const auto aa = axis_angle_of(e);
    if (!aa) continue;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const AxisInfo& ai) { return same_line(ai.axis, aa->axis); });
    if (it == out.end()) {
      out.push_back({aa->axis, 2});
    } else {
      ++it->order;
    }
  }
  return out;
}

}  // namespace

ClassTag ClassTag::cyclic(int n) {
  if (n < 2) throw ValidationError("Cyclic(n) requires n >= 2");
  return {Kind::Cyclic, n};
}

ClassTag ClassTag::dihedral(int n) {
  if (n < 2) throw ValidationError("Dihedral(n) requires n >= 2");
  return {Kind::Dihedral, n};
}

int ClassTag::order() const {
  switch (kind) {
    case Kind::Trivial: return 1;
    case Kind::Cyclic: return n;
    case Kind::Dihedral: return 2 * n;
    case Kind::Tetra: return 12;
    case Kind::Octa: return 24;
    case Kind::Icosa: return 60;
    default: return 0;
  }
}

std::strong_ordering operator<=>(const ClassTag& a, const ClassTag& b) {
  return order_key(a) <=> order_key(b);
}

std::string display_name(const ClassTag& t) {
  switch (t.kind) {
    case Kind::Trivial: return "1";
    case Kind::Cyclic: return "C" + std::to_string(t.n);
    case Kind::Dihedral: return "D" + std::to_string(t.n);
    case Kind::Tetra: return "T";
    case Kind::Octa: return "O";
    case Kind::Icosa: return "I";
    case Kind::Circle: return "SO2";
    case Kind::OrthCircle: return "O2";
    case Kind::Full: return "SO3";
  }
  return "?";
}

std::optional<ClassTag> parse_display_name(const std::string& s) {
  if (s == "1") return ClassTag::trivial();
  if (s == "T") return ClassTag::tetra();
  if (s == "O") return ClassTag::octa();
  if (s == "I") return ClassTag::icosa();
  if (s == "SO2") return ClassTag::circle();
  if (s == "O2") return ClassTag::orth_circle();
  if (s == "SO3") return ClassTag::full();
  if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'D')) {
    const std::string digits = s.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 6) {
      return std::nullopt;
    }
    const int n = std::stoi(digits);
    if (n < 2) return std::nullopt;
    return s[0] == 'C' ? ClassTag::cyclic(n) : ClassTag::dihedral(n);
  }
  return std::nullopt;
}

ConcreteSubgroup make_finite(FiniteRotationGroup g) { return FiniteSub{std::move(g)}; }
ConcreteSubgroup trivial_subgroup() { return FiniteSub{FiniteRotationGroup{}}; }

std::pair<Vec3, Vec3> perp_frame(Vec3 axis) {
  const Vec3 a = normalized(axis);
  const Vec3 ref = std::abs(a.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(ref - dot(ref, a) * a);
  return {e1, cross(a, e1)};
}

Vec3 direction_at_phase(Vec3 axis, double phase) {
  const auto [e1, e2] = perp_frame(axis);
  return std::cos(phase) * e1 + std::sin(phase) * e2;
}

double phase_of(Vec3 axis, Vec3 dir) {
  const auto [e1, e2] = perp_frame(axis);
  double p = std::atan2(dot(dir, e2), dot(dir, e1));
  if (p < 0.0) p += kPi;
  if (p >= kPi - tolerance()) p = 0.0;
  return p;
}

ClassTag classify_finite(const FiniteRotationGroup& f) {
  const int n = static_cast<int>(f.order());
  if (n == 1) return ClassTag::trivial();
  const auto axes = axis_profile(f);
  const auto count_order = [&](int k) {
    return std::count_if(axes.begin(), axes.end(), [k](const AxisInfo& a) { return a.order == k; });
  };

  if (axes.size() == 1 && axes[0].order == n) return ClassTag::cyclic(n);

  if (n % 2 == 0) {
    const int m = n / 2;
    if (m == 2) {
      if (axes.size() == 3 && count_order(2) == 3 && perpendicular(axes[0].axis, axes[1].axis) &&
          perpendicular(axes[0].axis, axes[2].axis) && perpendicular(axes[1].axis, axes[2].axis)) {
        return ClassTag::dihedral(2);
      }
    } else if (static_cast<int>(axes.size()) == m + 1 && count_order(m) == 1) {
      const auto main = std::find_if(axes.begin(), axes.end(),
                                     [m](const AxisInfo& a) { return a.order == m; });
      const bool flips_ok = std::all_of(axes.begin(), axes.end(), [&](const AxisInfo& a) {
        return &a == &*main || (a.order == 2 && perpendicular(a.axis, main->axis));
      });
      if (flips_ok) return ClassTag::dihedral(m);
    }
  }
  if (n == 12 && axes.size() == 7 && count_order(3) == 4 && count_order(2) == 3) {
    return ClassTag::tetra();
  }
  if (n == 24 && axes.size() == 13 && count_order(4) == 3 && count_order(3) == 4) {
    return ClassTag::octa();
  }
  if (n == 60 && axes.size() == 31 && count_order(5) == 6 && count_order(3) == 10) {
    return ClassTag::icosa();
  }
  throw UnclassifiableGroup("finite rotation group of order " + std::to_string(n) +
                            " matches no catalog family");
}

ClassTag g_class_of(const ConcreteSubgroup& s) {
  struct Visitor {
    ClassTag operator()(const FiniteSub& f) const { return classify_finite(f.group); }
    ClassTag operator()(const CircleSub&) const { return ClassTag::circle(); }
    ClassTag operator()(const OrthCircleSub&) const { return ClassTag::orth_circle(); }
    ClassTag operator()(const FullSub&) const { return ClassTag::full(); }
  };
  return std::visit(Visitor{}, s);
}

std::vector<Rotation> canonical_generators(const ClassTag& t) {
  const Vec3 z{0, 0, 1}, x{1, 0, 0}, diag{1, 1, 1};
  const double phi = std::numbers::phi;
  switch (t.kind) {
    case Kind::Cyclic: return {Rotation::about(z, 2.0 * kPi / t.n)};
    case Kind::Dihedral: return {Rotation::about(z, 2.0 * kPi / t.n), Rotation::about(x, kPi)};
    case Kind::Tetra: return {Rotation::about(diag, 2.0 * kPi / 3), Rotation::about(z, kPi)};
    case Kind::Octa: return {Rotation::about(z, kPi / 2), Rotation::about(diag, 2.0 * kPi / 3)};
    case Kind::Icosa:
      // Icosahedron with vertices at cyclic permutations of (0, +-1, +-phi):
      // 2-fold axes along x, y, z and a 5-fold axis through (phi, 0, 1).
      return {Rotation::about({phi, 0, 1}, 2.0 * kPi / 5), Rotation::about(diag, 2.0 * kPi / 3),
              Rotation::about(z, kPi)};
    default: return {};
  }
}

ConcreteSubgroup canonical_rep(const ClassTag& t) {
  switch (t.kind) {
    case Kind::Trivial: return trivial_subgroup();
    case Kind::Circle: return CircleSub{{0, 0, 1}};
    case Kind::OrthCircle: return OrthCircleSub{{0, 0, 1}, 0.0};
    case Kind::Full: return FullSub{};
    default: break;
  }
  static std::mutex mu;
  static std::map<ClassTag, FiniteRotationGroup> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(t); it != cache.end()) return FiniteSub{it->second};
  }
  const auto gens = canonical_generators(t);
  FiniteRotationGroup g = close_group(gens, std::max(kDefaultClosureCap, t.order()));
  std::lock_guard lock(mu);
  cache.emplace(t, g);
  return FiniteSub{std::move(g)};
}

bool is_subconjugate(const ClassTag& t1, const ClassTag& t2) {
  if (t1 == t2) return true;
  const int m = t1.n;
  const int n = t2.n;
  switch (t1.kind) {
    case Kind::Trivial: return true;
    case Kind::Cyclic:
      switch (t2.kind) {
        case Kind::Cyclic: return divides(m, n);
        case Kind::Dihedral: return divides(m, n) || m == 2;
        case Kind::Tetra: return m == 2 || m == 3;
        case Kind::Octa: return m >= 2 && m <= 4;
        case Kind::Icosa: return m == 2 || m == 3 || m == 5;
        case Kind::Circle:
        case Kind::OrthCircle:
        case Kind::Full: return true;
        default: return false;
      }
    case Kind::Dihedral:
      switch (t2.kind) {
        case Kind::Dihedral: return divides(m, n);
        case Kind::Tetra: return m == 2;
        case Kind::Octa: return m >= 2 && m <= 4;
        case Kind::Icosa: return m == 2 || m == 3 || m == 5;
        case Kind::OrthCircle:
        case Kind::Full: return true;
        default: return false;
      }
    case Kind::Tetra:
      return t2.kind == Kind::Octa || t2.kind == Kind::Icosa || t2.kind == Kind::Full;
    case Kind::Octa:
    case Kind::Icosa: return t2.kind == Kind::Full;
    case Kind::Circle: return t2.kind == Kind::OrthCircle || t2.kind == Kind::Full;
    case Kind::OrthCircle: return t2.kind == Kind::Full;
    case Kind::Full: return false;
  }
  return false;
}

Vec3 principal_axis(const ConcreteSubgroup& s) {
  if (const auto* c = std::get_if<CircleSub>(&s)) return canonical_axis(c->axis);
  if (const auto* o = std::get_if<OrthCircleSub>(&s)) return canonical_axis(o->axis);
  const auto* f = std::get_if<FiniteSub>(&s);
  if (!f) return {};
  const auto axes = axis_profile(f->group);
  int best_order = 0;
  Vec3 best{};
  for (const auto& a : axes) {
    const Vec3 ax = canonical_axis(a.axis);
    if (a.order > best_order || (a.order == best_order && axis_less(best, ax))) {
      best_order = a.order;
      best = ax;
    }
  }
  return best;
}

namespace {

using Bits = std::bitset<256>;

struct BitsLess {
  bool operator()(const Bits& a, const Bits& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return b[i];
    }
    return false;
  }
};

Bits close_indices(const std::vector<int>& table, std::size_t n, const std::vector<int>& gens) {
  Bits bits;
  bits.set(0);
  std::vector<int> elems{0};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int g : gens) {
      const int p = table[static_cast<std::size_t>(elems[head]) * n + static_cast<std::size_t>(g)];
      if (!bits[static_cast<std::size_t>(p)]) {
        bits.set(static_cast<std::size_t>(p));
        elems.push_back(p);
      }
    }
  }
  return bits;
}

std::vector<std::array<long long, 4>> element_key(const FiniteRotationGroup& g) {
  std::vector<std::array<long long, 4>> key;
  for (const auto& e : g.elements()) {
    key.push_back({std::llround(e.w() * 1e6), std::llround(e.x() * 1e6),
                   std::llround(e.y() * 1e6), std::llround(e.z() * 1e6)});
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::vector<FiniteRotationGroup> subgroups_of(const FiniteRotationGroup& f) {
  const std::size_t n = f.order();
  if (n > 256) throw GroupTooLarge("subgroups_of supports groups of order <= 256");
  const auto table = f.cayley_table();

  struct Entry {
    Bits bits;
    std::vector<int> gens;
  };
  std::vector<Entry> found;
  std::set<Bits, BitsLess> seen;

  // Cyclic layer; every subgroup is then reached by adjoining one cyclic
  // generator at a time to an already-found subgroup.
  std::vector<int> cyclic_gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> gens;
    if (i != 0) gens.push_back(static_cast<int>(i));
    Bits b = close_indices(table, n, gens);
    if (seen.insert(b).second) {
      found.push_back({b, gens});
      if (i != 0) cyclic_gens.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (int c : cyclic_gens) {
      if (found[k].bits[static_cast<std::size_t>(c)]) continue;
      std::vector<int> gens = found[k].gens;
      gens.push_back(c);
      Bits b = close_indices(table, n, gens);
      if (seen.insert(b).second) found.push_back({b, std::move(gens)});
    }
  }

  struct Sorted {
    FiniteRotationGroup group;
    ClassTag tag;
    Vec3 axis;
    std::vector<std::array<long long, 4>> key;
  };
  std::vector<Sorted> out;
  out.reserve(found.size());
  const auto elems = f.elements();
  for (const auto& e : found) {
    std::vector<Rotation> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (e.bits[i]) members.push_back(elems[i]);
    }
    auto g = group_from(std::move(members));
    const ClassTag tag = classify_finite(g);
    const Vec3 axis = principal_axis(FiniteSub{g});
    auto key = element_key(g);
    out.push_back({std::move(g), tag, axis, std::move(key)});
  }
  std::sort(out.begin(), out.end(), [](const Sorted& a, const Sorted& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    if (a.tag != b.tag) return a.tag < b.tag;
    if (axis_less(a.axis, b.axis)) return true;
    if (axis_less(b.axis, a.axis)) return false;
    return a.key < b.key;
  });
  std::vector<FiniteRotationGroup> result;
  result.reserve(out.size());
  for (auto& s : out) result.push_back(std::move(s.group));
  return result;
}

bool contains(const ConcreteSubgroup& s, const Rotation& r) {
  if (r.is_identity()) return true;
  if (const auto* f = std::get_if<FiniteSub>(&s)) return f->group.contains(r);
  if (std::holds_alternative<FullSub>(s)) return true;
  const auto aa = axis_angle_of(r);
  if (const auto* c = std::get_if<CircleSub>(&s)) return same_line(aa->axis, c->axis);
  const auto& o = std::get<OrthCircleSub>(s);
  return same_line(aa->axis, o.axis) || (is_pi_rotation(*aa) && perpendicular(aa->axis, o.axis));
}

namespace {

ConcreteSubgroup filter_finite(const FiniteRotationGroup& f, const ConcreteSubgroup& other) {
  std::vector<Rotation> kept;
  for (const auto& e : f.elements()) {
    if (contains(other, e)) kept.push_back(e);
  }
  return make_finite(group_from(std::move(kept)));
}

ConcreteSubgroup circle_circle(const CircleSub& a, const CircleSub& b) {
  if (same_line(a.axis, b.axis)) return a;
  return trivial_subgroup();
}

ConcreteSubgroup circle_orth(const CircleSub& a, const OrthCircleSub& b) {
  if (same_line(a.axis, b.axis)) return a;
  if (perpendicular(a.axis, b.axis)) return make_finite(two_element(a.axis));
  return trivial_subgroup();
}

ConcreteSubgroup orth_orth(const OrthCircleSub& a, const OrthCircleSub& b) {
  if (same_line(a.axis, b.axis)) return a;
  const Vec3 c = normalized(cross(a.axis, b.axis));
  if (perpendicular(a.axis, b.axis)) {
    return make_finite(group_from({Rotation::about(a.axis, kPi), Rotation::about(b.axis, kPi),
                                   Rotation::about(c, kPi)}));
  }
  return make_finite(two_element(c));
}

}  // namespace

ConcreteSubgroup intersect(const ConcreteSubgroup& a, const ConcreteSubgroup& b) {
  if (std::holds_alternative<FullSub>(a)) return b;
  if (std::holds_alternative<FullSub>(b)) return a;
  if (const auto* fa = std::get_if<FiniteSub>(&a)) return filter_finite(fa->group, b);
  if (const auto* fb = std::get_if<FiniteSub>(&b)) return filter_finite(fb->group, a);
  if (const auto* ca = std::get_if<CircleSub>(&a)) {
    if (const auto* cb = std::get_if<CircleSub>(&b)) return circle_circle(*ca, *cb);
    return circle_orth(*ca, std::get<OrthCircleSub>(b));
  }
  const auto& oa = std::get<OrthCircleSub>(a);
  if (const auto* cb = std::get_if<CircleSub>(&b)) return circle_orth(*cb, oa);
  return orth_orth(oa, std::get<OrthCircleSub>(b));
}

bool same_subgroup(const ConcreteSubgroup& a, const ConcreteSubgroup& b) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<FiniteSub>(&a)) {
    return same_elements(fa->group, std::get<FiniteSub>(b).group);
  }
  if (const auto* ca = std::get_if<CircleSub>(&a)) {
    return same_line(ca->axis, std::get<CircleSub>(b).axis);
  }
  if (const auto* oa = std::get_if<OrthCircleSub>(&a)) {
    return same_line(oa->axis, std::get<OrthCircleSub>(b).axis);
  }
  return true;
}

bool is_subgroup(const ConcreteSubgroup& a, const ConcreteSubgroup& b) {
  return same_subgroup(intersect(a, b), a);
}

EmbeddingList embeddings_of_class_in(const ClassTag& t, const ConcreteSubgroup& h2) {
  const ClassTag outer = g_class_of(h2);
  if (!is_subconjugate(t, outer)) {
    throw NotSubconjugate(display_name(t) + " is not subconjugate to " + display_name(outer));
  }
  EmbeddingList out;
  if (std::holds_alternative<FullSub>(h2)) {
    out.subgroups.push_back(canonical_rep(t));
    out.canonical_only = true;
    return out;
  }
  if (const auto* f = std::get_if<FiniteSub>(&h2)) {
    for (auto& s : subgroups_of(f->group)) {
      if (classify_finite(s) == t) out.subgroups.push_back(make_finite(std::move(s)));
    }
    return out;
  }
  if (t.kind == Kind::Trivial) {
    out.subgroups.push_back(trivial_subgroup());
    return out;
  }
  if (const auto* c = std::get_if<CircleSub>(&h2)) {
    if (t.kind == Kind::Circle) {
      out.subgroups.push_back(*c);
    } else {
      out.subgroups.push_back(make_finite(cyclic_about(c->axis, t.n)));
    }
    return out;
  }
  // O(2): flips and dihedral subgroups come in circles of positions. Relative
  // to the flip at the stored phase (the one isotropy_on_ann hands out), two
  // positions cover every intersection class: aligned and misaligned.
  const auto& o = std::get<OrthCircleSub>(h2);
  switch (t.kind) {
    case Kind::Cyclic:
      out.subgroups.push_back(make_finite(cyclic_about(o.axis, t.n)));
      if (t.n == 2) {
        out.subgroups.push_back(make_finite(two_element(direction_at_phase(o.axis, o.flip_phase))));
        out.subgroups.push_back(
            make_finite(two_element(direction_at_phase(o.axis, o.flip_phase + kPi / 4))));
      }
      break;
    case Kind::Dihedral:
      out.subgroups.push_back(make_finite(dihedral_about(o.axis, t.n, o.flip_phase)));
      out.subgroups.push_back(
          make_finite(dihedral_about(o.axis, t.n, o.flip_phase + kPi / (2.0 * t.n))));
      break;
    case Kind::Circle: out.subgroups.push_back(CircleSub{o.axis}); break;
    case Kind::OrthCircle: out.subgroups.push_back(o); break;
    default: break;
  }
  return out;
}

ConcreteSubgroup truncate(const ConcreteSubgroup& s, int m) {
  if (const auto* c = std::get_if<CircleSub>(&s)) return make_finite(cyclic_about(c->axis, m));
  if (const auto* o = std::get_if<OrthCircleSub>(&s)) {
    return make_finite(dihedral_about(o->axis, m, o->flip_phase));
  }
  return s;
}

}  // namespace isolat
