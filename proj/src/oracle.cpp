#include "isolat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "isolat/error.hpp"

namespace isolat {

std::string ConcreteAction::name() const {
  switch (kind) {
    case Kind::SO3_on_R3: return "SO3_on_R3";
    case Kind::SO3_on_S2: return "SO3_on_S2";
    case Kind::Finite_on_R3: return "Finite_on_R3(" + display_name(tag) + ")";
    case Kind::Finite_on_S2: return "Finite_on_S2(" + display_name(tag) + ")";
    case Kind::Circle_on_R2: return "Circle_on_R2";
  }
  return "?";
}

AmbientGroup ConcreteAction::ambient() const {
  switch (kind) {
    case Kind::SO3_on_R3:
    case Kind::SO3_on_S2: return AmbientGroup::so3();
    case Kind::Circle_on_R2: return AmbientGroup::circle();
    default: return AmbientGroup::finite(std::get<FiniteSub>(canonical_rep(tag)).group);
  }
}

std::optional<ConcreteAction> ConcreteAction::parse(const std::string& name) {
  if (name == "SO3_on_R3") return ConcreteAction{Kind::SO3_on_R3, {}};
  if (name == "SO3_on_S2") return ConcreteAction{Kind::SO3_on_S2, {}};
  if (name == "Circle_on_R2") return ConcreteAction{Kind::Circle_on_R2, {}};
  for (const auto& [prefix, kind] : {std::pair{std::string("Finite_on_R3"), Kind::Finite_on_R3},
                                     std::pair{std::string("Finite_on_S2"), Kind::Finite_on_S2}}) {
    if (name.rfind(prefix, 0) != 0 || name.size() <= prefix.size() + 1) continue;
    std::string rest = name.substr(prefix.size());
    if (rest.front() == ':') {
      rest = rest.substr(1);
    } else if (rest.front() == '(' && rest.back() == ')') {
      rest = rest.substr(1, rest.size() - 2);
    } else {
      return std::nullopt;
    }
    std::optional<ClassTag> tag;
    try {
      tag = parse_display_name(rest);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (!tag || !tag->is_finite() || tag->kind == isolat::Kind::Trivial) return std::nullopt;
    if ((tag->kind == isolat::Kind::Cyclic || tag->kind == isolat::Kind::Dihedral) &&
        tag->n > n_cap()) {
      return std::nullopt;
    }
    return ConcreteAction{kind, *tag};
  }
  return std::nullopt;
}

std::vector<ConcreteAction> catalog_actions() {
  using K = ConcreteAction::Kind;
  std::vector<ConcreteAction> out{{K::SO3_on_R3, {}}, {K::SO3_on_S2, {}}, {K::Circle_on_R2, {}}};
  const std::vector<ClassTag> tags{ClassTag::cyclic(2),   ClassTag::cyclic(3),   ClassTag::cyclic(6),
                                   ClassTag::dihedral(2), ClassTag::dihedral(3), ClassTag::dihedral(4),
                                   ClassTag::dihedral(5), ClassTag::tetra(),     ClassTag::octa(),
                                   ClassTag::icosa()};
  for (const auto& t : tags) out.push_back({K::Finite_on_R3, t});
  for (const auto& t : tags) out.push_back({K::Finite_on_S2, t});
  return out;
}

namespace {

using AK = ConcreteAction::Kind;

bool is_zero_vec(Vec3 v) { return norm(v) <= tolerance(); }

Vec3 tangent_projection(Vec3 x, Vec3 v) {
  const Vec3 u = normalized(x);
  return v - dot(v, u) * u;
}

Vec3 flat(Vec3 v) { return {v.x, v.y, 0.0}; }

const FiniteRotationGroup& action_group(const ConcreteAction& a) {
  thread_local ClassTag cached_tag{Kind::Full, 0};
  thread_local FiniteRotationGroup cached;
  if (cached_tag != a.tag) {
    cached = std::get<FiniteSub>(canonical_rep(a.tag)).group;
    cached_tag = a.tag;
  }
  return cached;
}

ConcreteSubgroup filter_fixing(const ConcreteAction& a, Vec3 x, Vec3 v) {
  const double tx = tolerance() * (1.0 + norm(x));
  const double tv = tolerance() * (1.0 + norm(v));
  std::vector<Rotation> kept;
  for (const auto& g : action_group(a).elements()) {
    if (near(apply(g, x), x, tx) && near(apply(g, v), v, tv)) kept.push_back(g);
  }
  return make_finite(FiniteRotationGroup::from_closed(std::move(kept)));
}

}  // namespace

ConcreteSubgroup stabilizer_of_point(const ConcreteAction& a, Vec3 x) {
  switch (a.kind) {
    case AK::SO3_on_R3:
      if (is_zero_vec(x)) return FullSub{};
      return CircleSub{canonical_axis(normalized(x))};
    case AK::SO3_on_S2: return CircleSub{canonical_axis(normalized(x))};
    case AK::Circle_on_R2:
      return is_zero_vec(flat(x)) ? ConcreteSubgroup{CircleSub{{0, 0, 1}}} : trivial_subgroup();
    case AK::Finite_on_R3:
    case AK::Finite_on_S2: return filter_fixing(a, x, {});
  }
  return trivial_subgroup();
}

ConcreteSubgroup stabilizer_of_tangent(const ConcreteAction& a, Vec3 x, Vec3 v) {
  switch (a.kind) {
    case AK::SO3_on_R3: {
      // {g : gx = x, gv = v}
      const bool x0 = is_zero_vec(x), v0 = is_zero_vec(v);
      if (x0 && v0) return FullSub{};
      if (norm(cross(x, v)) > tolerance() * std::max(1.0, norm(x) * norm(v))) {
        return trivial_subgroup();
      }
      return CircleSub{canonical_axis(normalized(x0 ? v : x))};
    }
    case AK::SO3_on_S2: {
      if (std::abs(dot(x, v)) > tolerance() * (1.0 + norm(v))) {
        throw NotTangent("vector is not tangent to the sphere at the base point");
      }
      if (is_zero_vec(v)) return CircleSub{canonical_axis(normalized(x))};
      return trivial_subgroup();
    }
    case AK::Circle_on_R2:
      if (is_zero_vec(flat(x)) && is_zero_vec(flat(v))) return CircleSub{{0, 0, 1}};
      return trivial_subgroup();
    case AK::Finite_on_S2:
      if (std::abs(dot(x, v)) > tolerance() * (1.0 + norm(v))) {
        throw NotTangent("vector is not tangent to the sphere at the base point");
      }
      return filter_fixing(a, x, v);
    case AK::Finite_on_R3: return filter_fixing(a, x, v);
  }
  return trivial_subgroup();
}

Vec3 infinitesimal_generator(const ConcreteAction& a, Vec3 x, Vec3 xi) {
  switch (a.kind) {
    case AK::SO3_on_R3:
    case AK::SO3_on_S2: return cross(xi, x);
    case AK::Circle_on_R2: return xi.x * Vec3{-x.y, x.x, 0.0};
    default: return {};
  }
}

namespace {

// A covector annihilating the orbit direction g.x, represented through the
// invariant metric as a tangent vector orthogonal to g.x.
Vec3 zero_momentum_vector(const ConcreteAction& a, Vec3 x, Vec3 w) {
  switch (a.kind) {
    case AK::SO3_on_R3:
      if (is_zero_vec(x)) return w;
      return dot(w, normalized(x)) * normalized(x);
    case AK::SO3_on_S2: return {};  // g.x is the whole tangent plane
    case AK::Circle_on_R2: {
      const Vec3 xf = flat(x), wf = flat(w);
      if (is_zero_vec(xf)) return wf;
      return dot(wf, normalized(xf)) * normalized(xf);
    }
    default: return w;  // finite: g.x = 0
  }
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Sample i depends only on (seed, i), so results are independent of the
// thread count and enlarging n_random only adds samples.
Sample draw(const ConcreteAction& a, std::uint64_t seed, std::uint64_t i) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(i + 1)));
  std::normal_distribution<double> gauss;
  Vec3 x{gauss(rng), gauss(rng), gauss(rng)};
  Vec3 w{gauss(rng), gauss(rng), gauss(rng)};
  switch (a.kind) {
    case AK::SO3_on_S2:
    case AK::Finite_on_S2:
      x = normalized(x);
      w = tangent_projection(x, w);
      break;
    case AK::Circle_on_R2:
      x = flat(x);
      w = flat(w);
      break;
    default: break;
  }
  return {x, w};
}

enum class Mode { Base, Lifted, ZeroMomentum, Requilibria };

ClassTag sample_tag(const ConcreteAction& a, const Sample& s, Mode mode) {
  switch (mode) {
    case Mode::Base: return g_class_of(stabilizer_of_point(a, s.point));
    case Mode::Lifted: return g_class_of(stabilizer_of_tangent(a, s.point, s.tangent));
    case Mode::ZeroMomentum:
      return g_class_of(
          stabilizer_of_tangent(a, s.point, zero_momentum_vector(a, s.point, s.tangent)));
    case Mode::Requilibria:
      return g_class_of(
          stabilizer_of_tangent(a, s.point, infinitesimal_generator(a, s.point, s.tangent)));
  }
  return ClassTag::trivial();
}

std::set<ClassTag> sample_serial(const ConcreteAction& a, const SamplePlan& p, Mode mode) {
  std::set<ClassTag> tags;
  for (const auto& s : p.stratum_seeds) tags.insert(sample_tag(a, s, mode));
  for (int i = 0; i < p.n_random; ++i) {
    tags.insert(sample_tag(a, draw(a, p.rng_seed, static_cast<std::uint64_t>(i)), mode));
  }
  return tags;
}

std::set<ClassTag> sample_parallel(const ConcreteAction& a, const SamplePlan& p, Mode mode) {
  std::set<ClassTag> tags;
  for (const auto& s : p.stratum_seeds) tags.insert(sample_tag(a, s, mode));
  bool failed = false;
  std::string failure;
  const int n = p.n_random;
#pragma omp parallel
  {
    std::set<ClassTag> local;
    std::string local_failure;
#pragma omp for schedule(static)
    for (int i = 0; i < n; ++i) {
      try {
        local.insert(sample_tag(a, draw(a, p.rng_seed, static_cast<std::uint64_t>(i)), mode));
      } catch (const std::exception& ex) {
        local_failure = ex.what();
      }
    }
#pragma omp critical(isolat_oracle_merge)
    {
      tags.insert(local.begin(), local.end());
      if (!local_failure.empty()) {
        failed = true;
        failure = local_failure;
      }
    }
  }
  if (failed) throw InvariantViolation("oracle sampling failed: " + failure);
  return tags;
}

void add_seed_pairs(std::vector<Sample>& out, const std::vector<Vec3>& points,
                    const std::vector<Vec3>& vectors, bool sphere) {
  for (const auto& x : points) {
    for (const auto& v : vectors) {
      Vec3 t = sphere ? tangent_projection(x, v) : v;
      if (sphere && !is_zero_vec(t)) t = normalized(t);
      out.push_back({x, t});
    }
  }
}

}  // namespace

SamplePlan default_plan(const ConcreteAction& a, std::uint64_t seed, int n_random) {
  SamplePlan plan;
  plan.rng_seed = seed;
  plan.n_random = n_random;
  const Vec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
  const Vec3 g1{1, 2, 3}, g2{-2, 0.5, 1};
  switch (a.kind) {
    case AK::SO3_on_R3:
      add_seed_pairs(plan.stratum_seeds, {{}, ez, 2.0 * ez, g1, ex},
                     {{}, ez, 3.0 * ez, ex, g1, g2}, false);
      break;
    case AK::SO3_on_S2:
      add_seed_pairs(plan.stratum_seeds, {ez, ex, normalized(g1)}, {{}, ez, ex, ey, g1, g2}, true);
      break;
    case AK::Circle_on_R2:
      add_seed_pairs(plan.stratum_seeds, {{}, ex, {0.3, -2, 0}}, {{}, ex, ey, {2, -1, 0}}, false);
      break;
    case AK::Finite_on_R3:
    case AK::Finite_on_S2: {
      const bool sphere = a.kind == AK::Finite_on_S2;
      std::vector<Vec3> dirs;
      for (const auto& g : action_group(a).elements()) {
        const auto aa = axis_angle_of(g);
        if (!aa) continue;
        const bool seen = std::any_of(dirs.begin(), dirs.end(),
                                      [&](Vec3 d) { return same_line(d, aa->axis); });
        if (!seen) dirs.push_back(aa->axis);
      }
      std::vector<Vec3> points, vectors{{}};
      if (!sphere) points.push_back({});
      for (const auto& d : dirs) {
        points.push_back(sphere ? d : 1.5 * d);
        points.push_back(-d);
        vectors.push_back(d);
      }
      points.push_back(normalized(g1));
      points.push_back(normalized(g2));
      vectors.push_back(g1);
      vectors.push_back(g2);
      add_seed_pairs(plan.stratum_seeds, points, vectors, sphere);
      break;
    }
  }
  return plan;
}

std::set<ClassTag> empirical_base_lattice(const ConcreteAction& a, const SamplePlan& p) {
  return sample_parallel(a, p, Mode::Base);
}
std::set<ClassTag> empirical_lifted_lattice(const ConcreteAction& a, const SamplePlan& p) {
  return sample_parallel(a, p, Mode::Lifted);
}
std::set<ClassTag> empirical_zero_momentum_lattice(const ConcreteAction& a, const SamplePlan& p) {
  return sample_parallel(a, p, Mode::ZeroMomentum);
}
std::set<ClassTag> empirical_requilibria_lattice(const ConcreteAction& a, const SamplePlan& p) {
  return sample_parallel(a, p, Mode::Requilibria);
}

std::set<ClassTag> empirical_lifted_lattice_serial(const ConcreteAction& a, const SamplePlan& p) {
  return sample_serial(a, p, Mode::Lifted);
}
std::set<ClassTag> empirical_zero_momentum_lattice_serial(const ConcreteAction& a,
                                                          const SamplePlan& p) {
  return sample_serial(a, p, Mode::ZeroMomentum);
}
std::set<ClassTag> empirical_requilibria_lattice_serial(const ConcreteAction& a,
                                                        const SamplePlan& p) {
  return sample_serial(a, p, Mode::Requilibria);
}

}  // namespace isolat
