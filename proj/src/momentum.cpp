#include "isolat/momentum.hpp"

#include <cmath>

#include "isolat/adjoint.hpp"
#include "isolat/error.hpp"

namespace isolat {

bool is_zero(const MomentumValue& mu) {
  if (const auto* v = std::get_if<Vec3>(&mu)) return near(*v, {});
  return std::abs(std::get<double>(mu)) <= tolerance();
}

bool is_totally_isotropic(const AmbientGroup& g, const MomentumValue& mu) {
  switch (g.kind) {
    case AmbientGroup::Kind::Circle: return true;
    // Coadjoint orbits of SO(3) are the spheres |mu| = const.
    case AmbientGroup::Kind::SO3:
    case AmbientGroup::Kind::Finite: return is_zero(mu);
  }
  return false;
}

IsotropyLattice zero_level_lattice(const AmbientGroup&, const IsotropyLattice& base) { return base; }

namespace {

bool mu_in_annihilator(const AmbientGroup& g, const ClassTag& h, const MomentumValue& mu) {
  if (is_zero(mu)) return true;
  // Only the circle has nonzero totally isotropic values. A finite subgroup
  // has h = 0 and ann h = g*; the whole circle has ann h = 0.
  return g.kind == AmbientGroup::Kind::Circle && h.is_finite();
}

}  // namespace

MuLattice mu_lattice(const AmbientGroup& g, const IsotropyLattice& base, const MomentumValue& mu) {
  if (!is_totally_isotropic(g, mu)) {
    throw NotTotallyIsotropic("momentum value is not fixed by the coadjoint action", "/mu");
  }
  std::set<ClassTag> kept;
  for (const auto& t : base.classes()) {
    if (mu_in_annihilator(g, t, mu)) kept.insert(t);
  }
  return {build_lattice(kept, false)};
}

std::set<ClassTag> mu_closure(const AmbientGroup& g, const IsotropyLattice& base,
                              const MomentumValue& mu, const ClassTag& h) {
  return up_set(mu_lattice(g, base, mu).restricted, h);
}

IsotropyLattice relative_equilibria_lattice(const AmbientGroup& g, const IsotropyLattice& base) {
  check_realizable(g, base);
  if (g.kind != AmbientGroup::Kind::SO3) return base;
  std::set<ClassTag> classes;
  for (const auto& t : base.classes()) {
    for (const auto& k : isotropy_on_ann(canonical_rep(t)).classes) classes.insert(k.label);
  }
  return build_lattice(classes);
}

}  // namespace isolat
