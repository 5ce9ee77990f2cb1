#pragma once

#include <set>
#include <variant>

#include "isolat/lift.hpp"

namespace isolat {

/// A momentum value in g*: a 3-vector for SO(3) (g* ~ R^3), a scalar for
/// the circle. Finite ambients have g* = 0 and accept only zero.
using MomentumValue = std::variant<Vec3, double>;

bool is_zero(const MomentumValue& mu);

/// G_mu = G under the coadjoint action.
bool is_totally_isotropic(const AmbientGroup& g, const MomentumValue& mu);

/// Classes of J^-1(0): the base lattice itself.
IsotropyLattice zero_level_lattice(const AmbientGroup& g, const IsotropyLattice& base);

/// I^mu(G, M) = {(H) in base : mu in ann h}. The result is a sub-poset and
/// need not have a unique minimum (it may even be empty).
struct MuLattice {
  IsotropyLattice restricted;
};

/// Throws NotTotallyIsotropic.
MuLattice mu_lattice(const AmbientGroup& g, const IsotropyLattice& base, const MomentumValue& mu);

/// Class-level mu-closure of the stratum of type `h`: the up-set of (H)
/// inside I^mu. Throws ClassNotInLattice when (H) is not in I^mu.
std::set<ClassTag> mu_closure(const AmbientGroup& g, const IsotropyLattice& base,
                              const MomentumValue& mu, const ClassTag& h);

/// Isotropy lattice of the set of possible relative equilibria
/// {FL(xi_M(x))}: the union over (H) in base of the G-classes of I(H, ann h).
IsotropyLattice relative_equilibria_lattice(const AmbientGroup& g, const IsotropyLattice& base);

}  // namespace isolat
