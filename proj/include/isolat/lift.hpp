#pragma once

#include <vector>

#include "isolat/lattice.hpp"

namespace isolat {

/// The acting group G: SO(3), a finite subgroup of SO(3), or the circle.
struct AmbientGroup {
  enum class Kind { SO3, Finite, Circle };
  Kind kind = Kind::SO3;
  FiniteRotationGroup group;  // only for Kind::Finite

  static AmbientGroup so3() { return {}; }
  static AmbientGroup circle() { return {Kind::Circle, {}}; }
  static AmbientGroup finite(FiniteRotationGroup g) { return {Kind::Finite, std::move(g)}; }

  /// Class of G itself as a (possibly abstract) closed group.
  ClassTag tag() const;
};

/// One certificate ((H1), (H2), (K)) with positioned representatives whose
/// intersection realizes `lifted`.
struct Witness {
  ClassTag lifted;
  ClassTag h1, h2, k;
  ConcreteSubgroup h1_rep, h2_rep, k_rep;
};

struct LiftResult {
  AmbientGroup::Kind ambient = AmbientGroup::Kind::SO3;
  IsotropyLattice base;
  IsotropyLattice lifted;
  std::vector<Witness> witnesses;  // one per lifted class, in class order
};

/// Throws NotRealizableInG if some base class is not a subgroup class of G.
void check_realizable(const AmbientGroup& g, const IsotropyLattice& base);

/// Isotropy lattice of the tangent-lifted action from the base lattice.
/// Finite and circle ambients take the fast path (lifted = base). For SO(3)
/// every (H2) in depth order, every (H1) <= (H2) in the base, every
/// positioned embedding of (H1) in the canonical H2 and every stabilizer K of
/// H2 on ann h2 contributes the class of (embedding intersect K).
///
/// Fixing one K per H2-class while ranging over all embeddings of H1 is
/// enough: both families are closed under H2-conjugation and
/// h (H1 n K) h^-1 = (h H1 h^-1) n (h K h^-1), so every relative position is
/// seen up to H2-conjugacy.
///
/// The intersection kernel runs with OpenMP; output does not depend on the
/// thread count.
LiftResult lifted_lattice(const AmbientGroup& g, const IsotropyLattice& base);

/// Single-threaded reference implementation of lifted_lattice.
LiftResult lifted_lattice_serial(const AmbientGroup& g, const IsotropyLattice& base);

/// The cotangent lift has the same isotropy lattice (an invariant metric
/// gives an equivariant bundle isomorphism TM -> T*M).
LiftResult cotangent_lifted_lattice(const AmbientGroup& g, const IsotropyLattice& base);

/// Re-validates every witness of `r`.
bool lift_witness_check(const LiftResult& r);

}  // namespace isolat
