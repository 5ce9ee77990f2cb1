#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isolat/lift.hpp"

namespace isolat {

/// Desk-scale actions with closed-form or brute-force stabilizers.
struct ConcreteAction {
  enum class Kind { SO3_on_R3, SO3_on_S2, Finite_on_R3, Finite_on_S2, Circle_on_R2 };
  Kind kind = Kind::SO3_on_R3;
  ClassTag tag;  // finite actions only: Cyclic, Dihedral, Tetra, Octa or Icosa

  /// "SO3_on_R3", "Finite_on_R3(O)", ...
  std::string name() const;
  AmbientGroup ambient() const;
  /// Accepts "Finite_on_R3(D4)" and "Finite_on_R3:D4".
  static std::optional<ConcreteAction> parse(const std::string& name);
};

/// Actions exercised by the acceptance suite and `isolat check --all`.
std::vector<ConcreteAction> catalog_actions();

/// (x, v): a base point and a vector at it. For relative-equilibria sampling
/// the second slot is read as the Lie algebra element xi instead.
struct Sample {
  Vec3 point;
  Vec3 tangent;
};

struct SamplePlan {
  std::uint64_t rng_seed = 0;
  int n_random = 10000;
  int seed_version = 1;
  std::vector<Sample> stratum_seeds;
};

/// Deterministic stratum seeds (axis points, origin, aligned and misaligned
/// vectors) plus the random sample budget.
SamplePlan default_plan(const ConcreteAction& a, std::uint64_t seed = 0, int n_random = 10000);

ConcreteSubgroup stabilizer_of_point(const ConcreteAction& a, Vec3 x);
/// Throws NotTangent when v is not tangent to the sphere at x.
ConcreteSubgroup stabilizer_of_tangent(const ConcreteAction& a, Vec3 x, Vec3 v);

/// Infinitesimal generator xi_M(x). For the circle only xi.x is used.
Vec3 infinitesimal_generator(const ConcreteAction& a, Vec3 x, Vec3 xi);

std::set<ClassTag> empirical_base_lattice(const ConcreteAction& a, const SamplePlan& p);
std::set<ClassTag> empirical_lifted_lattice(const ConcreteAction& a, const SamplePlan& p);
std::set<ClassTag> empirical_zero_momentum_lattice(const ConcreteAction& a, const SamplePlan& p);
std::set<ClassTag> empirical_requilibria_lattice(const ConcreteAction& a, const SamplePlan& p);

/// Single-threaded references for the sampling kernels above.
std::set<ClassTag> empirical_lifted_lattice_serial(const ConcreteAction& a, const SamplePlan& p);
std::set<ClassTag> empirical_zero_momentum_lattice_serial(const ConcreteAction& a,
                                                          const SamplePlan& p);
std::set<ClassTag> empirical_requilibria_lattice_serial(const ConcreteAction& a,
                                                        const SamplePlan& p);

}  // namespace isolat
