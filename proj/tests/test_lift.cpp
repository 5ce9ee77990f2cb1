#include <doctest.h>

#include <omp.h>

#include "isolat/error.hpp"
#include "isolat/io.hpp"
#include "isolat/lift.hpp"
#include "support.hpp"

using namespace isolat;
using namespace isolat::testing;

namespace {

IsotropyLattice lat(std::vector<ClassTag> tags) { return build_lattice(tags); }

std::vector<ClassTag> tags_of(const IsotropyLattice& l) { return l.classes(); }

/// Random SO(3) base lattices over catalog tags with n <= 10 that have a
/// unique minimum.
std::vector<IsotropyLattice> random_bases(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<ClassTag> pool = finite_tags(10);
  pool.push_back(ClassTag::circle());
  pool.push_back(ClassTag::orth_circle());
  pool.push_back(ClassTag::full());
  std::uniform_int_distribution<std::size_t> size(1, 5), index(0, pool.size() - 1);
  std::vector<IsotropyLattice> out;
  while (static_cast<int>(out.size()) < count) {
    std::set<ClassTag> s;
    const std::size_t k = size(rng);
    while (s.size() < k) s.insert(pool[index(rng)]);
    try {
      out.push_back(build_lattice(s));
    } catch (const NoUniqueMinimum&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("lifted_lattice examples") {
  const auto r3 = lifted_lattice(AmbientGroup::so3(), lat({ClassTag::circle(), ClassTag::full()}));
  CHECK(tags_of(r3.lifted) == std::vector<ClassTag>{ClassTag::trivial(), ClassTag::circle(), ClassTag::full()});
  CHECK(r3.lifted.hasse() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(lift_witness_check(r3));

  const auto octa_base =
      lat({ClassTag::trivial(), ClassTag::cyclic(2), ClassTag::cyclic(3), ClassTag::cyclic(4), ClassTag::octa()});
  const auto octa = lifted_lattice(AmbientGroup::finite(finite_of(canonical_rep(ClassTag::octa()))), octa_base);
  CHECK(octa.lifted == octa_base);
  CHECK(lift_witness_check(octa));

  const auto s2 = lifted_lattice(AmbientGroup::so3(), lat({ClassTag::circle()}));
  CHECK(tags_of(s2.lifted) == std::vector<ClassTag>{ClassTag::trivial(), ClassTag::circle()});
}

TEST_CASE("hand-enumerated SO(3) lifts") {
  // H2 = O2 gives K in {flip C2, O2}; H2 = SO3 gives K = SO3.
  const auto o2 = lifted_lattice(AmbientGroup::so3(), lat({ClassTag::orth_circle(), ClassTag::full()}));
  CHECK(tags_of(o2.lifted) == std::vector<ClassTag>{ClassTag::cyclic(2), ClassTag::orth_circle(), ClassTag::full()});

  // H2 = D2 acting on R^3: generic 1, axis C2, origin D2.
  const auto d2 = lifted_lattice(AmbientGroup::so3(), lat({ClassTag::dihedral(2), ClassTag::full()}));
  CHECK(tags_of(d2.lifted) ==
        std::vector<ClassTag>{ClassTag::trivial(), ClassTag::cyclic(2), ClassTag::dihedral(2), ClassTag::full()});

  // H1 = C2 inside H2 = D4 meets the axial C4 in C2 and a flip in either C2
  // or 1 depending on position; H2 = D4 alone adds 1, C2, C4, D4.
  const auto d4 = lifted_lattice(AmbientGroup::so3(), lat({ClassTag::cyclic(2), ClassTag::dihedral(4)}));
  CHECK(tags_of(d4.lifted) ==
        std::vector<ClassTag>{ClassTag::trivial(), ClassTag::cyclic(2), ClassTag::cyclic(4), ClassTag::dihedral(4)});

  // SO2 < O2: the circle inside O2 meets the flip stabilizer in the trivial group.
  const auto circ = lifted_lattice(AmbientGroup::so3(), lat({ClassTag::circle(), ClassTag::orth_circle()}));
  CHECK(tags_of(circ.lifted) ==
        std::vector<ClassTag>{ClassTag::trivial(), ClassTag::cyclic(2), ClassTag::circle(), ClassTag::orth_circle()});
}

TEST_CASE("lift_witness_check rejects tampered witnesses") {
  auto r = lifted_lattice(AmbientGroup::so3(), lat({ClassTag::circle(), ClassTag::full()}));
  REQUIRE(lift_witness_check(r));
  REQUIRE(r.witnesses[0].lifted == ClassTag::trivial());
  r.witnesses[0].k = ClassTag::full();
  r.witnesses[0].k_rep = FullSub{};
  CHECK_FALSE(lift_witness_check(r));

  auto missing = lifted_lattice(AmbientGroup::so3(), lat({ClassTag::circle()}));
  missing.witnesses.pop_back();
  CHECK_FALSE(lift_witness_check(missing));
}

TEST_CASE("realizability in G") {
  const auto octa = AmbientGroup::finite(finite_of(canonical_rep(ClassTag::octa())));
  CHECK_THROWS_AS(lifted_lattice(octa, lat({ClassTag::trivial(), ClassTag::cyclic(5)})), NotRealizableInG);
  CHECK_THROWS_AS(lifted_lattice(AmbientGroup::circle(), lat({ClassTag::dihedral(2)})), NotRealizableInG);
  CHECK_THROWS_AS(lifted_lattice(AmbientGroup::circle(), lat({ClassTag::orth_circle()})), NotRealizableInG);
  CHECK_NOTHROW(lifted_lattice(AmbientGroup::circle(), lat({ClassTag::cyclic(7), ClassTag::circle()})));
}

TEST_CASE("fast paths are idempotent") {
  const auto circle_base = lat({ClassTag::cyclic(2), ClassTag::cyclic(4), ClassTag::circle()});
  const auto once = lifted_lattice(AmbientGroup::circle(), circle_base);
  CHECK(once.lifted == circle_base);
  CHECK(lifted_lattice(AmbientGroup::circle(), once.lifted).lifted == circle_base);

  for (const auto& t : {ClassTag::tetra(), ClassTag::icosa(), ClassTag::dihedral(4), ClassTag::cyclic(6)}) {
    const auto g = AmbientGroup::finite(finite_of(canonical_rep(t)));
    const auto base = lat({ClassTag::trivial(), t});
    const auto r = lifted_lattice(g, base);
    CHECK(r.lifted == base);
    CHECK(lifted_lattice(g, r.lifted).lifted == base);
    CHECK(lift_witness_check(r));
  }
}

TEST_CASE("random SO(3) bases: structural properties") {
  for (const auto& base : random_bases(2024, 120)) {
    const auto r = lifted_lattice(AmbientGroup::so3(), base);
    for (const auto& t : base.classes()) CHECK(r.lifted.contains(t));
    CHECK(r.lifted.has_unique_minimum());
    CHECK(is_subconjugate(r.lifted.minimum(), base.minimum()));
    CHECK(lift_witness_check(r));

    const std::string text = dump(to_json(r));
    CHECK(dump(to_json(lifted_lattice(AmbientGroup::so3(), base))) == text);
    CHECK(dump(to_json(cotangent_lifted_lattice(AmbientGroup::so3(), base))) == text);
  }
}

TEST_CASE("parallel lift equals the serial reference") {
  const int saved = omp_get_max_threads();
  for (const int threads : {1, 3, 8}) {
    omp_set_num_threads(threads);
    for (const auto& base : random_bases(77, 40)) {
      CHECK(dump(to_json(lifted_lattice(AmbientGroup::so3(), base))) ==
            dump(to_json(lifted_lattice_serial(AmbientGroup::so3(), base))));
    }
  }
  omp_set_num_threads(saved);
}
