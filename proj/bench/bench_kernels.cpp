// Serial reference vs OpenMP kernels: the lift loop nest and oracle sampling.

#include <benchmark/benchmark.h>

#include "isolat/lift.hpp"
#include "isolat/oracle.hpp"

namespace {

using namespace isolat;

/// Every catalog class with n <= max_n; the trivial class is the minimum.
IsotropyLattice wide_base(int max_n) {
  std::vector<ClassTag> tags{ClassTag::trivial(), ClassTag::tetra(), ClassTag::octa(), ClassTag::icosa(),
                             ClassTag::circle(), ClassTag::orth_circle(), ClassTag::full()};
  for (int n = 2; n <= max_n; ++n) {
    tags.push_back(ClassTag::cyclic(n));
    tags.push_back(ClassTag::dihedral(n));
  }
  return build_lattice(tags);
}

void BM_LiftSerial(benchmark::State& state) {
  const auto base = wide_base(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lifted_lattice_serial(AmbientGroup::so3(), base));
  state.SetLabel(std::to_string(base.size()) + " classes");
}

void BM_LiftParallel(benchmark::State& state) {
  const auto base = wide_base(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lifted_lattice(AmbientGroup::so3(), base));
  state.SetLabel(std::to_string(base.size()) + " classes");
}

const ConcreteAction kIcosa{ConcreteAction::Kind::Finite_on_R3, ClassTag::icosa()};

void BM_OracleSerial(benchmark::State& state) {
  const auto plan = default_plan(kIcosa, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(empirical_lifted_lattice_serial(kIcosa, plan));
}

void BM_OracleParallel(benchmark::State& state) {
  const auto plan = default_plan(kIcosa, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(empirical_lifted_lattice(kIcosa, plan));
}

}  // namespace

BENCHMARK(BM_LiftSerial)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LiftParallel)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
