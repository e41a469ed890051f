#include <benchmark/benchmark.h>

#include "halfspin/hodgestar.hpp"
#include "halfspin/norms.hpp"
#include "halfspin/random.hpp"

namespace {

using namespace halfspin;

TowerSpec main_tower() { return TowerSpec(Rational(2), Rational(-1)); }

void BM_FieldMultiply(benchmark::State& state) {
  const TowerSpec t = main_tower();
  Rng rng(7);
  const FieldElement x = rand_nonzero_element(rng, t);
  const FieldElement y = rand_nonzero_element(rng, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_FieldMultiply);

void BM_HodgeStarBuild(benchmark::State& state) {
  const TowerSpec t = main_tower();
  const int n = static_cast<int>(state.range(0));
  const HermitianData h = build_psi_delta_k(t, n, 1, t.sqrt_m1());
  for (auto _ : state) {
    benchmark::DoNotOptimize(hodge_star(h));
  }
}
BENCHMARK(BM_HodgeStarBuild)->Arg(4)->Arg(6);

void BM_LSquare(benchmark::State& state) {
  const TowerSpec t = main_tower();
  const int n = static_cast<int>(state.range(0));
  const HermitianData h = build_psi_delta_k(t, n, 1, t.sqrt_m1());
  const LOperator l = build_L(h, Parity::Odd);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(l.op, l.op));
  }
}
BENCHMARK(BM_LSquare)->Arg(4)->Arg(6);

void BM_SpinLiftPairCommutator(benchmark::State& state) {
  const TowerSpec t = main_tower();
  const int n = static_cast<int>(state.range(0));
  const SpinLift x = spin_lift_generator(1, 2, n, t);
  const SpinLift y = spin_lift_generator(1, n + 1, n, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator(x.plus, y.plus));
  }
}
BENCHMARK(BM_SpinLiftPairCommutator)->Arg(4)->Arg(6);

void BM_IsNormTwoSquares(benchmark::State& state) {
  const TowerSpec t(std::nullopt, Rational(-1));
  const FieldElement x = t.from_int(5 * 13 * 17 * 29);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_norm(x));
  }
}
BENCHMARK(BM_IsNormTwoSquares);

void BM_ResCommutes(benchmark::State& state) {
  const TowerSpec t = main_tower();
  const int n = static_cast<int>(state.range(0));
  const HermitianData h = build_psi_delta_k(t, n, 1, t.sqrt_m1());
  const LinOp rj = res_matrix(build_J(h));
  const LinOp rt = res_matrix(so_generator(1, 2, n, t).matrix);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(rj, rt) == compose(rt, rj));
  }
}
BENCHMARK(BM_ResCommutes)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
