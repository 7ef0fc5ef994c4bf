// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "gwalab/envelope.hpp"
#include "gwalab/suites.hpp"

using namespace gwalab;

namespace {
const DifferentialSet& instance() {
  static const DifferentialSet ds(GwaAlgebra(AutWord({Elementary{1, z2().pow(2)}}), z1().pow(3) * z2() + z1() * z2() + 1), 5);
  return ds;
}

template <bool Parallel>
void BM_Compose(benchmark::State& state) {
  const DifferentialSet& ds = instance();
  const GwaAlgebra& w = ds.algebra();
  for (auto _ : state) {
    for (int p = 0; p <= 3; ++p) {
      const EnvMatrix m = Parallel ? compose(w, ds.dh(p, 1), ds.dh(p + 1, 1)) : compose_serial(w, ds.dh(p, 1), ds.dh(p + 1, 1));
      benchmark::DoNotOptimize(m);
      const EnvMatrix t = Parallel ? compose(w, ds.t(p, 1), ds.dv(p + 2, 0)) : compose_serial(w, ds.t(p, 1), ds.dv(p + 2, 0));
      benchmark::DoNotOptimize(t);
    }
  }
}

template <bool Parallel>
void BM_Trials(benchmark::State& state) {
  const Trial trial = [](Sampler& s, std::size_t) {
    const GwaAlgebra w(s.word(2, Sampler::WordStyle::Triangular), s.nonzero_poly(2, 3));
    return homotopy_checks(w, 4);
  };
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const SuiteReport r = Parallel ? run_trials("bench", 1, n, trial) : run_trials_serial("bench", 1, n, trial);
    benchmark::DoNotOptimize(r);
  }
}
}  // namespace

BENCHMARK(BM_Compose<true>)->Name("compose/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compose<false>)->Name("compose/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Trials<true>)->Name("run_trials/parallel")->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Trials<false>)->Name("run_trials/serial")->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
