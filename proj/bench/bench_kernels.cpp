// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "pcl/enumerate.hpp"
#include "pcl/functors.hpp"
#include "pcl/kernels.hpp"
#include "pcl/order.hpp"

namespace {

using namespace pcl;

std::vector<Subset> sparse_relation(std::size_t n) {
  std::mt19937 rng(42);
  std::bernoulli_distribution coin(2.0 / static_cast<double>(n));
  std::vector<Subset> rows(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].insert(i);
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) rows[i].insert(j);
  }
  return rows;
}

template <bool Parallel>
void BM_CloseTransitively(benchmark::State& state) {
  const auto base = sparse_relation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto rows = base;
    if constexpr (Parallel) kernels::close_transitively(rows);
    else kernels::reference::close_transitively(rows);
    benchmark::DoNotOptimize(rows.data());
  }
}

// Random dual maps of the shape met in positivication: twice as many target
// atoms as domain atoms, the two maps agreeing on most of them.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> sweep_maps(std::size_t atoms) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, atoms - 1);
  std::vector<std::size_t> lo(2 * atoms), hi(2 * atoms);
  for (std::size_t t = 0; t < lo.size(); ++t) {
    lo[t] = pick(rng);
    hi[t] = rng() % 4 == 0 ? pick(rng) : lo[t];
  }
  return {lo, hi};
}

template <bool Parallel>
void BM_InserterSweep(benchmark::State& state) {
  const std::size_t atoms = static_cast<std::size_t>(state.range(0));
  const auto [lo, hi] = sweep_maps(atoms);
  for (auto _ : state) {
    auto out = Parallel ? kernels::inserter_sweep(atoms, lo, hi) : kernels::reference::inserter_sweep(atoms, lo, hi);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_LiftPairs(benchmark::State& state) {
  const FunctorPtr t = state.range(0) == 0 ? make_mnb() : make_bag(3);
  // A bottom below two incomparable points: five comparable pairs.
  const FinPoset x = FinPoset::from_pairs(point_labels(3), {{0, 1}, {0, 2}});
  const Cotensor c = cotensor2(x);
  const std::size_t size = t->on_obj(x.size()).size();
  for (auto _ : state) {
    std::vector<Subset> rows(size, Subset(size));
    if constexpr (Parallel) t->lift_pairs(c.pairs.size(), c.pi0.assignment, c.pi1.assignment, x.size(), rows);
    else t->lift_pairs_reference(c.pairs.size(), c.pi0.assignment, c.pi1.assignment, x.size(), rows);
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetLabel(t->name() + " on the V poset");
}

}  // namespace

BENCHMARK(BM_CloseTransitively<true>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CloseTransitively<false>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InserterSweep<true>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InserterSweep<false>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LiftPairs<true>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LiftPairs<false>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
