// Serial reference versus OpenMP kernels. Run with OMP_NUM_THREADS set to
// compare thread counts.

#include <random>

#include <benchmark/benchmark.h>

#include "isga/block_graph.hpp"
#include "isga/brandt.hpp"
#include "isga/kernels.hpp"

namespace {

  using isga::kernels::id_type;

  std::vector<id_type> brandt_table(std::size_t n) {
    auto const f = isga::to_finite(isga::BlockSum::combinatorial({n, n, n / 2 + 1}));
    auto const& entries = f.semigroup().table().entries();
    return std::vector<id_type>(entries.begin(), entries.end());
  }

  std::size_t side(std::vector<id_type> const& table) {
    std::size_t n = 0;
    while (n * n < table.size()) {
      ++n;
    }
    return n;
  }

  void associativity_serial(benchmark::State& state) {
    auto const table = brandt_table(state.range(0));
    auto const n     = side(table);
    for (auto _ : state) {
      benchmark::DoNotOptimize(isga::kernels::first_nonassociative_serial(table, n));
    }
    state.counters["elements"] = static_cast<double>(n);
  }

  void associativity_parallel(benchmark::State& state) {
    auto const table = brandt_table(state.range(0));
    auto const n     = side(table);
    for (auto _ : state) {
      benchmark::DoNotOptimize(isga::kernels::first_nonassociative_parallel(table, n));
    }
    state.counters["elements"] = static_cast<double>(n);
    state.counters["threads"]  = isga::kernels::max_threads();
  }

  // Brandt products of a block sum, tabulated on element ids.
  struct BrandtProducts {
    isga::BlockSum                  sum;
    std::vector<isga::BrandtElement> elements;

    explicit BrandtProducts(std::size_t n)
        : sum(isga::BlockSum({isga::Block{n, isga::GroupSpec::cyclic(3)}})) {
      auto const f = isga::to_finite(sum);
      for (std::size_t x = 0; x < f.size(); ++x) {
        elements.push_back(f.element(x));
      }
    }
  };

  void tabulate_serial(benchmark::State& state) {
    BrandtProducts const b(state.range(0));
    auto const           f = isga::to_finite(b.sum);
    for (auto _ : state) {
      benchmark::DoNotOptimize(isga::kernels::tabulate_serial(
          b.elements.size(), [&](std::size_t x, std::size_t y) {
            return static_cast<id_type>(
                f.id(isga::brandt_mul(b.sum, b.elements[x], b.elements[y])));
          }));
    }
  }

  void tabulate_parallel(benchmark::State& state) {
    BrandtProducts const b(state.range(0));
    auto const           f = isga::to_finite(b.sum);
    for (auto _ : state) {
      benchmark::DoNotOptimize(isga::kernels::tabulate_parallel(
          b.elements.size(), [&](std::size_t x, std::size_t y) {
            return static_cast<id_type>(
                f.id(isga::brandt_mul(b.sum, b.elements[x], b.elements[y])));
          }));
    }
  }

  std::vector<std::pair<isga::Composition, isga::Composition>>
  decomposition_jobs(std::size_t count) {
    std::mt19937_64 rng(99);
    auto composition = [&](std::size_t n) {
      isga::Composition c;
      while (n > 0) {
        std::size_t const part = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        c.push_back(part);
        n -= part;
      }
      return c;
    };
    std::vector<std::pair<isga::Composition, isga::Composition>> jobs;
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t const n = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
      jobs.emplace_back(composition(n), composition(n));
    }
    return jobs;
  }

  void decompose_serial(benchmark::State& state) {
    auto const jobs = decomposition_jobs(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(isga::decompose_batch_serial(jobs));
    }
  }

  void decompose_parallel(benchmark::State& state) {
    auto const jobs = decomposition_jobs(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(isga::decompose_batch_parallel(jobs));
    }
  }

}  // namespace

BENCHMARK(associativity_serial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(associativity_parallel)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(tabulate_serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(tabulate_parallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(decompose_serial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(decompose_parallel)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
