// Timings of the OpenMP kernels against their serial reference
// implementations.

#include <omp.h>

#include <chrono>
#include <iostream>

#include "assur/assur_analysis.hpp"
#include "assur/corpus.hpp"
#include "assur/counts.hpp"
#include "assur/orientation.hpp"
#include "assur/rigidity.hpp"
#include "support/generators.hpp"

using namespace assur;

namespace {

template <typename Fn>
double time_of(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::cout << name << ": serial " << serial << "s, openmp " << parallel << "s, speedup "
            << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
}

}  // namespace

int main() {
  std::cout << "threads: " << omp_get_max_threads() << "\n";

  {
    SplitMix64 rng(1);
    PinnedGraph g = testing::random_top_count_graph(rng, 2, 16, false);
    std::vector<CountViolation> a, b;
    double ts = time_of([&] { a = subgraph_counts_bruteforce_serial(g); });
    double tp = time_of([&] { b = subgraph_counts_bruteforce(g); });
    row("subgraph count scan (|I|=16)", ts, tp);
    if (a.size() != b.size()) {
      std::cerr << "MISMATCH in count scan\n";
      return 1;
    }
  }

  {
    PinnedGraph g = corpus_instance("double_banana_pinned").graph;
    Configuration cfg = sample_generic_configuration(g, 3, ScalarMode::exact_rational);
    std::vector<Orientation> a, b;
    double ts = time_of([&] { a = laplace_orientation_oracle_serial(g, cfg, 8); });
    double tp = time_of([&] { b = laplace_orientation_oracle(g, cfg, 8); });
    row("laplace oracle (|I|=8, 3D)", ts, tp);
    if (a.size() != b.size()) {
      std::cerr << "MISMATCH in oracle\n";
      return 1;
    }
  }

  {
    SplitMix64 rng(3);
    PinnedGraph g = testing::random_pinned_isostatic_2d(rng, 40);
    int ra = 0, rb = 0;
    double ts = time_of([&] { ra = generic_rank_serial(g, 8, 5); });
    double tp = time_of([&] { rb = generic_rank(g, 8, 5); });
    row("generic rank, 8 trials (|I|=40)", ts, tp);
    if (ra != rb) {
      std::cerr << "MISMATCH in rank\n";
      return 1;
    }
  }

  {
    SplitMix64 rng(4);
    PinnedGraph g = testing::random_pinned_isostatic_2d(rng, 24);
    DriverReport a, b;
    double ts = time_of([&] { a = classify_drivers_serial(g, 7); });
    double tp = time_of([&] { b = classify_drivers(g, 7); });
    row("driver moving-set scan (|I|=24)", ts, tp);
    if (a.drivers.size() != b.drivers.size()) {
      std::cerr << "MISMATCH in drivers\n";
      return 1;
    }
    for (size_t i = 0; i < a.drivers.size(); ++i)
      if (a.drivers[i].moving_set != b.drivers[i].moving_set) {
        std::cerr << "MISMATCH in drivers\n";
        return 1;
      }
  }

  return 0;
}
