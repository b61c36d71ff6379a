// Serial reference vs OpenMP evaluation of the (m, e) image-dimension cells
// behind a lambda sequence.

#include <cstdlib>
#include <iostream>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "jetspace/jets.hpp"
#include "jetspace/parallel.hpp"
#include "jetspace/parser.hpp"

namespace {

using namespace jetspace;

struct Workload {
  Ideal X;
  Ideal jac;
  Point point;
  std::vector<std::pair<unsigned, unsigned>> cells;
};

Workload make_workload(std::vector<std::string> names, std::string_view f, unsigned m_max, unsigned e_max) {
  const Ring r(std::move(names));
  Ideal X(r, {parse_polynomial(f, r)});
  Ideal jac = jacobian_ideal(X, 1);
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned m = 1; m <= m_max; ++m)
    for (unsigned e = 0; e <= e_max; ++e) cells.emplace_back(m, e);
  return Workload{X, jac, Point(r.size(), Rational(0)), cells};
}

const Workload& cone() {
  static const Workload w = make_workload({"x", "y", "z", "w"}, "x*y - z*w", 2, 3);
  return w;
}

const Workload& umbrella() {
  static const Workload w = make_workload({"x", "y", "z"}, "x^2 - y^2*z", 2, 3);
  return w;
}

auto cell_function(const Workload& w) {
  return [&w](std::size_t i) {
    const auto [m, e] = w.cells[i];
    return liftable_image_dim_any(w.X, w.jac, w.point, m, e);
  };
}

// Fresh Ideal objects per run so that cached bases do not hide the work.
Workload fresh(const Workload& w) {
  return Workload{Ideal(w.X.ring(), w.X.generators()), Ideal(w.jac.ring(), w.jac.generators()), w.point, w.cells};
}

std::vector<int> values(const std::vector<CellOutcome<int>>& out) {
  std::vector<int> v;
  for (const auto& c : out) v.push_back(c.value ? *c.value : -2);
  return v;
}

void serial(benchmark::State& state, const Workload& (*load)()) {
  for (auto _ : state) {
    const Workload w = fresh(load());
    benchmark::DoNotOptimize(evaluate_cells_serial(w.cells.size(), cell_function(w)));
  }
  state.counters["cells"] = static_cast<double>(load().cells.size());
}

void openmp(benchmark::State& state, const Workload& (*load)()) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Workload w = fresh(load());
    benchmark::DoNotOptimize(evaluate_cells_omp(w.cells.size(), jobs, cell_function(w)));
  }
  state.counters["cells"] = static_cast<double>(load().cells.size());
  state.counters["jobs"] = jobs;
}

bool outputs_agree(const Workload& (*load)()) {
  const Workload a = fresh(load());
  const Workload b = fresh(load());
  return values(evaluate_cells_serial(a.cells.size(), cell_function(a))) ==
         values(evaluate_cells_omp(b.cells.size(), 4, cell_function(b)));
}

}  // namespace

BENCHMARK_CAPTURE(serial, cone, cone)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(openmp, cone, cone)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(serial, umbrella, umbrella)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(openmp, umbrella, umbrella)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  if (!outputs_agree(cone) || !outputs_agree(umbrella)) {
    std::cerr << "serial and OpenMP cell values differ\n";
    return EXIT_FAILURE;
  }
  std::cerr << "hardware threads available to OpenMP: " << omp_get_num_procs() << "\n";
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return EXIT_FAILURE;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return EXIT_SUCCESS;
}
