#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace jetspace {

/// Result of one independent cell: a value or the exception it raised.
template <class T>
struct CellOutcome {
  std::optional<T> value;
  std::exception_ptr error;
};

template <class F>
using cell_result_t = std::invoke_result_t<F&, std::size_t>;

template <class F>
CellOutcome<cell_result_t<F>> run_cell(F& f, std::size_t i) {
  CellOutcome<cell_result_t<F>> out;
  try {
    out.value.emplace(f(i));
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

/// Reference evaluator: cells 0..count-1 in order.
template <class F>
std::vector<CellOutcome<cell_result_t<F>>> evaluate_cells_serial(std::size_t count, F&& f) {
  std::vector<CellOutcome<cell_result_t<F>>> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = run_cell(f, i);
  return out;
}

/// OpenMP evaluator. Cells are scheduled one at a time since their costs differ
/// by orders of magnitude; results land in their own slots, so the output is
/// identical to the serial one.
template <class F>
std::vector<CellOutcome<cell_result_t<F>>> evaluate_cells_omp(std::size_t count, int jobs, F&& f) {
  std::vector<CellOutcome<cell_result_t<F>>> out(count);
  const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_cell(f, static_cast<std::size_t>(i));
  return out;
}

template <class F>
std::vector<CellOutcome<cell_result_t<F>>> evaluate_cells(std::size_t count, int jobs, F&& f) {
  if (jobs <= 1 || count <= 1) return evaluate_cells_serial(count, f);
  return evaluate_cells_omp(count, jobs, f);
}

}  // namespace jetspace
