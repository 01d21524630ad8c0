#pragma once

#include <cstddef>
#include <exception>

// Execution policy shared by the data-parallel kernels. Every kernel keeps a
// serial reference path; tests compare the two bit for bit.

namespace primeul {

enum class Exec { serial, parallel };

/// Number of worker threads the parallel path would use (1 without OpenMP).
int max_threads();

/// body(i) for i in [0, n), spread over threads when exec is parallel. The
/// first exception thrown by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(primeul_parallel_for_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace primeul
