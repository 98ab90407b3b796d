#pragma once

// Product kernels for MPoly.  `multiply_serial` is the reference; the OpenMP
// kernel splits the left operand across threads, accumulates each slice in a
// private hash table and merges the sorted partial results.  Both return the
// same canonical polynomial.

#include "hilbres/poly.hpp"

namespace hilbres {

enum class Exec { serial, parallel };

MPoly multiply_serial(const MPoly& a, const MPoly& b);
MPoly multiply_parallel(const MPoly& a, const MPoly& b);

inline MPoly multiply(const MPoly& a, const MPoly& b, Exec exec) {
  return exec == Exec::parallel ? multiply_parallel(a, b) : multiply_serial(a, b);
}

/// Below this many term pairs the parallel kernel falls back to serial.
inline constexpr std::size_t kParallelPairThreshold = 4096;

int max_threads();

}  // namespace hilbres
