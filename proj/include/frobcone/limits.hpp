#pragma once

#include <cstdint>

namespace frobcone {

// Resource guards for the enumeration-heavy operations. Exceeding a guard
// raises a ResourceGuard error that reports the effective bound; it never
// crashes or silently truncates.
struct Limits {
  std::int64_t max_lattice_points = 100'000'000;  // candidate points per box enumeration
  std::int64_t max_decompose_points = 10'000'000; // q^d per Frobenius decomposition
  int threads = 1;
};

}  // namespace frobcone
