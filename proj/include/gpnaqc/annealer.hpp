// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "gpnaqc/qubo.hpp"

namespace gpnaqc {

// Metropolis single-bit-flip annealer with a geometric cooling schedule.
// t_start = 0 is an "auto" sentinel resolved to 2 * max|Q| (or 1 for an
// all-zero matrix); after resolution t_start > t_end > 0 must hold.
struct AnnealConfig {
  int sweeps = 2000;
  double t_start = 0.0;
  double t_end = 1e-3;
  std::uint64_t seed = 0;
};

// Starts from a seeded random assignment; each sweep proposes a flip of
// every variable in a freshly shuffled order, accepting with probability
// min(1, exp(-dE/T)).  dE comes from an O(n) local-field cache.  Returns
// the best assignment ever visited, re-scored exactly.
QuboSolution anneal(const QuboMatrix& q, const AnnealConfig& cfg);

}  // namespace gpnaqc
