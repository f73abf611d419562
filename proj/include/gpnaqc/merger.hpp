// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "gpnaqc/ahs.hpp"
#include "gpnaqc/embedding.hpp"
#include "gpnaqc/qubo.hpp"

namespace gpnaqc {

// Final pipeline output: the merged independent set and its QUBO reading.
struct GlobalSolution {
  std::vector<int> independent_set;  // vertex ids, ascending
  std::vector<int> assignment;       // bit i == 1 iff i is selected
  double qubo_energy = 0.0;
  double mwis_weight = 0.0;
};

// Greedy global merge: pool all local selections, sort by weight
// descending (ties by ascending id), and keep a candidate iff its distance
// to every kept vertex strictly exceeds the blockade radius.  Returns kept
// ids in acceptance order.
std::vector<int> merge(const UnitDiskGraph& g,
                       const std::vector<SubgraphSolution>& locals);

// Map an independent set back to a binary assignment and score it.  Throws
// std::invalid_argument when ids are unknown or not pairwise independent.
GlobalSolution finalize(const QuboMatrix& q, const UnitDiskGraph& g,
                        const std::vector<int>& ids);

}  // namespace gpnaqc
