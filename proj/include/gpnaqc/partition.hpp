// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "gpnaqc/embedding.hpp"

namespace gpnaqc {

using BoxIndex = std::pair<int, int>;

// Square-grid decomposition of the plane.  Box side must exceed twice the
// blockade radius so that only grid-adjacent boxes can interact; the origin
// is anchored at the componentwise coordinate minimum.
struct GridPartition {
  double box_side = 0.0;
  std::pair<double, double> origin{0.0, 0.0};
  std::map<int, BoxIndex> assignment;  // vertex id -> box index
};

// Vertices of one box, with edges derived exactly as in UnitDiskGraph.
struct Subgraph {
  BoxIndex box_index{0, 0};
  std::vector<Vertex> vertices;
  double blockade_radius = 0.0;
};

// Box of v = (floor((v.x - origin.x)/s), floor((v.y - origin.y)/s));
// boundaries belong to the higher box.  Requires s > 2r.
GridPartition partition(const UnitDiskGraph& g, double s);

// One Subgraph per non-empty box, ordered by box index.
std::vector<Subgraph> extract_subgraphs(const UnitDiskGraph& g,
                                        const GridPartition& p);

// Same, but boxes holding more than `cap` vertices are recursively
// quadrisected (children (2i+a, 2j+b), halved side) until each part fits.
// Sibling sub-boxes may sit closer than the s > 2r guarantee; the merge
// phase re-checks all pairwise conflicts globally.
std::vector<Subgraph> extract_subgraphs_capped(const UnitDiskGraph& g,
                                               const GridPartition& p,
                                               int cap);

// Diagnostic text dump: one "box_i box_j vertex_id" line per vertex.
void dump_partition(const GridPartition& p, std::ostream& out);

// View a subgraph as a standalone unit-disk graph (same radius).
UnitDiskGraph as_graph(const Subgraph& sub);

}  // namespace gpnaqc
