// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gpnaqc/qubo.hpp"

namespace gpnaqc {

// One QUBO variable placed in the plane.  Coordinates are micrometers,
// weights are the (positive) MWIS weights.
struct Vertex {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double weight = 1.0;
};

// Weighted unit-disk graph: an edge exists iff the euclidean distance is
// <= blockade_radius (inclusive).  Edges are always derived, never stored.
class UnitDiskGraph {
 public:
  UnitDiskGraph(std::vector<Vertex> vertices, double blockade_radius);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  double blockade_radius() const { return radius_; }
  int size() const { return static_cast<int>(vertices_.size()); }

 private:
  std::vector<Vertex> vertices_;
  double radius_;
};

// How well the layout realized the intended conflict structure.
struct EmbeddingReport {
  int intended_edges = 0;
  int realized_edges = 0;   // intended pairs that ended up within radius
  int spurious_edges = 0;   // within-radius pairs that were not intended
  double edge_fidelity = 1.0;
};

// Pairs (i, j), i < j, with J[i][j] > theta: strong positive couplings are
// the ones a blockade edge should forbid from co-selection.  theta > 0.
std::vector<std::pair<int, int>> intended_conflict_graph(
    const IsingDecomposition& dec, double theta);

// Seeded stress-majorization layout (targets 0.8r inside conflict pairs,
// 1.5r elsewhere; converged when the relative stress change drops below
// 1e-6, capped at 500 iterations) plus the weight map
// w_i = max(h) - h_i + eps, eps = 0.01 * (range of h, or 1 if zero).
std::pair<UnitDiskGraph, EmbeddingReport> embed(const QuboMatrix& q, double r,
                                                double theta,
                                                std::uint64_t seed);

// All unordered id pairs within the blockade radius, sorted.
std::vector<std::pair<int, int>> edges(const UnitDiskGraph& g);

// Text format: line 1 "n r"; then n lines "id x y weight".
void save_graph(const UnitDiskGraph& g, std::ostream& out);
UnitDiskGraph load_graph(std::istream& in);
void save_graph_file(const UnitDiskGraph& g, const std::string& path);
UnitDiskGraph load_graph_file(const std::string& path);

}  // namespace gpnaqc
