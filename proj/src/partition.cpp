// SPDX-License-Identifier: Apache-2.0
#include "gpnaqc/partition.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace gpnaqc {
namespace {

// Quadrisect `sub` (side, corner = its geometric low corner) until every
// leaf holds at most cap vertices.  Depth-capped so coincident points can
// not recurse forever; an unsplittable oversized leaf is passed through for
// the caller to handle.
void split_to_cap(Subgraph sub, double side, std::pair<double, double> corner,
                  int cap, int depth, std::vector<Subgraph>& out) {
  if (static_cast<int>(sub.vertices.size()) <= cap || depth > 48) {
    out.push_back(std::move(sub));
    return;
  }
  const double half = side / 2.0;
  Subgraph child[4];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      child[2 * a + b].box_index = {2 * sub.box_index.first + a,
                                    2 * sub.box_index.second + b};
      child[2 * a + b].blockade_radius = sub.blockade_radius;
    }
  for (const Vertex& v : sub.vertices) {
    const int a = (v.x - corner.first >= half) ? 1 : 0;
    const int b = (v.y - corner.second >= half) ? 1 : 0;
    child[2 * a + b].vertices.push_back(v);
  }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Subgraph& c = child[2 * a + b];
      if (c.vertices.empty()) continue;
      split_to_cap(std::move(c), half,
                   {corner.first + a * half, corner.second + b * half}, cap,
                   depth + 1, out);
    }
}

}  // namespace

GridPartition partition(const UnitDiskGraph& g, double s) {
  if (!(s > 2.0 * g.blockade_radius()))
    throw std::invalid_argument(
        "partition: box side must exceed twice the blockade radius");
  GridPartition p;
  p.box_side = s;
  if (g.size() == 0) return p;
  double ox = g.vertices()[0].x, oy = g.vertices()[0].y;
  for (const Vertex& v : g.vertices()) {
    ox = std::min(ox, v.x);
    oy = std::min(oy, v.y);
  }
  p.origin = {ox, oy};
  for (const Vertex& v : g.vertices())
    p.assignment[v.id] = {static_cast<int>(std::floor((v.x - ox) / s)),
                          static_cast<int>(std::floor((v.y - oy) / s))};
  return p;
}

std::vector<Subgraph> extract_subgraphs(const UnitDiskGraph& g,
                                        const GridPartition& p) {
  std::map<BoxIndex, Subgraph> boxes;
  for (const Vertex& v : g.vertices()) {
    const BoxIndex b = p.assignment.at(v.id);
    Subgraph& sub = boxes[b];
    sub.box_index = b;
    sub.blockade_radius = g.blockade_radius();
    sub.vertices.push_back(v);
  }
  std::vector<Subgraph> out;
  out.reserve(boxes.size());
  for (auto& [idx, sub] : boxes) out.push_back(std::move(sub));
  return out;
}

std::vector<Subgraph> extract_subgraphs_capped(const UnitDiskGraph& g,
                                               const GridPartition& p,
                                               int cap) {
  if (cap < 1) throw std::invalid_argument("extract_subgraphs_capped: cap >= 1");
  std::vector<Subgraph> out;
  for (Subgraph& sub : extract_subgraphs(g, p)) {
    const std::pair<double, double> corner = {
        p.origin.first + sub.box_index.first * p.box_side,
        p.origin.second + sub.box_index.second * p.box_side};
    split_to_cap(std::move(sub), p.box_side, corner, cap, 0, out);
  }
  std::sort(out.begin(), out.end(), [](const Subgraph& a, const Subgraph& b) {
    if (a.box_index != b.box_index) return a.box_index < b.box_index;
    return a.vertices.front().id < b.vertices.front().id;
  });
  return out;
}

void dump_partition(const GridPartition& p, std::ostream& out) {
  std::vector<std::pair<BoxIndex, int>> rows;
  rows.reserve(p.assignment.size());
  for (const auto& [id, box] : p.assignment) rows.emplace_back(box, id);
  std::sort(rows.begin(), rows.end());
  for (const auto& [box, id] : rows)
    out << box.first << " " << box.second << " " << id << "\n";
}

UnitDiskGraph as_graph(const Subgraph& sub) {
  return UnitDiskGraph(sub.vertices, sub.blockade_radius);
}

}  // namespace gpnaqc
