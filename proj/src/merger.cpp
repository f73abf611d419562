// SPDX-License-Identifier: Apache-2.0
#include "gpnaqc/merger.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gpnaqc {
namespace {

double dist(const Vertex& a, const Vertex& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::map<int, Vertex> index_by_id(const UnitDiskGraph& g) {
  std::map<int, Vertex> byid;
  for (const Vertex& v : g.vertices()) byid[v.id] = v;
  return byid;
}

}  // namespace

std::vector<int> merge(const UnitDiskGraph& g,
                       const std::vector<SubgraphSolution>& locals) {
  const auto byid = index_by_id(g);
  std::map<int, Vertex> pool;  // union of candidates, dedupped by id
  for (const SubgraphSolution& s : locals)
    for (const Vertex& v : s.selected) {
      if (!byid.count(v.id))
        throw std::invalid_argument("merge: candidate id " +
                                    std::to_string(v.id) +
                                    " is not a vertex of the graph");
      pool.emplace(v.id, byid.at(v.id));
    }

  std::vector<Vertex> order;
  order.reserve(pool.size());
  for (const auto& [id, v] : pool) order.push_back(v);
  std::sort(order.begin(), order.end(), [](const Vertex& a, const Vertex& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.id < b.id;
  });

  const double r = g.blockade_radius();
  std::vector<Vertex> kept;
  std::vector<int> ids;
  for (const Vertex& cand : order) {
    bool ok = true;
    for (const Vertex& k : kept)
      if (!(dist(cand, k) > r)) {
        ok = false;
        break;
      }
    if (ok) {
      kept.push_back(cand);
      ids.push_back(cand.id);
    }
  }
  return ids;
}

GlobalSolution finalize(const QuboMatrix& q, const UnitDiskGraph& g,
                        const std::vector<int>& ids) {
  const auto byid = index_by_id(g);
  const double r = g.blockade_radius();

  GlobalSolution out;
  out.independent_set = ids;
  std::sort(out.independent_set.begin(), out.independent_set.end());
  for (std::size_t a = 0; a < out.independent_set.size(); ++a) {
    const int id = out.independent_set[a];
    if (!byid.count(id))
      throw std::invalid_argument("finalize: unknown vertex id " +
                                  std::to_string(id));
    if (a > 0 && out.independent_set[a - 1] == id)
      throw std::invalid_argument("finalize: duplicate vertex id " +
                                  std::to_string(id));
    if (id < 0 || id >= q.n())
      throw std::invalid_argument("finalize: vertex id " + std::to_string(id) +
                                  " outside the variable range");
  }
  for (std::size_t a = 0; a < out.independent_set.size(); ++a)
    for (std::size_t b = a + 1; b < out.independent_set.size(); ++b)
      if (!(dist(byid.at(out.independent_set[a]),
                 byid.at(out.independent_set[b])) > r))
        throw std::invalid_argument(
            "finalize: selected vertices are not pairwise independent");

  out.assignment.assign(static_cast<std::size_t>(q.n()), 0);
  for (int id : out.independent_set) {
    out.assignment[static_cast<std::size_t>(id)] = 1;
    out.mwis_weight += byid.at(id).weight;
  }
  out.qubo_energy = energy(q, out.assignment);
  return out;
}

}  // namespace gpnaqc
