// SPDX-License-Identifier: Apache-2.0
#include "gpnaqc/embedding.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "gpnaqc/errors.hpp"
#include "gpnaqc/rng.hpp"

namespace gpnaqc {
namespace {

double dist2(const Vertex& a, const Vertex& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

UnitDiskGraph::UnitDiskGraph(std::vector<Vertex> vertices, double blockade_radius)
    : vertices_(std::move(vertices)), radius_(blockade_radius) {
  if (!(radius_ > 0.0) || !std::isfinite(radius_))
    throw std::invalid_argument("UnitDiskGraph: blockade radius must be positive");
  std::unordered_set<int> seen;
  for (const Vertex& v : vertices_) {
    if (!(v.weight > 0.0) || !std::isfinite(v.weight))
      throw std::invalid_argument("UnitDiskGraph: vertex weights must be positive");
    if (!std::isfinite(v.x) || !std::isfinite(v.y))
      throw std::invalid_argument("UnitDiskGraph: coordinates must be finite");
    if (!seen.insert(v.id).second)
      throw std::invalid_argument("UnitDiskGraph: duplicate vertex id " +
                                  std::to_string(v.id));
  }
}

std::vector<std::pair<int, int>> intended_conflict_graph(
    const IsingDecomposition& dec, double theta) {
  if (!(theta > 0.0))
    throw std::invalid_argument("intended_conflict_graph: theta must be > 0");
  const int n = static_cast<int>(dec.h.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dec.j(i, j) > theta) pairs.emplace_back(i, j);
  return pairs;
}

std::pair<UnitDiskGraph, EmbeddingReport> embed(const QuboMatrix& q, double r,
                                                double theta,
                                                std::uint64_t seed) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("embed: blockade radius must be positive");
  const int n = q.n();
  const IsingDecomposition dec = decompose(q);
  const auto conflicts = intended_conflict_graph(dec, theta);

  // Weight map: invert h (MWIS maximizes, QUBO minimizes) and shift into
  // strictly positive territory.
  const double hmax = dec.h.maxCoeff();
  const double range = hmax - dec.h.minCoeff();
  const double eps = 0.01 * (range > 0.0 ? range : 1.0);
  std::vector<Vertex> verts(n);
  for (int i = 0; i < n; ++i)
    verts[i] = Vertex{i, 0.0, 0.0, hmax - dec.h(i) + eps};

  if (n > 1) {
    // Stress majorization (SMACOF) against two target distances.
    Eigen::MatrixXd delta = Eigen::MatrixXd::Constant(n, n, 1.5 * r);
    for (auto [i, j] : conflicts) {
      delta(i, j) = 0.8 * r;
      delta(j, i) = 0.8 * r;
    }
    delta.diagonal().setZero();
    Eigen::MatrixXd w(n, n);  // standard 1/delta^2 stress weights
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        w(i, j) = (i == j) ? 0.0 : 1.0 / (delta(i, j) * delta(i, j));

    std::mt19937_64 eng(seed);
    const double span = 1.5 * r * std::sqrt(static_cast<double>(n));
    Eigen::MatrixXd x(n, 2);
    for (int i = 0; i < n; ++i) {
      x(i, 0) = uniform(eng, 0.0, span);
      x(i, 1) = uniform(eng, 0.0, span);
    }

    Eigen::MatrixXd v = -w;
    for (int i = 0; i < n; ++i) v(i, i) = w.row(i).sum();
    // The Guttman transform needs a pseudo-inverse of v; since B(x)x has
    // zero column sums, (v + 11^T/n)^{-1} acts as one.
    Eigen::MatrixXd vp = v + Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    Eigen::LDLT<Eigen::MatrixXd> solver(vp);

    auto stress = [&](const Eigen::MatrixXd& pos) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const double d = (pos.row(i) - pos.row(j)).norm();
          const double e = d - delta(i, j);
          s += w(i, j) * e * e;
        }
      return s;
    };

    double prev = stress(x);
    for (int it = 0; it < 500; ++it) {
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double d = (x.row(i) - x.row(j)).norm();
          if (d < 1e-12) d = 1e-12;
          const double bij = -w(i, j) * delta(i, j) / d;
          b(i, j) = bij;
          b(j, i) = bij;
          b(i, i) -= bij;
          b(j, j) -= bij;
        }
      x = solver.solve(b * x);
      const double cur = stress(x);
      if (std::abs(prev - cur) < 1e-6 * std::max(prev, 1e-300)) break;
      prev = cur;
    }
    for (int i = 0; i < n; ++i) {
      verts[i].x = x(i, 0);
      verts[i].y = x(i, 1);
    }
    // Normalize translation so the coordinate minimum sits at the origin.
    double mx = verts[0].x, my = verts[0].y;
    for (const Vertex& v2 : verts) {
      mx = std::min(mx, v2.x);
      my = std::min(my, v2.y);
    }
    for (Vertex& v2 : verts) {
      v2.x -= mx;
      v2.y -= my;
    }
  }

  UnitDiskGraph g(std::move(verts), r);
  EmbeddingReport rep;
  rep.intended_edges = static_cast<int>(conflicts.size());
  std::unordered_set<long long> intended;
  for (auto [i, j] : conflicts)
    intended.insert(static_cast<long long>(i) * n + j);
  const double r2 = r * r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (dist2(g.vertices()[i], g.vertices()[j]) > r2) continue;
      if (intended.count(static_cast<long long>(i) * n + j))
        ++rep.realized_edges;
      else
        ++rep.spurious_edges;
    }
  // With no intended edges there is nothing to miss: fidelity is vacuously
  // perfect rather than 0/1.
  rep.edge_fidelity = rep.intended_edges == 0
                          ? 1.0
                          : static_cast<double>(rep.realized_edges) /
                                rep.intended_edges;
  return {std::move(g), rep};
}

std::vector<std::pair<int, int>> edges(const UnitDiskGraph& g) {
  const auto& vs = g.vertices();
  const double r2 = g.blockade_radius() * g.blockade_radius();
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (dist2(vs[a], vs[b]) <= r2)
        out.emplace_back(std::min(vs[a].id, vs[b].id),
                         std::max(vs[a].id, vs[b].id));
  std::sort(out.begin(), out.end());
  return out;
}

void save_graph(const UnitDiskGraph& g, std::ostream& out) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d %.17g\n", g.size(), g.blockade_radius());
  out << buf;
  for (const Vertex& v : g.vertices()) {
    std::snprintf(buf, sizeof buf, "%d %.17g %.17g %.17g\n", v.id, v.x, v.y,
                  v.weight);
    out << buf;
  }
}

UnitDiskGraph load_graph(std::istream& in) {
  int n = 0;
  double r = 0.0;
  if (!(in >> n >> r) || n < 0)
    throw FormatError("load_graph: expected 'n r' on the first line");
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  for (Vertex& v : vs)
    if (!(in >> v.id >> v.x >> v.y >> v.weight))
      throw FormatError("load_graph: truncated vertex list");
  try {
    return UnitDiskGraph(std::move(vs), r);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("load_graph: ") + e.what());
  }
}

void save_graph_file(const UnitDiskGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("save_graph_file: cannot open " + path);
  save_graph(g, out);
}

UnitDiskGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("load_graph_file: cannot open " + path);
  return load_graph(in);
}

}  // namespace gpnaqc
