// SPDX-License-Identifier: Apache-2.0
#include "gpnaqc/ahs.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gpnaqc/rng.hpp"

namespace gpnaqc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double omega_at(const DriveSchedule& s, double t) {
  const double ramp = s.ramp_fraction * s.total_time;
  if (t <= 0.0 || t >= s.total_time) return 0.0;
  if (t < ramp) return s.omega_max * (t / ramp);
  if (t > s.total_time - ramp) return s.omega_max * ((s.total_time - t) / ramp);
  return s.omega_max;
}

double local_scale_at(const DriveSchedule& s, double t) {
  return s.delta_local_final * (t / s.total_time);
}

double dist(const Vertex& a, const Vertex& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

SubgraphSolution make_solution(const Subgraph& sub, std::vector<int> members,
                               int shots_used) {
  std::sort(members.begin(), members.end(), [&](int a, int b) {
    return sub.vertices[a].id < sub.vertices[b].id;
  });
  SubgraphSolution s;
  s.shots_used = shots_used;
  for (int m : members) {
    s.selected.push_back(sub.vertices[m]);
    s.total_weight += sub.vertices[m].weight;
  }
  return s;
}

}  // namespace

void validate_schedule(const DriveSchedule& s) {
  if (!(s.total_time > 0.0))
    throw std::invalid_argument("DriveSchedule: total_time must be > 0");
  // omega_max == 0 is legal (drive off: diagonal evolution, no dynamics).
  if (!(s.omega_max >= 0.0))
    throw std::invalid_argument("DriveSchedule: omega_max must be >= 0");
  if (!(s.delta_global < 0.0))
    throw std::invalid_argument("DriveSchedule: delta_global must be < 0");
  if (!(s.delta_local_final > 0.0))
    throw std::invalid_argument("DriveSchedule: delta_local_final must be > 0");
  if (!(s.ramp_fraction > 0.0) || !(s.ramp_fraction < 0.5))
    throw std::invalid_argument("DriveSchedule: ramp_fraction must be in (0, 0.5)");
}

DriveSchedule default_schedule() {
  DriveSchedule s;
  s.total_time = 4.0;
  s.omega_max = kTwoPi * 1.2;
  s.delta_global = -kTwoPi * 1.0;
  s.delta_local_final = 0.0;  // auto: resolved per register
  s.ramp_fraction = 0.25;
  return s;
}

DriveSchedule resolve_schedule(DriveSchedule s, const Subgraph& sub) {
  if (s.delta_local_final == 0.0 && !sub.vertices.empty()) {
    double wmin = sub.vertices.front().weight;
    for (const Vertex& v : sub.vertices) wmin = std::min(wmin, v.weight);
    s.delta_local_final = kTwoPi * 2.0 / wmin;
  }
  return s;
}

InteractionModel::InteractionModel(double c6, double blockade_radius,
                                   double omega_max)
    : c6_(c6), radius_(blockade_radius) {
  if (!(radius_ > 0.0))
    throw std::invalid_argument("InteractionModel: radius must be > 0");
  const double v_at_r = c6_ / std::pow(radius_, 6);
  if (std::abs(v_at_r - omega_max) > 1e-12 * std::max(1.0, std::abs(omega_max)))
    throw std::invalid_argument(
        "InteractionModel: calibration identity c6/r^6 == omega_max violated");
}

InteractionModel InteractionModel::calibrated(double omega_max,
                                              double blockade_radius) {
  return InteractionModel(omega_max * std::pow(blockade_radius, 6),
                          blockade_radius, omega_max);
}

Eigen::MatrixXcd build_hamiltonian(const Subgraph& sub,
                                   const InteractionModel& model, double omega,
                                   double delta_global,
                                   double delta_local_scale, int cap) {
  const int k = static_cast<int>(sub.vertices.size());
  if (k > cap)
    throw std::length_error("build_hamiltonian: register exceeds the atom cap");
  const std::uint64_t dim = std::uint64_t{1} << k;
  const double r = sub.blockade_radius;
  const double cutoff = 2.5 * r;
  const double floor = 0.2 * r;

  // Pairwise interaction strengths (upper triangle, cutoff applied).
  std::vector<std::vector<double>> v(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const double d = dist(sub.vertices[i], sub.vertices[j]);
      if (d > cutoff) continue;
      const double de = std::max(d, floor);
      v[i][j] = model.c6() / std::pow(de, 6);
    }

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    double diag = 0.0;
    for (int i = 0; i < k; ++i) {
      if (!((idx >> i) & 1)) continue;
      diag -= delta_global + delta_local_scale * sub.vertices[i].weight;
      for (int j = i + 1; j < k; ++j)
        if ((idx >> j) & 1) diag += v[i][j];
    }
    h(idx, idx) = diag;
    for (int i = 0; i < k; ++i)
      h(idx ^ (std::uint64_t{1} << i), idx) += omega / 2.0;
  }
  return h;
}

QuantumState evolve(const Subgraph& sub, const InteractionModel& model,
                    const DriveSchedule& sched, double dt, int cap) {
  validate_schedule(sched);
  if (!(dt > 0.0) || dt > sched.total_time / 100.0)
    throw std::invalid_argument("evolve: need 0 < dt <= total_time/100");
  const int k = static_cast<int>(sub.vertices.size());
  if (k > cap) throw std::length_error("evolve: register exceeds the atom cap");
  const std::uint64_t dim = std::uint64_t{1} << k;

  QuantumState state;
  state.amplitudes = Eigen::VectorXcd::Zero(dim);
  state.amplitudes(0) = 1.0;

  const std::complex<double> mi(0.0, -1.0);
  double t = 0.0;
  const double tiny = 1e-12 * sched.total_time;
  while (t < sched.total_time - tiny) {
    const double step = std::min(dt, sched.total_time - t);
    const double mid = t + step / 2.0;
    const Eigen::MatrixXcd h =
        build_hamiltonian(sub, model, omega_at(sched, mid), sched.delta_global,
                          local_scale_at(sched, mid), cap);
    state.amplitudes = ((mi * step * h).exp() * state.amplitudes).eval();
    t += step;
  }
  const double norm = state.amplitudes.norm();
  state.norm_drift = std::abs(norm - 1.0);
  state.amplitudes /= norm;
  return state;
}

std::vector<std::uint64_t> sample(const QuantumState& state, int shots,
                                  std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  const Eigen::Index dim = state.amplitudes.size();
  std::vector<double> cdf(static_cast<std::size_t>(dim));
  double acc = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    acc += std::norm(state.amplitudes(i));
    cdf[static_cast<std::size_t>(i)] = acc;
  }
  std::mt19937_64 eng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (int s = 0; s < shots; ++s) {
    const double u = uniform01(eng) * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    out.push_back(static_cast<std::uint64_t>(
        std::min<std::ptrdiff_t>(it - cdf.begin(), dim - 1)));
  }
  return out;
}

SubgraphSolution repair_and_select(const Subgraph& sub,
                                   const std::vector<std::uint64_t>& shots) {
  if (shots.empty())
    throw std::invalid_argument("repair_and_select: shot list must be nonempty");
  const int k = static_cast<int>(sub.vertices.size());
  const double r = sub.blockade_radius;

  // Augmentation order: descending weight, ties by ascending id.
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (sub.vertices[a].weight != sub.vertices[b].weight)
      return sub.vertices[a].weight > sub.vertices[b].weight;
    return sub.vertices[a].id < sub.vertices[b].id;
  });

  std::vector<int> best;
  double best_w = -1.0;
  for (std::uint64_t shot : shots) {
    std::vector<int> sel;
    for (int i = 0; i < k; ++i)
      if ((shot >> i) & 1) sel.push_back(i);
    // Peel violators: lowest weight first, ties by vertex id.
    for (;;) {
      int worst = -1;
      for (std::size_t a = 0; a < sel.size(); ++a)
        for (std::size_t b = a + 1; b < sel.size(); ++b) {
          if (dist(sub.vertices[sel[a]], sub.vertices[sel[b]]) > r) continue;
          for (int m : {sel[a], sel[b]}) {
            if (worst < 0 ||
                sub.vertices[m].weight < sub.vertices[worst].weight ||
                (sub.vertices[m].weight == sub.vertices[worst].weight &&
                 sub.vertices[m].id < sub.vertices[worst].id))
              worst = m;
          }
        }
      if (worst < 0) break;
      sel.erase(std::remove(sel.begin(), sel.end(), worst), sel.end());
    }
    // Augment before comparing shots: a near-empty shot can still carry the
    // heaviest independent completion, and that completion is what competes.
    for (int cand : order) {
      if (std::find(sel.begin(), sel.end(), cand) != sel.end()) continue;
      bool ok = true;
      for (int m : sel)
        if (dist(sub.vertices[cand], sub.vertices[m]) <= r) {
          ok = false;
          break;
        }
      if (ok) sel.push_back(cand);
    }
    double w = 0.0;
    for (int m : sel) w += sub.vertices[m].weight;
    if (w > best_w) {
      best_w = w;
      best = std::move(sel);
    }
  }
  return make_solution(sub, std::move(best), static_cast<int>(shots.size()));
}

SubgraphSolution exact_mwis(const Subgraph& sub) {
  const int k = static_cast<int>(sub.vertices.size());
  if (k > 24) throw std::length_error("exact_mwis: more than 24 vertices");
  if (k == 0) return SubgraphSolution{};
  const double r = sub.blockade_radius;

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (dist(sub.vertices[i], sub.vertices[j]) <= r) {
        adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
        adj[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
      }

  const std::uint32_t total = std::uint32_t{1} << k;
  std::vector<bool> ind(total, false);
  ind[0] = true;
  std::uint32_t best_mask = 0;
  double best_w = 0.0;
  std::vector<int> best_ids;

  auto ids_of = [&](std::uint32_t mask) {
    std::vector<int> ids;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) ids.push_back(sub.vertices[i].id);
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    if (!ind[rest] || (adj[static_cast<std::size_t>(low)] & rest)) continue;
    ind[mask] = true;
    double w = 0.0;
    for (std::uint32_t m = mask; m; m &= m - 1)
      w += sub.vertices[std::countr_zero(m)].weight;
    if (w > best_w) {
      best_w = w;
      best_mask = mask;
      best_ids = ids_of(mask);
    } else if (w == best_w && best_mask != 0) {
      auto ids = ids_of(mask);
      if (std::lexicographical_compare(ids.begin(), ids.end(), best_ids.begin(),
                                       best_ids.end())) {
        best_mask = mask;
        best_ids = std::move(ids);
      }
    }
  }

  std::vector<int> members;
  for (int i = 0; i < k; ++i)
    if ((best_mask >> i) & 1) members.push_back(i);
  return make_solution(sub, std::move(members), 0);
}

SubgraphSolution solve_subgraph(const Subgraph& sub,
                                const InteractionModel& model,
                                const DriveSchedule& sched, int shots,
                                std::uint64_t seed, int cap, double dt) {
  const int k = static_cast<int>(sub.vertices.size());
  if (k == 0) return SubgraphSolution{};
  if (k > cap) return exact_mwis(sub);
  const DriveSchedule rs = resolve_schedule(sched, sub);
  const double step = (dt > 0.0) ? dt : rs.total_time / 400.0;
  const QuantumState state = evolve(sub, model, rs, step, cap);
  return repair_and_select(sub, sample(state, shots, seed));
}

}  // namespace gpnaqc
