// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gpnaqc/partition.hpp"

namespace gpnaqc {

// Largest register the dense state-vector simulator accepts by default.
// A full default-schedule evolution costs ~0.6 s at 6 atoms but ~4 s at 7
// and ~32 s at 8 (dense 2^k x 2^k matrix exponentials), so 6 keeps whole
// benchmark suites interactive; raise it via config when per-box fidelity
// matters more than wall time.  Oversized boxes fall back to exact MWIS.
inline constexpr int kDefaultAtomCap = 6;

// Drive waveforms: Omega ramps linearly 0 -> omega_max over
// ramp_fraction*T, holds, ramps back down; the local detuning scale ramps
// linearly 0 -> delta_local_final over the full window; the global
// detuning stays constant (and negative).
struct DriveSchedule {
  double total_time = 4.0;          // microseconds
  double omega_max = 0.0;           // rad/us, peak Rabi frequency
  double delta_global = 0.0;        // rad/us, constant, < 0
  double delta_local_final = 0.0;   // rad/us, final local-detuning scale
  double ramp_fraction = 0.25;      // in (0, 0.5)
};

// Throws std::invalid_argument when a field is out of range.
void validate_schedule(const DriveSchedule& s);

// Schedule defaults; delta_local_final is left 0 as an "auto" sentinel
// that solve_subgraph resolves per register (the minimum-weight atom ends
// at a local detuning of +2*pi*2 rad/us).
DriveSchedule default_schedule();
DriveSchedule resolve_schedule(DriveSchedule s, const Subgraph& sub);

// Van der Waals interaction, calibrated so V(blockade_radius) == omega_max.
class InteractionModel {
 public:
  InteractionModel(double c6, double blockade_radius, double omega_max);
  static InteractionModel calibrated(double omega_max, double blockade_radius);

  double c6() const { return c6_; }
  double blockade_radius() const { return radius_; }

 private:
  double c6_;
  double radius_;
};

// State vector over a k-atom register; bit i of a basis index is the
// Rydberg occupation n_i of atom i.  norm_drift records |norm - 1| as
// observed before the final renormalization.
struct QuantumState {
  Eigen::VectorXcd amplitudes;
  double norm_drift = 0.0;
};

// Per-box MWIS candidate solution.  Selected vertices are sorted by id and
// always form an independent set (pairwise distance > r).
struct SubgraphSolution {
  std::vector<Vertex> selected;
  double total_weight = 0.0;
  int shots_used = 0;
};

// H = sum_i (omega/2) sigma_i^x - sum_i (delta_global + delta_local_scale
// * w_i) n_i + sum_{i<j} (c6/d_ij^6) n_i n_j.  Pairs beyond 2.5r are
// dropped; pair distances are floored at 0.2r to keep the diagonal finite
// for accidentally coincident points.  k > cap raises std::length_error.
Eigen::MatrixXcd build_hamiltonian(const Subgraph& sub,
                                   const InteractionModel& model, double omega,
                                   double delta_global,
                                   double delta_local_scale,
                                   int cap = kDefaultAtomCap);

// Time-ordered evolution from |0...0> in steps of dt (plus a final partial
// step), waveforms evaluated at mid-step, each propagator computed by the
// scaled-and-squared matrix exponential.  Requires 0 < dt <= T/100.
QuantumState evolve(const Subgraph& sub, const InteractionModel& model,
                    const DriveSchedule& sched, double dt,
                    int cap = kDefaultAtomCap);

// `shots` independent basis-index draws from |amplitude|^2.
std::vector<std::uint64_t> sample(const QuantumState& state, int shots,
                                  std::uint64_t seed);

// Repair each shot by dropping the lowest-weight endpoint of a violated
// edge (ties by id) until independent, then greedily augment it with
// independent leftovers in descending weight order (ties by id); the
// heaviest repaired-and-augmented set across shots wins.
SubgraphSolution repair_and_select(const Subgraph& sub,
                                   const std::vector<std::uint64_t>& shots);

// Exhaustive maximum-weight independent set for |V| <= 24 (else
// std::length_error); ties prefer the lexicographically smallest id set.
SubgraphSolution exact_mwis(const Subgraph& sub);

// Dispatch: registers up to `cap` atoms run evolve -> sample ->
// repair_and_select; anything bigger (up to 24) falls back to exact_mwis.
// dt = 0 picks the default total_time/400.
SubgraphSolution solve_subgraph(const Subgraph& sub,
                                const InteractionModel& model,
                                const DriveSchedule& sched, int shots,
                                std::uint64_t seed, int cap = kDefaultAtomCap,
                                double dt = 0.0);

}  // namespace gpnaqc
