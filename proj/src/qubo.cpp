// SPDX-License-Identifier: Apache-2.0
#include "gpnaqc/qubo.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gpnaqc/errors.hpp"
#include "gpnaqc/rng.hpp"

namespace gpnaqc {

QuboMatrix::QuboMatrix(Eigen::MatrixXd q) : q_(std::move(q)) {
  if (q_.rows() == 0 || q_.rows() != q_.cols())
    throw std::invalid_argument("QuboMatrix: matrix must be square and non-empty");
  if (!q_.allFinite())
    throw std::invalid_argument("QuboMatrix: entries must be finite");
  const double asym = (q_ - q_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw std::invalid_argument("QuboMatrix: matrix not symmetric (max deviation " +
                                std::to_string(asym) + ")");
  q_ = ((q_ + q_.transpose()) / 2.0).eval();
}

double energy(const QuboMatrix& q, const std::vector<int>& x) {
  const int n = q.n();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("energy: assignment length does not match matrix size");
  for (int v : x)
    if (v != 0 && v != 1)
      throw std::invalid_argument("energy: assignment entries must be 0 or 1");
  double e = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    e += q(i, i);
    for (int j = i + 1; j < n; ++j)
      if (x[j]) e += 2.0 * q(i, j);
  }
  return e;
}

IsingDecomposition decompose(const QuboMatrix& q) {
  IsingDecomposition d;
  d.h = q.matrix().diagonal();
  d.j = q.matrix();
  d.j.diagonal().setZero();
  return d;
}

QuboSolution brute_force_solve(const QuboMatrix& q) {
  const int n = q.n();
  if (n > 24)
    throw std::length_error("brute_force_solve: n > 24 is not enumerable here");

  const Eigen::MatrixXd& m = q.matrix();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<int> x(n, 0);

  auto exact_energy = [&](const std::vector<int>& bits) {
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!bits[i]) continue;
      e += m(i, i);
      for (int j = i + 1; j < n; ++j)
        if (bits[j]) e += 2.0 * m(i, j);
    }
    return e;
  };

  double e = 0.0;           // incremental energy, refreshed on candidates
  double best_e = 0.0;      // always an exact_energy() value
  std::uint64_t best_code = 0;
  std::uint64_t code = 0;   // plain binary encoding of x

  for (std::uint64_t g = 1; g < total; ++g) {
    // Gray step: bit k flips between consecutive codes.
    const int k = std::countr_zero(g);
    double field = m(k, k);
    for (int j = 0; j < n; ++j)
      if (j != k && x[j]) field += 2.0 * m(k, j);
    const double delta = x[k] ? -field : field;
    e += delta;
    x[k] ^= 1;
    code ^= std::uint64_t{1} << k;

    // Exact ties matter for the encoding tie-break, so re-evaluate any
    // near-best candidate without the accumulated drift.
    if (e <= best_e + 1e-9 * (1.0 + std::abs(best_e))) {
      const double exact = exact_energy(x);
      if (exact < best_e || (exact == best_e && code < best_code)) {
        best_e = exact;
        best_code = code;
      }
    }
  }

  QuboSolution s;
  s.x.assign(n, 0);
  for (int i = 0; i < n; ++i) s.x[i] = static_cast<int>((best_code >> i) & 1);
  s.energy = best_e;
  return s;
}

QuboMatrix random_instance(int n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_instance: n must be >= 1");
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("random_instance: density must lie in [0, 1]");
  std::mt19937_64 eng(seed);
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) q(i, i) = uniform(eng, -1.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(eng) < density) {
        const double v = uniform(eng, -1.0, 1.0);
        q(i, j) = v;
        q(j, i) = v;
      }
  return QuboMatrix(std::move(q));
}

void save_qubo(const QuboMatrix& q, std::ostream& out) {
  const int n = q.n();
  out << n << "\n";
  char buf[64];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", q(i, j));
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
}

QuboMatrix load_qubo(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1)
    throw FormatError("load_qubo: expected a positive matrix size on the first line");
  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> q(i, j)))
        throw FormatError("load_qubo: truncated or non-numeric matrix body");
  try {
    return QuboMatrix(std::move(q));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("load_qubo: ") + e.what());
  }
}

void save_qubo_file(const QuboMatrix& q, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("save_qubo_file: cannot open " + path);
  save_qubo(q, out);
}

QuboMatrix load_qubo_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("load_qubo_file: cannot open " + path);
  return load_qubo(in);
}

}  // namespace gpnaqc
