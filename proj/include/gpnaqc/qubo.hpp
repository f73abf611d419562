// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gpnaqc {

// Dense symmetric QUBO matrix.  The constructor checks symmetry to 1e-12,
// then stores the exactly symmetrized average so downstream decompositions
// are lossless.
class QuboMatrix {
 public:
  explicit QuboMatrix(Eigen::MatrixXd q);

  int n() const { return static_cast<int>(q_.rows()); }
  const Eigen::MatrixXd& matrix() const { return q_; }
  double operator()(int i, int j) const { return q_(i, j); }

 private:
  Eigen::MatrixXd q_;
};

// h_i = Q_ii, J_ij = Q_ij for i != j (J symmetric, zero diagonal).
struct IsingDecomposition {
  Eigen::VectorXd h;
  Eigen::MatrixXd j;
};

struct QuboSolution {
  std::vector<int> x;
  double energy = 0.0;
};

// E(x) = x^T Q x for binary x; throws std::invalid_argument on size or
// non-binary entries.
double energy(const QuboMatrix& q, const std::vector<int>& x);

IsingDecomposition decompose(const QuboMatrix& q);

// Exact minimizer by Gray-code enumeration; n <= 24 or std::length_error.
// Ties resolve to the lowest integer encoding (bit i of the code = x_i).
QuboSolution brute_force_solve(const QuboMatrix& q);

// Diagonal ~ U[-1,1]; each pair i<j is nonzero with probability `density`
// (value ~ U[-1,1]).  Fixed draw order: diagonal 0..n-1, then pairs in
// row-major order, one presence draw then one value draw per present pair.
QuboMatrix random_instance(int n, double density, std::uint64_t seed);

// Text format: first line n, then n rows of n whitespace-separated entries.
void save_qubo(const QuboMatrix& q, std::ostream& out);
QuboMatrix load_qubo(std::istream& in);
void save_qubo_file(const QuboMatrix& q, const std::string& path);
QuboMatrix load_qubo_file(const std::string& path);

}  // namespace gpnaqc
