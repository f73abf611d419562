// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "gpnaqc/qubo.hpp"

namespace gpnaqc {

// Daily close prices, one row per date, one column per ticker.  Rows are
// strictly increasing by date and every price is positive and finite once
// loading has filled the gaps.
struct PriceSeries {
  std::vector<std::string> dates;
  std::vector<std::string> tickers;
  Eigen::MatrixXd prices;
};

// Annualized return statistics.  The constructor checks that sigma is
// symmetric and positive semidefinite (smallest eigenvalue >= -1e-8).
class ReturnStatistics {
 public:
  ReturnStatistics(Eigen::VectorXd mu, Eigen::MatrixXd sigma);
  const Eigen::VectorXd& mu() const { return mu_; }
  const Eigen::MatrixXd& sigma() const { return sigma_; }
  int n_assets() const { return static_cast<int>(mu_.size()); }

 private:
  Eigen::VectorXd mu_;
  Eigen::MatrixXd sigma_;
};

// CSV layout: header "date,TICKER1,...", then one row per day with ISO
// dates.  An empty cell is a missing price: rows with every price missing
// are dropped, remaining gaps forward-fill, and leading gaps copy the first
// observed value.  A column with no observations at all is a DataError.
PriceSeries load_prices(std::istream& in);
PriceSeries load_prices_file(const std::string& path);

// r_t = ln(P_t / P_{t-1}) per asset; needs at least two rows.
Eigen::MatrixXd log_returns(const PriceSeries& series);

// Annualized (x252) mean and unbiased covariance of daily log returns;
// needs at least two return rows.
ReturnStatistics annualize(const Eigen::MatrixXd& returns);

// Q_ii = -mu_i + gamma * sigma_ii, Q_ij = gamma * sigma_ij; gamma >= 0.
QuboMatrix build_markowitz_qubo(const ReturnStatistics& stats, double gamma);

}  // namespace gpnaqc
