// SPDX-License-Identifier: Apache-2.0
#include "gpnaqc/portfolio.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gpnaqc/errors.hpp"

using namespace gpnaqc;

TEST_CASE("portfolio: loads a clean CSV") {
  std::stringstream csv(
      "date,AAA,BBB\n"
      "2024-01-02,100,50\n"
      "2024-01-03,110,55\n");
  const PriceSeries s = load_prices(csv);
  CHECK(s.tickers == std::vector<std::string>{"AAA", "BBB"});
  CHECK(s.dates == std::vector<std::string>{"2024-01-02", "2024-01-03"});
  CHECK(s.prices(0, 0) == 100.0);
  CHECK(s.prices(1, 1) == 55.0);
}

TEST_CASE("portfolio: forward fill, leading backfill, all-missing row drop") {
  std::stringstream csv(
      "date,AAA,BBB\n"
      "2024-01-02,100,\n"
      "2024-01-03,,\n"       // dropped entirely before filling
      "2024-01-04,,60\n"
      "2024-01-05,120,\n");
  const PriceSeries s = load_prices(csv);
  REQUIRE(s.dates.size() == 3);  // the all-missing day vanished
  CHECK(s.dates[1] == "2024-01-04");
  CHECK(s.prices(1, 0) == 100.0);  // AAA forward-filled
  CHECK(s.prices(2, 0) == 120.0);
  CHECK(s.prices(0, 1) == 60.0);   // BBB leading gap backfilled
  CHECK(s.prices(2, 1) == 60.0);   // BBB trailing forward fill
}

TEST_CASE("portfolio: loader error taxonomy") {
  std::stringstream empty("");
  CHECK_THROWS_AS(load_prices(empty), FormatError);

  std::stringstream no_date_col("time,AAA\n2024-01-02,1\n");
  CHECK_THROWS_AS(load_prices(no_date_col), FormatError);

  std::stringstream bad_number("date,AAA\n2024-01-02,abc\n");
  CHECK_THROWS_AS(load_prices(bad_number), FormatError);

  std::stringstream bad_date("date,AAA\n02/01/2024,1\n");
  CHECK_THROWS_AS(load_prices(bad_date), FormatError);

  std::stringstream short_row("date,AAA,BBB\n2024-01-02,1\n");
  CHECK_THROWS_AS(load_prices(short_row), FormatError);

  std::stringstream unordered(
      "date,AAA\n2024-01-03,1\n2024-01-02,2\n");
  CHECK_THROWS_AS(load_prices(unordered), DataError);

  std::stringstream negative("date,AAA\n2024-01-02,-5\n");
  CHECK_THROWS_AS(load_prices(negative), DataError);

  std::stringstream no_rows("date,AAA\n");
  CHECK_THROWS_AS(load_prices(no_rows), DataError);
}

TEST_CASE("portfolio: empty column names the asset") {
  std::stringstream csv(
      "date,AAA,GHOST\n"
      "2024-01-02,100,\n"
      "2024-01-03,101,\n");
  try {
    load_prices(csv);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("GHOST") != std::string::npos);
  }
}

TEST_CASE("portfolio: log returns match hand computation") {
  std::stringstream csv(
      "date,AAA\n"
      "2024-01-02,100\n"
      "2024-01-03,110\n"
      "2024-01-04,121\n");
  const Eigen::MatrixXd r = log_returns(load_prices(csv));
  REQUIRE(r.rows() == 2);
  CHECK(r(0, 0) == doctest::Approx(std::log(1.1)).epsilon(1e-15));
  CHECK(r(1, 0) == doctest::Approx(std::log(1.1)).epsilon(1e-15));
}

TEST_CASE("portfolio: log returns need two rows") {
  std::stringstream csv("date,AAA\n2024-01-02,100\n");
  CHECK_THROWS_AS(log_returns(load_prices(csv)), InsufficientDataError);
}

TEST_CASE("portfolio: annualize matches a manual estimate") {
  Eigen::MatrixXd r(3, 2);
  r << 0.01, 0.02, 0.03, -0.01, -0.01, 0.04;
  const ReturnStatistics stats = annualize(r);

  // Manual column means and unbiased covariance, annualized by 252.
  for (int a = 0; a < 2; ++a) {
    double mean = (r(0, a) + r(1, a) + r(2, a)) / 3.0;
    CHECK(stats.mu()(a) == doctest::Approx(252.0 * mean).epsilon(1e-14));
    for (int b = 0; b < 2; ++b) {
      double mb = (r(0, b) + r(1, b) + r(2, b)) / 3.0;
      double cov = 0.0;
      for (int t = 0; t < 3; ++t) cov += (r(t, a) - mean) * (r(t, b) - mb);
      cov /= 2.0;
      CHECK(stats.sigma()(a, b) == doctest::Approx(252.0 * cov).epsilon(1e-12));
    }
  }
}

TEST_CASE("portfolio: constant returns give zero variance") {
  Eigen::MatrixXd r(3, 1);
  r << std::log(1.1), std::log(1.1), std::log(1.1);
  const ReturnStatistics stats = annualize(r);
  CHECK(stats.mu()(0) == doctest::Approx(252.0 * std::log(1.1)).epsilon(1e-14));
  CHECK(stats.sigma()(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(annualize(Eigen::MatrixXd::Zero(1, 2)), InsufficientDataError);
}

TEST_CASE("portfolio: statistics constructor guards the covariance") {
  Eigen::VectorXd mu(2);
  mu << 1.0, 2.0;
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0.4, 1;
  CHECK_THROWS_AS(ReturnStatistics(mu, asym), std::invalid_argument);
  Eigen::MatrixXd indef(2, 2);
  indef << 1, 2, 2, 1;  // eigenvalues 3 and -1
  CHECK_THROWS_AS(ReturnStatistics(mu, indef), std::invalid_argument);
  CHECK_THROWS_AS(ReturnStatistics(mu, Eigen::MatrixXd::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("portfolio: Markowitz matrix assembles mu and sigma") {
  Eigen::VectorXd mu(2);
  mu << 0.10, 0.20;
  Eigen::MatrixXd sigma(2, 2);
  sigma << 0.04, 0.01, 0.01, 0.09;
  const ReturnStatistics stats(mu, sigma);

  const QuboMatrix q = build_markowitz_qubo(stats, 0.5);
  CHECK(q(0, 0) == doctest::Approx(-0.10 + 0.5 * 0.04).epsilon(1e-15));
  CHECK(q(1, 1) == doctest::Approx(-0.20 + 0.5 * 0.09).epsilon(1e-15));
  CHECK(q(0, 1) == doctest::Approx(0.5 * 0.01).epsilon(1e-15));

  const QuboMatrix pure = build_markowitz_qubo(stats, 0.0);
  CHECK(pure(0, 0) == doctest::Approx(-0.10));
  CHECK(pure(0, 1) == 0.0);

  CHECK_THROWS_AS(build_markowitz_qubo(stats, -0.1), std::invalid_argument);
}
