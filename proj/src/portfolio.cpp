// SPDX-License-Identifier: Apache-2.0
#include "gpnaqc/portfolio.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gpnaqc/errors.hpp"

namespace gpnaqc {
namespace {

constexpr double kTradingDays = 252.0;

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool is_iso_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9})
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

double parse_price(const std::string& cell, const std::string& where) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw FormatError("load_prices: non-numeric price '" + cell + "' at " + where);
  return v;
}

}  // namespace

ReturnStatistics::ReturnStatistics(Eigen::VectorXd mu, Eigen::MatrixXd sigma)
    : mu_(std::move(mu)), sigma_(std::move(sigma)) {
  if (mu_.size() == 0 || sigma_.rows() != mu_.size() || sigma_.cols() != mu_.size())
    throw std::invalid_argument("ReturnStatistics: mu/sigma size mismatch");
  if (!mu_.allFinite() || !sigma_.allFinite())
    throw std::invalid_argument("ReturnStatistics: entries must be finite");
  if ((sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("ReturnStatistics: sigma not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw std::invalid_argument("ReturnStatistics: sigma not positive semidefinite");
}

PriceSeries load_prices(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("load_prices: empty input");
  auto header = split_csv(line);
  if (header.size() < 2 || header[0] != "date")
    throw FormatError("load_prices: header must be 'date,TICKER1,...'");
  const std::size_t n_assets = header.size() - 1;

  const double kMissing = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> dates;
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_csv(line);
    if (cells.size() != header.size())
      throw FormatError("load_prices: line " + std::to_string(line_no) + " has " +
                        std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(header.size()));
    if (!is_iso_date(cells[0]))
      throw FormatError("load_prices: bad ISO date '" + cells[0] + "' at line " +
                        std::to_string(line_no));
    std::vector<double> row(n_assets, kMissing);
    bool any = false;
    for (std::size_t k = 0; k < n_assets; ++k) {
      if (cells[k + 1].empty()) continue;
      row[k] = parse_price(cells[k + 1], "line " + std::to_string(line_no) +
                                             ", column " + header[k + 1]);
      any = true;
    }
    if (!any) continue;  // a day with no quotes at all carries no information
    dates.push_back(cells[0]);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError("load_prices: no usable price rows");

  for (std::size_t t = 1; t < dates.size(); ++t)
    if (!(dates[t - 1] < dates[t]))
      throw DataError("load_prices: dates not strictly increasing near " + dates[t]);

  PriceSeries s;
  s.dates = std::move(dates);
  s.tickers.assign(header.begin() + 1, header.end());
  s.prices.resize(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(n_assets));
  for (std::size_t k = 0; k < n_assets; ++k) {
    // Forward fill, then copy the first observation back over leading gaps.
    double last = kMissing;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (!std::isnan(rows[t][k])) last = rows[t][k];
      s.prices(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(k)) = last;
    }
    if (std::isnan(last))
      throw DataError("load_prices: asset " + s.tickers[k] + " has no prices");
    double first = kMissing;
    for (Eigen::Index t = 0; t < s.prices.rows(); ++t) {
      const double v = s.prices(t, static_cast<Eigen::Index>(k));
      if (!std::isnan(v)) {
        first = v;
        break;
      }
    }
    for (Eigen::Index t = 0; t < s.prices.rows(); ++t) {
      if (!std::isnan(s.prices(t, static_cast<Eigen::Index>(k)))) break;
      s.prices(t, static_cast<Eigen::Index>(k)) = first;
    }
  }
  for (Eigen::Index t = 0; t < s.prices.rows(); ++t)
    for (Eigen::Index k = 0; k < s.prices.cols(); ++k)
      if (!(s.prices(t, k) > 0.0) || !std::isfinite(s.prices(t, k)))
        throw DataError("load_prices: non-positive price for " +
                        s.tickers[static_cast<std::size_t>(k)] + " on " +
                        s.dates[static_cast<std::size_t>(t)]);
  return s;
}

PriceSeries load_prices_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("load_prices_file: cannot open " + path);
  return load_prices(in);
}

Eigen::MatrixXd log_returns(const PriceSeries& series) {
  const Eigen::Index t = series.prices.rows();
  if (t < 2)
    throw InsufficientDataError("log_returns: need at least two price rows");
  Eigen::MatrixXd r(t - 1, series.prices.cols());
  for (Eigen::Index i = 1; i < t; ++i)
    r.row(i - 1) =
        (series.prices.row(i).array() / series.prices.row(i - 1).array()).log();
  return r;
}

ReturnStatistics annualize(const Eigen::MatrixXd& returns) {
  const Eigen::Index r = returns.rows();
  if (r < 2)
    throw InsufficientDataError("annualize: need at least two return rows");
  const Eigen::VectorXd mean = returns.colwise().mean();
  const Eigen::MatrixXd centered = returns.rowwise() - mean.transpose();
  const Eigen::MatrixXd cov =
      (centered.transpose() * centered) / static_cast<double>(r - 1);
  return ReturnStatistics(kTradingDays * mean, kTradingDays * cov);
}

QuboMatrix build_markowitz_qubo(const ReturnStatistics& stats, double gamma) {
  if (!(gamma >= 0.0))
    throw std::invalid_argument("build_markowitz_qubo: gamma must be >= 0");
  Eigen::MatrixXd q = gamma * stats.sigma();
  q.diagonal() -= stats.mu();
  return QuboMatrix(std::move(q));
}

}  // namespace gpnaqc
