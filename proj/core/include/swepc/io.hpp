#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swepc/monte_carlo.hpp"
#include "swepc/stochastic.hpp"

namespace swepc {

/// 17 significant digits, enough to round-trip any finite double.
std::string formatNumber(double value);

/// Header lines are written with a "# " prefix; columns are separated by a
/// single space and lines end in LF.
void writeTable(const std::filesystem::path& path, std::span<const std::string> headers,
                const std::vector<std::vector<double>>& rows);

/// Whitespace-separated numbers. Throws InvalidArgument on anything else.
std::vector<double> parseRow(std::string_view line);

/// Data rows of a table file ('#' lines skipped).
std::vector<std::vector<double>> readTable(const std::filesystem::path& path);

/// Mean, standard deviation, skewness and kurtosis (not excess). Skewness
/// and kurtosis are reported as 0 when the variance is exactly 0.
struct Statistics {
  double mean = 0.0;
  double stddev = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
};

Statistics chaosStatistics(std::span<const double> coeffs);

/// Statistics of v = q/h realised at 2P+2 Gauss-Hermite nodes. All fields
/// are NaN if the depth expansion is non-positive at any node.
Statistics velocityStatistics(std::span<const double> h, std::span<const double> q);

Statistics sampleStatistics(const RunningMoments& m);

/// Output tables (one row per element).
std::vector<std::vector<double>> coefficientRows(const StochasticField& field);
std::vector<std::vector<double>> statisticsRows(const StochasticField& field);
std::vector<std::vector<double>> derivedStatisticsRows(const StochasticField& field);
std::vector<std::vector<double>> statisticsRows(const McAccumulator& acc, const Mesh& mesh);
std::vector<std::vector<double>> derivedStatisticsRows(const McAccumulator& acc, const Mesh& mesh);

std::vector<std::string> coefficientColumns(int order);
std::vector<std::string> statisticsColumns();
std::vector<std::string> derivedStatisticsColumns();

}  // namespace swepc
