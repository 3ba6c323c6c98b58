#include "swepc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace swepc {

std::string formatNumber(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void writeTable(const std::filesystem::path& path, std::span<const std::string> headers,
                const std::vector<std::vector<double>>& rows) {
  if (!rows.empty()) {
    const auto width = rows.front().size();
    for (const auto& row : rows) {
      if (row.size() != width) throw InvalidArgument("writeTable: rows are not rectangular (" + path.string() + ")");
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& h : headers) out << "# " << h << '\n';
  std::string line;
  for (const auto& row : rows) {
    line.clear();
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) line += ' ';
      line += formatNumber(row[k]);
    }
    line += '\n';
    out << line;
  }
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<double> parseRow(std::string_view line) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' || line[pos] == '\n')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !(line[end] == ' ' || line[end] == '\t' || line[end] == '\r' || line[end] == '\n'))
      ++end;
    double v = 0.0;
    const char* first = line.data() + pos;
    const char* last = line.data() + end;
    if (*first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
      throw InvalidArgument("parseRow: not a number: '" + std::string(line.substr(pos, end - pos)) + "'");
    }
    values.push_back(v);
    pos = end;
  }
  return values;
}

std::vector<std::vector<double>> readTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    rows.push_back(parseRow(line));
  }
  return rows;
}

Statistics chaosStatistics(std::span<const double> coeffs) {
  Statistics s;
  s.mean = moment(coeffs, 1);
  const double var = moment(coeffs, 2);
  s.stddev = std::sqrt(var);
  if (var > 0.0) {
    s.skewness = moment(coeffs, 3) / (var * s.stddev);
    s.kurtosis = moment(coeffs, 4) / (var * var);
  }
  return s;
}

Statistics velocityStatistics(std::span<const double> h, std::span<const double> q) {
  const int order = static_cast<int>(h.size()) - 1;
  const auto quad = gaussHermite(2 * order + 2);
  std::vector<double> v(quad.size());
  for (std::size_t j = 0; j < quad.size(); ++j) {
    const double depth = evaluateExpansion(h, quad.nodes[j]);
    if (!(depth > 0.0)) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      return {nan, nan, nan, nan};
    }
    v[j] = evaluateExpansion(q, quad.nodes[j]) / depth;
  }
  Statistics s;
  for (std::size_t j = 0; j < quad.size(); ++j) s.mean += quad.weights[j] * v[j];
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (std::size_t j = 0; j < quad.size(); ++j) {
    const double d = v[j] - s.mean;
    m2 += quad.weights[j] * d * d;
    m3 += quad.weights[j] * d * d * d;
    m4 += quad.weights[j] * d * d * d * d;
  }
  s.stddev = std::sqrt(m2);
  if (m2 > 0.0) {
    s.skewness = m3 / (m2 * s.stddev);
    s.kurtosis = m4 / (m2 * m2);
  }
  return s;
}

Statistics sampleStatistics(const RunningMoments& m) { return {m.mean, m.stddev(), m.skewness(), m.kurtosis()}; }

namespace {

void append(std::vector<double>& row, const Statistics& s) {
  row.insert(row.end(), {s.mean, s.stddev, s.skewness, s.kurtosis});
}

}  // namespace

std::vector<std::vector<double>> coefficientRows(const StochasticField& field) {
  std::vector<std::vector<double>> rows;
  rows.reserve(field.cells());
  for (std::size_t i = 0; i < field.cells(); ++i) {
    std::vector<double> row{field.mesh.centre(i)};
    for (double c : field.z(i)) row.push_back(c);
    for (double c : field.h(i)) row.push_back(c);
    for (double c : field.q(i)) row.push_back(c);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> statisticsRows(const StochasticField& field) {
  std::vector<std::vector<double>> rows;
  rows.reserve(field.cells());
  for (std::size_t i = 0; i < field.cells(); ++i) {
    std::vector<double> row{field.mesh.centre(i)};
    append(row, chaosStatistics(field.z(i)));
    append(row, chaosStatistics(field.h(i)));
    append(row, chaosStatistics(field.q(i)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> derivedStatisticsRows(const StochasticField& field) {
  std::vector<std::vector<double>> rows;
  rows.reserve(field.cells());
  std::vector<double> eta(field.terms());
  for (std::size_t i = 0; i < field.cells(); ++i) {
    for (std::size_t p = 0; p < field.terms(); ++p) eta[p] = field.h(i)[p] + field.z(i)[p];
    std::vector<double> row{field.mesh.centre(i)};
    append(row, chaosStatistics(eta));
    append(row, velocityStatistics(field.h(i), field.q(i)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> statisticsRows(const McAccumulator& acc, const Mesh& mesh) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < acc.cells(); ++i) {
    std::vector<double> row{mesh.centre(i)};
    append(row, sampleStatistics(acc.moments(i, McVariable::Bed)));
    append(row, sampleStatistics(acc.moments(i, McVariable::Depth)));
    append(row, sampleStatistics(acc.moments(i, McVariable::Discharge)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> derivedStatisticsRows(const McAccumulator& acc, const Mesh& mesh) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < acc.cells(); ++i) {
    std::vector<double> row{mesh.centre(i)};
    append(row, sampleStatistics(acc.moments(i, McVariable::Elevation)));
    append(row, sampleStatistics(acc.moments(i, McVariable::Velocity)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> coefficientColumns(int order) {
  std::string cols = "x";
  for (const char* v : {"z", "h", "q"})
    for (int p = 0; p <= order; ++p) cols += " " + std::string(v) + std::to_string(p);
  return {cols};
}

std::vector<std::string> statisticsColumns() {
  std::string cols = "x";
  for (const char* v : {"z", "h", "q"})
    for (const char* s : {"mean", "std", "skew", "kurtosis"}) cols += " " + std::string(v) + "_" + s;
  return {cols};
}

std::vector<std::string> derivedStatisticsColumns() {
  std::string cols = "x";
  for (const char* v : {"eta", "v"})
    for (const char* s : {"mean", "std", "skew", "kurtosis"}) cols += " " + std::string(v) + "_" + s;
  return {cols};
}

}  // namespace swepc
