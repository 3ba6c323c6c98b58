#include "swepc/cases.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "bed_table_data.hpp"

namespace swepc {

void HumpSpec::validate() const {
  if (!(halfWidth > 0.0)) throw InvalidArgument("HumpSpec: half width must be positive");
  if (!(stdAmplitude >= 0.0)) throw InvalidArgument("HumpSpec: amplitude std must be non-negative");
}

namespace {

double sech2(double x) {
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}

}  // namespace

double humpBed(double x, double r, const HumpSpec& spec) { return r * sech2(std::numbers::pi * x / spec.halfWidth); }

ChaosCoefficients humpCoefficients(double x, const HumpSpec& spec, int order) {
  if (order < 0) throw InvalidArgument("humpCoefficients: order must be >= 0");
  ChaosCoefficients c(static_cast<std::size_t>(order + 1));
  const double shape = sech2(std::numbers::pi * x / spec.halfWidth);
  c[0] = spec.meanAmplitude * shape;
  if (order >= 1) c[1] = spec.stdAmplitude * shape;
  return c;
}

double obstacleHeight(double x, const HumpSpec& spec) { return (x > 30.0 && x <= 40.0) ? spec.meanAmplitude : 0.0; }

double lakeAtRestBed(double x, double r, const HumpSpec& spec) { return humpBed(x, r, spec) + obstacleHeight(x, spec); }

ChaosCoefficients initialCoefficients(const ChaosCoefficients& eta, const ChaosCoefficients& z) {
  if (eta.size() != z.size()) throw InvalidArgument("initialCoefficients: eta and z lengths differ");
  ChaosCoefficients h(eta.size());
  for (std::size_t p = 0; p < eta.size(); ++p) h[p] = eta[p] - z[p];
  return h;
}

BedTable::BedTable(std::vector<double> x, std::vector<double> z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw InvalidArgument("BedTable: column lengths differ");
  if (x_.size() < 2) throw InvalidArgument("BedTable: need at least two points");
  for (std::size_t k = 1; k < x_.size(); ++k) {
    if (!(x_[k] > x_[k - 1])) throw InvalidArgument("BedTable: abscissae must be strictly increasing");
  }
}

BedTable BedTable::parse(std::string_view text) {
  std::vector<double> xs, zs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double x = 0.0, z = 0.0;
    if (!(fields >> x)) continue;
    std::string extra;
    if (!(fields >> z) || (fields >> extra)) {
      throw InvalidArgument("BedTable: line " + std::to_string(lineNo) + " is not an 'x z' pair");
    }
    xs.push_back(x);
    zs.push_back(z);
  }
  return BedTable(std::move(xs), std::move(zs));
}

BedTable BedTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open bed table " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

double BedTable::at(double x) const {
  if (x < x_.front() || x > x_.back()) {
    std::ostringstream msg;
    msg << "BedTable: x = " << x << " outside [" << x_.front() << ", " << x_.back() << "]";
    throw InvalidArgument(msg.str());
  }
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  if (it == x_.end()) return z_.back();
  const auto k = static_cast<std::size_t>(it - x_.begin());
  const double t = (x - x_[k - 1]) / (x_[k] - x_[k - 1]);
  if (t == 0.0) return z_[k - 1];
  return z_[k - 1] + t * (z_[k] - z_[k - 1]);
}

const BedTable& goutalMaurelBed() {
  static const BedTable table = BedTable::parse(detail::kGoutalMaurelBedTable);
  return table;
}

std::optional<CaseId> parseCaseName(std::string_view name) {
  if (name == "lakeAtRest") return CaseId::LakeAtRest;
  if (name == "criticalSteadyState") return CaseId::CriticalSteadyState;
  if (name == "tsengSteadyState") return CaseId::TsengSteadyState;
  return std::nullopt;
}

std::string_view caseName(CaseId id) {
  switch (id) {
    case CaseId::LakeAtRest: return "lakeAtRest";
    case CaseId::CriticalSteadyState: return "criticalSteadyState";
    case CaseId::TsengSteadyState: return "tsengSteadyState";
  }
  return "unknown";
}

const HumpSpec* CaseSpec::hump() const {
  const auto* t = std::get_if<HumpTopography>(&topography);
  return t ? &t->hump : nullptr;
}

SimulationConfig CaseSpec::config() const {
  SimulationConfig cfg;
  cfg.dt = dt;
  cfg.tEnd = tEnd;
  cfg.convergenceThreshold = convergenceThreshold;
  return cfg;
}

namespace {

void requirePositiveMeanDepth(const CaseSpec& spec) {
  const auto bed = bedCoefficients(spec, 0);
  for (std::size_t i = 0; i < bed.size(); ++i) {
    const double h = spec.eta.front() - bed[i];
    if (!(h > 0.0)) {
      std::ostringstream msg;
      msg << spec.name() << ": non-positive initial mean depth " << h << " at x = " << spec.mesh.centre(i);
      throw InvalidArgument(msg.str());
    }
  }
}

}  // namespace

CaseSpec tsengCase(BedTable table) {
  CaseSpec c;
  c.id = CaseId::TsengSteadyState;
  c.mesh = Mesh::uniform(0.0, 1500.0, 200);
  c.dt = 0.5;
  c.tEnd = 100000.0;
  c.convergenceThreshold = 1e-8;
  c.eta = {15.0};
  c.boundary.upstreamQ = 0.75;
  c.boundary.downstreamH = 15.0;
  c.topography = TabulatedTopography{std::move(table), 0.5};
  requirePositiveMeanDepth(c);
  return c;
}

CaseSpec builtinCase(CaseId id) {
  if (id == CaseId::TsengSteadyState) return tsengCase(goutalMaurelBed());
  CaseSpec c;
  c.id = id;
  c.mesh = Mesh::uniform(-50.0, 50.0, 100);
  c.dt = 0.15;
  c.eta = {1.5};
  if (id == CaseId::LakeAtRest) {
    c.tEnd = 100.0;
    c.topography = HumpTopography{HumpSpec{}, true};
  } else {
    c.tEnd = 500.0;
    c.convergenceThreshold = 1e-4;
    c.boundary.upstreamQ = 1.65;
    c.boundary.downstreamH = 1.5;
    c.topography = HumpTopography{HumpSpec{}, false};
  }
  requirePositiveMeanDepth(c);
  return c;
}

CaseSpec builtinCase(std::string_view name) {
  const auto id = parseCaseName(name);
  if (!id) throw InvalidArgument("unknown test case '" + std::string(name) + "'");
  return builtinCase(*id);
}

std::vector<double> bedProfile(const CaseSpec& spec, double r) {
  std::vector<double> z(spec.mesh.cells);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double x = spec.mesh.centre(i);
    if (const auto* hump = std::get_if<HumpTopography>(&spec.topography)) {
      z[i] = hump->obstacle ? lakeAtRestBed(x, r, hump->hump) : humpBed(x, r, hump->hump);
    } else {
      z[i] = std::get<TabulatedTopography>(spec.topography).table.at(x);
    }
  }
  return z;
}

std::vector<double> bedCoefficients(const CaseSpec& spec, int order) {
  const auto n = static_cast<std::size_t>(order + 1);
  std::vector<double> z(spec.mesh.cells * n, 0.0);
  for (std::size_t i = 0; i < spec.mesh.cells; ++i) {
    const double x = spec.mesh.centre(i);
    if (const auto* hump = std::get_if<HumpTopography>(&spec.topography)) {
      const auto c = humpCoefficients(x, hump->hump, order);
      std::copy(c.values().begin(), c.values().end(), z.begin() + static_cast<std::ptrdiff_t>(i * n));
      if (hump->obstacle) z[i * n] += obstacleHeight(x, hump->hump);
    } else {
      const auto& tab = std::get<TabulatedTopography>(spec.topography);
      z[i * n] = tab.table.at(x);
      if (order >= 1) z[i * n + 1] = tab.sigmaZ;
    }
  }
  return z;
}

DeterministicField initialDeterministicField(const CaseSpec& spec, double r) {
  DeterministicField field;
  field.mesh = spec.mesh;
  field.bed = bedProfile(spec, r);
  field.flow.resize(spec.mesh.cells);
  for (std::size_t i = 0; i < field.flow.size(); ++i) {
    field.flow[i] = {spec.eta.front() - field.bed[i], 0.0};
    if (!(field.flow[i].h > 0.0)) {
      throw DepthPositivityError({.element = i, .time = 0.0, .depth = field.flow[i].h});
    }
  }
  return field;
}

StochasticField initialStochasticField(const CaseSpec& spec, int order) {
  StochasticField field(spec.mesh, order);
  field.bed = bedCoefficients(spec, order);
  const std::size_t n = field.terms();
  ChaosCoefficients eta(n);
  for (std::size_t p = 0; p < std::min(n, spec.eta.size()); ++p) eta[p] = spec.eta[p];
  for (std::size_t i = 0; i < spec.mesh.cells; ++i) {
    ChaosCoefficients z(std::vector<double>(field.z(i).begin(), field.z(i).end()));
    const auto h = initialCoefficients(eta, z);
    std::copy(h.values().begin(), h.values().end(), field.h(i).begin());
  }
  return field;
}

}  // namespace swepc
