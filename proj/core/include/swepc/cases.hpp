#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swepc/deterministic.hpp"
#include "swepc/hermite.hpp"
#include "swepc/stochastic.hpp"

namespace swepc {

/// Uncertain hump z(x, r) = r sech^2(pi x / lambda) with r ~ N(mean, std^2).
struct HumpSpec {
  double meanAmplitude = 0.6;  ///< [m]
  double stdAmplitude = 0.3;   ///< [m]
  double halfWidth = 10.0;     ///< lambda [m]

  void validate() const;
};

double humpBed(double x, double r, const HumpSpec& spec);

/// z_0 = mean sech^2, z_1 = std sech^2, higher coefficients zero. The hump
/// is linear in r, so this Gaussian representation is exact.
ChaosCoefficients humpCoefficients(double x, const HumpSpec& spec, int order);

/// Rectangular obstacle of height mean amplitude on 30 < x <= 40.
double obstacleHeight(double x, const HumpSpec& spec);

/// Hump plus the (certain) rectangular obstacle.
double lakeAtRestBed(double x, double r, const HumpSpec& spec);

/// h_p = eta_p - z_p.
ChaosCoefficients initialCoefficients(const ChaosCoefficients& eta, const ChaosCoefficients& z);

/// Piecewise-linear bed profile from (x, z) samples with strictly
/// increasing x.
class BedTable {
 public:
  BedTable(std::vector<double> x, std::vector<double> z);

  /// Two whitespace-separated columns per line; '#' starts a comment.
  static BedTable parse(std::string_view text);
  static BedTable load(const std::filesystem::path& path);

  double at(double x) const;

  double xMin() const { return x_.front(); }
  double xMax() const { return x_.back(); }
  std::size_t size() const { return x_.size(); }

 private:
  std::vector<double> x_;
  std::vector<double> z_;
};

inline double tabulatedBed(const BedTable& table, double x) { return table.at(x); }

/// The bed table shipped for tsengSteadyState.
const BedTable& goutalMaurelBed();

struct HumpTopography {
  HumpSpec hump;
  bool obstacle = false;
};

/// Mean bed from a table with a spatially uniform standard deviation.
struct TabulatedTopography {
  BedTable table;
  double sigmaZ = 0.0;
};

enum class CaseId { LakeAtRest, CriticalSteadyState, TsengSteadyState };

std::optional<CaseId> parseCaseName(std::string_view name);
std::string_view caseName(CaseId id);

struct CaseSpec {
  CaseId id = CaseId::LakeAtRest;
  Mesh mesh;
  double dt = 0.15;
  double tEnd = 0.0;
  std::optional<double> convergenceThreshold;
  /// Initial free-surface coefficients, padded with zeros to P+1.
  std::vector<double> eta{1.5};
  BoundarySpec boundary;
  std::variant<HumpTopography, TabulatedTopography> topography;

  std::string_view name() const { return caseName(id); }
  const HumpSpec* hump() const;

  /// Default configuration: the case's dt, end time and threshold.
  SimulationConfig config() const;
};

CaseSpec builtinCase(CaseId id);
/// Throws InvalidArgument for unknown names.
CaseSpec builtinCase(std::string_view name);

/// tsengSteadyState with a different mean bed.
CaseSpec tsengCase(BedTable table);

/// Bed elevation at element centres for hump amplitude r. Tabulated beds
/// ignore r and return the mean bed.
std::vector<double> bedProfile(const CaseSpec& spec, double r);

/// Bed chaos coefficients at element centres, element-major.
std::vector<double> bedCoefficients(const CaseSpec& spec, int order);

DeterministicField initialDeterministicField(const CaseSpec& spec, double r);
StochasticField initialStochasticField(const CaseSpec& spec, int order);

}  // namespace swepc
