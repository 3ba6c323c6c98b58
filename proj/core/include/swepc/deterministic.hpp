#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swepc/shallow_water.hpp"

namespace swepc {

struct CaseSpec;

/// Uniform 1D mesh of `cells` elements on [xMin, xMax].
struct Mesh {
  double xMin = 0.0;
  double xMax = 1.0;
  std::size_t cells = 1;

  static Mesh uniform(double xMin, double xMax, std::size_t cells);

  double dx() const { return (xMax - xMin) / static_cast<double>(cells); }
  double centre(std::size_t i) const { return xMin + (static_cast<double>(i) + 0.5) * dx(); }
  std::vector<double> centres() const;

  /// Element whose closed-open extent contains x (clamped to the mesh).
  std::size_t elementAt(double x) const;
};

/// Surface-gradient (well-balanced) or centred-difference bed source.
enum class Discretisation { WellBalanced, CentredDifference };

std::string_view discretisationName(Discretisation d);
std::optional<Discretisation> parseDiscretisation(std::string_view name);

/// Which variables are imposed at each end. An empty optional means the
/// variable is transmissive (copied from the adjacent element).
struct BoundarySpec {
  std::optional<double> upstreamH;
  std::optional<double> upstreamQ;
  std::optional<double> downstreamH;
  std::optional<double> downstreamQ;

  static BoundarySpec transmissive() { return {}; }

  /// Each side may fix at most one variable.
  void validate() const;
};

struct SimulationConfig {
  double dt = 0.15;
  double tEnd = 0.0;
  PhysicsConstants phys;
  std::optional<double> convergenceThreshold;
  double courantWarn = 1.0;
  EntropyFix entropyFix = EntropyFix::HartenHyman;
  Discretisation discretisation = Discretisation::WellBalanced;
  /// End the run at the first step whose L2 delta is under the threshold.
  bool stopAtConvergence = false;

  void validate() const;
  /// Fixed-dt steps needed to reach tEnd.
  std::uint64_t stepCount() const;
};

struct DeterministicField {
  Mesh mesh;
  std::vector<FlowVector> flow;
  std::vector<double> bed;
  double time = 0.0;
  std::uint64_t step = 0;

  std::vector<double> depths() const;
};

/// One ghost element per side. Bed is copied from the adjacent element.
struct GhostStates {
  FlowVector upstream;
  FlowVector downstream;
  double upstreamBed = 0.0;
  double downstreamBed = 0.0;
};

GhostStates applyBoundaries(const DeterministicField& field, const BoundarySpec& spec);

struct StepCounters {
  std::uint64_t riemannCalls = 0;
};

/// One forward-Euler finite volume update. Each interface flux is computed
/// once and shared by its two elements.
DeterministicField step(const DeterministicField& field, const BoundarySpec& spec, const SimulationConfig& cfg,
                        StepCounters* counters = nullptr);

/// max_i (|v_i| + sqrt(g h_i)) dt / dx.
double courantNumber(const DeterministicField& field, const SimulationConfig& cfg);

/// sqrt(sum_i (h_i^n - h_i^{n-1})^2).
double l2MeanDepthDelta(std::span<const double> current, std::span<const double> previous);

struct ConvergenceHistory {
  std::vector<double> deltas;  ///< one entry per step
  std::optional<std::uint64_t> firstConvergedStep;

  bool converged(double threshold) const { return !deltas.empty() && deltas.back() <= threshold; }
  double finalDelta() const { return deltas.empty() ? 0.0 : deltas.back(); }
};

struct DeterministicRun {
  DeterministicField field;
  ConvergenceHistory history;
  double maxCourant = 0.0;
  std::uint64_t riemannCalls = 0;
};

/// Integrate `field` to cfg.tEnd (or to convergence when requested).
DeterministicRun integrate(DeterministicField field, const BoundarySpec& spec, const SimulationConfig& cfg);

/// Deterministic run of a built-in case with hump amplitude r (ignored for
/// tabulated beds, which use the mean bed).
DeterministicRun run(const CaseSpec& spec, double humpAmplitude);
DeterministicRun run(const CaseSpec& spec, double humpAmplitude, const SimulationConfig& cfg);

}  // namespace swepc
