#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swepc/cases.hpp"
#include "swepc/deterministic.hpp"

namespace swepc {

/// Gaussian hump amplitude truncated to [lower, upper] by rejection.
///
/// Draws are counter-based: draw(k) depends only on (seed, k), so an
/// iteration gets the same amplitude whichever worker runs it.
class AmplitudeSampler {
 public:
  AmplitudeSampler(double mean, double stddev, double lower, double upper, std::uint64_t seed);

  double draw(std::uint64_t index) const;
  /// Next draw of the sequential stream.
  double next() { return draw(counter_++); }

  double mean() const noexcept { return mean_; }
  double stddev() const noexcept { return stddev_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  double mean_;
  double stddev_;
  double lower_;
  double upper_;
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Single-pass central moments up to order four with a pairwise merge.
struct RunningMoments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;

  void push(double x);
  void merge(const RunningMoments& other);

  /// Population variance (divides by N).
  double variance() const { return count ? m2 / static_cast<double>(count) : 0.0; }
  double stddev() const;
  /// Zero when the variance vanishes.
  double skewness() const;
  double kurtosis() const;
};

enum class McVariable : std::size_t { Bed = 0, Depth, Discharge, Elevation, Velocity };
inline constexpr std::size_t kMcVariableCount = 5;

/// Per-element values of one deterministic realisation.
struct McSample {
  std::uint64_t iteration = 0;
  double amplitude = 0.0;
  std::vector<std::array<double, kMcVariableCount>> values;  ///< [element][variable]
};

/// Streaming statistics over Monte Carlo iterations.
class McAccumulator {
 public:
  McAccumulator() = default;
  McAccumulator(std::size_t cells, bool retainSamples = true);

  void add(std::uint64_t iteration, double amplitude, const DeterministicField& field);
  /// Combine with an accumulator built from a disjoint set of iterations.
  void merge(const McAccumulator& other);

  std::uint64_t count() const noexcept { return count_; }
  std::size_t cells() const noexcept { return moments_.size(); }

  const RunningMoments& moments(std::size_t element, McVariable v) const {
    return moments_[element][static_cast<std::size_t>(v)];
  }

  /// Retained realisations sorted by iteration index.
  const std::vector<McSample>& samples() const noexcept { return samples_; }
  /// Values of one variable at one element, in iteration order.
  std::vector<double> elementSamples(std::size_t element, McVariable v) const;

  /// Running mean and std of depth at `element` after each iteration, in
  /// iteration order. Requires retained samples.
  struct ProbePoint {
    double mean;
    double stddev;
  };
  std::vector<ProbePoint> probeHistory(std::size_t element) const;

 private:
  std::uint64_t count_ = 0;
  bool retain_ = true;
  std::vector<std::array<RunningMoments, kMcVariableCount>> moments_;
  std::vector<McSample> samples_;
};

struct McOptions {
  std::uint64_t iterations = 2000;
  AmplitudeSampler sampler{0.6, 0.3, 0.0, 1.4, 0};
  /// Worker threads; each owns a contiguous block of iterations.
  unsigned threads = 1;
  bool retainSamples = true;
  /// Probe location for the convergence monitor.
  double probeX = 1.5;
};

struct McRun {
  McAccumulator accumulator;
  std::uint64_t riemannCalls = 0;
  std::size_t probeElement = 0;
  std::vector<McAccumulator::ProbePoint> probeHistory;
};

/// Thrown when one realisation fails; records which draw broke.
class McIterationError : public Error {
 public:
  McIterationError(const std::string& what, std::uint64_t iteration, double amplitude)
      : Error(what), iteration_(iteration), amplitude_(amplitude) {}
  std::uint64_t iteration() const noexcept { return iteration_; }
  double amplitude() const noexcept { return amplitude_; }

 private:
  std::uint64_t iteration_;
  double amplitude_;
};

/// Deterministic run per sampled amplitude; the whole hump is redrawn each
/// iteration so every realisation has a smooth bed.
McRun mcRun(const CaseSpec& spec, const McOptions& options);
McRun mcRun(const CaseSpec& spec, const McOptions& options, const SimulationConfig& cfg);

struct StatisticalConvergence {
  bool converged = false;
  std::optional<std::size_t> index;
};

/// Converged once |delta mean| and |delta std| stay below tol for `window`
/// consecutive iterations; index is the iteration where that first holds.
StatisticalConvergence statisticalConvergence(std::span<const McAccumulator::ProbePoint> history, std::size_t window,
                                              double tol);

struct HistogramBin {
  double centre;
  double density;
};

/// Density-normalised histogram on bins aligned to multiples of binWidth,
/// covering every bin between the smallest and largest sample.
std::vector<HistogramBin> histogram(std::span<const double> samples, double binWidth);

}  // namespace swepc
