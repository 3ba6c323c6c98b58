#include "swepc/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

namespace swepc {

AmplitudeSampler::AmplitudeSampler(double mean, double stddev, double lower, double upper, std::uint64_t seed)
    : mean_(mean), stddev_(stddev), lower_(lower), upper_(upper), seed_(seed) {
  if (!(stddev >= 0.0)) throw InvalidArgument("AmplitudeSampler: std must be non-negative");
  if (!(lower <= mean && mean <= upper)) throw InvalidArgument("AmplitudeSampler: require lower <= mean <= upper");
}

double AmplitudeSampler::draw(std::uint64_t index) const {
  if (stddev_ == 0.0) return mean_;
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 engine(seq);
  std::normal_distribution<double> normal(mean_, stddev_);
  for (;;) {
    const double r = normal(engine);
    if (r >= lower_ && r <= upper_) return r;
  }
}

void RunningMoments::merge(const RunningMoments& o) {
  if (o.count == 0) return;
  if (count == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(count);
  const double nb = static_cast<double>(o.count);
  const double n = na + nb;
  const double delta = o.mean - mean;
  const double d2 = delta * delta;
  const double newMean = mean + delta * nb / n;
  const double newM2 = m2 + o.m2 + d2 * na * nb / n;
  const double newM3 = m3 + o.m3 + d2 * delta * na * nb * (na - nb) / (n * n) + 3.0 * delta * (na * o.m2 - nb * m2) / n;
  const double newM4 = m4 + o.m4 + d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                       6.0 * d2 * (na * na * o.m2 + nb * nb * m2) / (n * n) + 4.0 * delta * (na * o.m3 - nb * m3) / n;
  count += o.count;
  mean = newMean;
  m2 = newM2;
  m3 = newM3;
  m4 = newM4;
}

void RunningMoments::push(double x) { merge(RunningMoments{1, x, 0.0, 0.0, 0.0}); }

double RunningMoments::stddev() const { return std::sqrt(std::max(variance(), 0.0)); }

double RunningMoments::skewness() const {
  const double var = variance();
  if (!(var > 0.0)) return 0.0;
  return (m3 / static_cast<double>(count)) / std::pow(var, 1.5);
}

double RunningMoments::kurtosis() const {
  const double var = variance();
  if (!(var > 0.0)) return 0.0;
  return (m4 / static_cast<double>(count)) / (var * var);
}

McAccumulator::McAccumulator(std::size_t cells, bool retainSamples) : retain_(retainSamples), moments_(cells) {}

void McAccumulator::add(std::uint64_t iteration, double amplitude, const DeterministicField& field) {
  if (field.flow.size() != moments_.size()) throw InvalidArgument("McAccumulator: field size mismatch");
  McSample sample{iteration, amplitude, std::vector<std::array<double, kMcVariableCount>>(moments_.size())};
  for (std::size_t i = 0; i < moments_.size(); ++i) {
    const auto& u = field.flow[i];
    const double z = field.bed[i];
    auto& v = sample.values[i];
    v = {z, u.h, u.q, u.h + z, u.q / u.h};
    for (std::size_t k = 0; k < kMcVariableCount; ++k) moments_[i][k].push(v[k]);
  }
  ++count_;
  if (retain_) {
    const auto pos = std::upper_bound(samples_.begin(), samples_.end(), iteration,
                                      [](std::uint64_t it, const McSample& s) { return it < s.iteration; });
    samples_.insert(pos, std::move(sample));
  }
}

void McAccumulator::merge(const McAccumulator& other) {
  if (other.count_ == 0) return;
  if (count_ == 0 && moments_.empty()) {
    *this = other;
    return;
  }
  if (other.moments_.size() != moments_.size()) throw InvalidArgument("McAccumulator: cannot merge different meshes");
  for (std::size_t i = 0; i < moments_.size(); ++i)
    for (std::size_t k = 0; k < kMcVariableCount; ++k) moments_[i][k].merge(other.moments_[i][k]);
  count_ += other.count_;
  if (retain_) {
    std::vector<McSample> merged;
    merged.reserve(samples_.size() + other.samples_.size());
    std::merge(samples_.begin(), samples_.end(), other.samples_.begin(), other.samples_.end(),
               std::back_inserter(merged),
               [](const McSample& a, const McSample& b) { return a.iteration < b.iteration; });
    samples_ = std::move(merged);
  }
}

std::vector<double> McAccumulator::elementSamples(std::size_t element, McVariable v) const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(s.values[element][static_cast<std::size_t>(v)]);
  return out;
}

std::vector<McAccumulator::ProbePoint> McAccumulator::probeHistory(std::size_t element) const {
  std::vector<ProbePoint> history;
  history.reserve(samples_.size());
  RunningMoments m;
  for (const auto& s : samples_) {
    m.push(s.values[element][static_cast<std::size_t>(McVariable::Depth)]);
    history.push_back({m.mean, m.stddev()});
  }
  return history;
}

McRun mcRun(const CaseSpec& spec, const McOptions& options) { return mcRun(spec, options, spec.config()); }

McRun mcRun(const CaseSpec& spec, const McOptions& options, const SimulationConfig& cfg) {
  if (options.iterations < 1) throw InvalidArgument("mcRun: need at least one iteration");
  if (!spec.hump()) throw InvalidArgument("mcRun: case '" + std::string(spec.name()) + "' has no uncertain hump to sample");

  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads == 0 ? 1 : options.threads, 1, options.iterations));
  std::vector<McAccumulator> partial(threads, McAccumulator(spec.mesh.cells, options.retainSamples));
  std::vector<std::uint64_t> calls(threads, 0);
  std::vector<std::exception_ptr> errors(threads);

  auto worker = [&](unsigned w) {
    const std::uint64_t begin = options.iterations * w / threads;
    const std::uint64_t end = options.iterations * (w + 1) / threads;
    for (std::uint64_t k = begin; k < end; ++k) {
      const double r = options.sampler.draw(k);
      try {
        const auto result = run(spec, r, cfg);
        calls[w] += result.riemannCalls;
        partial[w].add(k, r, result.field);
      } catch (const Error& e) {
        errors[w] = std::make_exception_ptr(McIterationError(
            "Monte Carlo iteration " + std::to_string(k) + " (r = " + std::to_string(r) + ") failed: " + e.what(), k, r));
        return;
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  McRun result;
  result.accumulator = McAccumulator(spec.mesh.cells, options.retainSamples);
  for (unsigned w = 0; w < threads; ++w) {
    result.accumulator.merge(partial[w]);
    result.riemannCalls += calls[w];
  }
  result.probeElement = spec.mesh.elementAt(options.probeX);
  if (options.retainSamples) result.probeHistory = result.accumulator.probeHistory(result.probeElement);
  return result;
}

StatisticalConvergence statisticalConvergence(std::span<const McAccumulator::ProbePoint> history, std::size_t window,
                                              double tol) {
  if (window < 1) throw InvalidArgument("statisticalConvergence: window must be >= 1");
  std::size_t run = 0;
  for (std::size_t k = 1; k < history.size(); ++k) {
    const bool small = std::abs(history[k].mean - history[k - 1].mean) < tol &&
                       std::abs(history[k].stddev - history[k - 1].stddev) < tol;
    run = small ? run + 1 : 0;
    if (run >= window) return {true, k};
  }
  return {};
}

std::vector<HistogramBin> histogram(std::span<const double> samples, double binWidth) {
  if (!(binWidth > 0.0)) throw InvalidArgument("histogram: bin width must be positive");
  if (samples.empty()) throw InvalidArgument("histogram: no samples");
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  const auto first = static_cast<long long>(std::floor(*lo / binWidth));
  const auto last = static_cast<long long>(std::floor(*hi / binWidth));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(last - first + 1), 0);
  for (double s : samples) {
    const auto b = std::clamp(static_cast<long long>(std::floor(s / binWidth)), first, last);
    ++counts[static_cast<std::size_t>(b - first)];
  }
  std::vector<HistogramBin> bins;
  bins.reserve(counts.size());
  const double norm = 1.0 / (static_cast<double>(samples.size()) * binWidth);
  for (std::size_t b = 0; b < counts.size(); ++b) {
    bins.push_back({(static_cast<double>(first + static_cast<long long>(b)) + 0.5) * binWidth,
                    static_cast<double>(counts[b]) * norm});
  }
  return bins;
}

}  // namespace swepc
