#include "swepc/deterministic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swepc/cases.hpp"

namespace swepc {

Mesh Mesh::uniform(double xMin, double xMax, std::size_t cells) {
  if (!(xMax > xMin)) throw InvalidArgument("Mesh: require xMax > xMin");
  if (cells == 0) throw InvalidArgument("Mesh: need at least one element");
  return Mesh{xMin, xMax, cells};
}

std::vector<double> Mesh::centres() const {
  std::vector<double> xs(cells);
  for (std::size_t i = 0; i < cells; ++i) xs[i] = centre(i);
  return xs;
}

std::size_t Mesh::elementAt(double x) const {
  const double pos = std::floor((x - xMin) / dx());
  if (pos < 0.0) return 0;
  return std::min(static_cast<std::size_t>(pos), cells - 1);
}

std::string_view discretisationName(Discretisation d) {
  return d == Discretisation::WellBalanced ? "wellBalancedH" : "centredDifferenceH";
}

std::optional<Discretisation> parseDiscretisation(std::string_view name) {
  if (name == "wellBalancedH") return Discretisation::WellBalanced;
  if (name == "centredDifferenceH") return Discretisation::CentredDifference;
  return std::nullopt;
}

void BoundarySpec::validate() const {
  if (upstreamH && upstreamQ) throw InvalidArgument("BoundarySpec: upstream side fixes both h and q");
  if (downstreamH && downstreamQ) throw InvalidArgument("BoundarySpec: downstream side fixes both h and q");
  if (upstreamH && !(*upstreamH > 0.0)) throw InvalidArgument("BoundarySpec: fixed upstream depth must be positive");
  if (downstreamH && !(*downstreamH > 0.0)) throw InvalidArgument("BoundarySpec: fixed downstream depth must be positive");
}

void SimulationConfig::validate() const {
  if (!(dt > 0.0)) throw InvalidArgument("SimulationConfig: dt must be positive");
  if (!(tEnd >= 0.0)) throw InvalidArgument("SimulationConfig: tEnd must be non-negative");
  if (!(phys.g > 0.0)) throw InvalidArgument("SimulationConfig: g must be positive");
}

std::uint64_t SimulationConfig::stepCount() const {
  return static_cast<std::uint64_t>(std::ceil(tEnd / dt - 1e-9));
}

std::vector<double> DeterministicField::depths() const {
  std::vector<double> h(flow.size());
  std::transform(flow.begin(), flow.end(), h.begin(), [](const FlowVector& u) { return u.h; });
  return h;
}

GhostStates applyBoundaries(const DeterministicField& field, const BoundarySpec& spec) {
  if (field.flow.empty()) throw InvalidArgument("applyBoundaries: empty field");
  GhostStates g;
  g.upstream = field.flow.front();
  g.downstream = field.flow.back();
  if (spec.upstreamH) g.upstream.h = *spec.upstreamH;
  if (spec.upstreamQ) g.upstream.q = *spec.upstreamQ;
  if (spec.downstreamH) g.downstream.h = *spec.downstreamH;
  if (spec.downstreamQ) g.downstream.q = *spec.downstreamQ;
  g.upstreamBed = field.bed.front();
  g.downstreamBed = field.bed.back();
  return g;
}

DeterministicField step(const DeterministicField& field, const BoundarySpec& spec, const SimulationConfig& cfg,
                        StepCounters* counters) {
  const std::size_t m = field.flow.size();
  const double dx = field.mesh.dx();
  const auto ghosts = applyBoundaries(field, spec);

  // Extended arrays: index 0 and m+1 are ghosts.
  std::vector<FlowVector> u(m + 2);
  std::vector<double> z(m + 2);
  u[0] = ghosts.upstream;
  z[0] = ghosts.upstreamBed;
  std::copy(field.flow.begin(), field.flow.end(), u.begin() + 1);
  std::copy(field.bed.begin(), field.bed.end(), z.begin() + 1);
  u[m + 1] = ghosts.downstream;
  z[m + 1] = ghosts.downstreamBed;

  // Interface k sits between extended elements k and k+1.
  std::vector<Flux> flux(m + 1);
  std::vector<double> hLeftStar(m + 1);
  std::vector<double> hRightStar(m + 1);
  std::vector<double> zStar(m + 1);
  const bool wellBalanced = cfg.discretisation == Discretisation::WellBalanced;

  std::size_t element = 0;
  try {
    for (std::size_t k = 0; k <= m; ++k) {
      element = k == 0 ? 0 : k - 1;
      if (wellBalanced) {
        const auto states = reconstructStates(u[k], z[k], u[k + 1], z[k + 1]);
        flux[k] = roeFlux(states, cfg.phys, cfg.entropyFix);
        hLeftStar[k] = states.left.h;
        hRightStar[k] = states.right.h;
        zStar[k] = states.zStar;
      } else {
        flux[k] = roeFlux(u[k], u[k + 1], cfg.phys, cfg.entropyFix);
      }
    }
  } catch (const DepthPositivityError& e) {
    throw e.withContext({.element = element, .time = field.time});
  }
  if (counters) counters->riemannCalls += m + 1;

  DeterministicField next = field;
  for (std::size_t i = 0; i < m; ++i) {
    Flux source;
    if (wellBalanced) {
      source = bedSource(hRightStar[i], hLeftStar[i + 1], zStar[i], zStar[i + 1], dx, cfg.phys);
    } else {
      const double h = u[i + 1].h;
      source = bedSource(h, h, z[i], z[i + 2], 2.0 * dx, cfg.phys);
    }
    const Flux residual = Flux{(flux[i + 1].mass - flux[i].mass) / dx, (flux[i + 1].momentum - flux[i].momentum) / dx} -
                          source;
    next.flow[i].h = field.flow[i].h - cfg.dt * residual.mass;
    next.flow[i].q = field.flow[i].q - cfg.dt * residual.momentum;
  }
  next.step = field.step + 1;
  next.time = static_cast<double>(next.step) * cfg.dt;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(next.flow[i].h > kDryTolerance)) {
      throw DepthPositivityError({.element = i, .time = next.time, .depth = next.flow[i].h});
    }
  }
  return next;
}

double courantNumber(const DeterministicField& field, const SimulationConfig& cfg) {
  double speed = 0.0;
  for (const auto& u : field.flow) {
    speed = std::max(speed, std::abs(u.q / u.h) + std::sqrt(cfg.phys.g * u.h));
  }
  return speed * cfg.dt / field.mesh.dx();
}

double l2MeanDepthDelta(std::span<const double> current, std::span<const double> previous) {
  if (current.size() != previous.size()) {
    throw InvalidArgument("l2MeanDepthDelta: length mismatch (" + std::to_string(current.size()) + " vs " +
                          std::to_string(previous.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < current.size(); ++i) {
    const double d = current[i] - previous[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

DeterministicRun integrate(DeterministicField field, const BoundarySpec& spec, const SimulationConfig& cfg) {
  cfg.validate();
  spec.validate();
  DeterministicRun result;
  StepCounters counters;
  const auto steps = cfg.stepCount();
  result.history.deltas.reserve(steps);
  result.maxCourant = courantNumber(field, cfg);
  std::vector<double> previous = field.depths();
  std::vector<double> current(previous.size());
  for (std::uint64_t n = 0; n < steps; ++n) {
    field = step(field, spec, cfg, &counters);
    for (std::size_t i = 0; i < current.size(); ++i) current[i] = field.flow[i].h;
    const double delta = l2MeanDepthDelta(current, previous);
    result.history.deltas.push_back(delta);
    result.maxCourant = std::max(result.maxCourant, courantNumber(field, cfg));
    std::swap(previous, current);
    if (cfg.convergenceThreshold && delta <= *cfg.convergenceThreshold) {
      if (!result.history.firstConvergedStep) result.history.firstConvergedStep = field.step;
      if (cfg.stopAtConvergence) break;
    }
  }
  result.field = std::move(field);
  result.riemannCalls = counters.riemannCalls;
  return result;
}

DeterministicRun run(const CaseSpec& spec, double humpAmplitude) {
  return run(spec, humpAmplitude, spec.config());
}

DeterministicRun run(const CaseSpec& spec, double humpAmplitude, const SimulationConfig& cfg) {
  return integrate(initialDeterministicField(spec, humpAmplitude), spec.boundary, cfg);
}

}  // namespace swepc
