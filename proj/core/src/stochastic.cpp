#include "swepc/stochastic.hpp"

#include <algorithm>
#include <string>

#include "swepc/cases.hpp"

namespace swepc {

StochasticField::StochasticField(Mesh m, int p) : mesh(m), order(p) {
  if (p < 0) throw InvalidArgument("StochasticField: order must be >= 0");
  const std::size_t count = mesh.cells * terms();
  depth.assign(count, 0.0);
  discharge.assign(count, 0.0);
  bed.assign(count, 0.0);
}

std::vector<double> StochasticField::meanDepths() const {
  std::vector<double> mean(cells());
  for (std::size_t i = 0; i < cells(); ++i) mean[i] = depth[i * terms()];
  return mean;
}

SgScheme::SgScheme(int order, SgOptions options)
    : options_(options), basis_(order, std::max(options.maxOrder, 0)) {
  const int nodes = options_.quadratureNodes > 0 ? options_.quadratureNodes : order + 1;
  if (nodes < order + 1) {
    throw InvalidArgument("SgScheme: need at least P+1 = " + std::to_string(order + 1) + " quadrature nodes");
  }
  quad_ = gaussHermite(nodes);
  phi_.resize(basis_.size() * quad_.size());
  for (int l = 0; l <= order; ++l)
    for (std::size_t j = 0; j < quad_.size(); ++j)
      phi_[static_cast<std::size_t>(l) * quad_.size() + j] = hermite(l, quad_.nodes[j]);
}

namespace {

void reconstructInto(const ElementCoefficients& left, const ElementCoefficients& right, const QuadratureRule& quad,
                     InterfaceReconstruction& out) {
  const std::size_t n = left.h.size();
  out.zStar.resize(n);
  out.hLeftStar.resize(n);
  out.hRightStar.resize(n);
  out.nodes.resize(quad.size());
  // eta_p = h_p + z_p; h*_p = eta_p - z*_p.
  std::vector<double> etaL(n);
  std::vector<double> etaR(n);
  for (std::size_t p = 0; p < n; ++p) {
    out.zStar[p] = interfaceTopography(left.z[p], right.z[p]);
    etaL[p] = left.h[p] + left.z[p];
    etaR[p] = right.h[p] + right.z[p];
    out.hLeftStar[p] = etaL[p] - out.zStar[p];
    out.hRightStar[p] = etaR[p] - out.zStar[p];
  }
  for (std::size_t j = 0; j < quad.size(); ++j) {
    const double xi = quad.nodes[j];
    const double hl = evaluateExpansion(left.h, xi);
    const double hr = evaluateExpansion(right.h, xi);
    if (!(hl > kDryTolerance) || !(hr > kDryTolerance)) {
      throw DepthPositivityError({.node = j, .depth = std::min(hl, hr)});
    }
    const double zs = evaluateExpansion(out.zStar, xi);
    const double hsl = evaluateExpansion(etaL, xi) - zs;
    const double hsr = evaluateExpansion(etaR, xi) - zs;
    if (hsl < 0.0 || hsr < 0.0) throw DepthPositivityError({.node = j, .depth = std::min(hsl, hsr)});
    auto& s = out.nodes[j];
    s.zStar = zs;
    s.left = {hsl, hsl * (evaluateExpansion(left.q, xi) / hl)};
    s.right = {hsr, hsr * (evaluateExpansion(right.q, xi) / hr)};
  }
}

// Centred-difference variant: Riemann states are the unmodified realised
// element values.
void realiseInto(const ElementCoefficients& left, const ElementCoefficients& right, const QuadratureRule& quad,
                 std::vector<RiemannStates>& nodes) {
  nodes.resize(quad.size());
  for (std::size_t j = 0; j < quad.size(); ++j) {
    const double xi = quad.nodes[j];
    auto& s = nodes[j];
    s.left = {evaluateExpansion(left.h, xi), evaluateExpansion(left.q, xi)};
    s.right = {evaluateExpansion(right.h, xi), evaluateExpansion(right.q, xi)};
    s.zStar = 0.0;
    if (!(s.left.h > kDryTolerance) || !(s.right.h > kDryTolerance)) {
      throw DepthPositivityError({.node = j, .depth = std::min(s.left.h, s.right.h)});
    }
  }
}

void sampleFluxes(std::span<const RiemannStates> nodes, const PhysicsConstants& phys, EntropyFix fix,
                  std::vector<Flux>& out) {
  out.resize(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    try {
      out[j] = roeFlux(nodes[j], phys, fix);
    } catch (const DepthPositivityError& e) {
      throw e.withContext({.node = j});
    }
  }
}

}  // namespace

InterfaceReconstruction reconstructStatesCoeffs(const ElementCoefficients& left, const ElementCoefficients& right,
                                                const QuadratureRule& quad) {
  const std::size_t n = left.h.size();
  if (left.q.size() != n || left.z.size() != n || right.h.size() != n || right.q.size() != n ||
      right.z.size() != n) {
    throw InvalidArgument("reconstructStatesCoeffs: coefficient lengths differ");
  }
  InterfaceReconstruction out;
  reconstructInto(left, right, quad, out);
  return out;
}

Flux sgFluxProjection(std::span<const Flux> nodeFluxes, int l, const QuadratureRule& quad) {
  if (nodeFluxes.size() != quad.size()) {
    throw InvalidArgument("sgFluxProjection: " + std::to_string(nodeFluxes.size()) + " node fluxes for a " +
                          std::to_string(quad.size()) + "-node rule");
  }
  Flux sum;
  for (std::size_t j = 0; j < quad.size(); ++j) {
    const double phi = hermite(l, quad.nodes[j]);
    sum.mass += quad.weights[j] * nodeFluxes[j].mass * phi;
    sum.momentum += quad.weights[j] * nodeFluxes[j].momentum * phi;
  }
  return sum;
}

Flux sgFluxProjection(std::span<const RiemannStates> nodes, int l, const QuadratureRule& quad,
                      const PhysicsConstants& phys, EntropyFix fix) {
  if (nodes.size() != quad.size()) {
    throw InvalidArgument("sgFluxProjection: " + std::to_string(nodes.size()) + " node states for a " +
                          std::to_string(quad.size()) + "-node rule");
  }
  std::vector<Flux> fluxes;
  sampleFluxes(nodes, phys, fix, fluxes);
  return sgFluxProjection(fluxes, l, quad);
}

Flux sgSourceProjection(std::span<const double> hStarMinus, std::span<const double> hStarPlus,
                        std::span<const double> zStarLeft, std::span<const double> zStarRight, int l,
                        const HermiteBasis& basis, double dx, const PhysicsConstants& phys) {
  const std::size_t n = basis.size();
  if (hStarMinus.size() != n || hStarPlus.size() != n || zStarLeft.size() != n || zStarRight.size() != n) {
    throw InvalidArgument("sgSourceProjection: coefficient lengths must equal P+1");
  }
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    const double hbar = 0.5 * (hStarPlus[p] + hStarMinus[p]);
    for (std::size_t s = 0; s < n; ++s) {
      const double t = basis.triple(static_cast<int>(p), static_cast<int>(s), l);
      if (t == 0.0) continue;
      sum += hbar * ((zStarRight[s] - zStarLeft[s]) / dx) * t;
    }
  }
  return {0.0, -phys.g * sum};
}

StochasticField sgStep(const StochasticField& field, SgScheme& scheme, const BoundarySpec& spec,
                       const SimulationConfig& cfg) {
  const std::size_t n = field.terms();
  const std::size_t m = field.cells();
  if (n != scheme.basis().size()) {
    throw InvalidArgument("sgStep: field order " + std::to_string(field.order) + " does not match scheme order " +
                          std::to_string(scheme.order()));
  }
  const auto& quad = scheme.quadrature();
  const auto& basis = scheme.basis();
  const std::size_t nodes = quad.size();
  const double dx = field.mesh.dx();
  const bool wellBalanced = scheme.options().variant == Discretisation::WellBalanced;

  // Extended coefficient arrays with one ghost element per side. Imposed
  // boundary values are certain: they enter coefficient 0 only.
  const std::size_t ext = (m + 2) * n;
  std::vector<double> h(ext, 0.0), q(ext, 0.0), z(ext, 0.0);
  std::copy(field.depth.begin(), field.depth.end(), h.begin() + static_cast<std::ptrdiff_t>(n));
  std::copy(field.discharge.begin(), field.discharge.end(), q.begin() + static_cast<std::ptrdiff_t>(n));
  std::copy(field.bed.begin(), field.bed.end(), z.begin() + static_cast<std::ptrdiff_t>(n));
  auto fillGhost = [&](std::size_t ghost, std::size_t inner, const std::optional<double>& fixedH,
                       const std::optional<double>& fixedQ) {
    for (std::size_t p = 0; p < n; ++p) {
      h[ghost * n + p] = fixedH ? (p == 0 ? *fixedH : 0.0) : h[inner * n + p];
      q[ghost * n + p] = fixedQ ? (p == 0 ? *fixedQ : 0.0) : q[inner * n + p];
      z[ghost * n + p] = z[inner * n + p];
    }
  };
  fillGhost(0, 1, spec.upstreamH, spec.upstreamQ);
  fillGhost(m + 1, m, spec.downstreamH, spec.downstreamQ);

  auto view = [&](std::size_t e) {
    return ElementCoefficients{{h.data() + e * n, n}, {q.data() + e * n, n}, {z.data() + e * n, n}};
  };

  // Per-interface flux projections and reconstructed coefficients.
  std::vector<Flux> proj((m + 1) * n);
  std::vector<double> hLeftStar((m + 1) * n), hRightStar((m + 1) * n), zStar((m + 1) * n);
  InterfaceReconstruction rec;
  std::vector<Flux> nodeFlux;
  std::uint64_t calls = 0;

  for (std::size_t k = 0; k <= m; ++k) {
    try {
      if (wellBalanced) {
        reconstructInto(view(k), view(k + 1), quad, rec);
        std::copy(rec.hLeftStar.begin(), rec.hLeftStar.end(), hLeftStar.begin() + static_cast<std::ptrdiff_t>(k * n));
        std::copy(rec.hRightStar.begin(), rec.hRightStar.end(),
                  hRightStar.begin() + static_cast<std::ptrdiff_t>(k * n));
        std::copy(rec.zStar.begin(), rec.zStar.end(), zStar.begin() + static_cast<std::ptrdiff_t>(k * n));
      } else {
        realiseInto(view(k), view(k + 1), quad, rec.nodes);
      }
      if (scheme.options().fluxCache) {
        sampleFluxes(rec.nodes, cfg.phys, scheme.options().entropyFix, nodeFlux);
        calls += nodes;
      }
      for (std::size_t l = 0; l < n; ++l) {
        if (!scheme.options().fluxCache) {
          sampleFluxes(rec.nodes, cfg.phys, scheme.options().entropyFix, nodeFlux);
          calls += nodes;
        }
        Flux sum;
        for (std::size_t j = 0; j < nodes; ++j) {
          const double phi = scheme.phi(static_cast<int>(l), j);
          sum.mass += quad.weights[j] * nodeFlux[j].mass * phi;
          sum.momentum += quad.weights[j] * nodeFlux[j].momentum * phi;
        }
        proj[k * n + l] = sum;
      }
    } catch (const DepthPositivityError& e) {
      throw e.withContext({.element = k == 0 ? 0 : k - 1, .time = field.time});
    }
  }
  scheme.countRiemannCalls(calls);

  StochasticField next = field;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const int li = static_cast<int>(l);
      Flux source;
      if (wellBalanced) {
        source = sgSourceProjection({hLeftStar.data() + (i + 1) * n, n}, {hRightStar.data() + i * n, n},
                                    {zStar.data() + i * n, n}, {zStar.data() + (i + 1) * n, n}, li, basis, dx,
                                    cfg.phys);
      } else {
        const std::span<const double> hi{h.data() + (i + 1) * n, n};
        source = sgSourceProjection(hi, hi, {z.data() + i * n, n}, {z.data() + (i + 2) * n, n}, li, basis, 2.0 * dx,
                                    cfg.phys);
      }
      const Flux& fp = proj[(i + 1) * n + l];
      const Flux& fm = proj[i * n + l];
      const Flux residual = Flux{(fp.mass - fm.mass) / dx, (fp.momentum - fm.momentum) / dx} - source;
      const double scale = cfg.dt / basis.norm(li);
      next.depth[i * n + l] = field.depth[i * n + l] - scale * residual.mass;
      next.discharge[i * n + l] = field.discharge[i * n + l] - scale * residual.momentum;
    }
  }
  next.step = field.step + 1;
  next.time = static_cast<double>(next.step) * cfg.dt;
  return next;
}

SgRun sgIntegrate(StochasticField field, SgScheme& scheme, const BoundarySpec& spec, const SimulationConfig& cfg) {
  cfg.validate();
  spec.validate();
  SgRun result;
  const auto startCalls = scheme.riemannCalls();
  const auto steps = cfg.stepCount();
  result.history.deltas.reserve(steps);
  std::vector<double> previous = field.meanDepths();
  std::vector<double> current(previous.size());
  const std::size_t n = field.terms();
  for (std::uint64_t s = 0; s < steps; ++s) {
    field = sgStep(field, scheme, spec, cfg);
    ++result.steps;
    for (std::size_t i = 0; i < current.size(); ++i) current[i] = field.depth[i * n];
    const double delta = l2MeanDepthDelta(current, previous);
    result.history.deltas.push_back(delta);
    std::swap(previous, current);
    if (cfg.convergenceThreshold && delta <= *cfg.convergenceThreshold) {
      if (!result.history.firstConvergedStep) result.history.firstConvergedStep = field.step;
      if (cfg.stopAtConvergence) break;
    }
  }
  result.field = std::move(field);
  result.riemannCalls = scheme.riemannCalls() - startCalls;
  return result;
}

SgRun sgRun(const CaseSpec& spec, SgScheme& scheme) {
  auto cfg = spec.config();
  cfg.discretisation = scheme.options().variant;
  cfg.entropyFix = scheme.options().entropyFix;
  return sgRun(spec, scheme, cfg);
}

SgRun sgRun(const CaseSpec& spec, SgScheme& scheme, const SimulationConfig& cfg) {
  return sgIntegrate(initialStochasticField(spec, scheme.order()), scheme, spec.boundary, cfg);
}

StochasticField embed(const DeterministicField& field) {
  StochasticField out(field.mesh, 0);
  for (std::size_t i = 0; i < field.flow.size(); ++i) {
    out.depth[i] = field.flow[i].h;
    out.discharge[i] = field.flow[i].q;
    out.bed[i] = field.bed[i];
  }
  out.time = field.time;
  out.step = field.step;
  return out;
}

}  // namespace swepc
