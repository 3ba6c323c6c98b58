#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swepc/deterministic.hpp"
#include "swepc/hermite.hpp"
#include "swepc/shallow_water.hpp"

namespace swepc {

/// Chaos coefficients of h, q and z on every element, stored element-major
/// (element i owns entries [i*(P+1), (i+1)*(P+1))).
struct StochasticField {
  Mesh mesh;
  int order = 0;
  std::vector<double> depth;
  std::vector<double> discharge;
  std::vector<double> bed;
  double time = 0.0;
  std::uint64_t step = 0;

  StochasticField() = default;
  StochasticField(Mesh mesh, int order);

  std::size_t terms() const noexcept { return static_cast<std::size_t>(order + 1); }
  std::size_t cells() const noexcept { return mesh.cells; }

  std::span<double> h(std::size_t i) { return {depth.data() + i * terms(), terms()}; }
  std::span<double> q(std::size_t i) { return {discharge.data() + i * terms(), terms()}; }
  std::span<double> z(std::size_t i) { return {bed.data() + i * terms(), terms()}; }
  std::span<const double> h(std::size_t i) const { return {depth.data() + i * terms(), terms()}; }
  std::span<const double> q(std::size_t i) const { return {discharge.data() + i * terms(), terms()}; }
  std::span<const double> z(std::size_t i) const { return {bed.data() + i * terms(), terms()}; }

  /// h_{i,0} for every element.
  std::vector<double> meanDepths() const;
};

struct SgOptions {
  Discretisation variant = Discretisation::WellBalanced;
  /// Flux quadrature nodes; 0 selects P+1.
  int quadratureNodes = 0;
  /// Evaluate the Riemann solver once per node per interface and reuse the
  /// samples for every projection l. Disabling re-samples for each l.
  bool fluxCache = true;
  EntropyFix entropyFix = EntropyFix::HartenHyman;
  /// Highest accepted basis order. Gauss-Hermite nodes reach further into
  /// the tails as P grows, so beyond 3 the provided cases go dry.
  int maxOrder = 3;
};

/// Basis, flux quadrature and Riemann-call accounting for one stochastic
/// Galerkin discretisation.
class SgScheme {
 public:
  explicit SgScheme(int order, SgOptions options = {});

  int order() const noexcept { return basis_.order(); }
  const SgOptions& options() const noexcept { return options_; }
  const HermiteBasis& basis() const noexcept { return basis_; }
  const QuadratureRule& quadrature() const noexcept { return quad_; }

  /// Phi_l evaluated at flux quadrature node j.
  double phi(int l, std::size_t j) const { return phi_[static_cast<std::size_t>(l) * quad_.size() + j]; }

  std::uint64_t riemannCalls() const noexcept { return riemannCalls_; }
  void countRiemannCalls(std::uint64_t n) noexcept { riemannCalls_ += n; }

 private:
  SgOptions options_;
  HermiteBasis basis_;
  QuadratureRule quad_;
  std::vector<double> phi_;
  std::uint64_t riemannCalls_ = 0;
};

/// Coefficients of one element as seen by an interface.
struct ElementCoefficients {
  std::span<const double> h;
  std::span<const double> q;
  std::span<const double> z;
};

/// Surface-gradient reconstruction in coefficient space. The linear parts
/// (z*, h* = h + z - z*) are formed coefficient-wise; the discharge limit
/// needs q/h, so it is realised node by node.
struct InterfaceReconstruction {
  std::vector<double> zStar;
  std::vector<double> hLeftStar;   ///< h^{-,*} coefficients
  std::vector<double> hRightStar;  ///< h^{+,*} coefficients
  std::vector<RiemannStates> nodes;
};

InterfaceReconstruction reconstructStatesCoeffs(const ElementCoefficients& left, const ElementCoefficients& right,
                                                const QuadratureRule& quad);

/// <F Phi_l> ~ sum_j w_j F_j Phi_l(xi_j) from Riemann fluxes sampled at the
/// nodes of `quad`.
Flux sgFluxProjection(std::span<const Flux> nodeFluxes, int l, const QuadratureRule& quad);

/// Samples the Roe flux at every node and projects onto Phi_l.
Flux sgFluxProjection(std::span<const RiemannStates> nodes, int l, const QuadratureRule& quad,
                      const PhysicsConstants& phys, EntropyFix fix = EntropyFix::HartenHyman);

/// <S Phi_l> for the well-balanced source: exact contraction with the
/// triple-product tensor.
Flux sgSourceProjection(std::span<const double> hStarMinus, std::span<const double> hStarPlus,
                        std::span<const double> zStarLeft, std::span<const double> zStarRight, int l,
                        const HermiteBasis& basis, double dx, const PhysicsConstants& phys);

/// One Galerkin-projected forward-Euler step of all P+1 coefficient
/// equations. Updates the scheme's Riemann-call counter.
StochasticField sgStep(const StochasticField& field, SgScheme& scheme, const BoundarySpec& spec,
                       const SimulationConfig& cfg);

struct SgRun {
  StochasticField field;
  ConvergenceHistory history;
  std::uint64_t riemannCalls = 0;
  std::uint64_t steps = 0;
};

/// Integrate a stochastic field to cfg.tEnd, monitoring the L2 change of
/// the mean depth coefficients.
SgRun sgIntegrate(StochasticField field, SgScheme& scheme, const BoundarySpec& spec, const SimulationConfig& cfg);

/// Stochastic run of a built-in case.
SgRun sgRun(const CaseSpec& spec, SgScheme& scheme);
SgRun sgRun(const CaseSpec& spec, SgScheme& scheme, const SimulationConfig& cfg);

/// Embed a deterministic field as a P = 0 stochastic field.
StochasticField embed(const DeterministicField& field);

}  // namespace swepc
