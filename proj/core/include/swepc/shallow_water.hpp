#pragma once

#include <cmath>

#include "swepc/errors.hpp"

namespace swepc {

/// Depth below which a state is treated as dry and rejected.
inline constexpr double kDryTolerance = 1e-12;

/// U = [h, q] for a unit-width rectangular channel.
struct FlowVector {
  double h = 0.0;  ///< depth [m]
  double q = 0.0;  ///< unit-width discharge [m^2/s]

  double velocity() const { return q / h; }

  friend bool operator==(const FlowVector&, const FlowVector&) = default;
};

/// Flux or source pair: [mass, momentum].
struct Flux {
  double mass = 0.0;
  double momentum = 0.0;

  Flux& operator+=(const Flux& o) {
    mass += o.mass;
    momentum += o.momentum;
    return *this;
  }
  friend Flux operator+(Flux a, const Flux& b) { return a += b; }
  friend Flux operator-(const Flux& a, const Flux& b) { return {a.mass - b.mass, a.momentum - b.momentum}; }
  friend Flux operator*(double s, const Flux& f) { return {s * f.mass, s * f.momentum}; }
  friend bool operator==(const Flux&, const Flux&) = default;
};

struct PhysicsConstants {
  double g = 9.80665;  ///< [m/s^2]
};

enum class EntropyFix { None, HartenHyman };

/// Left/right limits at one interface after surface-gradient reconstruction.
struct RiemannStates {
  FlowVector left;   ///< U^{-,*}, limit from the element on the left
  FlowVector right;  ///< U^{+,*}
  double zStar = 0.0;
};

/// F(U) = [q, q^2/h + g h^2/2]. Throws DepthPositivityError for h <= 0.
Flux physicalFlux(const FlowVector& u, const PhysicsConstants& phys);

/// Roe's linearised two-wave flux. Identical left and right states return
/// physicalFlux exactly.
Flux roeFlux(const FlowVector& left, const FlowVector& right, const PhysicsConstants& phys,
             EntropyFix fix = EntropyFix::HartenHyman);

inline Flux roeFlux(const RiemannStates& states, const PhysicsConstants& phys,
                    EntropyFix fix = EntropyFix::HartenHyman) {
  return roeFlux(states.left, states.right, phys, fix);
}

/// z* = (z_left + z_right) / 2.
inline double interfaceTopography(double zLeft, double zRight) { return 0.5 * (zLeft + zRight); }

/// Surface gradient reconstruction at the interface between element i and
/// i+1: depths are rebuilt from the free surface above the shared z*, and
/// discharges from the original element velocities.
RiemannStates reconstructStates(const FlowVector& ui, double zi, const FlowVector& uip1, double zip1);

/// Well-balanced bed slope source for element i:
/// [0, -g (h^{+,*}_{i-1/2} + h^{-,*}_{i+1/2})/2 (z*_{i+1/2} - z*_{i-1/2})/dx].
inline Flux bedSource(double hLeftStar, double hRightStar, double zStarLeft, double zStarRight, double dx,
                      const PhysicsConstants& phys) {
  const double hbar = 0.5 * (hLeftStar + hRightStar);
  return {0.0, -phys.g * (hbar * ((zStarRight - zStarLeft) / dx))};
}

}  // namespace swepc
