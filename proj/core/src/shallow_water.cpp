#include "swepc/shallow_water.hpp"

#include <cmath>
#include <sstream>

namespace swepc {

namespace {

void requireWet(double h, const char* where) {
  if (!(h > kDryTolerance)) {
    std::ostringstream msg;
    msg << where << ": non-positive water depth h = " << h;
    throw DepthPositivityError(msg.str(), DepthPositivityError::Context{.depth = h});
  }
}

// Harten-Hyman: a transonic rarefaction (lambda_L < 0 < lambda_R) is split
// into two waves travelling at the left and right characteristic speeds.
double fixedSpeed(double lambda, double lambdaL, double lambdaR, EntropyFix fix) {
  if (fix == EntropyFix::HartenHyman && lambdaL < 0.0 && lambdaR > 0.0) {
    return (lambda * (lambdaL + lambdaR) - 2.0 * lambdaL * lambdaR) / (lambdaR - lambdaL);
  }
  return std::abs(lambda);
}

}  // namespace

Flux physicalFlux(const FlowVector& u, const PhysicsConstants& phys) {
  requireWet(u.h, "physicalFlux");
  return {u.q, u.q * u.q / u.h + 0.5 * phys.g * u.h * u.h};
}

Flux roeFlux(const FlowVector& left, const FlowVector& right, const PhysicsConstants& phys, EntropyFix fix) {
  requireWet(left.h, "roeFlux (left state)");
  requireWet(right.h, "roeFlux (right state)");

  const Flux fl = physicalFlux(left, phys);
  const Flux fr = physicalFlux(right, phys);
  const double dh = right.h - left.h;
  const double dq = right.q - left.q;
  Flux flux{0.5 * (fl.mass + fr.mass), 0.5 * (fl.momentum + fr.momentum)};
  if (dh == 0.0 && dq == 0.0) return flux;

  const double sl = std::sqrt(left.h);
  const double sr = std::sqrt(right.h);
  const double ul = left.q / left.h;
  const double ur = right.q / right.h;
  const double u = (sl * ul + sr * ur) / (sl + sr);
  const double c = std::sqrt(0.5 * phys.g * (left.h + right.h));
  const double cl = std::sqrt(phys.g * left.h);
  const double cr = std::sqrt(phys.g * right.h);

  const double lambda1 = u - c;
  const double lambda2 = u + c;
  const double alpha1 = ((u + c) * dh - dq) / (2.0 * c);
  const double alpha2 = (dq - (u - c) * dh) / (2.0 * c);

  const double a1 = fixedSpeed(lambda1, ul - cl, ur - cr, fix);
  const double a2 = fixedSpeed(lambda2, ul + cl, ur + cr, fix);

  flux.mass -= 0.5 * (a1 * alpha1 + a2 * alpha2);
  flux.momentum -= 0.5 * (a1 * alpha1 * lambda1 + a2 * alpha2 * lambda2);
  return flux;
}

RiemannStates reconstructStates(const FlowVector& ui, double zi, const FlowVector& uip1, double zip1) {
  requireWet(ui.h, "reconstructStates (left element)");
  requireWet(uip1.h, "reconstructStates (right element)");
  RiemannStates s;
  s.zStar = interfaceTopography(zi, zip1);
  const double hl = (ui.h + zi) - s.zStar;
  const double hr = (uip1.h + zip1) - s.zStar;
  if (hl < 0.0 || hr < 0.0) {
    std::ostringstream msg;
    msg << "reconstructStates: negative reconstructed depth (left " << hl << ", right " << hr << ")";
    throw DepthPositivityError(msg.str(), DepthPositivityError::Context{.depth = std::min(hl, hr)});
  }
  s.left = {hl, hl * (ui.q / ui.h)};
  s.right = {hr, hr * (uip1.q / uip1.h)};
  return s;
}

}  // namespace swepc
