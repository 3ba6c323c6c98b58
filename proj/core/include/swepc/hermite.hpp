#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "swepc/errors.hpp"

namespace swepc {

/// Probabilists' Hermite polynomial He_p(xi) via the three-term recurrence
/// He_{p+1} = xi He_p - p He_{p-1}.
double hermite(int degree, double xi);

/// d/dxi He_p(xi) = p He_{p-1}(xi).
double hermiteDerivative(int degree, double xi);

/// Standard Gaussian density W(xi).
inline double gaussianDensity(double xi) {
  return std::exp(-0.5 * xi * xi) / std::sqrt(2.0 * std::numbers::pi);
}

/// Gauss-Hermite rule for the standard Gaussian measure. Weights already
/// include W and sum to one, so sum_j w_j f(x_j) approximates <f>.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// n-node rule, exact for polynomials of degree <= 2n-1. Nodes are the roots
/// of He_n, sorted ascending.
QuadratureRule gaussHermite(int n);

/// Number of nodes needed to integrate a polynomial of the given degree
/// exactly.
inline int nodesForDegree(int degree) { return degree / 2 + 1; }

/// <f> = sum_j w_j f(xi_j). Throws EvaluationError naming the node if f is
/// not finite there.
template <typename F>
double ensembleAverage(F&& f, const QuadratureRule& quad) {
  double sum = 0.0;
  for (std::size_t j = 0; j < quad.size(); ++j) {
    const double value = f(quad.nodes[j]);
    if (!std::isfinite(value)) {
      throw EvaluationError("non-finite integrand at quadrature node " + std::to_string(j) +
                                " (xi = " + std::to_string(quad.nodes[j]) + ")",
                            j);
    }
    sum += quad.weights[j] * value;
  }
  return sum;
}

/// Precomputed ensemble averages for a Wiener-Hermite basis of order P:
/// <Phi_l^2> = l! and the triple products <Phi_p Phi_s Phi_l>, plus the
/// default (P+1)-node quadrature rule.
class HermiteBasis {
 public:
  static constexpr int kDefaultMaxOrder = 8;

  explicit HermiteBasis(int order, int maxOrder = kDefaultMaxOrder);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(order_ + 1); }

  double norm(int l) const { return norms_[static_cast<std::size_t>(l)]; }
  std::span<const double> norms() const noexcept { return norms_; }

  double triple(int p, int s, int l) const {
    const auto n = size();
    return triple_[(static_cast<std::size_t>(p) * n + static_cast<std::size_t>(s)) * n +
                   static_cast<std::size_t>(l)];
  }

  const QuadratureRule& quadrature() const noexcept { return quad_; }

 private:
  int order_;
  std::vector<double> norms_;
  std::vector<double> triple_;
  QuadratureRule quad_;
};

inline HermiteBasis buildBasis(int order) { return HermiteBasis(order); }

/// Expansion coefficients A_0..A_P of one random scalar.
class ChaosCoefficients {
 public:
  ChaosCoefficients() = default;
  explicit ChaosCoefficients(std::size_t count, double fill = 0.0) : values_(count, fill) {}
  explicit ChaosCoefficients(std::vector<double> values);
  ChaosCoefficients(std::initializer_list<double> values) : ChaosCoefficients(std::vector<double>(values)) {}

  int order() const noexcept { return static_cast<int>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator[](std::size_t p) { return values_[p]; }
  double operator[](std::size_t p) const { return values_[p]; }

  std::span<const double> span() const noexcept { return values_; }
  std::span<double> span() noexcept { return values_; }
  operator std::span<const double>() const noexcept { return values_; }

  const std::vector<double>& values() const noexcept { return values_; }

  friend bool operator==(const ChaosCoefficients&, const ChaosCoefficients&) = default;

 private:
  std::vector<double> values_;
};

/// sum_p c_p He_p(xi).
double evaluateExpansion(std::span<const double> coeffs, double xi);

/// m-th moment: the mean for m = 1, otherwise the central moment
/// <(A - A_0)^m>. Variance uses the closed form sum_{p>=1} c_p^2 p!; higher
/// orders use a quadrature rule exact for the degree-mP integrand.
double moment(std::span<const double> coeffs, int m);

/// As above, checking the coefficient count against the basis.
double moment(std::span<const double> coeffs, int m, const HermiteBasis& basis);

/// Sampled probability density of a random scalar.
struct PdfCurve {
  std::vector<double> abscissae;
  std::vector<double> densities;
};

/// Densities reported where the expansion has a stationary point at a root.
inline constexpr double kPdfDensityCap = 1e12;

/// f_A(a) for one realisation: sums |A'(xi_j)|^-1 W(xi_j) over the real roots
/// of a - A(xi).
double pdfDensity(std::span<const double> coeffs, double a);

/// f_A on `samples` uniformly spaced points spanning [aMin, aMax].
PdfCurve reconstructPdf(std::span<const double> coeffs, double aMin, double aMax, int samples);

/// Real roots of sum_p c_p He_p(xi) = target, ascending.
std::vector<double> expansionRoots(std::span<const double> coeffs, double target);

}  // namespace swepc
