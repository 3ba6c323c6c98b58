#include "swepc/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <Eigen/Dense>

namespace swepc {

double hermite(int degree, double xi) {
  if (degree <= 0) return 1.0;
  double prev = 1.0;
  double curr = xi;
  for (int p = 1; p < degree; ++p) {
    const double next = xi * curr - p * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double hermiteDerivative(int degree, double xi) {
  if (degree <= 0) return 0.0;
  return degree * hermite(degree - 1, xi);
}

QuadratureRule gaussHermite(int n) {
  if (n < 1) throw InvalidArgument("gaussHermite: node count must be >= 1, got " + std::to_string(n));
  const auto count = static_cast<std::size_t>(n);
  QuadratureRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 1.0;
    return rule;
  }

  // Golub-Welsch: the Jacobi matrix of the monic He recurrence has zero
  // diagonal and sqrt(k) on the off-diagonals.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    jacobi(k - 1, k) = std::sqrt(static_cast<double>(k));
    jacobi(k, k - 1) = jacobi(k - 1, k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  const Eigen::VectorXd& eig = solver.eigenvalues();

  for (std::size_t j = 0; j < count; ++j) {
    double x = eig(static_cast<Eigen::Index>(j));
    // Newton polish on He_n.
    for (int it = 0; it < 3; ++it) {
      const double f = hermite(n, x);
      const double df = hermiteDerivative(n, x);
      if (df == 0.0) break;
      x -= f / df;
    }
    rule.nodes[j] = x;
  }
  // Roots come in +/- pairs; enforce exact symmetry.
  for (std::size_t j = 0; j < count / 2; ++j) {
    const double a = 0.5 * (rule.nodes[count - 1 - j] - rule.nodes[j]);
    rule.nodes[j] = -a;
    rule.nodes[count - 1 - j] = a;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = 0.0;

  // w_j proportional to 1 / He_{n-1}(x_j)^2.
  double total = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    const double h = hermite(n - 1, rule.nodes[j]);
    rule.weights[j] = 1.0 / (h * h);
    total += rule.weights[j];
  }
  for (auto& w : rule.weights) w /= total;
  for (std::size_t j = 0; j < count / 2; ++j) {
    const double w = 0.5 * (rule.weights[j] + rule.weights[count - 1 - j]);
    rule.weights[j] = w;
    rule.weights[count - 1 - j] = w;
  }
  return rule;
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// <He_p He_s He_l> = p! s! l! / ((k-p)! (k-s)! (k-l)!) with 2k = p+s+l,
// zero unless the sum is even and the triangle inequality holds.
double tripleProduct(int p, int s, int l) {
  const int sum = p + s + l;
  if (sum % 2 != 0) return 0.0;
  const int k = sum / 2;
  if (k < p || k < s || k < l) return 0.0;
  return factorial(p) * factorial(s) * factorial(l) /
         (factorial(k - p) * factorial(k - s) * factorial(k - l));
}

}  // namespace

HermiteBasis::HermiteBasis(int order, int maxOrder) : order_(order) {
  if (order < 0) throw InvalidArgument("HermiteBasis: order must be >= 0, got " + std::to_string(order));
  if (order > maxOrder) {
    throw InvalidArgument("HermiteBasis: order " + std::to_string(order) + " exceeds cap " +
                          std::to_string(maxOrder));
  }
  const auto n = size();
  norms_.resize(n);
  for (std::size_t l = 0; l < n; ++l) norms_[l] = factorial(static_cast<int>(l));
  triple_.resize(n * n * n);
  for (int p = 0; p <= order; ++p)
    for (int s = 0; s <= order; ++s)
      for (int l = 0; l <= order; ++l)
        triple_[(static_cast<std::size_t>(p) * n + static_cast<std::size_t>(s)) * n +
                static_cast<std::size_t>(l)] = tripleProduct(p, s, l);
  quad_ = gaussHermite(order + 1);
}

ChaosCoefficients::ChaosCoefficients(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("ChaosCoefficients: need at least one coefficient");
}

double evaluateExpansion(std::span<const double> coeffs, double xi) {
  // Run the recurrence once rather than calling hermite() per term.
  double sum = 0.0;
  double prev = 0.0;
  double curr = 1.0;
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    sum += coeffs[p] * curr;
    const double next = xi * curr - static_cast<double>(p) * prev;
    prev = curr;
    curr = next;
  }
  return sum;
}

double moment(std::span<const double> coeffs, int m) {
  if (m < 1) throw InvalidArgument("moment: order must be >= 1, got " + std::to_string(m));
  if (coeffs.empty()) throw InvalidArgument("moment: empty coefficient vector");
  if (m == 1) return coeffs[0];
  if (m == 2) {
    double var = 0.0;
    for (std::size_t p = 1; p < coeffs.size(); ++p) var += coeffs[p] * coeffs[p] * factorial(static_cast<int>(p));
    return var;
  }
  const int order = static_cast<int>(coeffs.size()) - 1;
  if (order == 0) return 0.0;
  const auto quad = gaussHermite(std::max(order + 1, nodesForDegree(m * order)));
  const double mean = coeffs[0];
  return ensembleAverage(
      [&](double xi) { return std::pow(evaluateExpansion(coeffs, xi) - mean, m); }, quad);
}

double moment(std::span<const double> coeffs, int m, const HermiteBasis& basis) {
  if (coeffs.size() != basis.size()) {
    throw InvalidArgument("moment: " + std::to_string(coeffs.size()) + " coefficients for a basis of size " +
                          std::to_string(basis.size()));
  }
  return moment(coeffs, m);
}

}  // namespace swepc
