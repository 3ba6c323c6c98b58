#include <algorithm>
#include <cmath>
#include <complex>
#include <Eigen/Dense>

#include "swepc/hermite.hpp"

namespace swepc {

namespace {

constexpr double kImagTolerance = 1e-9;
constexpr double kSingularSlope = 1e-12;

// Monomial coefficients (ascending powers) of sum_p c_p He_p.
std::vector<double> toMonomial(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size();
  std::vector<double> result(n, 0.0);
  std::vector<double> prev(n, 0.0);
  std::vector<double> curr(n, 0.0);
  curr[0] = 1.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t k = 0; k <= p; ++k) result[k] += coeffs[p] * curr[k];
    if (p + 1 == n) break;
    std::vector<double> next(n, 0.0);
    for (std::size_t k = 0; k <= p && k + 1 < n; ++k) next[k + 1] += curr[k];
    for (std::size_t k = 0; k < n; ++k) next[k] -= static_cast<double>(p) * prev[k];
    prev = std::move(curr);
    curr = std::move(next);
  }
  return result;
}

bool isDeterministic(std::span<const double> coeffs) {
  return std::all_of(coeffs.begin() + (coeffs.empty() ? 0 : 1), coeffs.end(), [](double c) { return c == 0.0; });
}

}  // namespace

std::vector<double> expansionRoots(std::span<const double> coeffs, double target) {
  auto poly = toMonomial(coeffs);
  if (poly.empty()) throw InvalidArgument("expansionRoots: empty coefficient vector");
  poly[0] -= target;

  const double scale = *std::max_element(poly.begin(), poly.end(),
                                         [](double a, double b) { return std::abs(a) < std::abs(b); });
  std::size_t degree = poly.size() - 1;
  while (degree > 0 && std::abs(poly[degree]) <= 1e-15 * std::abs(scale)) --degree;
  if (degree == 0) {
    if (poly[0] == 0.0) throw EvaluationError("expansionRoots: polynomial is identically zero", 0);
    return {};
  }
  if (degree == 1) return {-poly[0] / poly[1]};

  const auto d = static_cast<Eigen::Index>(degree);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index k = 1; k < d; ++k) companion(k, k - 1) = 1.0;
  for (Eigen::Index k = 0; k < d; ++k) companion(k, d - 1) = -poly[static_cast<std::size_t>(k)] / poly[degree];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw EvaluationError("expansionRoots: eigenvalue solve failed", 0);

  std::vector<double> roots;
  for (Eigen::Index k = 0; k < d; ++k) {
    const std::complex<double> z = solver.eigenvalues()(k);
    if (std::abs(z.imag()) < kImagTolerance) roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double pdfDensity(std::span<const double> coeffs, double a) {
  if (isDeterministic(coeffs)) {
    throw InvalidArgument("pdfDensity: expansion is deterministic (delta distribution)");
  }
  double density = 0.0;
  for (double root : expansionRoots(coeffs, a)) {
    double slope = 0.0;
    for (std::size_t p = 1; p < coeffs.size(); ++p) slope += coeffs[p] * hermiteDerivative(static_cast<int>(p), root);
    if (std::abs(slope) < kSingularSlope) return kPdfDensityCap;
    density += gaussianDensity(root) / std::abs(slope);
  }
  return std::min(density, kPdfDensityCap);
}

PdfCurve reconstructPdf(std::span<const double> coeffs, double aMin, double aMax, int samples) {
  if (!(aMin < aMax)) throw InvalidArgument("reconstructPdf: require min < max");
  if (samples < 2) throw InvalidArgument("reconstructPdf: need at least two samples");
  if (isDeterministic(coeffs)) {
    throw InvalidArgument("reconstructPdf: expansion is deterministic (delta distribution)");
  }
  PdfCurve curve;
  curve.abscissae.reserve(static_cast<std::size_t>(samples));
  curve.densities.reserve(static_cast<std::size_t>(samples));
  const double step = (aMax - aMin) / (samples - 1);
  for (int k = 0; k < samples; ++k) {
    const double a = (k + 1 == samples) ? aMax : aMin + k * step;
    curve.abscissae.push_back(a);
    curve.densities.push_back(pdfDensity(coeffs, a));
  }
  return curve;
}

}  // namespace swepc
