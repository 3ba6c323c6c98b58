#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace swepc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation on an argument (bad order, empty input, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A function sampled at a quadrature node returned a non-finite value.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::size_t node)
      : Error(what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

/// Water depth fell to zero or below where the model needs it positive.
///
/// The model has no wetting and drying, so this is fatal for a run. The
/// element, quadrature node (stochastic runs only) and simulated time are
/// kept so callers can report where the Gaussian tail went dry.
class DepthPositivityError : public Error {
 public:
  struct Context {
    std::optional<std::size_t> element = std::nullopt;
    std::optional<std::size_t> node = std::nullopt;
    std::optional<double> time = std::nullopt;
    double depth = 0.0;
  };

  explicit DepthPositivityError(Context ctx);
  DepthPositivityError(const std::string& what, Context ctx)
      : Error(what), ctx_(ctx) {}

  const Context& context() const noexcept { return ctx_; }

  /// Copy with the missing location fields filled in from `outer`.
  DepthPositivityError withContext(const Context& outer) const;

 private:
  Context ctx_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace swepc
