#include "swepc/errors.hpp"

#include <sstream>

namespace swepc {

namespace {

std::string describe(const DepthPositivityError::Context& ctx, const std::string& detail) {
  std::ostringstream msg;
  msg << "depth positivity violated";
  if (ctx.element) msg << " at element " << *ctx.element;
  if (ctx.node) msg << ", quadrature node " << *ctx.node;
  if (ctx.time) msg << ", t = " << *ctx.time << " s";
  msg << ": h = " << ctx.depth;
  if (!detail.empty()) msg << " (" << detail << ")";
  return msg.str();
}

}  // namespace

DepthPositivityError::DepthPositivityError(Context ctx) : Error(describe(ctx, {})), ctx_(ctx) {}

DepthPositivityError DepthPositivityError::withContext(const Context& outer) const {
  Context merged = ctx_;
  if (!merged.element) merged.element = outer.element;
  if (!merged.node) merged.node = outer.node;
  if (!merged.time) merged.time = outer.time;
  return DepthPositivityError(describe(merged, what()), merged);
}

}  // namespace swepc
