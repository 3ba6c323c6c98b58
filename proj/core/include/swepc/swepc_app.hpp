#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace swepc {

/// Exit codes of the command-line front ends.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitUnknownCase = 3,
  kExitUnknownDiscretisation = 4,
  kExitOutputError = 5,
  kExitSolverFailure = 6,
};

struct RunRequest {
  int degree = 3;
  std::string testCase;
  std::string discretisation = "wellBalancedH";
  std::filesystem::path outputDir = ".";
  bool monteCarlo = false;
  std::uint64_t mcIterations = 2000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  int quadNodes = 0;
  bool fluxCache = true;
  bool entropyFix = true;
  int maxDegree = 3;
  std::optional<double> endTime;
  bool stopAtConvergence = false;
  std::optional<std::filesystem::path> bedTable;
};

/// What a run did, for logging and tests.
struct RunSummary {
  std::uint64_t steps = 0;
  std::uint64_t riemannCalls = 0;
  double finalDelta = 0.0;
  std::optional<std::uint64_t> firstConvergedStep;
  double time = 0.0;
};

/// Runs the requested model and writes its output tables to
/// request.outputDir. Diagnostics go to `log`. Returns an ExitCode.
int runSwepc(const RunRequest& request, std::ostream& log, RunSummary* summary = nullptr);

struct PdfRequest {
  std::string variable;  ///< z | water | q | derived-eta
  double min = 0.0;
  double max = 1.0;
  int samples = 500;
};

/// Reads one coefficients.dat row from `in` and writes "a f(a)" rows.
int runSwepdf(std::istream& in, std::ostream& out, std::ostream& err, const PdfRequest& request);

}  // namespace swepc
