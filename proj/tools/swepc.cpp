// swepc: runs one shallow-water test case, either as a stochastic Galerkin
// expansion of the given degree or as a Monte Carlo ensemble.

#include <iostream>

#include "CLI11.hpp"
#include "swepc/swepc_app.hpp"

int main(int argc, char** argv) {
  swepc::RunRequest req;
  CLI::App app{"Stochastic Galerkin / Monte Carlo solver for the 1D shallow water equations"};
  app.add_option("testCase", req.testCase, "lakeAtRest | criticalSteadyState | tsengSteadyState")->required();
  app.add_option("discretisation", req.discretisation, "wellBalancedH | centredDifferenceH")
      ->capture_default_str();
  app.add_option("-d,--degree", req.degree, "Chaos expansion degree P (0 = deterministic solver)")
      ->capture_default_str();
  app.add_option("--max-degree", req.maxDegree, "Largest accepted degree")->capture_default_str();
  app.add_flag("--monte-carlo", req.monteCarlo, "Run a Monte Carlo ensemble instead of the Galerkin system");
  app.add_option("--mc-iterations", req.mcIterations, "Monte Carlo iterations")->capture_default_str();
  app.add_option("--seed", req.seed, "Random seed for Monte Carlo draws")->capture_default_str();
  app.add_option("--threads", req.threads, "Monte Carlo worker threads")->capture_default_str()->check(
      CLI::PositiveNumber);
  app.add_option("-o,--output-dir", req.outputDir, "Directory for the output tables")->capture_default_str();
  app.add_option("--quad-nodes", req.quadNodes, "Gauss-Hermite nodes for flux projection (0 = P+1)")
      ->capture_default_str();
  bool noFluxCache = false;
  app.add_flag("--no-flux-cache", noFluxCache, "Re-evaluate the Roe flux for every projected coefficient");
  app.add_flag("--entropy-fix,!--no-entropy-fix", req.entropyFix, "Harten-Hyman entropy fix in the Roe solver");
  app.add_option("--end-time", req.endTime, "Override the case end time [s]");
  app.add_flag("--stop-on-convergence", req.stopAtConvergence, "Stop once the case convergence threshold is met");
  app.add_option("--bed-table", req.bedTable, "Bed table (x z per line) for tsengSteadyState")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? swepc::kExitOk : swepc::kExitUsage;
  }
  req.fluxCache = !noFluxCache;
  return swepc::runSwepc(req, std::cerr);
}
