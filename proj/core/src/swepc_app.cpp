#include "swepc/swepc_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "swepc/cases.hpp"
#include "swepc/io.hpp"
#include "swepc/monte_carlo.hpp"
#include "swepc/stochastic.hpp"

namespace swepc {

namespace {

std::vector<std::string> headerLines(std::string_view title, const RunRequest& req, const CaseSpec& spec,
                                     std::string_view model, double time, std::vector<std::string> columns) {
  std::vector<std::string> lines;
  lines.emplace_back(std::string(title));
  std::ostringstream meta;
  meta << "case=" << spec.name() << " discretisation=" << req.discretisation << " model=" << model;
  if (!req.monteCarlo) meta << " degree=" << req.degree;
  meta << " t=" << formatNumber(time) << " elements=" << spec.mesh.cells;
  lines.push_back(meta.str());
  std::string joined = "columns:";
  for (const auto& c : columns) joined += ' ' + c;
  lines.push_back(std::move(joined));
  return lines;
}

void prepareOutputDir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  if (!std::filesystem::is_directory(dir)) throw IoError(dir.string() + " is not a directory");
}

void writeStochastic(const RunRequest& req, const CaseSpec& spec, const StochasticField& field, std::string_view model) {
  const auto& dir = req.outputDir;
  writeTable(dir / "coefficients.dat",
             headerLines("Chaos expansion coefficients of bed z, depth h and discharge q per element", req, spec, model,
                         field.time, coefficientColumns(field.order)),
             coefficientRows(field));
  writeTable(dir / "statistics.dat",
             headerLines("Mean, standard deviation, skewness and kurtosis of z, h and q", req, spec, model, field.time,
                         statisticsColumns()),
             statisticsRows(field));
  writeTable(dir / "derived-statistics.dat",
             headerLines("Statistics of free-surface elevation eta = h + z and velocity v = q/h", req, spec, model,
                         field.time, derivedStatisticsColumns()),
             derivedStatisticsRows(field));
}

void writeMonteCarlo(const RunRequest& req, const CaseSpec& spec, const McRun& mc, double time) {
  const auto& dir = req.outputDir;
  const auto& acc = mc.accumulator;
  const std::string model = "monteCarlo iterations=" + std::to_string(acc.count()) + " seed=" + std::to_string(req.seed);
  writeTable(dir / "statistics.dat",
             headerLines("Sample mean, standard deviation, skewness and kurtosis of z, h and q", req, spec, model, time,
                         statisticsColumns()),
             statisticsRows(acc, spec.mesh));
  writeTable(dir / "derived-statistics.dat",
             headerLines("Sample statistics of free-surface elevation eta = h + z and velocity v = q/h", req, spec,
                         model, time, derivedStatisticsColumns()),
             derivedStatisticsRows(acc, spec.mesh));
  // One file per element, one line per iteration: r z h q eta v.
  std::vector<std::vector<double>> rows(acc.samples().size());
  for (std::size_t i = 0; i < acc.cells(); ++i) {
    for (std::size_t k = 0; k < acc.samples().size(); ++k) {
      const auto& s = acc.samples()[k];
      const auto& v = s.values[i];
      rows[k] = {s.amplitude, v[0], v[1], v[2], v[3], v[4]};
    }
    writeTable(dir / ("sample" + std::to_string(i) + ".dat"), {}, rows);
  }
}

int dispatch(const RunRequest& req, std::ostream& log, RunSummary* summary) {
  const auto caseId = parseCaseName(req.testCase);
  if (!caseId) {
    log << "swepc: unknown test case '" << req.testCase
        << "' (expected lakeAtRest, criticalSteadyState or tsengSteadyState)\n";
    return kExitUnknownCase;
  }
  const auto disc = parseDiscretisation(req.discretisation);
  if (!disc) {
    log << "swepc: unknown discretisation '" << req.discretisation
        << "' (expected wellBalancedH or centredDifferenceH)\n";
    return kExitUnknownDiscretisation;
  }
  if (req.degree < 0 || req.degree > req.maxDegree) {
    log << "swepc: degree " << req.degree << " outside [0, " << req.maxDegree << "]\n";
    return kExitUsage;
  }
  if (req.monteCarlo && req.mcIterations < 1) {
    log << "swepc: --mc-iterations must be at least 1\n";
    return kExitUsage;
  }

  CaseSpec spec;
  if (req.bedTable) {
    if (*caseId != CaseId::TsengSteadyState) {
      log << "swepc: --bed-table only applies to tsengSteadyState\n";
      return kExitUsage;
    }
    spec = tsengCase(BedTable::load(*req.bedTable));
  } else {
    spec = builtinCase(*caseId);
  }

  auto cfg = spec.config();
  cfg.discretisation = *disc;
  cfg.entropyFix = req.entropyFix ? EntropyFix::HartenHyman : EntropyFix::None;
  if (req.endTime) cfg.tEnd = *req.endTime;
  cfg.stopAtConvergence = req.stopAtConvergence;

  prepareOutputDir(req.outputDir);

  RunSummary local;
  RunSummary& out = summary ? *summary : local;

  if (req.monteCarlo) {
    const auto* hump = spec.hump();
    if (!hump) {
      log << "swepc: Monte Carlo needs a hump-amplitude case (lakeAtRest or criticalSteadyState)\n";
      return kExitUsage;
    }
    McOptions opts;
    opts.iterations = req.mcIterations;
    opts.sampler = AmplitudeSampler(hump->meanAmplitude, hump->stdAmplitude, 0.0, 1.4, req.seed);
    opts.threads = req.threads;
    const auto mc = mcRun(spec, opts, cfg);
    const double time = static_cast<double>(cfg.stepCount()) * cfg.dt;
    writeMonteCarlo(req, spec, mc, time);
    out.riemannCalls = mc.riemannCalls;
    out.steps = cfg.stepCount();
    out.time = time;
    log << "swepc: " << mc.accumulator.count() << " Monte Carlo iterations, " << mc.riemannCalls
        << " Riemann solver calls\n";
    return kExitOk;
  }

  if (req.degree == 0) {
    auto det = run(spec, spec.hump() ? spec.hump()->meanAmplitude : 0.0, cfg);
    if (det.maxCourant > cfg.courantWarn) {
      log << "swepc: warning: maximum Courant number " << det.maxCourant << " exceeds " << cfg.courantWarn << '\n';
    }
    out.steps = det.field.step;
    out.riemannCalls = det.riemannCalls;
    out.finalDelta = det.history.finalDelta();
    out.firstConvergedStep = det.history.firstConvergedStep;
    out.time = det.field.time;
    writeStochastic(req, spec, embed(det.field), "deterministic");
  } else {
    SgOptions opts;
    opts.variant = *disc;
    opts.quadratureNodes = req.quadNodes;
    opts.fluxCache = req.fluxCache;
    opts.entropyFix = cfg.entropyFix;
    opts.maxOrder = req.maxDegree;
    SgScheme scheme(req.degree, opts);
    auto sg = sgRun(spec, scheme, cfg);
    out.steps = sg.steps;
    out.riemannCalls = sg.riemannCalls;
    out.finalDelta = sg.history.finalDelta();
    out.firstConvergedStep = sg.history.firstConvergedStep;
    out.time = sg.field.time;
    writeStochastic(req, spec, sg.field, "stochasticGalerkin");
  }
  log << "swepc: " << out.steps << " steps to t = " << out.time << " s, " << out.riemannCalls
      << " Riemann solver calls, final L2 mean-depth change " << out.finalDelta << " m\n";
  if (cfg.convergenceThreshold && out.finalDelta > *cfg.convergenceThreshold) {
    log << "swepc: warning: not converged to " << *cfg.convergenceThreshold << " m\n";
  }
  return kExitOk;
}

}  // namespace

int runSwepc(const RunRequest& request, std::ostream& log, RunSummary* summary) {
  try {
    return dispatch(request, log, summary);
  } catch (const DepthPositivityError& e) {
    log << "swepc: solver aborted: " << e.what() << '\n';
    return kExitSolverFailure;
  } catch (const McIterationError& e) {
    log << "swepc: solver aborted: " << e.what() << '\n';
    return kExitSolverFailure;
  } catch (const IoError& e) {
    log << "swepc: " << e.what() << '\n';
    return kExitOutputError;
  } catch (const InvalidArgument& e) {
    log << "swepc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    log << "swepc: error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int runSwepdf(std::istream& in, std::ostream& out, std::ostream& err, const PdfRequest& request) {
  // Header lines are skipped so `head -n 5 coefficients.dat | tail -n 1`
  // and whole-file redirects both work.
  std::string line;
  bool found = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') {
      found = true;
      break;
    }
  }
  if (!found) {
    err << "swepdf: no coefficients row on standard input\n";
    return kExitUsage;
  }
  if (!(request.min < request.max)) {
    err << "swepdf: --min must be below --max\n";
    return kExitUsage;
  }
  std::vector<double> row;
  try {
    row = parseRow(line);
  } catch (const InvalidArgument& e) {
    err << "swepdf: cannot parse coefficients row: " << e.what() << '\n';
    return kExitUsage;
  }
  if (row.size() < 4 || (row.size() - 1) % 3 != 0) {
    err << "swepdf: expected x followed by 3(P+1) coefficients, got " << row.size() << " columns\n";
    return kExitUsage;
  }
  const std::size_t n = (row.size() - 1) / 3;
  const auto slice = [&](std::size_t block) {
    return std::vector<double>(row.begin() + 1 + static_cast<std::ptrdiff_t>(block * n),
                               row.begin() + 1 + static_cast<std::ptrdiff_t>((block + 1) * n));
  };
  std::vector<double> coeffs;
  if (request.variable == "z") {
    coeffs = slice(0);
  } else if (request.variable == "water") {
    coeffs = slice(1);
  } else if (request.variable == "q") {
    coeffs = slice(2);
  } else if (request.variable == "derived-eta") {
    const auto z = slice(0);
    coeffs = slice(1);
    for (std::size_t p = 0; p < n; ++p) coeffs[p] += z[p];
  } else {
    err << "swepdf: unknown variable '" << request.variable << "' (expected z, water, q or derived-eta)\n";
    return kExitUsage;
  }
  if (std::all_of(coeffs.begin() + 1, coeffs.end(), [](double c) { return c == 0.0; })) {
    err << "swepdf: variable '" << request.variable << "' is deterministic at x = " << row[0]
        << "; its distribution is a delta\n";
    return kExitFailure;
  }
  try {
    const auto pdf = reconstructPdf(coeffs, request.min, request.max, request.samples);
    out << "# probability density of " << request.variable << " at x = " << formatNumber(row[0]) << '\n';
    out << "# columns: a density\n";
    for (std::size_t k = 0; k < pdf.abscissae.size(); ++k) {
      out << formatNumber(pdf.abscissae[k]) << ' ' << formatNumber(pdf.densities[k]) << '\n';
    }
  } catch (const Error& e) {
    err << "swepdf: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace swepc
