// swepdf: reads one row of coefficients.dat on stdin and prints the
// probability density of the chosen variable.

#include <iostream>

#include "CLI11.hpp"
#include "swepc/swepc_app.hpp"

int main(int argc, char** argv) {
  swepc::PdfRequest req;
  CLI::App app{"Probability density of a chaos expansion read from a coefficients.dat row"};
  app.add_option("variable", req.variable, "z | water | q | derived-eta")->required();
  app.add_option("--min", req.min, "Lower end of the sampled range")->required();
  app.add_option("--max", req.max, "Upper end of the sampled range")->required();
  app.add_option("--samples", req.samples, "Number of sample points")->capture_default_str()->check(
      CLI::Range(2, 10000000));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? swepc::kExitOk : swepc::kExitUsage;
  }
  return swepc::runSwepdf(std::cin, std::cout, std::cerr, req);
}
