#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "wallcross/errors.hpp"
#include "wallcross/numeric.hpp"
#include "wallcross/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact wall-crossing workbench for Lawrence toric data"};
  app.require_subcommand(1);

  std::string input, out, bound, sector_sign, side;
  bool pretty = false;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "structural and chamber checks on the input datum"},
      {"chambers", "minimal anticones and extended slots for each stability"},
      {"wallcross", "wall normal, slot partition, and master-space data"},
      {"fan", "stacky fan for each stability and the hypertoric ideal"},
      {"fixed-points", "fixed-point atlas with isotropy and inertia data"},
      {"fm", "Fourier-Mukai matrix in the structure bases"},
      {"monodromy", "wall-crossing loop: forward and reverse composed"},
      {"ifunction", "truncated I-function terms on the wall-adapted chart"},
      {"verify", "run the cross-module invariant battery"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("input", input, "input JSON file")->required();
    sub->add_option("--out", out, "write the report to this file instead of stdout");
    sub->add_option("--bound", bound, "degree truncation bound, p/q");
    sub->add_option("--sector-sign", sector_sign, "sector label sign convention")
        ->check(CLI::IsMember({"minus", "plus"}));
    sub->add_flag("--pretty", pretty, "indent the JSON report");
    if (name == "ifunction")
      sub->add_option("--side", side, "chamber to expand in")
          ->check(CLI::IsMember({"plus", "minus"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    wallcross::ParseOptions popt;
    popt.enforce_lawrence_pairing = (command != "validate");
    wallcross::InputSpec spec = wallcross::parse_input(input, popt);
    if (!bound.empty()) spec.bound = wallcross::parse_rat(bound);
    if (!sector_sign.empty()) spec.sector_sign_flipped = (sector_sign == "plus");
    if (!side.empty()) spec.side = (side == "minus") ? -1 : 1;

    wallcross::Report rep = wallcross::run_command(command, spec, pretty);
    if (out.empty()) {
      std::cout << rep.json;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) throw wallcross::SchemaError("cannot write report file: " + out);
      f << rep.json;
    }
    std::fprintf(stderr, "%s: %s in %.3fs\n", command.c_str(), rep.ok ? "ok" : "FAILED",
                 rep.seconds);
    if (!rep.ok) return command == "validate" ? 2 : 3;
    return 0;
  } catch (const wallcross::ValidationError& e) {
    std::fprintf(stderr, "%s: validation error: %s\n", command.c_str(), e.what());
    return 2;
  } catch (const wallcross::ComputationError& e) {
    std::fprintf(stderr, "%s: computation error: %s\n", command.c_str(), e.what());
    return 3;
  }
}
