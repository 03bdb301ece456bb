#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wallcross/gitdata.hpp"

namespace wallcross {

// Parsed problem input: the GIT datum, the stability pair, and run options.
struct InputSpec {
  GitData git;
  RatVec theta_plus;
  std::optional<RatVec> theta_minus;
  Rat bound = Rat(2);                // degree truncation for ifunction/verify
  bool sector_sign_flipped = false;  // sector labels from <D_i, d> instead of -<D_i, d>
  int side = 1;                      // ifunction chamber: +1 plus, -1 minus
  std::string digest;                // FNV-1a 64 of the raw input bytes, hex
};

struct ParseOptions {
  // `validate` wants to report a broken pairing as a failed check instead of
  // refusing to parse; every other command insists on it up front.
  bool enforce_lawrence_pairing = true;
};

// Strict schema: every number must be an exact integer or a "p/q" string
// (decimal floats rejected anywhere in the document), extended indices are
// 1-based and must name exactly the trailing non-paired slots.
InputSpec parse_input_text(const std::string& text, const ParseOptions& opt = {});
InputSpec parse_input(const std::string& path, const ParseOptions& opt = {});

struct Report {
  std::string command;
  std::string digest;
  std::vector<ValidationCheck> checks;
  bool ok = true;
  std::string json;    // canonical serialization: sorted keys, exact strings
  double seconds = 0;  // wall time; reported on stderr only, never serialized
};

// command is one of: validate, chambers, wallcross, fan, fixed-points, fm,
// monodromy, ifunction, verify. Reports are deterministic byte for byte.
Report run_command(const std::string& command, const InputSpec& spec, bool pretty = false);

}  // namespace wallcross
