#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "formint/pform.hpp"
#include "formint/telescoping.hpp"

namespace formint {

/// One CLI invocation: a verb, its flags and positional payload.
struct Command {
  std::string verb;
  std::vector<std::string> vars;
  std::vector<std::string> payload;
  std::string param = "t";
  std::string var;                 // hermite on a scalar
  std::vector<std::string> order;  // elimination order, first eliminated first
  bool early_exit = false;
  std::string P, Q;                // gd in homogeneous coordinates
  unsigned ell = 1;
};

struct CommandOutcome {
  int exit_code = 0;
  nlohmann::json doc;
};

enum ExitCode { kOk = 0, kUsage = 1, kNotClosed = 2, kIrregular = 3, kBadInput = 4, kInternal = 5 };

/// Runs the command; errors become a document with an "error" field and the
/// matching exit code.
CommandOutcome run_command(const Command& c);

nlohmann::json log_term_json(const LogTerm& t);
nlohmann::json primitive_json(const Primitive& p);
nlohmann::json operator_json(const OreOp& L);

}  // namespace formint
