#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperexp/eps_param.hpp"

namespace hyperexp {

/// "RAT" or "RAT(+|-)RATe" with RAT := ["-"] INT ["/" INT]: "1/2" -> (1/2, 0),
/// "0+2e" -> (0, 2), "1-1/3e" -> (1, -1/3). Malformed text raises Error(parse)
/// with the offending column in the message.
EpsParam parse_param(const std::string& text);

/// Comma-separated parse_param list.
std::vector<EpsParam> parse_param_list(const std::string& text);

/// Comma-separated numbers, each "n", "n/d" or a decimal/scientific literal.
std::vector<double> parse_real_list(const std::string& text);

namespace cli {

enum class Verb { expand, oracle, reduce, sum, classify, verify };

struct Command {
    Verb verb;
    std::vector<std::string> options;
};

/// Dispatches one command line (without the program name). Writes the report
/// to out, diagnostics to err; returns the exit code (0 ok, 2 parse, 3 domain,
/// 4 tolerance, 5 internal).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace hyperexp
