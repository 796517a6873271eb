// Command-line front end. Exit codes: 0 success or positive verdict,
// 1 non-entailment, 2 usage, parse, or verification error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "htcraig/calculus.hpp"

namespace htcraig::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Indented text rendering, one node per line: "rule  sequent  [H]".
std::string format_proof(const ProofNode& node);

} // namespace htcraig::cli
