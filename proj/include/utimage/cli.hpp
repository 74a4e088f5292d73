#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace utimage {

// Runs one CLI invocation (subcommands: classify, witness, span, oracle,
// decompose, eval) and writes a single JSON document to `out`. Returns the
// process exit code: 0 on success, 2 on domain errors, 1 on internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace utimage
