#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowpart {

/// Runs one command of the flowpart tool: parses `args` (program name
/// excluded), reads graph or clutter input from the files named in the
/// options or from `in`, writes the command's output to `out` and
/// diagnostics to `err`.
///
/// Analyzer commands emit a JSON envelope (or a human summary with
/// --format pretty); transformer commands (gen, minor, terminal-paths,
/// blocker) emit the graph/clutter text format so they compose in shell
/// pipelines.
///
/// Exit status: 0 = computed, with the verdict — including negative ones —
/// in the payload; 2 = usage or input error; 3 = a resource cap or deadline
/// left the computation inconclusive; 4 = a structural guarantee was
/// falsified (never the input's fault).
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace flowpart
