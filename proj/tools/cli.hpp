#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tbcalc/document.hpp"

namespace tbcalc::cli {

/// Process exit codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfiniteOrder = 2;

struct Options {
    bool json = false;
    bool verbose = false;
};

/// Report for one command: text (or a JSON object) plus its exit code.
struct Report {
    int exit_code = kExitSuccess;
    std::string output;
    std::vector<std::string> warnings;
};

/// Throws InputError when the document has no knot block.
Report cmd_tb(const InputDocument& doc, const Options& opts);
Report cmd_homology(const InputDocument& doc, const Options& opts);
/// Writes the stabilized document to `output_path`. Throws InputError for
/// heegaard documents or a missing knot.
Report cmd_stabilize(const InputDocument& doc, int sign, const std::string& output_path, const Options& opts);
/// Heegaard document for an openbook input; throws InputError otherwise.
InputDocument cmd_convert(const InputDocument& doc);

/// Full command line: `tbcalc [--json] [-v] [--stdin] <tb|homology|stabilize|convert> [FILE] ...`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tbcalc::cli
