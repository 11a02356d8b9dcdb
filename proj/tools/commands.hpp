#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace c3rigid::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kFailure = 2 };

struct Options {
    bool json = true;
    std::uint64_t seed = 0;
    std::string method = "generic";  // generic | frame
    std::string out;                 // SVG path for render
};

/// Runs `command` on the graph document `document`. Reports go to `out`,
/// diagnostics to `err`; returns the process exit code.
int run_check(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err);
int run_certify(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err);
int run_realize(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err);
int run_oracle(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err);
int run_render(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err);

/// Reads `path` and dispatches on `command`. Unreadable files exit 2.
int run_command(std::string_view command, const std::string& path, const Options& opt, std::ostream& out,
                std::ostream& err);

}  // namespace c3rigid::cli
