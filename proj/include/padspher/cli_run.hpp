#pragma once

#include <string>
#include <vector>

namespace padspher {

struct RunResult {
    int exit_code = 0;       // 0 ok, 1 verification failure, 2 usage
    std::string json_text;   // the full document, deterministic bytes
};

/// Batch entry point behind the command-line binary: parses argv-style
/// arguments (without the program name), runs one subcommand and returns
/// the JSON document plus the exit code.  Never throws.
RunResult run_cli(const std::vector<std::string>& args);

} // namespace padspher
