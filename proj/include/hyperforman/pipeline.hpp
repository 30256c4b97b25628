#pragma once

#include "hyperforman/complex.hpp"
#include "hyperforman/curvature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperforman::cli {

enum class Command { validate, chi, curvature, gauss_bonnet, filtrate, report };
enum class FormatChoice { json, text, auto_detect };
enum class ChiMethod { delta, rank, geometric, all };
enum class OutputFormat { json, csv, human };

/// Exit statuses; nothing else is ever returned.
enum ExitCode : int {
    kOk = 0,
    kValidation = 2,
    kIo = 3,
    kResourceCap = 4,
    kGaussBonnetViolation = 5,
};

struct RunConfig {
    std::vector<std::string> inputs;
    FormatChoice format = FormatChoice::auto_detect;
    bool singletons = true;
    std::optional<std::size_t> skeleton_dim; ///< unbounded when empty
    ChiMethod chi_method = ChiMethod::all;
    bool directed = false;
    std::optional<DegreeMode> degree_mode;
    std::optional<TriangleMode> triangle_mode;
    OutputFormat output = OutputFormat::human;
    std::uint64_t chain_cap = kDefaultChainCap;
};

struct CommandResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

/// Chain cap from HYPERFORMAN_CHAIN_CAP, else the library default.
std::uint64_t chain_cap_from_environment();

/// Runs one subcommand over every input. Inputs are processed independently
/// (concurrently when there are several); output is assembled in input order
/// and the exit code is the first nonzero per-input status.
CommandResult run(Command command, const RunConfig& config);

/// Same, for a single in-memory document.
CommandResult run_on_text(Command command, const RunConfig& config, const std::string& document,
                          const std::string& name, FormatChoice resolved_format);

} // namespace hyperforman::cli
