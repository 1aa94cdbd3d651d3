#pragma once

#include <string>

#include <json.hpp>

#include "flatlab/dsl.hpp"

namespace flatlab {

enum class Command { Analyze, Varpi, Tor, Hilbert, EnumIdeals, Export };

struct CommandOptions {
    std::optional<size_t> order_n;         // varpi/hilbert --n
    std::optional<std::string> ideal_text; // tor --ideal
    std::optional<DegreeWindow> window;    // hilbert --window
    std::optional<size_t> colength;        // enum-ideals --colength
    std::string dialect;                   // export --dialect
    std::string target = "auto";           // analyze --target module|graded|auto
};

// Exit codes: 0 flat/success, 10 not flat, 11 flat up to the checked order,
// 2 input error, 3 internal cross-check disagreement.
inline constexpr int kExitFlat = 0;
inline constexpr int kExitNotFlat = 10;
inline constexpr int kExitFlatUpToOrder = 11;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDisagreement = 3;

struct RunResult {
    int exit_code = 0;
    nlohmann::ordered_json json;
    std::string human;
};

/// Dispatches a parsed problem to the analysis layers and assembles the
/// JSON report. Never throws; failures land in the exit code and report.
RunResult run_command(Command cmd, const ProblemFile& pf, const CommandOptions& opts);

/// FNV-1a hash of the input text, as a 16-digit hex string.
std::string input_digest(std::string_view text);

} // namespace flatlab
