#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dc::cli {

/// One machine-readable object per run, printed on standard output.
/// Verdicts map onto exit codes: positive -> 0, negative -> 1
/// (usage and parse errors exit 2 before a result is produced).
struct RunResult {
    std::string command;
    std::string input;
    std::string verdict;
    std::optional<std::vector<int>> colors;  // 0-based vertex index -> colour
    std::optional<std::vector<int>> order;   // 0-based vertex ids
    std::optional<std::vector<int>> witness; // 0-based vertex ids
    std::optional<std::string> detail;
    std::optional<nlohmann::ordered_json> report;
    double timing_ms = 0.0;
    std::optional<std::uint64_t> seed;
    std::vector<std::pair<std::string, nlohmann::ordered_json>> extra;
};

std::string write_result(const RunResult& r);

/// 0 for positive verdicts, 1 for negative ones.
int exit_code_for_verdict(const std::string& verdict);

} // namespace dc::cli
