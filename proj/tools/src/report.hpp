#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tanvar::cli {

enum class Format { Plain, Structured };
Format parse_format(std::string_view text);

/// Exit-code contract for scripting.
enum ExitCode : int { kSuccess = 0, kGuardFailure = 2, kInconclusive = 3 };

/// A command's result: human-readable lines, the same content as ordered JSON, and an exit code.
struct Report {
    std::string command;
    std::vector<std::string> lines;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    int exit_code = kSuccess;

    void line(std::string text) { lines.push_back(std::move(text)); }
    void escalate(int code)
    {
        if (code > exit_code) exit_code = code;
    }
};

/// Plain: the lines, newline-terminated. Structured: {"command", "exit_code", ...data} as
/// two-space indented JSON. Both are byte-deterministic for a given report.
std::string render(const Report& r, Format f);

} // namespace tanvar::cli
