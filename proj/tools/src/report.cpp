#include "report.hpp"

#include <tanvar/rational.hpp>

namespace tanvar::cli {

Format parse_format(std::string_view text)
{
    if (text == "plain") return Format::Plain;
    if (text == "structured" || text == "json") return Format::Structured;
    throw ParseError("unknown format '" + std::string(text) + "' (expected plain or structured)");
}

std::string render(const Report& r, Format f)
{
    if (f == Format::Plain) {
        std::string out;
        for (const auto& l : r.lines) {
            out += l;
            out += '\n';
        }
        return out;
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["command"] = r.command;
    j["exit_code"] = r.exit_code;
    for (const auto& [k, v] : r.data.items()) j[k] = v;
    return j.dump(2) + '\n';
}

} // namespace tanvar::cli
