#pragma once

#include <tanvar/rational.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tanvar::detail {

/// Accumulates "c*x^i*y^j" terms into a signed sum; prints "0" when empty.
class TermWriter {
public:
    void add(const Rational& c, const std::vector<std::pair<std::string_view, unsigned>>& powers)
    {
        if (sgn(c) == 0) return;
        std::string mono;
        for (const auto& [name, e] : powers) {
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += name;
            if (e > 1) mono += '^' + std::to_string(e);
        }
        Rational mag = abs(c);
        std::string term;
        if (mono.empty()) {
            term = mag.get_str();
        } else if (mag == 1) {
            term = mono;
        } else {
            term = mag.get_str() + '*' + mono;
        }
        if (out_.empty()) {
            out_ = sgn(c) < 0 ? "-" + term : term;
        } else {
            out_ += sgn(c) < 0 ? " - " : " + ";
            out_ += term;
        }
    }

    std::string str() const { return out_.empty() ? std::string("0") : out_; }

private:
    std::string out_;
};

} // namespace tanvar::detail
