#include "mesh.hpp"

#include <tanvar/rational.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tanvar::cli {

double evaluate(const Jet2& j, double x, double y)
{
    const unsigned K = j.truncation();
    std::vector<double> xp(K + 1, 1.0), yp(K + 1, 1.0);
    for (unsigned k = 1; k <= K; ++k) {
        xp[k] = xp[k - 1] * x;
        yp[k] = yp[k - 1] * y;
    }
    double sum = 0.0;
    for (unsigned d = 0; d <= K; ++d) {
        for (unsigned b = 0; b <= d; ++b) {
            const Rational& c = j.coeff(d - b, b);
            if (!tanvar::is_zero(c)) sum += c.get_d() * xp[d - b] * yp[b];
        }
    }
    return sum;
}

Mesh sample_map(const std::vector<Jet2>& components, const SamplingOptions& opts, std::string provenance)
{
    if (opts.grid < 2) throw std::invalid_argument("grid must be at least 2");
    if (!(opts.lo < opts.hi)) throw std::invalid_argument("range must satisfy lo < hi");
    for (std::size_t c : opts.coords) {
        if (c < 1 || c > components.size()) {
            throw std::invalid_argument("coordinate " + std::to_string(c) + " out of range 1.." + std::to_string(components.size()));
        }
    }
    Mesh mesh;
    mesh.provenance = std::move(provenance);
    const unsigned n = opts.grid;
    const double step = (opts.hi - opts.lo) / (n - 1);
    for (unsigned i = 0; i < n; ++i) {
        const double x = opts.lo + step * i;
        for (unsigned j = 0; j < n; ++j) {
            const double y = opts.lo + step * j;
            std::array<double, 3> p{};
            for (int k = 0; k < 3; ++k) p[k] = evaluate(components[opts.coords[k] - 1], x, y);
            mesh.vertices.push_back(p);
        }
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
        for (unsigned j = 0; j + 1 < n; ++j) {
            const std::size_t a = static_cast<std::size_t>(i) * n + j + 1;
            mesh.faces.push_back({a, a + n, a + n + 1, a + 1});
        }
    }
    return mesh;
}

void write_obj(std::ostream& out, const Mesh& mesh)
{
    if (!mesh.provenance.empty()) out << "# " << mesh.provenance << '\n';
    char buf[96];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", v[0], v[1], v[2]);
        out << buf;
    }
    for (const auto& f : mesh.faces) {
        out << 'f';
        for (std::size_t i : f) out << ' ' << i;
        out << '\n';
    }
}

Mesh read_obj(std::istream& in)
{
    Mesh mesh;
    for (std::string line; std::getline(in, line);) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            std::array<double, 3> p{};
            if (!(ls >> p[0] >> p[1] >> p[2])) throw std::invalid_argument("bad vertex line: " + line);
            mesh.vertices.push_back(p);
        } else if (tag == "f") {
            std::vector<std::size_t> f;
            for (std::size_t i; ls >> i;) f.push_back(i);
            mesh.faces.push_back(std::move(f));
        } else if (tag == "#" && mesh.provenance.empty()) {
            std::getline(ls >> std::ws, mesh.provenance);
        }
    }
    return mesh;
}

std::pair<double, double> parse_range(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("range must be 'lo,hi'");
    double lo = 0, hi = 0;
    try {
        lo = std::stod(text.substr(0, comma));
        hi = std::stod(text.substr(comma + 1));
    } catch (const std::logic_error&) {
        throw ParseError("range must be 'lo,hi' with decimal bounds, got '" + text + "'");
    }
    if (!(lo < hi)) throw ParseError("range must satisfy lo < hi");
    return {lo, hi};
}

std::array<std::size_t, 3> parse_coords(const std::string& text)
{
    std::array<std::size_t, 3> out{};
    std::string copy = text;
    for (char& c : copy) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(copy);
    for (auto& c : out) {
        if (!(in >> c) || c == 0) throw ParseError("coords must be three 1-based indices 'i,j,k'");
    }
    std::string rest;
    if (in >> rest) throw ParseError("coords must be exactly three indices");
    return out;
}

} // namespace tanvar::cli
