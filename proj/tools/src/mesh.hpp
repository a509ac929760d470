#pragma once

#include <tanvar/jet2.hpp>

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace tanvar::cli {

struct SamplingOptions {
    double lo = -1.0;
    double hi = 1.0;
    unsigned grid = 50;
    std::array<std::size_t, 3> coords{1, 2, 3}; // 1-based components
};

struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::vector<std::size_t>> faces; // 1-based vertex indices
    std::string provenance;
};

/// Samples three components of a two-variable polynomial map on a grid x grid lattice of
/// [lo, hi]^2; faces are the grid quadrilaterals.
Mesh sample_map(const std::vector<Jet2>& components, const SamplingOptions& opts, std::string provenance);

/// Coefficients converted to double once; evaluation at a point is then a plain double sum.
double evaluate(const Jet2& j, double x, double y);

/// "v x y z" lines with 9 significant digits, then "f i j k l" lines.
void write_obj(std::ostream& out, const Mesh& mesh);
Mesh read_obj(std::istream& in);

/// Parses "lo,hi" and "i,j,k".
std::pair<double, double> parse_range(const std::string& text);
std::array<std::size_t, 3> parse_coords(const std::string& text);

} // namespace tanvar::cli
