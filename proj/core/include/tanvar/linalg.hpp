#pragma once

#include <tanvar/rational.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace tanvar {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>; // row-major

/// Incrementally maintained row-echelon basis over Q. Reduction is fraction-free:
/// a candidate v is reduced against a stored row r with pivot p as v <- r[p]*v - v[p]*r.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dimension) : dim_(dimension) {}

    /// Adds v to the span; returns true if the rank increased.
    bool add(RationalVector v);
    /// True if v lies in the current span.
    bool contains(RationalVector v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t dimension() const { return dim_; }

private:
    void reduce(RationalVector& v) const;

    std::size_t dim_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const RationalMatrix& m);

/// The first equation (row index) that cannot be satisfied.
struct Inconsistent {
    std::size_t row;
};

/// Solves A x = b exactly. Among all solutions returns the one whose free
/// variables are zero; pivots are chosen left to right, so callers control
/// which unknowns are preferred by column order.
std::variant<RationalVector, Inconsistent> solve_linear(const RationalMatrix& a, const RationalVector& b);

RationalMatrix inverse(const RationalMatrix& m);

/// Bareiss fraction-free determinant over an integral domain. `exact_div(a, b)`
/// must return a/b and is only invoked when b divides a.
template <typename T, typename ExactDiv>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& zero, const T& one, ExactDiv exact_div)
{
    const std::size_t n = m.size();
    if (n == 0) return one;
    T prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == zero) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == zero) ++swap_row;
            if (swap_row == n) return zero;
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = zero;
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (negate) det = zero - det;
    return det;
}

} // namespace tanvar
