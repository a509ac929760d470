#include <tanvar/linalg.hpp>

namespace tanvar {

void EchelonBasis::reduce(RationalVector& v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (is_zero(v[p])) continue;
        const Rational f = v[p];
        const Rational& piv = rows_[r][p];
        for (std::size_t j = 0; j < dim_; ++j) v[j] = piv * v[j] - f * rows_[r][j];
    }
}

bool EchelonBasis::add(RationalVector v)
{
    if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
    reduce(v);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (!is_zero(v[j])) {
            rows_.push_back(std::move(v));
            pivots_.push_back(j);
            return true;
        }
    }
    return false;
}

bool EchelonBasis::contains(RationalVector v) const
{
    if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
    reduce(v);
    for (const auto& x : v) {
        if (!is_zero(x)) return false;
    }
    return true;
}

std::size_t rank(const RationalMatrix& m)
{
    if (m.empty()) return 0;
    EchelonBasis basis(m.front().size());
    for (const auto& row : m) basis.add(row);
    return basis.rank();
}

std::variant<RationalVector, Inconsistent> solve_linear(const RationalMatrix& a, const RationalVector& b)
{
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("right-hand side length mismatch");
    const std::size_t cols = rows == 0 ? 0 : a.front().size();

    // Equations are inserted one at a time, so the reported row is the first one
    // contradicting all equations before it.
    RationalMatrix basis;
    RationalVector basis_rhs;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw std::invalid_argument("ragged matrix");
        RationalVector row = a[i];
        Rational rhs = b[i];
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const std::size_t p = pivots[r];
            if (is_zero(row[p])) continue;
            const Rational f = row[p];
            for (std::size_t j = 0; j < cols; ++j) row[j] -= f * basis[r][j];
            rhs -= f * basis_rhs[r];
        }
        std::size_t p = 0;
        while (p < cols && is_zero(row[p])) ++p;
        if (p == cols) {
            if (!is_zero(rhs)) return Inconsistent{i};
            continue;
        }
        const Rational inv = 1 / row[p];
        for (auto& x : row) x *= inv;
        rhs *= inv;
        basis.push_back(std::move(row));
        basis_rhs.push_back(std::move(rhs));
        pivots.push_back(p);
    }

    // Row r is zero at the pivots of rows inserted before it, so solve newest first.
    RationalVector x(cols);
    for (std::size_t r = basis.size(); r-- > 0;) {
        Rational v = basis_rhs[r];
        for (std::size_t s2 = r + 1; s2 < basis.size(); ++s2) v -= basis[r][pivots[s2]] * x[pivots[s2]];
        x[pivots[r]] = v;
    }
    return x;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix inv(n, RationalVector(n));
    for (std::size_t c = 0; c < n; ++c) {
        RationalVector e(n);
        e[c] = 1;
        auto sol = solve_linear(m, e);
        if (std::holds_alternative<Inconsistent>(sol) || rank(m) < n) {
            throw std::invalid_argument("matrix is singular");
        }
        const auto& x = std::get<RationalVector>(sol);
        for (std::size_t r = 0; r < n; ++r) inv[r][c] = x[r];
    }
    return inv;
}

} // namespace tanvar
