#include <tanvar/jet2.hpp>
#include <tanvar/linalg.hpp>

#include "format.hpp"

#include <algorithm>

namespace tanvar {

namespace {

void require_same_truncation(const Jet2& a, const Jet2& b)
{
    if (a.truncation() != b.truncation()) {
        throw JetError("truncation mismatch: " + std::to_string(a.truncation()) + " vs " +
                       std::to_string(b.truncation()));
    }
}

} // namespace

Jet2::Jet2(unsigned truncation)
    : truncation_(truncation), coeffs_(static_cast<std::size_t>(truncation + 1) * (truncation + 2) / 2)
{
    if (truncation > kMaxJet2Truncation) {
        throw JetError("two-variable truncation " + std::to_string(truncation) + " exceeds the supported " +
                       std::to_string(kMaxJet2Truncation));
    }
}

Jet2 Jet2::constant(const Rational& c, unsigned truncation)
{
    Jet2 j(truncation);
    j.coeffs_[0] = c;
    return j;
}

Jet2 Jet2::monomial(unsigned i, unsigned j, const Rational& c, unsigned truncation)
{
    Jet2 r(truncation);
    if (i + j <= truncation) r.coeffs_[index(i, j)] = c;
    return r;
}

Jet2 Jet2::variable(Var v, unsigned truncation)
{
    return v == Var::first ? monomial(1, 0, 1, truncation) : monomial(0, 1, 1, truncation);
}

Jet2 Jet2::from_jet1(const Jet1& j, Var v)
{
    Jet2 r(j.truncation());
    for (unsigned k = 0; k <= j.truncation(); ++k) {
        r.coeffs_[v == Var::first ? index(k, 0) : index(0, k)] = j[k];
    }
    return r;
}

const Rational& Jet2::coeff(unsigned i, unsigned j) const
{
    if (i + j > truncation_) throw JetError("bidegree above truncation");
    return coeffs_[index(i, j)];
}

void Jet2::set(unsigned i, unsigned j, const Rational& c)
{
    if (i + j > truncation_) throw JetError("bidegree above truncation");
    coeffs_[index(i, j)] = c;
}

ExtOrder Jet2::order() const
{
    for (unsigned d = 0; d <= truncation_; ++d) {
        for (unsigned j = 0; j <= d; ++j) {
            if (!tanvar::is_zero(coeffs_[index(d - j, j)])) return ExtOrder(d);
        }
    }
    return ExtOrder::above_truncation();
}

Jet2 Jet2::truncated(unsigned k) const
{
    if (k > truncation_) throw JetError("cannot raise truncation without inventing coefficients");
    Jet2 r(k);
    std::copy_n(coeffs_.begin(), r.coeffs_.size(), r.coeffs_.begin());
    return r;
}

Jet2 Jet2::times_variable(Var v) const
{
    Jet2 r(truncation_ + 1);
    for (unsigned d = 0; d <= truncation_; ++d) {
        for (unsigned j = 0; j <= d; ++j) {
            const unsigned i = d - j;
            r.coeffs_[v == Var::first ? index(i + 1, j) : index(i, j + 1)] = coeffs_[index(i, j)];
        }
    }
    return r;
}

Jet2 Jet2::homogeneous_part(unsigned d) const
{
    Jet2 r(truncation_);
    if (d > truncation_) return r;
    for (unsigned j = 0; j <= d; ++j) r.coeffs_[index(d - j, j)] = coeffs_[index(d - j, j)];
    return r;
}

Jet2& Jet2::operator+=(const Jet2& b)
{
    require_same_truncation(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& b)
{
    require_same_truncation(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
    return *this;
}

Jet2& Jet2::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Jet2 operator*(const Jet2& a, const Jet2& b)
{
    require_same_truncation(a, b);
    const unsigned K = a.truncation_;
    Jet2 r(K);
    for (unsigned d1 = 0; d1 <= K; ++d1) {
        for (unsigned j1 = 0; j1 <= d1; ++j1) {
            const Rational& ca = a.coeffs_[Jet2::index(d1 - j1, j1)];
            if (tanvar::is_zero(ca)) continue;
            for (unsigned d2 = 0; d1 + d2 <= K; ++d2) {
                for (unsigned j2 = 0; j2 <= d2; ++j2) {
                    const Rational& cb = b.coeffs_[Jet2::index(d2 - j2, j2)];
                    if (tanvar::is_zero(cb)) continue;
                    r.coeffs_[Jet2::index(d1 - j1 + d2 - j2, j1 + j2)] += ca * cb;
                }
            }
        }
    }
    return r;
}

Jet2 Jet2::derivative(Var v) const
{
    if (truncation_ == 0) throw JetError("derivative of a 0-jet carries no information");
    Jet2 r(truncation_ - 1);
    for (unsigned d = 1; d <= truncation_; ++d) {
        for (unsigned j = 0; j <= d; ++j) {
            const unsigned i = d - j;
            const Rational& c = coeffs_[index(i, j)];
            if (tanvar::is_zero(c)) continue;
            if (v == Var::first && i > 0) r.coeffs_[index(i - 1, j)] += c * i;
            if (v == Var::second && j > 0) r.coeffs_[index(i, j - 1)] += c * j;
        }
    }
    return r;
}

Jet2 Jet2::integrate_weighted(Var v, unsigned l) const
{
    Jet2 r(truncation_ + l + 1);
    for (unsigned d = 0; d <= truncation_; ++d) {
        for (unsigned j = 0; j <= d; ++j) {
            const unsigned i = d - j;
            const Rational& c = coeffs_[index(i, j)];
            if (tanvar::is_zero(c)) continue;
            if (v == Var::first) {
                r.coeffs_[index(i + l + 1, j)] = c / Rational(i + l + 1);
            } else {
                r.coeffs_[index(i, j + l + 1)] = c / Rational(j + l + 1);
            }
        }
    }
    return r;
}

std::variant<Jet2, NotDivisible> Jet2::divide(const Jet2& b) const
{
    const auto ob = b.order();
    if (!ob.finite()) throw JetError("division by a jet that vanishes within truncation");
    const unsigned m = ob.value();
    const unsigned K = std::min(truncation_, b.truncation_);
    if (m > K) throw JetError("divisor order exceeds common truncation");
    const unsigned Q = K - m;

    // Unknowns: coefficients of q with total degree <= Q, in index order.
    // Equations: every coefficient of a - q*b through total degree K.
    const std::size_t unknowns = static_cast<std::size_t>(Q + 1) * (Q + 2) / 2;
    const std::size_t equations = static_cast<std::size_t>(K + 1) * (K + 2) / 2;
    RationalMatrix A(equations, RationalVector(unknowns));
    RationalVector rhs(equations);
    for (unsigned d = 0; d <= K; ++d) {
        for (unsigned j = 0; j <= d; ++j) rhs[index(d - j, j)] = coeffs_[index(d - j, j)];
    }
    for (unsigned dq = 0; dq <= Q; ++dq) {
        for (unsigned jq = 0; jq <= dq; ++jq) {
            const std::size_t col = index(dq - jq, jq);
            for (unsigned db = m; dq + db <= K; ++db) {
                for (unsigned jb = 0; jb <= db; ++jb) {
                    const Rational& cb = b.coeffs_[index(db - jb, jb)];
                    if (tanvar::is_zero(cb)) continue;
                    A[index(dq - jq + db - jb, jq + jb)][col] += cb;
                }
            }
        }
    }
    auto sol = solve_linear(A, rhs);
    if (auto* bad = std::get_if<Inconsistent>(&sol)) {
        unsigned d = 0;
        while (static_cast<std::size_t>(d + 1) * (d + 2) / 2 <= bad->row) ++d;
        const unsigned j = static_cast<unsigned>(bad->row - static_cast<std::size_t>(d) * (d + 1) / 2);
        return NotDivisible{"no quotient matches the coefficient of bidegree (" + std::to_string(d - j) + "," +
                            std::to_string(j) + ")"};
    }
    const auto& x = std::get<RationalVector>(sol);
    Jet2 q(Q);
    std::copy(x.begin(), x.end(), q.coeffs_.begin());
    return q;
}

Jet1 Jet2::restrict_to_axis(Var v) const
{
    Jet1 r(truncation_);
    for (unsigned k = 0; k <= truncation_; ++k) {
        r.set(k, v == Var::first ? coeffs_[index(0, k)] : coeffs_[index(k, 0)]);
    }
    return r;
}

Rational Jet2::evaluate(const Rational& x, const Rational& y) const
{
    Rational total = 0;
    for (unsigned d = 0; d <= truncation_; ++d) {
        for (unsigned j = 0; j <= d; ++j) {
            const Rational& c = coeffs_[index(d - j, j)];
            if (tanvar::is_zero(c)) continue;
            Rational term = c;
            for (unsigned k = 0; k < d - j; ++k) term *= x;
            for (unsigned k = 0; k < j; ++k) term *= y;
            total += term;
        }
    }
    return total;
}

std::string Jet2::to_string(std::string_view x, std::string_view y) const
{
    detail::TermWriter w;
    for (unsigned d = 0; d <= truncation_; ++d) {
        for (unsigned j = 0; j <= d; ++j) w.add(coeffs_[index(d - j, j)], {{x, d - j}, {y, j}});
    }
    return w.str();
}

std::pair<Jet2, Jet2> common_truncation(const Jet2& a, const Jet2& b)
{
    const unsigned k = std::min(a.truncation(), b.truncation());
    return {a.truncated(k), b.truncated(k)};
}

} // namespace tanvar
