#include <tanvar/jet1.hpp>

#include "format.hpp"

#include <algorithm>

namespace tanvar {

std::string to_string(const ExtOrder& o)
{
    return o.finite() ? std::to_string(o.value()) : std::string("above truncation");
}

namespace {

void require_same_truncation(const Jet1& a, const Jet1& b)
{
    if (a.truncation() != b.truncation()) {
        throw JetError("truncation mismatch: " + std::to_string(a.truncation()) + " vs " +
                       std::to_string(b.truncation()));
    }
}

} // namespace

Jet1::Jet1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw JetError("a jet needs at least the constant coefficient");
}

Jet1 Jet1::constant(const Rational& c, unsigned truncation)
{
    Jet1 j(truncation);
    j.coeffs_[0] = c;
    return j;
}

Jet1 Jet1::monomial(unsigned degree, const Rational& c, unsigned truncation)
{
    Jet1 j(truncation);
    if (degree <= truncation) j.coeffs_[degree] = c;
    return j;
}

const Rational& Jet1::operator[](unsigned k) const
{
    if (k > truncation()) {
        throw JetError("coefficient t^" + std::to_string(k) + " is above truncation " + std::to_string(truncation()));
    }
    return coeffs_[k];
}

void Jet1::set(unsigned k, const Rational& c)
{
    if (k > truncation()) throw JetError("cannot set a coefficient above truncation");
    coeffs_[k] = c;
}

ExtOrder Jet1::order() const
{
    for (unsigned k = 0; k < coeffs_.size(); ++k) {
        if (!tanvar::is_zero(coeffs_[k])) return ExtOrder(k);
    }
    return ExtOrder::above_truncation();
}

Jet1 Jet1::truncated(unsigned k) const
{
    if (k > truncation()) throw JetError("cannot raise truncation without inventing coefficients");
    return Jet1(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + k + 1));
}

Jet1& Jet1::operator+=(const Jet1& b)
{
    require_same_truncation(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
    return *this;
}

Jet1& Jet1::operator-=(const Jet1& b)
{
    require_same_truncation(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
    return *this;
}

Jet1& Jet1::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Jet1 operator*(const Jet1& a, const Jet1& b)
{
    require_same_truncation(a, b);
    const unsigned K = a.truncation();
    Jet1 r(K);
    for (unsigned i = 0; i <= K; ++i) {
        if (is_zero(a.coeffs_[i])) continue;
        for (unsigned j = 0; i + j <= K; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

Jet1 Jet1::derivative() const
{
    if (truncation() == 0) throw JetError("derivative of a 0-jet carries no information");
    Jet1 r(truncation() - 1);
    for (unsigned k = 1; k <= truncation(); ++k) r.coeffs_[k - 1] = coeffs_[k] * k;
    return r;
}

Jet1 Jet1::derivative(unsigned times) const
{
    Jet1 r = *this;
    for (unsigned i = 0; i < times; ++i) r = r.derivative();
    return r;
}

Jet1 Jet1::integrate_weighted(unsigned l) const
{
    Jet1 r(truncation() + l + 1);
    for (unsigned k = 0; k <= truncation(); ++k) r.coeffs_[k + l + 1] = coeffs_[k] / Rational(k + l + 1);
    return r;
}

std::variant<Jet1, NotDivisible> Jet1::divide(const Jet1& b) const
{
    const auto ob = b.order();
    if (!ob.finite()) throw JetError("division by a jet that vanishes within truncation");
    const unsigned m = ob.value();
    const unsigned K = std::min(truncation(), b.truncation());
    if (m > K) throw JetError("divisor order exceeds common truncation");
    for (unsigned k = 0; k < m; ++k) {
        if (!tanvar::is_zero(coeffs_[k])) {
            return NotDivisible{"dividend has order " + std::to_string(k) + " < divisor order " + std::to_string(m)};
        }
    }
    const unsigned Q = K - m;
    Jet1 q(Q);
    const Rational& lead = b.coeffs_[m];
    for (unsigned n = 0; n <= Q; ++n) {
        Rational acc = coeffs_[n + m];
        for (unsigned i = 1; i <= n; ++i) acc -= b.coeffs_[m + i] * q.coeffs_[n - i];
        q.coeffs_[n] = acc / lead;
    }
    return q;
}

Jet1 Jet1::divide_by_power(unsigned k) const
{
    if (k > truncation()) throw JetError("cannot divide by t^k above truncation");
    for (unsigned i = 0; i < k; ++i) {
        if (!tanvar::is_zero(coeffs_[i])) {
            throw JetError("t^" + std::to_string(k) + " does not divide the jet (coefficient of t^" +
                           std::to_string(i) + " is nonzero)");
        }
    }
    return Jet1(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Jet1 Jet1::compose(const Jet1& phi) const
{
    if (!tanvar::is_zero(phi.coeffs_[0])) throw JetError("composition needs ord(phi) >= 1");
    const unsigned K = std::min(truncation(), phi.truncation());
    const Jet1 p = phi.truncated(K);
    // Horner from the top degree; every power of p has order >= its exponent.
    Jet1 r(K);
    for (unsigned k = K + 1; k-- > 0;) {
        r = r * p;
        r.coeffs_[0] += coeffs_[k];
    }
    return r;
}

Rational Jet1::evaluate(const Rational& t) const
{
    Rational r = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) r = r * t + coeffs_[k];
    return r;
}

double Jet1::evaluate(double t) const
{
    double r = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) r = r * t + coeffs_[k].get_d();
    return r;
}

std::string Jet1::to_string(std::string_view var) const
{
    detail::TermWriter w;
    for (unsigned k = 0; k <= truncation(); ++k) {
        if (tanvar::is_zero(coeffs_[k])) continue;
        w.add(coeffs_[k], {{var, k}});
    }
    return w.str();
}

std::pair<Jet1, Jet1> common_truncation(const Jet1& a, const Jet1& b)
{
    const unsigned k = std::min(a.truncation(), b.truncation());
    return {a.truncated(k), b.truncated(k)};
}

} // namespace tanvar
