#include <tanvar/poly.hpp>

#include "format.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tanvar {

namespace {

unsigned total(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0U);
}

} // namespace

Poly::Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Poly Poly::constant(std::vector<std::string> vars, const Rational& c)
{
    Exponents zero(vars.size(), 0);
    return monomial(std::move(vars), std::move(zero), c);
}

Poly Poly::variable(std::vector<std::string> vars, std::size_t index)
{
    if (index >= vars.size()) throw std::out_of_range("variable index out of range");
    Exponents e(vars.size(), 0);
    e[index] = 1;
    return monomial(std::move(vars), std::move(e), 1);
}

Poly Poly::monomial(std::vector<std::string> vars, Exponents e, const Rational& c)
{
    if (e.size() != vars.size()) throw std::invalid_argument("exponent arity mismatch");
    Poly p(std::move(vars));
    p.add_term(e, c);
    return p;
}

Rational Poly::coeff(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    if (tanvar::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (tanvar::is_zero(it->second)) terms_.erase(it);
    }
}

std::optional<unsigned> Poly::order() const
{
    std::optional<unsigned> best;
    for (const auto& [e, c] : terms_) {
        const unsigned d = total(e);
        if (!best || d < *best) best = d;
    }
    return best;
}

std::optional<unsigned> Poly::degree() const
{
    std::optional<unsigned> best;
    for (const auto& [e, c] : terms_) {
        const unsigned d = total(e);
        if (!best || d > *best) best = d;
    }
    return best;
}

unsigned Poly::degree_in(std::size_t var) const
{
    unsigned best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e.at(var));
    return best;
}

Poly Poly::truncated(unsigned k) const
{
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (total(e) <= k) r.terms_.emplace(e, c);
    }
    return r;
}

void Poly::check_compatible(const Poly& b) const
{
    if (vars_ != b.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

Poly& Poly::operator+=(const Poly& b)
{
    check_compatible(b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& b)
{
    check_compatible(b);
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (tanvar::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    a.check_compatible(b);
    Poly r(a.vars_);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::pow(unsigned k) const
{
    Poly r = constant(vars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly Poly::derivative(std::size_t var) const
{
    Poly r(vars_);
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        const unsigned k = e.at(var);
        if (k == 0) continue;
        e[var] = k - 1;
        r.add_term(e, c * k);
    }
    return r;
}

Poly Poly::integrate_weighted(std::size_t var, unsigned l) const
{
    Poly r(vars_);
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        const unsigned k = e.at(var) + l + 1;
        e[var] = k;
        r.add_term(e, c / Rational(k));
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& b) const
{
    check_compatible(b);
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const auto& [lb, cb] = *b.terms_.rbegin();
    Poly rem = *this;
    Poly q(vars_);
    while (!rem.is_zero()) {
        const auto& [lr, cr] = *rem.terms_.rbegin();
        Exponents e(lr.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            e[i] = lr[i] - lb[i];
        }
        Poly step = monomial(vars_, e, cr / cb);
        q += step;
        rem -= step * b;
    }
    return q;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const
{
    check_compatible(value);
    Poly r(vars_);
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        const unsigned k = e.at(var);
        e[var] = 0;
        r += monomial(vars_, e, c) * value.pow(k);
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const
{
    if (point.size() != vars_.size()) throw std::invalid_argument("point arity mismatch");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        }
        s += term;
    }
    return s;
}

double Poly::evaluate(const std::vector<double>& point) const
{
    if (point.size() != vars_.size()) throw std::invalid_argument("point arity mismatch");
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(point[i], static_cast<int>(e[i]));
        s += term;
    }
    return s;
}

std::string Poly::to_string() const
{
    // Ascending total degree, then by exponent vector, so low-order terms lead as in a jet.
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        const unsigned dx = total(x.first), dy = total(y.first);
        if (dx != dy) return dx < dy;
        return x.first > y.first;
    });
    detail::TermWriter w;
    for (const auto& [e, c] : ordered) {
        std::vector<std::pair<std::string_view, unsigned>> powers;
        for (std::size_t i = 0; i < e.size(); ++i) powers.emplace_back(vars_[i], e[i]);
        w.add(c, powers);
    }
    return w.str();
}

} // namespace tanvar
