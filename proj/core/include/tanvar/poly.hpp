#pragma once

#include <tanvar/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tanvar {

using Exponents = std::vector<unsigned>;

/// Exact sparse polynomial in a fixed, named set of variables. Used where a
/// two-variable jet is too narrow: Morin openings (t, λ_j, μ_ij), generating
/// families (t, x_1), and the four-variable surface tangent map.
class Poly {
public:
    explicit Poly(std::vector<std::string> vars);

    static Poly constant(std::vector<std::string> vars, const Rational& c);
    static Poly variable(std::vector<std::string> vars, std::size_t index);
    static Poly monomial(std::vector<std::string> vars, Exponents e, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    /// Lowest total degree of a nonzero term; nullopt for the zero polynomial.
    std::optional<unsigned> order() const;
    /// Highest total degree; nullopt for zero.
    std::optional<unsigned> degree() const;
    /// Highest exponent of one variable.
    unsigned degree_in(std::size_t var) const;

    /// Drops all terms of total degree above k.
    Poly truncated(unsigned k) const;

    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const { return *this * Rational(-1); }

    Poly pow(unsigned k) const;
    Poly derivative(std::size_t var) const;
    /// Integral from 0 of s^l p along `var`.
    Poly integrate_weighted(std::size_t var, unsigned l) const;
    /// Exact quotient a/b; nullopt if b does not divide a. Division is by
    /// lexicographic leading terms, so the answer is exact when it exists.
    std::optional<Poly> divide_exact(const Poly& b) const;
    /// Substitutes `value` for variable `var`.
    Poly substitute(std::size_t var, const Poly& value) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate(const std::vector<double>& point) const;

    std::string to_string() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void check_compatible(const Poly& b) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_; // zero coefficients never stored
};

} // namespace tanvar
