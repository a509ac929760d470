#pragma once

#include <tanvar/jet1.hpp>

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tanvar {

/// Largest total degree a Jet2 may carry.
inline constexpr unsigned kMaxJet2Truncation = 24;

/// Two-variable truncated power series sum c_{ij} x^i y^j over i + j <= K,
/// stored as a dense triangular table. "x" and "y" are positional; callers
/// pick display names (s,t), (u,v), (u,t) when printing.
class Jet2 {
public:
    enum class Var { first = 0, second = 1 };

    explicit Jet2(unsigned truncation);

    static Jet2 constant(const Rational& c, unsigned truncation);
    static Jet2 monomial(unsigned i, unsigned j, const Rational& c, unsigned truncation);
    static Jet2 variable(Var v, unsigned truncation);
    /// Embeds a one-variable jet as a function of `v` alone.
    static Jet2 from_jet1(const Jet1& j, Var v);

    unsigned truncation() const { return truncation_; }
    const Rational& coeff(unsigned i, unsigned j) const;
    void set(unsigned i, unsigned j, const Rational& c);

    /// Lowest total degree carrying a nonzero coefficient.
    ExtOrder order() const;
    bool is_zero() const { return !order().finite(); }

    Jet2 truncated(unsigned k) const;
    /// Multiplication by the variable `v`; truncation rises by one since no unknown
    /// coefficient is touched.
    Jet2 times_variable(Var v) const;
    /// Homogeneous part of total degree d as a Jet2 of the same truncation.
    Jet2 homogeneous_part(unsigned d) const;

    Jet2& operator+=(const Jet2& b);
    Jet2& operator-=(const Jet2& b);
    Jet2& operator*=(const Rational& c);
    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(Jet2 a, const Rational& c) { return a *= c; }
    friend Jet2 operator*(const Rational& c, Jet2 a) { return a *= c; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    Jet2 operator-() const { return *this * Rational(-1); }

    /// Partial derivative; truncation drops by one.
    Jet2 derivative(Var v) const;
    /// Integral from 0 of s^l times the jet along `v` (the other variable held fixed);
    /// truncation K+l+1.
    Jet2 integrate_weighted(Var v, unsigned l) const;

    /// q with a = q*b valid through total degree K - ord(b), or NotDivisible.
    std::variant<Jet2, NotDivisible> divide(const Jet2& b) const;

    /// Restriction to the line where `v` vanishes, as a one-variable jet in the other variable.
    Jet1 restrict_to_axis(Var v) const;

    Rational evaluate(const Rational& x, const Rational& y) const;

    std::string to_string(std::string_view x = "x", std::string_view y = "y") const;

    friend bool operator==(const Jet2&, const Jet2&) = default;

private:
    static std::size_t index(unsigned i, unsigned j)
    {
        const unsigned d = i + j;
        return static_cast<std::size_t>(d) * (d + 1) / 2 + j;
    }

    unsigned truncation_;
    std::vector<Rational> coeffs_; // grouped by total degree
};

std::pair<Jet2, Jet2> common_truncation(const Jet2& a, const Jet2& b);

} // namespace tanvar
