#pragma once

#include <tanvar/rational.hpp>

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tanvar {

struct JetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Order of a jet: a natural number, or AboveTruncation when every stored coefficient vanishes.
class ExtOrder {
public:
    constexpr ExtOrder() = default; // AboveTruncation
    constexpr explicit ExtOrder(unsigned v) : value_(v) {}

    static constexpr ExtOrder above_truncation() { return ExtOrder(); }

    constexpr bool finite() const { return value_.has_value(); }
    constexpr unsigned value() const
    {
        if (!value_) throw JetError("order is above truncation");
        return *value_;
    }

    friend constexpr bool operator==(const ExtOrder&, const ExtOrder&) = default;
    friend constexpr std::strong_ordering operator<=>(const ExtOrder& a, const ExtOrder& b)
    {
        if (a.finite() && b.finite()) return *a.value_ <=> *b.value_;
        if (a.finite()) return std::strong_ordering::less;
        if (b.finite()) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend constexpr bool operator==(const ExtOrder& a, unsigned v) { return a.finite() && *a.value_ == v; }

private:
    std::optional<unsigned> value_;
};

std::string to_string(const ExtOrder& o);

struct NotDivisible {
    std::string reason;
};

/// Truncated power series c_0 + c_1 t + ... + c_K t^K with exact rational coefficients.
/// Coefficients above K are unknown, never implicitly zero.
class Jet1 {
public:
    explicit Jet1(unsigned truncation) : coeffs_(truncation + 1) {}
    explicit Jet1(std::vector<Rational> coeffs);

    static Jet1 constant(const Rational& c, unsigned truncation);
    static Jet1 monomial(unsigned degree, const Rational& c, unsigned truncation);
    static Jet1 variable(unsigned truncation) { return monomial(1, 1, truncation); }

    unsigned truncation() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    std::span<const Rational> coefficients() const { return coeffs_; }
    const Rational& operator[](unsigned k) const;
    void set(unsigned k, const Rational& c);

    ExtOrder order() const;
    bool is_zero() const { return !order().finite(); }

    /// Drops coefficients above `k`; `k` must not exceed the current truncation.
    Jet1 truncated(unsigned k) const;

    Jet1& operator+=(const Jet1& b);
    Jet1& operator-=(const Jet1& b);
    Jet1& operator*=(const Rational& c);
    friend Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
    friend Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
    friend Jet1 operator*(Jet1 a, const Rational& c) { return a *= c; }
    friend Jet1 operator*(const Rational& c, Jet1 a) { return a *= c; }
    friend Jet1 operator*(const Jet1& a, const Jet1& b);
    Jet1 operator-() const { return *this * Rational(-1); }

    /// d/dt; the result has truncation K-1.
    Jet1 derivative() const;
    Jet1 derivative(unsigned times) const;

    /// Jet of t -> integral_0^t s^l j(s) ds, truncation K+l+1.
    Jet1 integrate_weighted(unsigned l) const;

    /// Quotient q with a = q*b valid through degree K - ord(b).
    std::variant<Jet1, NotDivisible> divide(const Jet1& b) const;

    /// Divides by t^k exactly; throws if a coefficient below k is nonzero.
    Jet1 divide_by_power(unsigned k) const;

    /// Jet of j(phi(t)) for ord(phi) >= 1.
    Jet1 compose(const Jet1& phi) const;

    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;

    std::string to_string(std::string_view var = "t") const;

    friend bool operator==(const Jet1&, const Jet1&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Both arguments truncated to their common (smaller) truncation.
std::pair<Jet1, Jet1> common_truncation(const Jet1& a, const Jet1& b);

} // namespace tanvar
