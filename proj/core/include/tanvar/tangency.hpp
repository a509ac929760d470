#pragma once

#include <tanvar/curves.hpp>
#include <tanvar/jet2.hpp>
#include <tanvar/poly.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tanvar {

/// Tan(γ)(s,t) = γ(t) + s γ'(t)/t^{a_1-1}. Components are Jet2 in (s,t):
/// Var::first is s, Var::second is t.
struct TangentMapGerm {
    CurveGerm source;
    TypeSequence source_type;
    std::vector<Jet2> components;
};

/// Thrown when x_i' is not divisible by t^{a_1-1}; carries the 1-based component index.
struct DivisibilityError : JetError {
    DivisibilityError(std::size_t component, const std::string& what);
    std::size_t component;
};

TangentMapGerm tangent_map(const CurveGerm& gamma);

/// P_i = W_{i2}/W_{12}, Q_i = W_{1i}/W_{12} for one component i >= 3.
struct LiftCoefficient {
    std::size_t component; // 1-based i
    Jet1 p;
    Jet1 q;
};

struct NotFrontalUpTo {
    unsigned truncation;
    std::size_t component; // 1-based index whose quotient failed
    std::string reason;
};

using LiftResult = std::variant<std::vector<LiftCoefficient>, NotFrontalUpTo>;

/// W_ij = x_i' x_j'' - x_j' x_i'' (1-based indices).
Jet1 wronskian(const CurveGerm& gamma, std::size_t i, std::size_t j);

/// Wronskian quotients of the Grassmann lift. Throws JetError when W_12 vanishes within truncation.
LiftResult grassmann_lift(const TangentMapGerm& t);

/// Residual df_i - P_i df_1 - Q_i df_2 as its (ds, dt) parts, at the largest truncation
/// where every term is known.
std::pair<Jet2, Jet2> lift_residual(const TangentMapGerm& t, const LiftCoefficient& c);

/// dh = Σ p_j dg_j, verified coefficient-wise on the 1-form through total degree `verified_order`.
struct OpeningCertificate {
    std::vector<Jet2> multipliers;
    unsigned verified_order;
};

/// The first coefficient equation of dh = Σ p_j dg_j that admits no solution.
struct Refuted {
    unsigned degree;        // total degree of the offending form coefficient
    unsigned form_component; // 0: d(first variable), 1: d(second variable)
    unsigned i, j;           // bidegree
    std::string witness;
};

using MembershipResult = std::variant<OpeningCertificate, Refuted>;

/// Solves dh = Σ p_j dg_j for p_j of total degree <= order, checking every form
/// coefficient of total degree <= order. Free coefficients are set to zero, lower degrees
/// preferred. Needs g_j and h known through degree order+1.
MembershipResult jacobi_membership(const std::vector<Jet2>& g, const Jet2& h, unsigned order);

/// Re-checks a certificate by direct substitution.
bool verify_certificate(const std::vector<Jet2>& g, const Jet2& h, const OpeningCertificate& cert);

/// For each i >= 3, a certificate that df_i lies in the Jacobi module of (f_1, f_2),
/// built from the Grassmann lift coefficients.
std::variant<std::vector<OpeningCertificate>, NotFrontalUpTo> opening_check(const TangentMapGerm& t);

struct NamedPoly {
    std::string name;
    Poly poly;
};

/// Morin map data for Prop-type versal openings: F = t^{k+1} + Σ λ_j t^j,
/// G_i = Σ μ_ij t^j, generators 1, F_(1..k), G_i(1..k-1), with
/// P_(l) = ∫_0^t s^l P(s) ds.
struct MorinOpening {
    unsigned k;
    unsigned m;
    std::vector<std::string> vars;
    Poly f;
    std::vector<Poly> g;
    std::vector<NamedPoly> generators; // starts with the constant 1
};

MorinOpening morin_versal_opening(unsigned k, unsigned m);

/// Solution of F = F_t = ... = ∂^{N-1}F/∂t^{N-1} = 0 for x_2..x_{N+1} in terms of (t, x_1).
struct GeneratingFamilySolution {
    std::string pattern; // "I(N,r)", "II(N,i)" or "III(N)"
    Poly family;         // F in (t, x_1, ..., x_{N+1})
    std::vector<Poly> solution; // x_2, ..., x_{N+1} over variables (t, x1)
};

struct PatternMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Name of the generating-family pattern A belongs to, if any.
std::optional<std::string> generating_family_pattern(const TypeSequence& a);

GeneratingFamilySolution generating_family_tangent(const TypeSequence& a);

/// μ with μ' = ν λ' - λ ν' and μ(0) = 0.
Jet1 contact_integral_mu(const Jet1& lambda, const Jet1& nu);

/// det(γ', γ'', γ''') for a curve in R^3; truncation drops by three.
Jet1 osculating_determinant(const Jet1& x, const Jet1& y, const Jet1& z);

} // namespace tanvar
