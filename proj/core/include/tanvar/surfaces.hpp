#pragma once

#include <tanvar/jet2.hpp>
#include <tanvar/poly.hpp>

#include <array>
#include <optional>
#include <string>
#include <variant>

namespace tanvar {

/// Legendre surface germ in RP^5 in the chart x1 = u, x2 = v (Var::first = u).
struct LegendreSurfaceGerm {
    Rational a, b, c, e; // 2-jets: x3 = au²/2 + buv + cv²/2, x4 = bu²/2 + cuv + ev²/2
    Jet2 x3;
    Jet2 x4;
    Jet2 x5;
    std::size_t quad_rank; // rank of [[a,b,c],[b,c,e]]
};

/// Thrown when x3_v != x4_u; names the lowest offending coefficient.
struct ClosednessError : JetError {
    ClosednessError(unsigned i, unsigned j, const Rational& value);
    unsigned i, j;
};

/// x5 = -∫ (u dx3 + v dx4 - x3 du - x4 dv) along rays from the origin. The sign is
/// the one that reproduces the displayed cubic -(au³/6 + ...) and makes the slice a front.
LegendreSurfaceGerm complete_to_legendre(const Jet2& x3, const Jet2& x4);

/// Builds x3, x4 from (a,b,c,e) plus higher-order parts φ, ψ (which must satisfy φ_v = ψ_u).
LegendreSurfaceGerm legendre_from_quad(const Rational& a, const Rational& b, const Rational& c, const Rational& e,
                                       const Jet2& phi, const Jet2& psi);

/// (du, dv) parts of dx5 + u dx3 + v dx4 - x3 du - x4 dv, truncated where known.
std::pair<Jet2, Jet2> contact_residual(const LegendreSurfaceGerm& s);

enum class PointKind { Hyperbolic, Elliptic, Parabolic, NotOrdinary };
std::string to_string(PointKind k);

struct OrdinaryPointClass {
    PointKind kind;
    Rational h; // 4(ac-b²)(be-c²) - (ae-bc)²
};

Rational h_invariant(const Rational& a, const Rational& b, const Rational& c, const Rational& e);
OrdinaryPointClass ordinary_point_class(const LegendreSurfaceGerm& s);

/// g_i = E(x_{i+2}) with E f = f - u f_u - v f_v: the slice s = -u, t = -v of the tangent map.
std::array<Jet2, 3> transversal_slice(const LegendreSurfaceGerm& s);

/// (du, dv) parts of dg3 + u dg1 + v dg2.
std::pair<Jet2, Jet2> slice_identity_residual(const std::array<Jet2, 3>& g);

enum class D4Verdict { D4Plus, D4Minus, Inconclusive };
std::string to_string(D4Verdict v);

struct SajiResult {
    D4Verdict verdict;
    std::optional<Rational> hessian; // Hessian determinant of the quadratic part of λ̃
    std::string reason;              // set when inconclusive
};

/// Rank-zero plus Hessian-sign test. The normal defaults to (u, v, 1), which is a
/// Legendre lift for transversal slices; a supplied normal must satisfy ν·g_u = ν·g_v = 0.
SajiResult saji_verdict(const std::array<Jet2, 3>& g, const std::optional<std::array<Jet2, 3>>& normal = std::nullopt);

/// Legendre immersion (λ, μ, ν) of (u1, u2) into the Darboux chart dμ = Σ(ν_i dλ_i - λ_i dν_i).
struct LegendreImmersion {
    std::array<Jet2, 2> lambda;
    Jet2 mu;
    std::array<Jet2, 2> nu;
};

/// Thrown when the input fails the Legendre condition.
struct NotLegendreError : JetError {
    using JetError::JetError;
};

/// μ from (λ, ν) by radial integration; throws NotLegendreError when Σ dν_i ∧ dλ_i ≠ 0.
LegendreImmersion complete_darboux(const std::array<Jet2, 2>& lambda, const std::array<Jet2, 2>& nu);

/// (du1, du2) parts of dμ - Σ(ν_i dλ_i - λ_i dν_i).
std::pair<Jet2, Jet2> darboux_residual(const LegendreImmersion& l);

/// (Λ, M, N) = (λ, μ, ν) + Σ s_j ∂_j(λ, μ, ν) over variables (u1, u2, s1, s2), with the
/// residual dM - Σ(ν_i dΛ_i - λ_i dN_i) checked on every term of u-degree <= verified_order.
struct SurfaceTangentMap {
    std::array<Poly, 2> Lambda;
    Poly M;
    std::array<Poly, 2> N;
    std::array<Poly, 4> residual; // du1, du2, ds1, ds2 parts, restricted to verified u-degrees
    unsigned verified_order;
    bool certified;
};

SurfaceTangentMap surface_tangent_map(const LegendreImmersion& l);

struct SymMatrix3 {
    Rational a11, a12, a13, a22, a23, a33;

    Rational at(int i, int j) const;
    friend bool operator==(const SymMatrix3&, const SymMatrix3&) = default;
};

enum class VeroneseMembership { OnS, InTanS, InSecOnly, Outside };
std::string to_string(VeroneseMembership m);

/// Rank 1: on the Veronese surface; rank 2 indefinite: tangent variety; rank 2
/// semidefinite: secant variety only; rank 3: outside. Throws on the zero matrix.
VeroneseMembership veronese_membership(const SymMatrix3& a);

} // namespace tanvar
