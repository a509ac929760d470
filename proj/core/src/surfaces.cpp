#include <tanvar/linalg.hpp>
#include <tanvar/surfaces.hpp>

#include <algorithm>

namespace tanvar {

using V = Jet2::Var;

namespace {

const Jet2& require_truncation(const Jet2& j, unsigned k)
{
    if (j.truncation() != k) throw JetError("all components must share one truncation");
    return j;
}

// Σ_d w_d / d over homogeneous parts: the potential of a closed polynomial 1-form with u·P + v·Q = w.
Jet2 radial_potential(const Jet2& w)
{
    Jet2 f(w.truncation());
    for (unsigned d = 1; d <= w.truncation(); ++d) {
        for (unsigned j = 0; j <= d; ++j) f.set(d - j, j, w.coeff(d - j, j) / Rational(d));
    }
    return f;
}

// Lowest-degree nonzero coefficient, as (i, j); nullopt for zero.
std::optional<std::pair<unsigned, unsigned>> leading_bidegree(const Jet2& j)
{
    for (unsigned d = 0; d <= j.truncation(); ++d) {
        for (unsigned jj = 0; jj <= d; ++jj) {
            if (!is_zero(j.coeff(d - jj, jj))) return std::pair{d - jj, jj};
        }
    }
    return std::nullopt;
}

// E f = f - u f_u - v f_v acts on a homogeneous part of degree d as (1 - d).
Jet2 euler_complement(const Jet2& f)
{
    Jet2 g(f.truncation());
    for (unsigned d = 0; d <= f.truncation(); ++d) {
        for (unsigned j = 0; j <= d; ++j) g.set(d - j, j, f.coeff(d - j, j) * (1 - static_cast<int>(d)));
    }
    return g;
}

} // namespace

ClosednessError::ClosednessError(unsigned i_, unsigned j_, const Rational& value)
    : JetError("closedness fails: coefficient of u^" + std::to_string(i_) + " v^" + std::to_string(j_) +
               " in x3_v - x4_u is " + value.get_str()),
      i(i_), j(j_)
{
}

LegendreSurfaceGerm complete_to_legendre(const Jet2& x3, const Jet2& x4)
{
    const unsigned K = x3.truncation();
    require_truncation(x4, K);
    if (K < 2) throw JetError("surface germs need truncation >= 2");
    for (const Jet2* x : {&x3, &x4}) {
        if (!is_zero(x->coeff(0, 0)) || !is_zero(x->coeff(1, 0)) || !is_zero(x->coeff(0, 1))) {
            throw JetError("x3 and x4 must have zero constant and linear parts");
        }
    }
    const Jet2 defect = x3.derivative(V::second) - x4.derivative(V::first);
    if (auto lead = leading_bidegree(defect)) {
        throw ClosednessError(lead->first, lead->second, defect.coeff(lead->first, lead->second));
    }

    // ω = P du + Q dv with P = u x3_u + v x4_u - x3, Q = u x3_v + v x4_v - x4.
    const Jet2 p = x3.derivative(V::first).times_variable(V::first) + x4.derivative(V::first).times_variable(V::second) - x3;
    const Jet2 q = x3.derivative(V::second).times_variable(V::first) + x4.derivative(V::second).times_variable(V::second) - x4;
    const Jet2 w = p.times_variable(V::first) + q.times_variable(V::second);

    LegendreSurfaceGerm s{2 * x3.coeff(2, 0), x3.coeff(1, 1), 2 * x3.coeff(0, 2), 2 * x4.coeff(0, 2),
                          x3, x4, -radial_potential(w), 0};
    s.quad_rank = rank({{s.a, s.b, s.c}, {s.b, s.c, s.e}});
    return s;
}

LegendreSurfaceGerm legendre_from_quad(const Rational& a, const Rational& b, const Rational& c, const Rational& e,
                                       const Jet2& phi, const Jet2& psi)
{
    const unsigned K = phi.truncation();
    require_truncation(psi, K);
    if (phi.order() < ExtOrder(3) || psi.order() < ExtOrder(3)) {
        throw JetError("higher-order parts must have order >= 3");
    }
    Jet2 x3 = phi, x4 = psi;
    x3.set(2, 0, a / 2);
    x3.set(1, 1, b);
    x3.set(0, 2, c / 2);
    x4.set(2, 0, b / 2);
    x4.set(1, 1, c);
    x4.set(0, 2, e / 2);
    return complete_to_legendre(x3, x4);
}

std::pair<Jet2, Jet2> contact_residual(const LegendreSurfaceGerm& s)
{
    const unsigned K = s.x3.truncation();
    const Jet2 p = s.x3.derivative(V::first).times_variable(V::first) +
                   s.x4.derivative(V::first).times_variable(V::second) - s.x3;
    const Jet2 q = s.x3.derivative(V::second).times_variable(V::first) +
                   s.x4.derivative(V::second).times_variable(V::second) - s.x4;
    return {s.x5.derivative(V::first).truncated(K) + p, s.x5.derivative(V::second).truncated(K) + q};
}

std::string to_string(PointKind k)
{
    switch (k) {
    case PointKind::Hyperbolic: return "hyperbolic";
    case PointKind::Elliptic: return "elliptic";
    case PointKind::Parabolic: return "parabolic";
    case PointKind::NotOrdinary: return "not ordinary";
    }
    return "?";
}

Rational h_invariant(const Rational& a, const Rational& b, const Rational& c, const Rational& e)
{
    const Rational ae_bc = a * e - b * c;
    return 4 * (a * c - b * b) * (b * e - c * c) - ae_bc * ae_bc;
}

OrdinaryPointClass ordinary_point_class(const LegendreSurfaceGerm& s)
{
    const Rational h = h_invariant(s.a, s.b, s.c, s.e);
    if (s.quad_rank < 2) return {PointKind::NotOrdinary, h};
    const int sign = sgn(h);
    return {sign < 0 ? PointKind::Hyperbolic : sign > 0 ? PointKind::Elliptic : PointKind::Parabolic, h};
}

std::array<Jet2, 3> transversal_slice(const LegendreSurfaceGerm& s)
{
    const unsigned K = s.x3.truncation();
    return {euler_complement(s.x3), euler_complement(s.x4), euler_complement(s.x5.truncated(K))};
}

std::pair<Jet2, Jet2> slice_identity_residual(const std::array<Jet2, 3>& g)
{
    const unsigned K = std::min({g[0].truncation(), g[1].truncation(), g[2].truncation()});
    if (K == 0) throw JetError("slice needs truncation >= 1");
    auto part = [&](V var) {
        const Jet2 r = g[2].truncated(K).derivative(var) +
                       g[0].truncated(K).derivative(var).times_variable(V::first).truncated(K - 1) +
                       g[1].truncated(K).derivative(var).times_variable(V::second).truncated(K - 1);
        return r;
    };
    return {part(V::first), part(V::second)};
}

std::string to_string(D4Verdict v)
{
    switch (v) {
    case D4Verdict::D4Plus: return "D4+";
    case D4Verdict::D4Minus: return "D4-";
    case D4Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

SajiResult saji_verdict(const std::array<Jet2, 3>& g, const std::optional<std::array<Jet2, 3>>& normal)
{
    const unsigned K = std::min({g[0].truncation(), g[1].truncation(), g[2].truncation()});
    if (K < 3) throw JetError("the D4 test needs truncation >= 3");
    const unsigned k = K - 1;

    std::size_t linear_rank = 0;
    {
        RationalMatrix dg(3, RationalVector(2));
        for (int i = 0; i < 3; ++i) {
            dg[i][0] = g[i].coeff(1, 0);
            dg[i][1] = g[i].coeff(0, 1);
        }
        linear_rank = rank(dg);
    }
    if (linear_rank != 0) {
        return {D4Verdict::Inconclusive, std::nullopt, "dg has rank " + std::to_string(linear_rank) + " at 0"};
    }

    std::array<Jet2, 3> nu{Jet2::variable(V::first, k), Jet2::variable(V::second, k), Jet2::constant(1, k)};
    if (normal) {
        for (int i = 0; i < 3; ++i) {
            if ((*normal)[i].truncation() < k) throw JetError("normal must be known through the slice truncation");
            nu[i] = (*normal)[i].truncated(k);
        }
        if (is_zero(nu[0].coeff(0, 0)) && is_zero(nu[1].coeff(0, 0)) && is_zero(nu[2].coeff(0, 0))) {
            return {D4Verdict::Inconclusive, std::nullopt, "normal vanishes at 0"};
        }
    }

    auto partials = [&](V var) {
        return std::array<Jet2, 3>{g[0].truncated(K).derivative(var), g[1].truncated(K).derivative(var),
                                   g[2].truncated(K).derivative(var)};
    };
    const auto gu = partials(V::first);
    const auto gv = partials(V::second);
    const Jet2 nu_gu = nu[0] * gu[0] + nu[1] * gu[1] + nu[2] * gu[2];
    const Jet2 nu_gv = nu[0] * gv[0] + nu[1] * gv[1] + nu[2] * gv[2];
    if (!nu_gu.is_zero() || !nu_gv.is_zero()) {
        return {D4Verdict::Inconclusive, std::nullopt, "normal is not orthogonal to dg: not a Legendre lift"};
    }

    const Jet2 lambda = gu[0] * (gv[1] * nu[2] - gv[2] * nu[1]) - gv[0] * (gu[1] * nu[2] - gu[2] * nu[1]) +
                        nu[0] * (gu[1] * gv[2] - gu[2] * gv[1]);
    const Rational q20 = lambda.coeff(2, 0), q11 = lambda.coeff(1, 1), q02 = lambda.coeff(0, 2);
    const Rational hess = 4 * q20 * q02 - q11 * q11;
    if (sgn(hess) < 0) return {D4Verdict::D4Plus, hess, {}};
    if (sgn(hess) > 0) return {D4Verdict::D4Minus, hess, {}};
    return {D4Verdict::Inconclusive, hess, "Hessian determinant of lambda vanishes"};
}

namespace {

// α = Σ ν_i dλ_i - λ_i dν_i as (P, Q) with α = P du1 + Q du2.
std::pair<Jet2, Jet2> darboux_form(const std::array<Jet2, 2>& lambda, const std::array<Jet2, 2>& nu)
{
    const unsigned K = lambda[0].truncation();
    for (const Jet2* j : {&lambda[1], &nu[0], &nu[1]}) require_truncation(*j, K);
    if (K == 0) throw JetError("Legendre germs need truncation >= 1");
    auto part = [&](V var) {
        Jet2 r(K - 1);
        for (int i = 0; i < 2; ++i) {
            r += nu[i].truncated(K - 1) * lambda[i].derivative(var) - lambda[i].truncated(K - 1) * nu[i].derivative(var);
        }
        return r;
    };
    return {part(V::first), part(V::second)};
}

} // namespace

LegendreImmersion complete_darboux(const std::array<Jet2, 2>& lambda, const std::array<Jet2, 2>& nu)
{
    auto [p, q] = darboux_form(lambda, nu);
    if (p.truncation() >= 1) {
        const Jet2 curl = p.derivative(V::second) - q.derivative(V::first);
        if (auto lead = leading_bidegree(curl)) {
            throw NotLegendreError("Σ dν_i ∧ dλ_i does not vanish: coefficient of u1^" + std::to_string(lead->first) +
                                   " u2^" + std::to_string(lead->second) + " is " +
                                   curl.coeff(lead->first, lead->second).get_str());
        }
    }
    const Jet2 w = p.times_variable(V::first) + q.times_variable(V::second);
    return {lambda, radial_potential(w), nu};
}

std::pair<Jet2, Jet2> darboux_residual(const LegendreImmersion& l)
{
    auto [p, q] = darboux_form(l.lambda, l.nu);
    require_truncation(l.mu, l.lambda[0].truncation());
    return {l.mu.derivative(V::first) - p, l.mu.derivative(V::second) - q};
}

namespace {

const std::vector<std::string>& tangent_vars()
{
    static const std::vector<std::string> vars{"u1", "u2", "s1", "s2"};
    return vars;
}

Poly to_poly(const Jet2& j)
{
    Poly p(tangent_vars());
    for (unsigned d = 0; d <= j.truncation(); ++d) {
        for (unsigned jj = 0; jj <= d; ++jj) p.add_term({d - jj, jj, 0, 0}, j.coeff(d - jj, jj));
    }
    return p;
}

Poly tangent_component(const Jet2& f)
{
    Poly r = to_poly(f);
    if (f.truncation() == 0) return r;
    r += Poly::variable(tangent_vars(), 2) * to_poly(f.derivative(V::first));
    r += Poly::variable(tangent_vars(), 3) * to_poly(f.derivative(V::second));
    return r;
}

Poly keep_u_degree(const Poly& p, unsigned k)
{
    Poly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[0] + e[1] <= k) r.add_term(e, c);
    }
    return r;
}

} // namespace

SurfaceTangentMap surface_tangent_map(const LegendreImmersion& l)
{
    const unsigned K = l.lambda[0].truncation();
    if (K < 2) throw JetError("surface tangent map needs truncation >= 2");
    auto [ru, rv] = darboux_residual(l);
    if (!ru.is_zero() || !rv.is_zero()) throw NotLegendreError("input violates dμ = Σ(ν_i dλ_i - λ_i dν_i)");

    SurfaceTangentMap out{{tangent_component(l.lambda[0]), tangent_component(l.lambda[1])},
                          tangent_component(l.mu),
                          {tangent_component(l.nu[0]), tangent_component(l.nu[1])},
                          {Poly(tangent_vars()), Poly(tangent_vars()), Poly(tangent_vars()), Poly(tangent_vars())},
                          K - 2,
                          false};
    const std::array<Poly, 2> lam{to_poly(l.lambda[0]), to_poly(l.lambda[1])};
    const std::array<Poly, 2> nu{to_poly(l.nu[0]), to_poly(l.nu[1])};
    bool ok = true;
    for (std::size_t var = 0; var < 4; ++var) {
        Poly r = out.M.derivative(var);
        for (int i = 0; i < 2; ++i) r -= nu[i] * out.Lambda[i].derivative(var) - lam[i] * out.N[i].derivative(var);
        out.residual[var] = keep_u_degree(r, out.verified_order);
        ok = ok && out.residual[var].is_zero();
    }
    out.certified = ok;
    return out;
}

Rational SymMatrix3::at(int i, int j) const
{
    if (i > j) std::swap(i, j);
    if (i == 0) return j == 0 ? a11 : j == 1 ? a12 : a13;
    if (i == 1) return j == 1 ? a22 : a23;
    return a33;
}

std::string to_string(VeroneseMembership m)
{
    switch (m) {
    case VeroneseMembership::OnS: return "on S";
    case VeroneseMembership::InTanS: return "in Tan(S)";
    case VeroneseMembership::InSecOnly: return "in Sec(S) \\ Tan(S)";
    case VeroneseMembership::Outside: return "outside Sec(S)";
    }
    return "?";
}

VeroneseMembership veronese_membership(const SymMatrix3& a)
{
    RationalMatrix m(3, RationalVector(3));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = a.at(i, j);
    }
    switch (rank(m)) {
    case 0: throw std::invalid_argument("the zero matrix does not define a point of P(V)");
    case 1: return VeroneseMembership::OnS;
    case 3: return VeroneseMembership::Outside;
    default: break;
    }
    // With one zero eigenvalue, the sum of principal 2x2 minors is the product of the other two.
    const Rational c2 = a.a11 * a.a22 - a.a12 * a.a12 + a.a11 * a.a33 - a.a13 * a.a13 + a.a22 * a.a33 - a.a23 * a.a23;
    return sgn(c2) < 0 ? VeroneseMembership::InTanS : VeroneseMembership::InSecOnly;
}

} // namespace tanvar
