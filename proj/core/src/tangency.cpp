#include <tanvar/linalg.hpp>
#include <tanvar/tangency.hpp>

#include <algorithm>

namespace tanvar {

using V = Jet2::Var;

DivisibilityError::DivisibilityError(std::size_t i, const std::string& what) : JetError(what), component(i) {}

TangentMapGerm tangent_map(const CurveGerm& gamma)
{
    const TypeSequence type = require_type(gamma);
    const unsigned a1 = type.a(1);
    const unsigned K = gamma.truncation();
    const unsigned T = K - a1 + 1;

    std::vector<Jet2> comps;
    for (std::size_t i = 0; i < gamma.ambient_dim(); ++i) {
        const Jet1& x = gamma.components()[i];
        const Jet1 dx = x.derivative();
        if (dx.order() < ExtOrder(a1 - 1)) {
            throw DivisibilityError(i + 1, "x" + std::to_string(i + 1) + "' is not divisible by t^" +
                                               std::to_string(a1 - 1));
        }
        const Jet1 frame = dx.divide_by_power(a1 - 1);
        Jet2 f(T);
        for (unsigned k = 0; k <= T; ++k) f.set(0, k, x[k]);
        for (unsigned k = 0; k <= frame.truncation(); ++k) f.set(1, k, frame[k]);
        comps.push_back(std::move(f));
    }
    return {gamma, type, std::move(comps)};
}

Jet1 wronskian(const CurveGerm& gamma, std::size_t i, std::size_t j)
{
    const Jet1 di = gamma.x(i).derivative();
    const Jet1 dj = gamma.x(j).derivative();
    const Jet1 ddi = di.derivative();
    const Jet1 ddj = dj.derivative();
    const unsigned k = ddi.truncation();
    return di.truncated(k) * ddj - dj.truncated(k) * ddi;
}

LiftResult grassmann_lift(const TangentMapGerm& t)
{
    const CurveGerm& g = t.source;
    std::vector<LiftCoefficient> out;
    if (g.ambient_dim() < 3) return out;
    const Jet1 w12 = wronskian(g, 1, 2);
    if (w12.is_zero()) throw JetError("W_12 vanishes within truncation; the lift is undetermined");
    for (std::size_t i = 3; i <= g.ambient_dim(); ++i) {
        auto p = wronskian(g, i, 2).divide(w12);
        if (auto* bad = std::get_if<NotDivisible>(&p)) {
            return NotFrontalUpTo{g.truncation(), i, "W_" + std::to_string(i) + "2/W_12: " + bad->reason};
        }
        auto q = wronskian(g, 1, i).divide(w12);
        if (auto* bad = std::get_if<NotDivisible>(&q)) {
            return NotFrontalUpTo{g.truncation(), i, "W_1" + std::to_string(i) + "/W_12: " + bad->reason};
        }
        out.push_back({i, std::get<Jet1>(std::move(p)), std::get<Jet1>(std::move(q))});
    }
    return out;
}

std::pair<Jet2, Jet2> lift_residual(const TangentMapGerm& t, const LiftCoefficient& c)
{
    const Jet2& f1 = t.components.at(0);
    const Jet2& f2 = t.components.at(1);
    const Jet2& fi = t.components.at(c.component - 1);
    const unsigned k = std::min({fi.truncation() - 1, c.p.truncation(), c.q.truncation()});
    const Jet2 p = Jet2::from_jet1(c.p.truncated(k), V::second);
    const Jet2 q = Jet2::from_jet1(c.q.truncated(k), V::second);
    auto part = [&](V v) {
        return fi.derivative(v).truncated(k) - p * f1.derivative(v).truncated(k) - q * f2.derivative(v).truncated(k);
    };
    return {part(V::first), part(V::second)};
}

namespace {

std::size_t tri(unsigned d)
{
    return static_cast<std::size_t>(d) * (d + 1) / 2;
}

} // namespace

MembershipResult jacobi_membership(const std::vector<Jet2>& g, const Jet2& h, unsigned order)
{
    const unsigned D = order;
    if (h.truncation() < D + 1) throw JetError("h must be known through degree order+1");
    for (const auto& gj : g) {
        if (gj.truncation() < D + 1) throw JetError("generators must be known through degree order+1");
    }
    const std::size_t m = g.size();
    const V vars[2] = {V::first, V::second};

    std::vector<Jet2> dh, dg[2];
    for (int c = 0; c < 2; ++c) {
        dh.push_back(h.derivative(vars[c]));
        for (const auto& gj : g) dg[c].push_back(gj.derivative(vars[c]));
    }

    // Unknown (d, j, jj): coefficient of x^{d-jj} y^{jj} in p_j, grouped by degree.
    auto unknown = [&](unsigned d, std::size_t j, unsigned jj) { return tri(d) * m + j * (d + 1) + jj; };
    // Equation (e, c, jj): coefficient of x^{e-jj} y^{jj} in the d(var c) component, grouped by degree.
    auto equation = [&](unsigned e, unsigned c, unsigned jj) { return tri(e) * 2 + c * (e + 1) + jj; };

    const std::size_t n_unknowns = tri(D + 1) * m;
    const std::size_t n_equations = tri(D + 1) * 2;
    RationalMatrix A(n_equations, RationalVector(n_unknowns));
    RationalVector rhs(n_equations);
    for (unsigned e = 0; e <= D; ++e) {
        for (unsigned c = 0; c < 2; ++c) {
            for (unsigned jj = 0; jj <= e; ++jj) {
                const std::size_t row = equation(e, c, jj);
                rhs[row] = dh[c].coeff(e - jj, jj);
                for (unsigned d = 0; d <= e; ++d) {
                    for (std::size_t j = 0; j < m; ++j) {
                        for (unsigned pj = 0; pj <= d; ++pj) {
                            const unsigned pi = d - pj;
                            if (pi > e - jj || pj > jj) continue;
                            const Rational& coeff = dg[c][j].coeff(e - jj - pi, jj - pj);
                            if (!is_zero(coeff)) A[row][unknown(d, j, pj)] += coeff;
                        }
                    }
                }
            }
        }
    }

    auto sol = solve_linear(A, rhs);
    if (auto* bad = std::get_if<Inconsistent>(&sol)) {
        unsigned e = 0;
        while (tri(e + 1) * 2 <= bad->row) ++e;
        const std::size_t off = bad->row - tri(e) * 2;
        const unsigned c = static_cast<unsigned>(off / (e + 1));
        const unsigned jj = static_cast<unsigned>(off % (e + 1));
        Refuted r{e, c, e - jj, jj, {}};
        r.witness = "coefficient of bidegree (" + std::to_string(r.i) + "," + std::to_string(r.j) + ") in the d" +
                    (c == 0 ? std::string("x1") : std::string("x2")) +
                    " component cannot be matched by any multipliers";
        return r;
    }
    const auto& x = std::get<RationalVector>(sol);
    std::vector<Jet2> p(m, Jet2(D));
    for (unsigned d = 0; d <= D; ++d) {
        for (std::size_t j = 0; j < m; ++j) {
            for (unsigned pj = 0; pj <= d; ++pj) p[j].set(d - pj, pj, x[unknown(d, j, pj)]);
        }
    }
    return OpeningCertificate{std::move(p), D};
}

bool verify_certificate(const std::vector<Jet2>& g, const Jet2& h, const OpeningCertificate& cert)
{
    const unsigned k = cert.verified_order;
    if (cert.multipliers.size() != g.size()) return false;
    if (h.truncation() < k + 1) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j].truncation() < k + 1 || cert.multipliers[j].truncation() < k) return false;
    }
    for (V v : {V::first, V::second}) {
        Jet2 r = h.derivative(v).truncated(k);
        for (std::size_t j = 0; j < g.size(); ++j) {
            r -= cert.multipliers[j].truncated(k) * g[j].derivative(v).truncated(k);
        }
        if (!r.is_zero()) return false;
    }
    return true;
}

std::variant<std::vector<OpeningCertificate>, NotFrontalUpTo> opening_check(const TangentMapGerm& t)
{
    auto lift = grassmann_lift(t);
    if (auto* bad = std::get_if<NotFrontalUpTo>(&lift)) return *bad;
    std::vector<OpeningCertificate> out;
    const std::vector<Jet2> g{t.components[0], t.components[1]};
    for (const auto& c : std::get<std::vector<LiftCoefficient>>(lift)) {
        const Jet2& fi = t.components[c.component - 1];
        const unsigned k = std::min({fi.truncation() - 1, c.p.truncation(), c.q.truncation()});
        OpeningCertificate cert{{Jet2::from_jet1(c.p.truncated(k), V::second),
                                 Jet2::from_jet1(c.q.truncated(k), V::second)},
                                k};
        if (!verify_certificate(g, fi, cert)) {
            return NotFrontalUpTo{t.source.truncation(), c.component, "lift identity fails on substitution"};
        }
        out.push_back(std::move(cert));
    }
    return out;
}

MorinOpening morin_versal_opening(unsigned k, unsigned m)
{
    if (k == 0) throw std::invalid_argument("Morin opening needs k >= 1");
    std::vector<std::string> vars{"t"};
    for (unsigned j = 1; j < k; ++j) vars.push_back("lambda" + std::to_string(j));
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = 1; j <= k; ++j) vars.push_back("mu" + std::to_string(i) + "_" + std::to_string(j));
    }
    const Poly t = Poly::variable(vars, 0);

    Poly f = t.pow(k + 1);
    for (unsigned j = 1; j < k; ++j) f += Poly::variable(vars, j) * t.pow(j);

    std::vector<Poly> g;
    for (unsigned i = 1; i <= m; ++i) {
        Poly gi(vars);
        for (unsigned j = 1; j <= k; ++j) gi += Poly::variable(vars, k - 1 + (i - 1) * k + j) * t.pow(j);
        g.push_back(std::move(gi));
    }

    std::vector<NamedPoly> gens{{"1", Poly::constant(vars, 1)}};
    for (unsigned l = 1; l <= k; ++l) gens.push_back({"F(" + std::to_string(l) + ")", f.integrate_weighted(0, l)});
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned l = 1; l < k; ++l) {
            gens.push_back({"G" + std::to_string(i) + "(" + std::to_string(l) + ")", g[i - 1].integrate_weighted(0, l)});
        }
    }
    return {k, m, vars, std::move(f), std::move(g), std::move(gens)};
}

std::optional<std::string> generating_family_pattern(const TypeSequence& a)
{
    const std::size_t n = a.size();
    if (n < 2) return std::nullopt;
    const unsigned N = static_cast<unsigned>(n - 1);
    const auto& e = a.entries();

    bool prefix = true;
    for (unsigned i = 0; i < N; ++i) prefix = prefix && e[i] == i + 1;
    if (prefix && e[N] > N) return "I(" + std::to_string(N) + "," + std::to_string(e[N] - N) + ")";

    for (unsigned i = 0; i + 1 <= N; ++i) {
        bool match = true;
        for (unsigned p = 0; p < n && match; ++p) match = e[p] == (p < i ? p + 1 : p + 2);
        if (match) return "II(" + std::to_string(N) + "," + std::to_string(i) + ")";
    }

    bool third = true;
    for (unsigned p = 0; p < n; ++p) third = third && e[p] == p + 3;
    if (third) return "III(" + std::to_string(N) + ")";
    return std::nullopt;
}

namespace {

Rational falling(unsigned e, unsigned r)
{
    Rational v = 1;
    for (unsigned q = 0; q < r; ++q) v *= e - q;
    return v;
}

Poly exact(const Poly& a, const Poly& b)
{
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("non-exact division in fraction-free elimination");
    return *q;
}

} // namespace

GeneratingFamilySolution generating_family_tangent(const TypeSequence& a)
{
    auto pattern = generating_family_pattern(a);
    if (!pattern) {
        throw PatternMismatch("type " + a.to_string() + " matches none of the generating-family patterns I, II, III");
    }
    const unsigned N = static_cast<unsigned>(a.size() - 1);
    const unsigned top = a.a(N + 1);

    std::vector<std::string> fvars{"t"};
    for (unsigned i = 1; i <= N + 1; ++i) fvars.push_back("x" + std::to_string(i));
    Poly family = Poly::variable(fvars, 0).pow(top);
    for (unsigned i = 1; i <= N + 1; ++i) {
        family += Poly::variable(fvars, i) * Poly::variable(fvars, 0).pow(top - a.a(i));
    }

    const std::vector<std::string> vars{"t", "x1"};
    const Poly t = Poly::variable(vars, 0);
    const Poly x1 = Poly::variable(vars, 1);
    const Poly zero(vars);
    const Poly one = Poly::constant(vars, 1);

    // Row r is ∂^r F/∂t^r = 0; unknowns x_2..x_{N+1}.
    std::vector<std::vector<Poly>> m(N, std::vector<Poly>(N, zero));
    std::vector<Poly> rhs(N, zero);
    Poly known = t.pow(top) + x1 * t.pow(top - a.a(1));
    for (unsigned r = 0; r < N; ++r) {
        for (unsigned c = 0; c < N; ++c) {
            const unsigned e = top - a.a(c + 2);
            if (e >= r) m[r][c] = t.pow(e - r) * falling(e, r);
        }
        rhs[r] = -known;
        known = known.derivative(0);
    }

    const Poly det = bareiss_determinant(m, zero, one, exact);
    if (det.is_zero()) throw std::invalid_argument("generating-family system is singular for " + a.to_string());

    GeneratingFamilySolution out{*pattern, std::move(family), {}};
    for (unsigned c = 0; c < N; ++c) {
        auto mc = m;
        for (unsigned r = 0; r < N; ++r) mc[r][c] = rhs[r];
        auto q = bareiss_determinant(mc, zero, one, exact).divide_exact(det);
        if (!q) throw std::invalid_argument("solution for x" + std::to_string(c + 2) + " is not polynomial");
        out.solution.push_back(std::move(*q));
    }
    return out;
}

Jet1 contact_integral_mu(const Jet1& lambda, const Jet1& nu)
{
    auto [l, n] = common_truncation(lambda, nu);
    const unsigned k = l.truncation() - 1;
    const Jet1 integrand = n.truncated(k) * l.derivative() - l.truncated(k) * n.derivative();
    return integrand.integrate_weighted(0);
}

Jet1 osculating_determinant(const Jet1& x, const Jet1& y, const Jet1& z)
{
    const unsigned K = std::min({x.truncation(), y.truncation(), z.truncation()});
    if (K < 3) throw JetError("osculating determinant needs truncation >= 3");
    const unsigned k = K - 3;
    auto d = [k](const Jet1& j, unsigned n) { return j.derivative(n).truncated(k); };
    const Jet1 x1 = d(x, 1), x2 = d(x, 2), x3 = d(x, 3);
    const Jet1 y1 = d(y, 1), y2 = d(y, 2), y3 = d(y, 3);
    const Jet1 z1 = d(z, 1), z2 = d(z, 2), z3 = d(z, 3);
    return x1 * (y2 * z3 - y3 * z2) - y1 * (x2 * z3 - x3 * z2) + z1 * (x2 * y3 - x3 * y2);
}

} // namespace tanvar
