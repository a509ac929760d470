#include <tanvar/surfaces.hpp>

#include "../support/random_germs.hpp"

#include <gtest/gtest.h>

using namespace tanvar;
using tanvar::testkit::RationalSource;
using V = Jet2::Var;

namespace {

// c u^i v^j at truncation K.
Jet2 m(unsigned i, unsigned j, const Rational& c, unsigned K)
{
    return Jet2::monomial(i, j, c, K);
}

LegendreSurfaceGerm quad(int a, int b, int c, int e, unsigned K = 6)
{
    return legendre_from_quad(a, b, c, e, Jet2(K), Jet2(K));
}

// Independent slice oracle: x5 from the displayed cubic plus the direct Euler-operator formula.
Jet2 euler(const Jet2& f)
{
    const unsigned K = f.truncation();
    Jet2 out(K);
    for (unsigned d = 0; d <= K; ++d) {
        for (unsigned j = 0; j <= d; ++j) out.set(d - j, j, f.coeff(d - j, j) * (1 - static_cast<int>(d)));
    }
    return out;
}

} // namespace

TEST(Surfaces, CompletionExamples)
{
    const auto s = quad(1, 0, 0, 1);
    const unsigned K = s.x5.truncation();
    EXPECT_EQ(s.x5, m(3, 0, Rational(-1, 6), K) + m(0, 3, Rational(-1, 6), K));
    auto [ru, rv] = contact_residual(s);
    EXPECT_TRUE(ru.is_zero());
    EXPECT_TRUE(rv.is_zero());

    // Closed pair φ = u²v, ψ = u³/3 (φ_v = u² = ψ_u).
    const auto closed = legendre_from_quad(1, 2, 3, 4, m(2, 1, 1, 6), m(3, 0, Rational(1, 3), 6));
    auto [cu, cv] = contact_residual(closed);
    EXPECT_TRUE(cu.is_zero());
    EXPECT_TRUE(cv.is_zero());

    EXPECT_THROW((void)legendre_from_quad(1, 0, 0, 1, m(0, 3, 1, 6), Jet2(6)), ClosednessError);
    try {
        (void)legendre_from_quad(1, 0, 0, 1, m(0, 3, 1, 6), Jet2(6));
    } catch (const ClosednessError& err) {
        EXPECT_EQ(err.i, 0U);
        EXPECT_EQ(err.j, 2U);
    }
}

TEST(Surfaces, DisplayedCubicForRandomQuadraticData)
{
    RationalSource r(71);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational a = r(), b = r(), c = r(), e = r();
        const auto s = legendre_from_quad(a, b, c, e, Jet2(5), Jet2(5));
        const unsigned K = s.x5.truncation();
        const Jet2 cubic = -(m(3, 0, a / 6, K) + m(2, 1, b / 2, K) + m(1, 2, c / 2, K) + m(0, 3, e / 6, K));
        EXPECT_EQ(s.x5, cubic);
    }
}

TEST(Surfaces, ContactResidualVanishesOnRandomGerms)
{
    RationalSource r(72);
    for (int trial = 0; trial < 40; ++trial) {
        const auto s = testkit::random_surface(r, 7);
        auto [ru, rv] = contact_residual(s);
        EXPECT_TRUE(ru.is_zero());
        EXPECT_TRUE(rv.is_zero());
    }
}

TEST(Surfaces, OrdinaryPointExamples)
{
    const auto hyp = ordinary_point_class(quad(1, 0, 0, 1));
    EXPECT_EQ(hyp.kind, PointKind::Hyperbolic);
    EXPECT_EQ(hyp.h, -1);
    const auto ell = ordinary_point_class(quad(1, 0, -1, 0));
    EXPECT_EQ(ell.kind, PointKind::Elliptic);
    EXPECT_EQ(ell.h, 4);
    EXPECT_EQ(ordinary_point_class(quad(1, 0, 0, 0)).kind, PointKind::NotOrdinary);
    // ac = b², be = c², ae = bc with rank 2: a=1,b=0,c=0,e=0 is rank 1, so use a parabolic rank-2 point.
    const Rational h = h_invariant(1, 1, 1, 0);
    EXPECT_EQ(h, 4 * (1 - 1) * (0 - 1) - (0 - 1) * (0 - 1));
}

TEST(Surfaces, ClassIsScaleInvariant)
{
    RationalSource r(73);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a = r(), b = r(), c = r(), e = r(), rho = r.nonzero(5, 3);
        const Rational p = rho * rho;
        const auto k1 = ordinary_point_class(legendre_from_quad(a, b, c, e, Jet2(4), Jet2(4))).kind;
        const auto k2 = ordinary_point_class(legendre_from_quad(p * a, p * b, p * c, p * e, Jet2(4), Jet2(4))).kind;
        EXPECT_EQ(k1, k2);
    }
}

TEST(Surfaces, SliceExamples)
{
    const auto g = transversal_slice(quad(1, 0, 0, 1));
    const unsigned K = g[0].truncation();
    EXPECT_EQ(g[0], m(2, 0, Rational(-1, 2), K));
    EXPECT_EQ(g[1], m(0, 2, Rational(-1, 2), K));
    EXPECT_EQ(g[2], m(3, 0, Rational(1, 3), K) + m(0, 3, Rational(1, 3), K));

    const auto g4 = transversal_slice(legendre_from_quad(1, 0, 0, 1, m(4, 0, 1, 6), Jet2(6)));
    EXPECT_EQ(g4[0].coeff(4, 0), -3);
}

TEST(Surfaces, SliceIdentityAndEulerOracle)
{
    RationalSource r(74);
    for (int trial = 0; trial < 60; ++trial) {
        const auto s = testkit::random_surface(r, 7);
        const auto g = transversal_slice(s);
        auto [ru, rv] = slice_identity_residual(g);
        EXPECT_TRUE(ru.is_zero());
        EXPECT_TRUE(rv.is_zero());
        const unsigned K = g[0].truncation();
        EXPECT_EQ(g[0], euler(s.x3.truncated(K)));
        EXPECT_EQ(g[1], euler(s.x4.truncated(K)));
        EXPECT_EQ(g[2], euler(s.x5.truncated(K)));
    }
}

TEST(Surfaces, SajiExamples)
{
    const auto plus = saji_verdict(transversal_slice(quad(1, 0, 0, 1)));
    EXPECT_EQ(plus.verdict, D4Verdict::D4Plus);
    ASSERT_TRUE(plus.hessian.has_value());
    EXPECT_EQ(*plus.hessian, -1);
    EXPECT_EQ(saji_verdict(transversal_slice(quad(1, 0, -1, 0))).verdict, D4Verdict::D4Minus);

    const unsigned K = 5;
    const auto linear = saji_verdict({m(1, 0, 1, K), m(0, 2, 1, K), m(0, 3, 1, K)});
    EXPECT_EQ(linear.verdict, D4Verdict::Inconclusive);
    EXPECT_NE(linear.reason.find("rank"), std::string::npos);
}

TEST(Surfaces, SajiOnD4NormalForms)
{
    const unsigned K = 6;
    const std::array<Jet2, 3> lift{m(1, 0, 2, K), m(0, 1, 1, K), Jet2::constant(-2, K)};
    for (int sign : {1, -1}) {
        const std::array<Jet2, 3> g{m(1, 1, 1, K), m(2, 0, 1, K) + m(0, 2, 3 * sign, K), m(2, 1, 1, K) + m(0, 3, sign, K)};
        const auto res = saji_verdict(g, lift);
        EXPECT_EQ(res.verdict, sign > 0 ? D4Verdict::D4Plus : D4Verdict::D4Minus) << res.reason;
    }
    // A normal that is not a Legendre lift is rejected rather than trusted.
    const std::array<Jet2, 3> g{m(1, 1, 1, K), m(2, 0, 1, K) + m(0, 2, 3, K), m(2, 1, 1, K) + m(0, 3, 1, K)};
    EXPECT_EQ(saji_verdict(g, std::array<Jet2, 3>{Jet2::constant(1, K), Jet2(K), Jet2(K)}).verdict,
              D4Verdict::Inconclusive);
}

TEST(Surfaces, HEqualsSliceHessianAndVerdictsCorrespond)
{
    RationalSource r(75);
    int ordinary = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto s = testkit::random_surface(r, 6);
        const auto cls = ordinary_point_class(s);
        if (cls.kind == PointKind::NotOrdinary) continue;
        ++ordinary;
        const auto res = saji_verdict(transversal_slice(s));
        ASSERT_TRUE(res.hessian.has_value());
        EXPECT_EQ(*res.hessian, cls.h);
        if (cls.kind == PointKind::Hyperbolic) EXPECT_EQ(res.verdict, D4Verdict::D4Plus);
        if (cls.kind == PointKind::Elliptic) EXPECT_EQ(res.verdict, D4Verdict::D4Minus);
        if (cls.kind == PointKind::Parabolic) EXPECT_EQ(res.verdict, D4Verdict::Inconclusive);
    }
    EXPECT_GT(ordinary, 100);
}

TEST(Surfaces, DarbouxCompletion)
{
    const unsigned K = 6;
    const std::array<Jet2, 2> lambda{Jet2::variable(V::first, K), Jet2::variable(V::second, K)};
    const std::array<Jet2, 2> nu{Jet2::variable(V::second, K), Jet2::variable(V::first, K)};
    const auto l = complete_darboux(lambda, nu);
    // dμ = u2 du1 - u1 du2 + u1 du2 - u2 du1 = 0.
    EXPECT_TRUE(l.mu.is_zero());
    auto [r1, r2] = darboux_residual(l);
    EXPECT_TRUE(r1.is_zero());
    EXPECT_TRUE(r2.is_zero());

    const std::array<Jet2, 2> bad{Jet2::variable(V::second, K), Jet2(K)};
    EXPECT_THROW((void)complete_darboux(lambda, bad), NotLegendreError);
}

TEST(Surfaces, TangentMapExamples)
{
    const unsigned K = 6;
    const std::array<Jet2, 2> lambda{Jet2::variable(V::first, K), Jet2::variable(V::second, K)};
    const std::array<Jet2, 2> nu{Jet2::variable(V::second, K), Jet2::variable(V::first, K)};
    const auto tm = surface_tangent_map(complete_darboux(lambda, nu));
    EXPECT_TRUE(tm.certified);
    for (const auto& p : tm.residual) EXPECT_TRUE(p.is_zero());
    const std::vector<std::string> vars{"u1", "u2", "s1", "s2"};
    EXPECT_EQ(tm.Lambda[0], Poly::variable(vars, 0) + Poly::variable(vars, 2));

    const auto zero = surface_tangent_map(complete_darboux({Jet2(K), Jet2(K)}, {Jet2(K), Jet2(K)}));
    EXPECT_TRUE(zero.certified);
    EXPECT_TRUE(zero.M.is_zero());
    EXPECT_TRUE(zero.Lambda[0].is_zero());
}

TEST(Surfaces, TangentMapFrontalOnRandomGerms)
{
    RationalSource r(76);
    for (int trial = 0; trial < 10; ++trial) {
        auto [lambda, nu] = testkit::random_legendre_pair(r, 8);
        const auto tm = surface_tangent_map(complete_darboux(lambda, nu));
        EXPECT_EQ(tm.verified_order, 6U);
        EXPECT_TRUE(tm.certified);
        for (const auto& p : tm.residual) EXPECT_TRUE(p.is_zero());
    }
}

TEST(Veronese, Examples)
{
    EXPECT_EQ(veronese_membership({1, 0, 0, 0, 0, 0}), VeroneseMembership::OnS);
    EXPECT_EQ(veronese_membership({1, 0, 0, -1, 0, 0}), VeroneseMembership::InTanS);
    EXPECT_EQ(veronese_membership({1, 0, 0, 1, 0, 0}), VeroneseMembership::InSecOnly);
    EXPECT_EQ(veronese_membership({1, 0, 0, 1, 0, 1}), VeroneseMembership::Outside);
    EXPECT_THROW((void)veronese_membership({0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST(Veronese, SampledTangentAndSecantPoints)
{
    RationalSource r(77);
    auto outer = [](const std::array<Rational, 3>& v, const std::array<Rational, 3>& w) {
        auto e = [&](int i, int j) -> Rational { return v[i] * w[j] + w[i] * v[j]; };
        return SymMatrix3{e(0, 0) / 2, e(0, 1) / 2, e(0, 2) / 2, e(1, 1) / 2, e(1, 2) / 2, e(2, 2) / 2};
    };
    auto independent = [](const std::array<Rational, 3>& v, const std::array<Rational, 3>& w) {
        return sgn(v[0] * w[1] - v[1] * w[0]) != 0 || sgn(v[0] * w[2] - v[2] * w[0]) != 0 ||
               sgn(v[1] * w[2] - v[2] * w[1]) != 0;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const std::array<Rational, 3> v{r(), r(), r()}, w{r(), r(), r()};
        if (!independent(v, w)) continue;
        const SymMatrix3 vv = outer(v, v), vw = outer(v, w), ww = outer(w, w);
        const Rational s = r.nonzero();
        const SymMatrix3 tan{vv.a11 + 2 * s * vw.a11, vv.a12 + 2 * s * vw.a12, vv.a13 + 2 * s * vw.a13,
                             vv.a22 + 2 * s * vw.a22, vv.a23 + 2 * s * vw.a23, vv.a33 + 2 * s * vw.a33};
        EXPECT_EQ(veronese_membership(tan), VeroneseMembership::InTanS);
        const SymMatrix3 sec{vv.a11 + ww.a11, vv.a12 + ww.a12, vv.a13 + ww.a13,
                             vv.a22 + ww.a22, vv.a23 + ww.a23, vv.a33 + ww.a33};
        EXPECT_EQ(veronese_membership(sec), VeroneseMembership::InSecOnly);
        EXPECT_EQ(veronese_membership(vv), VeroneseMembership::OnS);
    }
}
