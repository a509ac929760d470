#include <tanvar/classify.hpp>
#include <tanvar/strata.hpp>
#include <tanvar/surfaces.hpp>
#include <tanvar/tangency.hpp>

#include <benchmark/benchmark.h>

using namespace tanvar;
using V = Jet2::Var;

namespace {

// Dense jet with coefficients 1/(i+j+1).
Jet2 dense_jet2(unsigned K)
{
    Jet2 j(K);
    for (unsigned d = 0; d <= K; ++d) {
        for (unsigned b = 0; b <= d; ++b) j.set(d - b, b, Rational(1) / (d + 1));
    }
    return j;
}

Jet1 dense_jet1(unsigned K)
{
    Jet1 j(K);
    for (unsigned k = 0; k <= K; ++k) j.set(k, Rational(k % 2 ? -1 : 1) / (k + 1));
    return j;
}

} // namespace

static void BM_Jet1Multiply(benchmark::State& state)
{
    const unsigned K = static_cast<unsigned>(state.range(0));
    const Jet1 a = dense_jet1(K), b = dense_jet1(K);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(K);
}
BENCHMARK(BM_Jet1Multiply)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_Jet2Multiply(benchmark::State& state)
{
    const unsigned K = static_cast<unsigned>(state.range(0));
    const Jet2 a = dense_jet2(K), b = dense_jet2(K);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(K);
}
BENCHMARK(BM_Jet2Multiply)->RangeMultiplier(2)->Range(4, 24)->Complexity();

static void BM_CurveType(benchmark::State& state)
{
    const CurveGerm g = normal_form_curve(TypeSequence({1, 3, 4, 6, 7}), static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(curve_type(g));
}
BENCHMARK(BM_CurveType)->Arg(12)->Arg(24);

static void BM_EnumerateGeneric(benchmark::State& state)
{
    const unsigned N = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_generic(CurveClass::osculating_framed(N)));
        benchmark::DoNotOptimize(enumerate_generic(CurveClass::contact(N)));
    }
}
BENCHMARK(BM_EnumerateGeneric)->DenseRange(2, 6, 2);

static void BM_TangentMapAndLift(benchmark::State& state)
{
    const CurveGerm g = normal_form_curve(TypeSequence({2, 3, 4, 5}), static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        const TangentMapGerm t = tangent_map(g);
        benchmark::DoNotOptimize(grassmann_lift(t));
    }
}
BENCHMARK(BM_TangentMapAndLift)->Arg(10)->Arg(16);

static void BM_JacobiMembership(benchmark::State& state)
{
    const unsigned K = static_cast<unsigned>(state.range(0));
    const TangentMapGerm t = tangent_map(normal_form_curve(TypeSequence({2, 3, 4, 5}), K + 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobi_membership({t.components[0], t.components[1]}, t.components[3], K - 2));
    }
}
BENCHMARK(BM_JacobiMembership)->Arg(8)->Arg(12);

static void BM_SurfaceTangentMap(benchmark::State& state)
{
    const unsigned K = static_cast<unsigned>(state.range(0));
    const Jet2 u1 = Jet2::variable(V::first, K), u2 = Jet2::variable(V::second, K);
    // ν = ∇W with W = u1^3 + u1 u2^2 + u2^4.
    const std::array<Jet2, 2> nu{Rational(3) * u1 * u1 + u2 * u2, Rational(2) * u1 * u2 + Rational(4) * u2 * u2 * u2};
    const LegendreImmersion l = complete_darboux({u1, u2}, nu);
    for (auto _ : state) benchmark::DoNotOptimize(surface_tangent_map(l));
}
BENCHMARK(BM_SurfaceTangentMap)->Arg(8)->Arg(12);

static void BM_SurfacePipeline(benchmark::State& state)
{
    const unsigned K = 8;
    const LegendreSurfaceGerm s = legendre_from_quad(1, 2, -1, 3, Jet2(K), Jet2(K));
    for (auto _ : state) {
        const auto cls = ordinary_point_class(s);
        benchmark::DoNotOptimize(cls);
        benchmark::DoNotOptimize(saji_verdict(transversal_slice(s)));
    }
}
BENCHMARK(BM_SurfacePipeline);
BENCHMARK_MAIN();
