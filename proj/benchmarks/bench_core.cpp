#include <benchmark/benchmark.h>

#include <random>

#include "legendrian/expr_parser.hpp"
#include "legendrian/projective_curve.hpp"
#include "legendrian/radius.hpp"
#include "legendrian/reports.hpp"

using namespace legendrian;

namespace {

Polynomial random_poly(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs)
        c = GaussianRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    coeffs.back() = GaussianRational(1);
    return Polynomial(std::move(coeffs));
}

void BM_PolyMul(benchmark::State& state) {
    std::mt19937 rng(1);
    Polynomial a = random_poly(rng, 32), b = random_poly(rng, 32);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul);

void BM_PolyGcd(benchmark::State& state) {
    std::mt19937 rng(2);
    Polynomial common = random_poly(rng, 8);
    Polynomial a = random_poly(rng, 12) * common;
    Polynomial b = random_poly(rng, 12) * common;
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd);

void BM_LaurentExpand(benchmark::State& state) {
    RationalFunction r = parse_expression("(z^3 + i*z - 2)/((z - 1/2)^3 * (z^2 + 1))");
    DomainPoint a(GaussianRational(make_rational(1, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(laurent_expand(r, a, 6));
}
BENCHMARK(BM_LaurentExpand);

void BM_BryantConstruct(benchmark::State& state) {
    RationalFunction f = parse_expression("(z^3 - 2*z + 1/3)/(z^2 + 2)");
    RationalFunction g = parse_expression("(z^4 + i)/(z - 1)");
    for (auto _ : state) benchmark::DoNotOptimize(bryant_curve(f, g));
}
BENCHMARK(BM_BryantConstruct);

void BM_ContactCheck(benchmark::State& state) {
    ProjectiveCurve C = bryant_curve(parse_expression("(z^3 - 2*z + 1/3)/(z^2 + 2)"),
                                     parse_expression("(z^4 + i)/(z - 1)"));
    for (auto _ : state) benchmark::DoNotOptimize(is_legendrian(C));
}
BENCHMARK(BM_ContactCheck);

void BM_RationalPrimitive(benchmark::State& state) {
    RationalFunction src = parse_expression("(z^2 + 3)/((z - 1)^2*(z + 2)^2)");
    RationalFunction r = src.derivative();
    for (auto _ : state) benchmark::DoNotOptimize(rational_primitive(r));
}
BENCHMARK(BM_RationalPrimitive);

void BM_TwistorGrid(benchmark::State& state) {
    ProjectiveCurve C = bryant_curve(parse_expression("z^2"), parse_expression("z^3"));
    DomainSpec domain = DomainSpec::rect(0.5, 1.0, 0.5, 1.0);
    double h = 0.5 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_surface<double>(C, domain, h));
    state.SetItemsProcessed(state.iterations() * (state.range(0) + 1) * (state.range(0) + 1));
}
BENCHMARK(BM_TwistorGrid)->Arg(100)->Arg(250);

void BM_GeometryReport(benchmark::State& state) {
    ProjectiveCurve C = bryant_curve(parse_expression("z^2"), parse_expression("z^3"));
    SurfaceSample s = sample_surface<double>(C, DomainSpec::rect(0.5, 1.0, 0.5, 1.0), 2e-3);
    for (auto _ : state) benchmark::DoNotOptimize(geometry_report(s));
}
BENCHMARK(BM_GeometryReport);

void BM_RadiusDijkstra(benchmark::State& state) {
    ProjectiveCurve line = exceptional_line(GaussianRational(0), GaussianRational(0));
    SurfaceSample s =
        sample_surface<double>(line, DomainSpec::rect(-1.0, 1.0, -0.2, 0.2), 4e-3);
    for (auto _ : state) benchmark::DoNotOptimize(intrinsic_radius(s, 0.0, 0.0));
}
BENCHMARK(BM_RadiusDijkstra);

}  // namespace

BENCHMARK_MAIN();
