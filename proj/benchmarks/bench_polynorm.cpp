#include <benchmark/benchmark.h>

#include "polynorm/constructions.hpp"
#include "polynorm/covers.hpp"
#include "polynorm/optimizer.hpp"
#include "polynorm/titap.hpp"

using namespace polynorm;

namespace {

void BM_RationalMulAdd(benchmark::State& state) {
    Rational a(355, 113), b(-22, 7), acc(0);
    for (auto _ : state) {
        acc = fused_sub_mul(acc, a, b);
        benchmark::DoNotOptimize(acc);
        if (!acc.is_small()) acc = Rational(0);
    }
}
BENCHMARK(BM_RationalMulAdd);

void BM_Orientation(benchmark::State& state) {
    auto P = make_product(6, 6);
    std::vector<Point> pts = P->points_of(std::vector<int>{0, 7, 14, 21, 29});
    for (auto _ : state) benchmark::DoNotOptimize(orientation(pts));
}
BENCHMARK(BM_Orientation);

void BM_EnumerateSimplices(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto P = make_product(3, m);
        benchmark::DoNotOptimize(enumerate_simplices(*P).size());
    }
}
BENCHMARK(BM_EnumerateSimplices)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerifyTriangulation(benchmark::State& state) {
    auto c = seven_halves_triangulation(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    const CheckLevel level = state.range(1) ? CheckLevel::Full : CheckLevel::Fast;
    for (auto _ : state) benchmark::DoNotOptimize(verify_triangulation(*c.polytope, c.simplices, level).valid);
    state.SetLabel(std::to_string(c.simplices.size()) + " simplices");
}
BENCHMARK(BM_VerifyTriangulation)->Args({4, 0})->Args({4, 1})->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);

void BM_FundamentalCycle(benchmark::State& state) {
    auto chain = seven_halves_triangulation(8, 8).chain();
    for (auto _ : state) benchmark::DoNotOptimize(verify_fundamental_cycle(chain).is_fundamental);
}
BENCHMARK(BM_FundamentalCycle)->Unit(benchmark::kMillisecond);

void BM_ValidateCover(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    auto P = make_product(m, m);
    auto cover = reduced_cover(m);
    for (auto _ : state) benchmark::DoNotOptimize(validate_cover(cover, P).valid);
}
BENCHMARK(BM_ValidateCover)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TitapChain(benchmark::State& state) {
    auto chain = product_triangulation(6, 6).chain();
    for (auto _ : state) benchmark::DoNotOptimize(titap_chain(chain));
}
BENCHMARK(BM_TitapChain)->Unit(benchmark::kMillisecond);

void BM_SolveLP(benchmark::State& state) {
    UniversalModel model = build_universal_model(make_product(3, static_cast<int>(state.range(0))));
    LPOptions opt;
    opt.float_guided = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(solve_lp(model.lp, opt).value);
}
BENCHMARK(BM_SolveLP)->Args({3, 0})->Args({3, 1})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_SolveIP_3x4(benchmark::State& state) {
    for (auto _ : state) {
        UniversalModel model = build_universal_model(make_product(3, 4));
        benchmark::DoNotOptimize(solve_ip(model).value);
    }
}
BENCHMARK(BM_SolveIP_3x4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
