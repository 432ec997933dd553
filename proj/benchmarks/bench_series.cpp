//
// bench_series.cpp -- microbenchmarks for the exact-series kernel and the
// recursion engine.
//
#include <benchmark/benchmark.h>

#include "gwcp1/degree_zero.hpp"
#include "gwcp1/kernels.hpp"
#include "gwcp1/toda.hpp"

using namespace gwcp1;

namespace {

std::vector<std::string> z_names(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("z" + std::to_string(i));
    return out;
}

std::map<std::string, Rational> unit_form(const std::vector<std::string>& names) {
    std::map<std::string, Rational> form;
    for (const auto& v : names) form[v] = Rational(1);
    return form;
}

MultiSeries dense_series(int n, int cap) {
    auto zs = z_names(n);
    std::vector<std::string> vars = {kEps};
    vars.insert(vars.end(), zs.begin(), zs.end());
    Truncation t = Truncation::uniform(4, zs, cap, cap);
    MultiSeries s = compose_kernel(KernelKind::SinhRatio, 1, unit_form(zs), vars, t);
    return s * linear_form_power(vars, t, unit_form(zs), 2) + MultiSeries::one(vars, t);
}

void BM_SeriesMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MultiSeries a = dense_series(n, 8);
    for (auto _ : state) benchmark::DoNotOptimize(a * a);
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(a.term_count() * a.term_count()));
}
BENCHMARK(BM_SeriesMul)->Arg(2)->Arg(3)->Arg(4);

void BM_KernelExpansion(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernel(KernelKind::SinhRatio, order));
}
BENCHMARK(BM_KernelExpansion)->Arg(8)->Arg(16)->Arg(32);

void BM_F1Closed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto zs = z_names(n);
    Truncation t = Truncation::uniform(8, zs, 6);
    for (auto _ : state) benchmark::DoNotOptimize(f1_closed(zs, t));
}
BENCHMARK(BM_F1Closed)->Arg(2)->Arg(3)->Arg(4);

void BM_F1Recursive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto zs = z_names(n);
    Truncation t = Truncation::uniform(8, zs, 6);
    for (auto _ : state) benchmark::DoNotOptimize(f1_recursive(zs, t));
}
BENCHMARK(BM_F1Recursive)->Arg(2)->Arg(3)->Arg(4);

void BM_ExactDivide(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto zs = z_names(n);
    const int D = 8 + n - 1;
    MultiSeries g = g_series(zs, Truncation::uniform(8, zs, D, D));
    for (auto _ : state) benchmark::DoNotOptimize(exact_divide(g, zs));
}
BENCHMARK(BM_ExactDivide)->Arg(2)->Arg(3);

void BM_MultipointCold(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TodaEngine engine;
        benchmark::DoNotOptimize(engine.multipoint_canonical(d, 0, 2, 4));
    }
}
BENCHMARK(BM_MultipointCold)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_InvariantWarm(benchmark::State& state) {
    TodaEngine engine;
    InvariantKey key{2, 2, {6}, {}};
    engine.gw_invariant(key);
    for (auto _ : state) benchmark::DoNotOptimize(engine.gw_invariant(key));
}
BENCHMARK(BM_InvariantWarm);

} // namespace

BENCHMARK_MAIN();
