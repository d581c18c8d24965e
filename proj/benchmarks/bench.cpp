#include <benchmark/benchmark.h>

#include <mourre/chebyshev.hpp>
#include <mourre/interpolation.hpp>
#include <mourre/pingpong.hpp>
#include <mourre/symbol.hpp>
#include <mourre/verifier.hpp>

using namespace mourre;

namespace {

pingpong::PingPongProblem problem(int kappa, int n) {
    pingpong::PingPongProblem p;
    p.kappa = kappa;
    p.n = n;
    return p;
}

void BM_eval_T(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.123456;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cheb::eval_T(n, x));
        x = -x;
    }
}
BENCHMARK(BM_eval_T)->Arg(8)->Arg(24);

void BM_eval_U(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.123456;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cheb::eval_U(n, x));
        x = -x;
    }
}
BENCHMARK(BM_eval_U)->Arg(8)->Arg(24);

void BM_branch_inverse(benchmark::State& state) {
    const cheb::BranchIndex b(8, 3);
    double y = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cheb::branch_inverse(b, y));
        y = -y;
    }
}
BENCHMARK(BM_branch_inverse);

void BM_g2(benchmark::State& state) {
    const symbol::EnergyPoint2D p{0.8, 0.21};
    for (auto _ : state) benchmark::DoNotOptimize(symbol::g2(3, 8, p));
}
BENCHMARK(BM_g2);

void BM_G2_four_harmonics(benchmark::State& state) {
    const symbol::Combination c(2, {{1, 1.0}, {2, 0.76}, {3, 0.197}, {5, 0.24}});
    const symbol::EnergyPoint2D p{0.55, 0.21};
    for (auto _ : state) benchmark::DoNotOptimize(symbol::G2(c, p));
}
BENCHMARK(BM_G2_four_harmonics);

void BM_construct_chain(benchmark::State& state) {
    const auto p = problem(3, static_cast<int>(state.range(0)));
    // at the calibrated energy the walk completes instead of bailing early
    const double E = pingpong::solve(p).E;
    for (auto _ : state) benchmark::DoNotOptimize(pingpong::construct_chain(p, E));
}
BENCHMARK(BM_construct_chain)->Arg(2)->Arg(6);

void BM_solve_threshold(benchmark::State& state) {
    const auto p = problem(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pingpong::solve(p));
}
BENCHMARK(BM_solve_threshold)->Arg(2)->Arg(6);

void BM_solve_band_coefficients(benchmark::State& state) {
    interpolation::InterpolationProblem p;
    p.kappa = 2;
    p.left = pingpong::solve(problem(2, 2));
    p.right = pingpong::solve(problem(2, 1));
    p.sigma = {1, 2, 3, 5};
    for (auto _ : state) benchmark::DoNotOptimize(interpolation::solve_coefficients(p));
}
BENCHMARK(BM_solve_band_coefficients);

void BM_scan_2d(benchmark::State& state) {
    const symbol::Combination c(2, {{1, 1.0}, {2, 9.0 / 14.0}});
    for (auto _ : state) benchmark::DoNotOptimize(verifier::scan_2d(c, 0.8, 512));
}
BENCHMARK(BM_scan_2d);

void BM_certify_first_band(benchmark::State& state) {
    const symbol::Combination c(2, {{1, 1.0}, {2, 9.0 / 14.0}});
    for (auto _ : state)
        benchmark::DoNotOptimize(verifier::certify_band(c, 2.0 / 3.0, 1.0, 64, 256));
}
BENCHMARK(BM_certify_first_band);

}  // namespace

BENCHMARK_MAIN();
