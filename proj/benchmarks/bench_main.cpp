#include <benchmark/benchmark.h>

#include "troph/hilbpoint.hpp"
#include "troph/initial.hpp"
#include "troph/monideal.hpp"
#include "troph/numpoly.hpp"

using namespace troph;

namespace {

GradedIdeal pairs_fixture() {
    return pairs_of_points(PuiseuxRat(1), PuiseuxRat(1), PuiseuxRat(1), PuiseuxRat(2))
        .ideal;
}

void BM_FieldArithmetic(benchmark::State& state) {
    PuiseuxRat a = PuiseuxRat::parse("(2 + 3*t^(1/2))/(1 - t)");
    PuiseuxRat b = PuiseuxRat::parse("t^(-3/2) + 5*t^(1/3)");
    for (auto _ : state) {
        PuiseuxRat c = a * b + a / b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_FieldArithmetic);

void BM_MemberOracle(benchmark::State& state) {
    GradedIdeal I = pairs_fixture();
    MVector m = {2};
    std::vector<Rat> omega = {Rat(1), Rat(0), Rat(0)};
    for (auto _ : state) {
        bool in = member(I, m, omega);
        benchmark::DoNotOptimize(in);
    }
}
BENCHMARK(BM_MemberOracle);

void BM_WitnessPolynomial(benchmark::State& state) {
    GradedIdeal I = pairs_fixture();
    MVector m = {2};
    std::vector<Rat> omega = {Rat(1), Rat(0), Rat(0)};
    for (auto _ : state) {
        KPoly w = witness_polynomial(I, m, omega);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_WitnessPolynomial);

void BM_PairsOfPoints(benchmark::State& state) {
    PuiseuxRat a(1), b(1), c(1), l = PuiseuxRat(-1) + PuiseuxRat::t();
    for (auto _ : state) {
        PairsResult r = pairs_of_points(a, b, c, l);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PairsOfPoints);

void BM_PrimaryDecomposition(benchmark::State& state) {
    MonIdeal I = parse_mon_ideal("x0^2*x1, x1^3*x2, x0*x2^2, x1*x2^3", 4);
    for (auto _ : state) {
        auto p = primary_decomposition(I);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PrimaryDecomposition);

void BM_HilbertFit(benchmark::State& state) {
    GradedIdeal I = pairs_fixture();
    for (auto _ : state) {
        MVector m = fit_hilbert_polynomial(I);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_HilbertFit);

}  // namespace

BENCHMARK_MAIN();
