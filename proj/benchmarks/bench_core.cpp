#include <random>

#include <benchmark/benchmark.h>

#include "inialg/analysis.hpp"
#include "inialg/io.hpp"

using namespace inialg;

namespace {

ConstructionSpec rs_spec() {
    return ConstructionSpec{
        .name = "rs",
        .source_dim = 1,
        .dim = 2,
        .source_gens = {LaurentPoly::monomial(ExponentVector{1}, rat(1))},
        .embeddings = {{LaurentPoly::variable(2, 0)}, {LaurentPoly::variable(2, 1)}},
        .cone = ConeWithFaces({qvec({1, 0}), qvec({0, 1})}, {qvec({0, 1}), qvec({1, 0})}),
        .U = {},
        .filtration = qvec({1, 1}),
        .grading = qvec({1, 1})};
}

LaurentPoly dense_poly(int dim, int terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> e(-4, 4);
    std::uniform_int_distribution<long> c(1, 9);
    LaurentPoly p(dim);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = e(rng);
        p = p + LaurentPoly::monomial(ExponentVector(std::move(v)), rat(c(rng)));
    }
    return p;
}

void BM_poly_multiply(benchmark::State& state) {
    LaurentPoly f = dense_poly(3, static_cast<int>(state.range(0)), 1);
    LaurentPoly g = dense_poly(3, static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_poly_multiply)->Arg(8)->Arg(32)->Arg(128);

void BM_order_compare(benchmark::State& state) {
    TermOrder ord = TermOrder::from_weights({{rat(3, 7), rat(-2, 5), rat(1, 3)}});
    ExponentVector a{4, -2, 1}, b{4, -2, 2};
    for (auto _ : state) benchmark::DoNotOptimize(ord.compare(a, b));
}
BENCHMARK(BM_order_compare);

void BM_cone_classify(benchmark::State& state) {
    ConeWithFaces cone({qvec({2, 1}), qvec({1, 2})}, {qvec({-1, 2}), qvec({2, -1})});
    ExponentVector p{5, 4};
    for (auto _ : state) benchmark::DoNotOptimize(cone.classify(p));
}
BENCHMARK(BM_cone_classify);

void BM_echelon(benchmark::State& state) {
    std::vector<LaurentPoly> polys;
    for (int k = 0; k < state.range(0); ++k)
        polys.push_back(dense_poly(2, 12, static_cast<std::uint64_t>(k + 10)));
    TermOrder lex = TermOrder::lex(2);
    for (auto _ : state) benchmark::DoNotOptimize(echelon_pivots(polys, lex));
}
BENCHMARK(BM_echelon)->Arg(16)->Arg(64);

void BM_degree_monoid_rs(benchmark::State& state) {
    Construction c = Construction::validate(rs_spec());
    TermOrder lex = TermOrder::lex(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(degree_monoid(c, lex, Rational(state.range(0))));
}
BENCHMARK(BM_degree_monoid_rs)->Arg(6)->Arg(10)->Arg(14);

void BM_completeness_rs(benchmark::State& state) {
    Construction c = Construction::validate(rs_spec());
    TermOrder lex = TermOrder::lex(2);
    for (auto _ : state) benchmark::DoNotOptimize(completeness_report(c, lex, rat(6)));
}
BENCHMARK(BM_completeness_rs);

} // namespace

BENCHMARK_MAIN();
