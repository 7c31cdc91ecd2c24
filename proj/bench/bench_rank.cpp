// Serial vs OpenMP rank kernels on random and condition matrices.

#include <random>

#include <benchmark/benchmark.h>

#include "secant/hilbert.hpp"
#include "secant/linalg.hpp"
#include "secant/schemes.hpp"

using namespace secant;

namespace {

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, const PrimeField& F) {
    DenseMatrix m(rows, cols);
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<std::uint32_t> uni(0, F.p() - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = uni(gen);
    return m;
}

void BM_RankSerial(benchmark::State& state) {
    PrimeField F(PrimeField::kMersenne31);
    auto n = static_cast<std::size_t>(state.range(0));
    DenseMatrix m = random_matrix(n, n, F);
    for (auto _ : state) benchmark::DoNotOptimize(rank_serial(m, F));
}

void BM_RankParallel(benchmark::State& state) {
    PrimeField F(PrimeField::kMersenne31);
    auto n = static_cast<std::size_t>(state.range(0));
    DenseMatrix m = random_matrix(n, n, F);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m, F));
}

void BM_RowBasis(benchmark::State& state) {
    PrimeField F(PrimeField::kMersenne31);
    auto n = static_cast<std::size_t>(state.range(0));
    DenseMatrix m = random_matrix(n, n, F);
    for (auto _ : state) {
        RowBasis rb(n, F);
        for (std::size_t i = 0; i < n; ++i) rb.add(std::vector<Elem>(m.row(i).begin(), m.row(i).end()));
        benchmark::DoNotOptimize(rb.rank());
    }
}

// T(2,2;4,4;45): 45 double points, 225 columns.
void BM_HilbertCounterExample(benchmark::State& state) {
    PrimeField F(PrimeField::kMersenne31);
    Statement st = parse_statement("T(2,2;4,4;45)");
    Scheme z = sample(scheme_for(st), F, 42);
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_value(z, F));
}

}  // namespace

BENCHMARK(BM_RankSerial)->Arg(64)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_RankParallel)->Arg(64)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_RowBasis)->Arg(64)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_HilbertCounterExample);

BENCHMARK_MAIN();
