// Microbenchmarks for the exact kernels: Smith normal form, weak-boundary
// bases, truncation, and the intersection-homology pipeline.

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "tsih/cochain.hpp"
#include "tsih/int_matrix.hpp"
#include "tsih/json_io.hpp"
#include "tsih/ts_ih.hpp"

namespace {

using tsih::Int;
using tsih::IntMatrix;
using tsih::IntVec;
using tsih::PrimeSet;

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::vector<IntVec> data(rows, IntVec(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            data[r][c] = Int(entry(rng));
    return IntMatrix::from_rows(data);
}

tsih::CochainComplex random_two_term(std::size_t rank, std::uint64_t seed) {
    return tsih::CochainComplex(0, 1, {rank, rank}, {{0, random_matrix(rank, rank, seed)}});
}

const tsih::LesPackage& solid_torus_package() {
    static const tsih::LesPackage pkg = [] {
        std::ifstream in(TSIH_DATA_DIR "/solid-torus-package.json", std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        return tsih::package_from_json(text.str());
    }();
    return pkg;
}

void BM_snf(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const IntMatrix a = random_matrix(n, n, 0x5eed0000 + n);
    for (auto _ : state) {
        tsih::SmithDecomposition d = tsih::snf(a);
        benchmark::DoNotOptimize(d.diag);
    }
}
BENCHMARK(BM_snf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_weak_boundary_basis(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const IntMatrix d = random_matrix(n, n, 0xb0a70000 + n);
    const PrimeSet s = PrimeSet::finite({Int(2), Int(3)});
    for (auto _ : state) {
        IntMatrix basis = tsih::weak_boundary_basis(d, s);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_weak_boundary_basis)->Arg(4)->Arg(8)->Arg(16);

void BM_tt_truncate(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const tsih::CochainComplex c = random_two_term(n, 0x7c0de + n);
    const PrimeSet s = PrimeSet::finite({Int(2)});
    for (auto _ : state) {
        tsih::TruncationResult t = tsih::tt_truncate(c, 0, s);
        benchmark::DoNotOptimize(t.complex);
    }
}
BENCHMARK(BM_tt_truncate)->Arg(4)->Arg(8)->Arg(16);

void BM_cohomology(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const tsih::CochainComplex c = random_two_term(n, 0xc0c0 + n);
    for (auto _ : state) {
        tsih::FgAbGroup h = tsih::cohomology(c, 1);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_cohomology)->Arg(4)->Arg(8)->Arg(16);

void BM_compute_tsih(benchmark::State& state) {
    const tsih::LesPackage& pkg = solid_torus_package();
    const tsih::TsPerversity p{1, PrimeSet::finite({Int(2)})};
    for (auto _ : state) {
        tsih::TsIhResult r = tsih::compute_tsih(pkg, p);
        benchmark::DoNotOptimize(r.groups);
    }
}
BENCHMARK(BM_compute_tsih);

void BM_duality_report(benchmark::State& state) {
    const tsih::LesPackage& pkg = solid_torus_package();
    const tsih::TsPerversity p{1, PrimeSet::finite({Int(2)})};
    for (auto _ : state) {
        tsih::DualityReport r = tsih::duality_report(pkg, p);
        benchmark::DoNotOptimize(r.rows);
    }
}
BENCHMARK(BM_duality_report);

}  // namespace

BENCHMARK_MAIN();
