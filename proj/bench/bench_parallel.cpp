// OpenMP kernels against their serial references.

#include "resum/mapping.hpp"
#include "resum/models.hpp"
#include "resum/odm.hpp"

#include <benchmark/benchmark.h>

using namespace resum;

namespace {

MappingSpec d0_mapping()
{
    MappingSpec m;
    m.alpha = 2;
    m.prefactor_p = Real(1) / 2;
    return m;
}

struct Init {
    Init() { set_precision(precision_from_env(64)); }
} init;

void table_parallel(benchmark::State& st)
{
    PowerSeries s = d0_partition_coeffs(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(build_rho_table(s, d0_mapping()));
}

void table_serial(benchmark::State& st)
{
    PowerSeries s = d0_partition_coeffs(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(build_rho_table_serial(s, d0_mapping()));
}

void study(benchmark::State& st, bool parallel)
{
    const int K = static_cast<int>(st.range(0));
    RhoPolynomialTable t = build_rho_table(d0_partition_coeffs(K + 1), d0_mapping());
    StudyOptions o;
    o.k_min = 5;
    o.parallel = parallel;
    Real oracle = d0_strong_amplitude();
    for (auto _ : st)
        benchmark::DoNotOptimize(convergence_study(t, RhoSelectionCriterion{}, K, Coupling::infinity(), oracle, o));
}

void study_parallel(benchmark::State& st) { study(st, true); }
void study_serial(benchmark::State& st) { study(st, false); }

}  // namespace

BENCHMARK(table_parallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(table_serial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(study_parallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(study_serial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
