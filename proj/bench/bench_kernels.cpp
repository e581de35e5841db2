// Serial reference vs parallel kernels.

#include "excolex/cartan.hpp"
#include "excolex/enumerate.hpp"
#include "excolex/verify.hpp"

#include <benchmark/benchmark.h>

using namespace excolex;

namespace {

ExecPolicy policy_of(const benchmark::State& state) { return state.range(0) ? ExecPolicy::Parallel : ExecPolicy::Serial; }

MonomialIdeal sample_ideal()
{
    return ideal_from_text(6, "e1e2,e1e3,e2e3,e1e4,e2e4e5,e3e4e5");
}

void BM_CartanFast(benchmark::State& state)
{
    const MonomialIdeal I = sample_ideal();
    CartanOptions options;
    options.i_max = 4;
    options.policy = policy_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(cartan_betti(I, options));
}
BENCHMARK(BM_CartanFast)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CartanReference(benchmark::State& state)
{
    const MonomialIdeal I = ideal_from_text(5, "e1e2,e1e3,e1e4,e2e3e4");
    CartanOptions options;
    options.i_max = 3;
    for (auto _ : state)
        benchmark::DoNotOptimize(cartan_betti_reference(I, options));
}
BENCHMARK(BM_CartanReference)->Unit(benchmark::kMillisecond);

void BM_CartanFastSameInput(benchmark::State& state)
{
    const MonomialIdeal I = ideal_from_text(5, "e1e2,e1e3,e1e4,e2e3e4");
    CartanOptions options;
    options.i_max = 3;
    options.policy = ExecPolicy::Serial;
    for (auto _ : state)
        benchmark::DoNotOptimize(cartan_betti(I, options));
}
BENCHMARK(BM_CartanFastSameInput)->Unit(benchmark::kMillisecond);

void BM_GreenCampaign(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_green(6, policy_of(state)));
}
BENCHMARK(BM_GreenCampaign)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LowerBoundCampaign(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_colex_lower_bound(6, 8, policy_of(state)));
}
BENCHMARK(BM_LowerBoundCampaign)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OracleAgreement(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_oracle_agreement(4, 4, policy_of(state)));
}
BENCHMARK(BM_OracleAgreement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateIdeals(benchmark::State& state)
{
    const Ambient amb(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_strongly_stable_ideal(amb, {}, [&](const MonomialIdeal&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateIdeals)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
