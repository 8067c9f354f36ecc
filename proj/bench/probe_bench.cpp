// Serial vs OpenMP probe-grid verification on two golden fractions.
#include <benchmark/benchmark.h>

#include "dfsub/frontend/parser.hpp"
#include "dfsub/probe.hpp"
#include "dfsub/subfield.hpp"

using namespace dfsub;

namespace {

const char* kMixedLogs =
    "(5*x^3*ln(x+1)+ln(x+@e)+27*x^3*ln(x+@sqrt2))/(ln(x)+x*(ln(x+2)-17*ln(x+3))^2)";
const char* kSmall = "(ln(x+1)-ln(x+2))^2/(ln(x)+ln(x+3)*ln(x+1))";

struct Case {
    RatExpr u;
    SubfieldPresentation p;
};

const Case& example(int which) {
    static const Case cases[] = {
        [] {
            RatExpr u = parse_expression(kSmall);
            return Case{u, iterlog_subfield(u)};
        }(),
        [] {
            RatExpr u = parse_expression(kMixedLogs);
            return Case{u, iterlog_subfield(u)};
        }(),
    };
    return cases[which];
}

std::vector<Const> values() {
    static const std::vector<Const> v = default_probe_values();
    return v;
}

void BM_ProbeSerial(benchmark::State& state) {
    const Case& c = example(static_cast<int>(state.range(0)));
    std::vector<SymId> vars = c.p.vars;
    if (vars.size() > 4) vars.resize(4);
    for (auto _ : state) {
        auto r = probe_grid_serial(c.u, c.p.linear_forms, vars, values());
        benchmark::DoNotOptimize(r.mismatches);
    }
}

void BM_ProbeParallel(benchmark::State& state) {
    const Case& c = example(static_cast<int>(state.range(0)));
    std::vector<SymId> vars = c.p.vars;
    if (vars.size() > 4) vars.resize(4);
    for (auto _ : state) {
        auto r = probe_grid_parallel(c.u, c.p.linear_forms, vars, values());
        benchmark::DoNotOptimize(r.mismatches);
    }
}

}  // namespace

BENCHMARK(BM_ProbeSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProbeParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
