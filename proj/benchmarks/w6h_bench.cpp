#include <benchmark/benchmark.h>

#include <string>

#include "w6h/derivations.hpp"
#include "w6h/diff.hpp"
#include "w6h/dsl.hpp"
#include "w6h/validator.hpp"

namespace {

using namespace w6h;

// A deterministic mid-sized workspace: three iterations, every view
// populated, links in every which cell.
Workspace sample_workspace() {
    Workspace ws;
    ws.name = "bench";
    for (int iteration = 1; iteration <= 3; ++iteration) {
        Snapshot snap(iteration, iteration == 1 ? "AS-IS" : "TO-BE");
        int serial = 0;
        for (PerspectiveRow row : all_perspectives()) {
            ViewSlice& slice = snap.slice(row);
            for (Interrogative q : all_interrogatives()) {
                for (int i = 0; i < 4; ++i) {
                    Artifact artifact;
                    artifact.name = "a" + std::to_string(serial++);
                    if (i % 2) artifact.kind = "kind";
                    if (i % 3) artifact.description = "some description text";
                    slice.add_artifact(q, std::move(artifact));
                }
            }
            const auto& functions = slice.cell(Interrogative::How).artifacts;
            const auto& entities = slice.cell(Interrogative::What).artifacts;
            for (std::size_t i = 0; i < functions.size(); ++i) {
                slice.add_link({functions[i].name, entities[i].name,
                                {CrudVerb::Create, CrudVerb::Read},
                                ""});
            }
            // Later iterations grow a little so diffs have work to do.
            for (int extra = 1; extra < iteration; ++extra) {
                slice.add_artifact(Interrogative::What,
                                   {"grown" + std::to_string(serial++) + "_" +
                                        std::to_string(extra),
                                    "", ""});
            }
        }
        ws.snapshots.push_back(std::move(snap));
    }
    return ws;
}

void BM_ValidOrdersStandard(benchmark::State& state) {
    DependencyRuleSet rules = standard_rules();
    for (auto _ : state) {
        benchmark::DoNotOptimize(valid_orders(rules));
    }
}
BENCHMARK(BM_ValidOrdersStandard);

void BM_ValidOrdersUnconstrained(benchmark::State& state) {
    DependencyRuleSet rules;
    for (auto _ : state) {
        benchmark::DoNotOptimize(valid_orders(rules));
    }
}
BENCHMARK(BM_ValidOrdersUnconstrained);

void BM_Print(benchmark::State& state) {
    Workspace ws = sample_workspace();
    for (auto _ : state) {
        benchmark::DoNotOptimize(print(ws));
    }
}
BENCHMARK(BM_Print);

void BM_Parse(benchmark::State& state) {
    std::string text = print(sample_workspace());
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse(text));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_Parse);

void BM_Validate(benchmark::State& state) {
    Workspace ws = sample_workspace();
    Profile profile = Profile::standard();
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate(ws, profile));
    }
}
BENCHMARK(BM_Validate);

void BM_DeriveCrud(benchmark::State& state) {
    Workspace ws = sample_workspace();
    const ViewSlice& slice = ws.snapshots[0].slice(PerspectiveRow::Designer);
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_crud(slice));
    }
}
BENCHMARK(BM_DeriveCrud);

void BM_Diff(benchmark::State& state) {
    Workspace ws = sample_workspace();
    const Snapshot& a = ws.snapshots[0];
    const Snapshot& b = ws.snapshots[1];
    for (auto _ : state) {
        benchmark::DoNotOptimize(diff(a, b));
    }
}
BENCHMARK(BM_Diff);

void BM_ExportInterchange(benchmark::State& state) {
    Workspace ws = sample_workspace();
    for (auto _ : state) {
        benchmark::DoNotOptimize(export_interchange(ws));
    }
}
BENCHMARK(BM_ExportInterchange);

} // namespace

BENCHMARK_MAIN();
