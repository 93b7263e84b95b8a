#include "lexmorse/homology.hpp"
#include "lexmorse/lex_morse.hpp"
#include "lexmorse/mobius.hpp"
#include "lexmorse/multiset.hpp"
#include "lexmorse/puzzle.hpp"

#include <benchmark/benchmark.h>

using namespace lexmorse;

namespace {

// Shapes indexed by the benchmark argument.
const std::vector<std::vector<int>>& shapes() {
    static const std::vector<std::vector<int>> s{{6}, {3, 1, 1}, {2, 2, 2}, {1, 1, 1, 1, 1}, {4, 1, 1}, {1, 1, 1, 1, 1, 1}};
    return s;
}

void label_arg(benchmark::State& st) { st.SetLabel(format_lambda(shapes()[static_cast<std::size_t>(st.range(0))])); }

void BM_MultisetPoset(benchmark::State& st) {
    const auto& lam = shapes()[static_cast<std::size_t>(st.range(0))];
    for (auto _ : st) benchmark::DoNotOptimize(MultisetPoset(lam).poset().size());
    label_arg(st);
}
BENCHMARK(BM_MultisetPoset)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_FacetOrder(benchmark::State& st) {
    MultisetPoset mp(shapes()[static_cast<std::size_t>(st.range(0))]);
    for (auto _ : st) benchmark::DoNotOptimize(multiset_facet_order(mp).size());
    label_arg(st);
}
BENCHMARK(BM_FacetOrder)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_LexMatching(benchmark::State& st) {
    MultisetPoset mp(shapes()[static_cast<std::size_t>(st.range(0))]);
    auto fo = multiset_facet_order(mp);
    for (auto _ : st) {
        auto sys = interval_systems(fo);
        auto m = build_matching(fo, sys);
        benchmark::DoNotOptimize(m.critical().size());
    }
    label_arg(st);
}
BENCHMARK(BM_LexMatching)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& st) {
    MultisetPoset mp(shapes()[static_cast<std::size_t>(st.range(0))]);
    auto cx = order_complex(mp.poset());
    const auto k = st.range(1) == 0 ? Coefficients::Rational : Coefficients::Mod2;
    for (auto _ : st) benchmark::DoNotOptimize(reduced_betti(cx, k));
    label_arg(st);
}
BENCHMARK(BM_Homology)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MobiusRecursive(benchmark::State& st) {
    MultisetPoset mp(shapes()[static_cast<std::size_t>(st.range(0))]);
    for (auto _ : st) benchmark::DoNotOptimize(mobius_recursive(mp.poset()));
    label_arg(st);
}
BENCHMARK(BM_MobiusRecursive)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_HookCancellation(benchmark::State& st) {
    MultisetPoset mp(shapes()[static_cast<std::size_t>(st.range(0))]);
    for (auto _ : st) benchmark::DoNotOptimize(cancel_all_lower(mp).survivors.size());
    label_arg(st);
}
BENCHMARK(BM_HookCancellation)->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PuzzleSearch(benchmark::State& st) {
    PuzzleOptions o{static_cast<int>(st.range(0)), 5, false};
    for (auto _ : st) benchmark::DoNotOptimize(puzzle_search(o).solutions.size());
}
BENCHMARK(BM_PuzzleSearch)->Arg(18)->Arg(20)->Arg(22)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
