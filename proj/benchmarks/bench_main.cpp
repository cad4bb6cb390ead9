#include <benchmark/benchmark.h>

#include <vector>

#include "cvpg/builders.hpp"
#include "cvpg/chordal.hpp"
#include "cvpg/chordal_contact.hpp"
#include "cvpg/class_contact.hpp"
#include "cvpg/grid_rep.hpp"
#include "cvpg/io.hpp"
#include "cvpg/oracle.hpp"
#include "cvpg/patterns.hpp"

using namespace cvpg;

namespace {

// K4 blocks hung along a path: vertex 3i is the cut vertex shared by block i
// and block i+1. Contact for every length.
Graph k4_chain(int blocks) {
    GraphBuilder b(3 * blocks + 1);
    for (int i = 0; i < blocks; ++i) {
        Vertex a = 3 * i;
        b.add_clique(std::vector<Vertex>{a, a + 1, a + 2, a + 3});
    }
    return b.build();
}

// Caterpillar: a spine with one pendant per spine vertex.
Graph caterpillar(int spine) {
    GraphBuilder b(2 * spine);
    for (Vertex i = 0; i + 1 < spine; ++i) b.add_edge(i, i + 1);
    for (Vertex i = 0; i < spine; ++i) b.add_edge(i, spine + i);
    return b.build();
}

void BM_RecognizeK4Chain(benchmark::State& st) {
    Graph g = k4_chain(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(recognize_chordal_contact(g));
    st.SetComplexityN(g.order());
}
BENCHMARK(BM_RecognizeK4Chain)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_RecognizeTMember(benchmark::State& st) {
    Graph g = make_T_member(path_graph(static_cast<int>(st.range(0)))).graph;
    for (auto _ : st) benchmark::DoNotOptimize(recognize_chordal_contact(g));
    st.SetComplexityN(g.order());
}
BENCHMARK(BM_RecognizeTMember)->RangeMultiplier(4)->Range(2, 512)->Complexity();

void BM_RepresentChordal(benchmark::State& st) {
    Graph g = k4_chain(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(represent_chordal(g));
    st.SetComplexityN(g.order());
}
BENCHMARK(BM_RepresentChordal)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_RepresentTree(benchmark::State& st) {
    Graph g = caterpillar(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(represent_tree(g));
    st.SetComplexityN(g.order());
}
BENCHMARK(BM_RepresentTree)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_DecideThinSpider(benchmark::State& st) {
    Graph g = make_thin_spider(4, complete_graph(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(decide_contact(g));
}
BENCHMARK(BM_DecideThinSpider)->Arg(0)->Arg(4)->Arg(16);

void BM_DecideW1(benchmark::State& st) {
    Graph g = make_w1({3, 3, {1, 2, 3}, {1, 2}, 2});
    for (auto _ : st) benchmark::DoNotOptimize(decide_contact(g));
}
BENCHMARK(BM_DecideW1);

void BM_Validate(benchmark::State& st) {
    Graph g = k4_chain(static_cast<int>(st.range(0)));
    auto rep = represent_chordal(g);
    for (auto _ : st) benchmark::DoNotOptimize(validate(g, rep));
    st.SetComplexityN(g.order());
}
BENCHMARK(BM_Validate)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_OraclePattern(benchmark::State& st) {
    static const std::vector<Graph> graphs{make_pattern(PatternId::K33), make_pattern(PatternId::CoC6),
                                           make_pattern(PatternId::B2), cycle_graph(5)};
    const Graph& g = graphs[static_cast<std::size_t>(st.range(0))];
    for (auto _ : st) benchmark::DoNotOptimize(search_representation(g));
}
BENCHMARK(BM_OraclePattern)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& st) {
    Graph g = k4_chain(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(parse_graph6(to_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
