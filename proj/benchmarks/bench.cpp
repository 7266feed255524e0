#include <benchmark/benchmark.h>

#include <sstream>

#include "spinnet/graph.hpp"
#include "spinnet/statesum.hpp"
#include "spinnet/wigner.hpp"

using namespace spinnet;

static void BM_sixj_small(benchmark::State& state) {
    HalfInt j(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(wigner_6j(j, j, j, j, j, j));
}
BENCHMARK(BM_sixj_small);

static void BM_sixj_large(benchmark::State& state) {
    HalfInt j((int)state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(wigner_6j(j, j, j, j, j, j));
}
BENCHMARK(BM_sixj_large)->Arg(20)->Arg(60)->Arg(120);

static void BM_build_rotation_graph(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(build_graph((int)state.range(0), GraphKind::rotation));
}
BENCHMARK(BM_build_rotation_graph)->Arg(3)->Arg(4)->Arg(5);

static void BM_graph_diameter(benchmark::State& state) {
    MoveGraph g = build_graph((int)state.range(0), GraphKind::rotation);
    for (auto _ : state)
        benchmark::DoNotOptimize(diameter(g));
}
BENCHMARK(BM_graph_diameter)->Arg(3)->Arg(4);

static const char* S3_TRI =
    "PR3 v1\nV 5\n"
    "E 1\nE 2\nE 3\nE 4\nE 5\nE 6\nE 7\nE 8\nE 9\nE 10\n"
    "T 1 2 5 8 6 3\nT 1 2 5 9 7 4\nT 1 3 6 10 7 4\nT 2 3 8 10 9 4\nT 5 6 8 10 9 7\n";

static void BM_partition_sum_s3(benchmark::State& state) {
    std::istringstream in(S3_TRI);
    Triangulation3 t = parse_triangulation(in);
    for (auto _ : state)
        benchmark::DoNotOptimize(partition_sum(t, HalfInt((int)state.range(0)), 1.0));
}
BENCHMARK(BM_partition_sum_s3)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
