// Serial reference vs OpenMP batch kernel on desk-sized minibatches.
//
//   bench_batch --benchmark_filter=Image

#include <benchmark/benchmark.h>

#include <omp.h>

#include <random>

#include "dcmz/batch.hpp"
#include "dcmz/train.hpp"

namespace {

using namespace dcmz;

struct Setup {
    CheckedParams params;
    MaskSet masks;
    std::vector<Episode> batch;
};

// 100 digit-shaped static episodes: 784 inputs, 10 repeats, N_m = 100.
const Setup& image_setup() {
    static const Setup s = [] {
        SystemParams sp;
        sp.N_m = 100;
        Setup out{validate(sp), initial_masks(100, 784, 10, 0.1, 1), {}};
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> pixel(0.0, 1.0);
        std::vector<double> x(784);
        for (int i = 0; i < 100; ++i) {
            for (double& v : x) v = pixel(rng);
            out.batch.push_back(static_episode(x, 10, i % 10));
        }
        return out;
    }();
    return s;
}

// 20 streaming episodes of 50 frames, 39 inputs, 8 classes, N_m = 50.
const Setup& sequence_setup() {
    static const Setup s = [] {
        SystemParams sp;
        sp.N_m = 50;
        Setup out{validate(sp), initial_masks(50, 39, 8, 0.1, 1), {}};
        std::mt19937_64 rng(3);
        std::normal_distribution<double> frame(0.0, 1.0);
        for (int i = 0; i < 20; ++i) {
            Matrix f(50, 39);
            for (Eigen::Index k = 0; k < f.size(); ++k) f.data()[k] = frame(rng);
            std::vector<int> labels(50);
            for (int t = 0; t < 50; ++t) labels[t] = (i + t / 7) % 8;
            out.batch.push_back(streaming_episode(f, labels));
        }
        return out;
    }();
    return s;
}

template <const Setup& (*S)()>
void BM_Reference(benchmark::State& state) {
    const Setup& s = S();
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch_reference(s.masks, s.params, s.batch));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(s.batch.size()));
}

template <const Setup& (*S)()>
void BM_Parallel(benchmark::State& state) {
    const Setup& s = S();
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch(s.masks, s.params, s.batch, workers));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(s.batch.size()));
}

void worker_counts(benchmark::internal::Benchmark* b) {
    for (int w = 1; w <= omp_get_num_procs(); w *= 2) b->Arg(w);
}

}  // namespace

BENCHMARK(BM_Reference<image_setup>)->Name("Image/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel<image_setup>)->Name("Image/parallel")->Apply(worker_counts)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reference<sequence_setup>)->Name("Sequence/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel<sequence_setup>)->Name("Sequence/parallel")->Apply(worker_counts)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
