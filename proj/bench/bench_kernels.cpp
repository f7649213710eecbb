// Serial reference kernels against their OpenMP counterparts on layer shapes
// from the desk presets (MNIST-like sparse inputs, minibatch of 100).
#include "gradlab/kernels.hpp"
#include "gradlab/rng.hpp"

#include <benchmark/benchmark.h>

using namespace gradlab;
using kernels::Backend;

namespace {

template <typename T>
Matrix<T> random_matrix(std::size_t r, std::size_t c, std::uint64_t seed, double zero_fraction) {
    Matrix<T> a(r, c);
    Rng rng(seed);
    for (T& v : a.values()) v = rng.uniform01() < zero_fraction ? T{0} : static_cast<T>(rng.uniform(-1.0, 1.0));
    return a;
}

template <typename T, Backend B>
void BM_DenseForward(benchmark::State& state) {
    const auto in = static_cast<std::size_t>(state.range(0));
    const auto out = static_cast<std::size_t>(state.range(1));
    const auto x = random_matrix<T>(100, in, 1, 0.8);
    const auto w = random_matrix<T>(out, in, 2, 0.0);
    std::vector<T> b(out, T{0});
    Matrix<T> z;
    for (auto _ : state) {
        kernels::dense_forward(B, x, w, std::span<const T>(b), z);
        benchmark::DoNotOptimize(z.data());
    }
}

template <typename T, Backend B>
void BM_BackwardInput(benchmark::State& state) {
    const auto in = static_cast<std::size_t>(state.range(0));
    const auto out = static_cast<std::size_t>(state.range(1));
    const auto d = random_matrix<T>(100, out, 3, 0.5);
    const auto w = random_matrix<T>(out, in, 2, 0.0);
    Matrix<T> dx;
    for (auto _ : state) {
        kernels::dense_backward_input(B, d, w, dx);
        benchmark::DoNotOptimize(dx.data());
    }
}

template <typename T, Backend B>
void BM_WeightGradient(benchmark::State& state) {
    const auto in = static_cast<std::size_t>(state.range(0));
    const auto out = static_cast<std::size_t>(state.range(1));
    const auto x = random_matrix<T>(100, in, 1, 0.8);
    const auto d = random_matrix<T>(100, out, 3, 0.5);
    Matrix<T> gw;
    std::vector<T> gb(out);
    for (auto _ : state) {
        kernels::weight_gradient(B, x, d, gw, std::span<T>(gb));
        benchmark::DoNotOptimize(gw.data());
    }
}

template <typename T, Backend B>
void BM_Winsorized(benchmark::State& state) {
    const auto in = static_cast<std::size_t>(state.range(0));
    const auto out = static_cast<std::size_t>(state.range(1));
    const auto k = static_cast<std::size_t>(state.range(2));
    const auto x = random_matrix<T>(100, in, 1, 0.8);
    const auto d = random_matrix<T>(100, out, 3, 0.5);
    Matrix<T> gw;
    std::vector<T> gb(out);
    for (auto _ : state) {
        kernels::winsorized_weight_gradient(B, x, d, k, gw, std::span<T>(gb));
        benchmark::DoNotOptimize(gw.data());
    }
}

}  // namespace

BENCHMARK(BM_DenseForward<double, Backend::serial>)->Args({784, 256});
BENCHMARK(BM_DenseForward<double, Backend::omp>)->Args({784, 256});
BENCHMARK(BM_DenseForward<float, Backend::omp>)->Args({784, 256});
BENCHMARK(BM_BackwardInput<double, Backend::serial>)->Args({256, 10});
BENCHMARK(BM_BackwardInput<double, Backend::omp>)->Args({256, 10});
BENCHMARK(BM_BackwardInput<double, Backend::serial>)->Args({64, 64});
BENCHMARK(BM_BackwardInput<double, Backend::omp>)->Args({64, 64});
BENCHMARK(BM_WeightGradient<double, Backend::serial>)->Args({784, 256});
BENCHMARK(BM_WeightGradient<double, Backend::omp>)->Args({784, 256});
BENCHMARK(BM_WeightGradient<float, Backend::omp>)->Args({784, 256});
BENCHMARK(BM_Winsorized<double, Backend::serial>)->Args({784, 64, 4});
BENCHMARK(BM_Winsorized<double, Backend::omp>)->Args({784, 64, 4});
BENCHMARK(BM_Winsorized<double, Backend::omp>)->Args({784, 64, 8});
BENCHMARK(BM_Winsorized<float, Backend::omp>)->Args({784, 64, 8});

BENCHMARK_MAIN();
