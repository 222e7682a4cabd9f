// Times the OpenMP kernels against their serial references on exact
// rational data. Sizes are chosen so the arithmetic, not the fork/join,
// dominates.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "riordan/kernels.hpp"
#include "riordan/rational.hpp"

using namespace riordan;

namespace {

std::vector<Rational> random_coeffs(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.emplace_back(num(rng), den(rng));
    return out;
}

template <typename F>
double time_ms(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif
    std::mt19937_64 rng(12345);

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");
    for (int n : {128, 256, 512}) {
        auto a = random_coeffs(rng, n + 1);
        auto b = random_coeffs(rng, n + 1);
        std::vector<Rational> r1, r2;
        double ts = time_ms([&] { r1 = kernels::cauchy_mul_serial(a, b, n + 1); }, 3);
        double tp = time_ms([&] { r2 = kernels::cauchy_mul(a, b, n + 1); }, 3);
        if (r1 != r2) {
            std::printf("cauchy_mul mismatch at n=%d\n", n);
            return 1;
        }
        std::printf("cauchy_mul n=%-17d %10.3f %10.3f %8.2f\n", n, ts, tp, ts / tp);
    }

    for (int rows : {96, 160}) {
        std::vector<std::vector<Rational>> a(static_cast<size_t>(rows)), b(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            a[static_cast<size_t>(i)] = random_coeffs(rng, i + 1);
            b[static_cast<size_t>(i)] = random_coeffs(rng, i + 1);
        }
        std::vector<std::vector<Rational>> r1, r2;
        double ts = time_ms([&] { r1 = kernels::triangle_matmul_serial(a, b); }, 3);
        double tp = time_ms([&] { r2 = kernels::triangle_matmul(a, b); }, 3);
        if (r1 != r2) {
            std::printf("triangle_matmul mismatch at rows=%d\n", rows);
            return 1;
        }
        std::printf("triangle_matmul rows=%-11d %10.3f %10.3f %8.2f\n", rows, ts, tp, ts / tp);
    }
    return 0;
}
