#pragma once

#include <vector>

#include "riordan/ring.hpp"

namespace riordan::kernels {

// Problem sizes below this stay serial; at desk scale the OpenMP fork/join
// costs more than the arithmetic it spreads.
inline constexpr int parallel_cutoff = 64;

// Truncated Cauchy product, reference implementation.
template <Ring R>
std::vector<R> cauchy_mul_serial(const std::vector<R>& a, const std::vector<R>& b, int count) {
    std::vector<R> out(static_cast<size_t>(count), R::ring_zero());
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    for (int n = 0; n < count; ++n) {
        R acc = R::ring_zero();
        const int lo = n - (nb - 1) > 0 ? n - (nb - 1) : 0;
        const int hi = n < na - 1 ? n : na - 1;
        for (int i = lo; i <= hi; ++i) acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
        out[static_cast<size_t>(n)] = acc;
    }
    return out;
}

// Truncated Cauchy product; output coefficients are independent, so the
// outer loop parallelizes. Coefficient cost grows with n, hence dynamic
// scheduling.
template <Ring R>
std::vector<R> cauchy_mul(const std::vector<R>& a, const std::vector<R>& b, int count) {
    std::vector<R> out(static_cast<size_t>(count), R::ring_zero());
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
#pragma omp parallel for schedule(dynamic) if (count >= parallel_cutoff)
    for (int n = 0; n < count; ++n) {
        R acc = R::ring_zero();
        const int lo = n - (nb - 1) > 0 ? n - (nb - 1) : 0;
        const int hi = n < na - 1 ? n : na - 1;
        for (int i = lo; i <= hi; ++i) acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
        out[static_cast<size_t>(n)] = acc;
    }
    return out;
}

// Product of two lower-triangular ragged tables, reference implementation.
template <Ring R>
std::vector<std::vector<R>> triangle_matmul_serial(const std::vector<std::vector<R>>& a,
                                                   const std::vector<std::vector<R>>& b) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<R>> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, R::ring_zero());
        for (int k = 0; k <= i; ++k) {
            R acc = R::ring_zero();
            for (int j = k; j <= i; ++j)
                acc += a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                       b[static_cast<size_t>(j)][static_cast<size_t>(k)];
            out[static_cast<size_t>(i)][static_cast<size_t>(k)] = acc;
        }
    }
    return out;
}

// Rows are independent; parallelize over them.
template <Ring R>
std::vector<std::vector<R>> triangle_matmul(const std::vector<std::vector<R>>& a,
                                            const std::vector<std::vector<R>>& b) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<R>> out(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) if (n >= parallel_cutoff)
    for (int i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, R::ring_zero());
        for (int k = 0; k <= i; ++k) {
            R acc = R::ring_zero();
            for (int j = k; j <= i; ++j)
                acc += a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                       b[static_cast<size_t>(j)][static_cast<size_t>(k)];
            out[static_cast<size_t>(i)][static_cast<size_t>(k)] = acc;
        }
    }
    return out;
}

}  // namespace riordan::kernels
