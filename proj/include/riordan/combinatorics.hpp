#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Enumerates partitions of n into exactly k parts in frequency-of-parts
// form: freq[i-1] is the multiplicity of part i, so sum(i*freq[i-1]) = n
// and sum(freq) = k.
inline void for_each_partition_freq(int n, int k,
                                    const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 0 || k < 0) return;
    std::vector<int> freq(static_cast<size_t>(n > 0 ? n : 0), 0);
    // parts chosen in decreasing order; `largest` caps the next part
    std::function<void(int, int, int)> rec = [&](int rem, int parts, int largest) {
        if (parts == 0) {
            if (rem == 0) fn(freq);
            return;
        }
        if (rem < parts || largest < 1) return;
        int top = std::min(largest, rem - (parts - 1));
        for (int p = top; p >= 1; --p) {
            ++freq[static_cast<size_t>(p - 1)];
            rec(rem - p, parts - 1, p);
            --freq[static_cast<size_t>(p - 1)];
        }
    };
    rec(n, k, n);
}

// k! / prod(freq[i]!), the number of ways to order the parts.
inline Rational multinomial_of_freq(int k, const std::vector<int>& freq) {
    Rational m = Rational::factorial(static_cast<unsigned long>(k));
    for (int f : freq)
        if (f > 1) m = m / Rational::factorial(static_cast<unsigned long>(f));
    return m;
}

// Enumerates set partitions of {1..n} via restricted growth strings,
// reporting the block sizes of each partition.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 0) throw std::invalid_argument("set partition of a negative set");
    if (n == 0) {
        std::vector<int> empty;
        fn(empty);
        return;
    }
    std::vector<int> assign(static_cast<size_t>(n), 0);
    std::vector<int> sizes;
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            fn(sizes);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            if (b == blocks)
                sizes.push_back(1);
            else
                ++sizes[static_cast<size_t>(b)];
            assign[static_cast<size_t>(i)] = b;
            rec(i + 1, b == blocks ? blocks + 1 : blocks);
            if (b == blocks)
                sizes.pop_back();
            else
                --sizes[static_cast<size_t>(b)];
        }
    };
    rec(0, 0);
}

inline long long count_set_partitions(int n) {
    long long count = 0;
    for_each_set_partition(n, [&](const std::vector<int>&) { ++count; });
    return count;
}

}  // namespace riordan
