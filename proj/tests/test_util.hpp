#pragma once

#include <random>

#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"

namespace testutil {

using riordan::Rational;
using riordan::RiordanArray;
using riordan::Series;

inline Rational rnd_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> den(1, 4);
    for (;;) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(-5 * q, 5 * q);
        Rational r(num(rng), q);
        if (!nonzero || !r.is_zero()) return r;
    }
}

inline Series<Rational> rnd_series(std::mt19937_64& rng, int trunc, int order) {
    std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
    for (int i = order; i <= trunc; ++i) c[static_cast<size_t>(i)] = rnd_rational(rng);
    c[static_cast<size_t>(order)] = rnd_rational(rng, true);
    return Series<Rational>(std::move(c));
}

inline RiordanArray<Rational> rnd_array(std::mt19937_64& rng, int trunc) {
    return RiordanArray<Rational>(rnd_series(rng, trunc, 0), rnd_series(rng, trunc, 1));
}

inline Series<Rational> from_longs(std::vector<long> v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return Series<Rational>(std::move(c));
}

}  // namespace testutil
