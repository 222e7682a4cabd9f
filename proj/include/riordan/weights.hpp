#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Weight sequence (c_0..c_N) for generalized arrays and Bell polynomials;
// every weight must be nonzero.
struct WeightSeq {
    std::string name;
    std::vector<Rational> values;

    static WeightSeq ones(int n) {
        WeightSeq w;
        w.name = "ones";
        w.values.assign(static_cast<size_t>(n) + 1, Rational(1));
        return w;
    }

    static WeightSeq factorials(int n) {
        WeightSeq w;
        w.name = "factorial";
        w.values.reserve(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) w.values.push_back(Rational::factorial(static_cast<unsigned long>(i)));
        return w;
    }

    static WeightSeq custom(std::vector<Rational> values) {
        for (const auto& v : values)
            if (v.is_zero()) throw std::invalid_argument("weight sequence with a zero entry");
        WeightSeq w;
        w.name = "custom";
        w.values = std::move(values);
        return w;
    }
};

}  // namespace riordan
