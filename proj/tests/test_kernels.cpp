#include <doctest.h>

#include <random>

#include "riordan/kernels.hpp"
#include "riordan/parampoly.hpp"
#include "test_util.hpp"

using riordan::ParamPoly;
using riordan::Rational;

TEST_CASE("parallel Cauchy product matches the serial reference") {
    std::mt19937_64 rng(101);
    for (int n : {1, 7, 33, 100, 257}) {
        std::vector<Rational> a, b;
        for (int i = 0; i < n; ++i) {
            a.push_back(testutil::rnd_rational(rng));
            b.push_back(testutil::rnd_rational(rng));
        }
        CHECK(riordan::kernels::cauchy_mul(a, b, n) == riordan::kernels::cauchy_mul_serial(a, b, n));
    }
}

TEST_CASE("parallel Cauchy product over the parametric ring") {
    std::mt19937_64 rng(102);
    ParamPoly r = ParamPoly::param(0);
    std::vector<ParamPoly> a, b;
    for (int i = 0; i < 80; ++i) {
        a.push_back(ParamPoly(testutil::rnd_rational(rng)) + r.scaled(testutil::rnd_rational(rng)));
        b.push_back(ParamPoly(testutil::rnd_rational(rng)) * r.pow(static_cast<unsigned>(i % 3)));
    }
    CHECK(riordan::kernels::cauchy_mul(a, b, 80) == riordan::kernels::cauchy_mul_serial(a, b, 80));
}

TEST_CASE("parallel triangle product matches the serial reference") {
    std::mt19937_64 rng(103);
    for (int rows : {1, 5, 40, 90}) {
        std::vector<std::vector<Rational>> a(static_cast<size_t>(rows)), b(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k <= i; ++k) {
                a[static_cast<size_t>(i)].push_back(testutil::rnd_rational(rng));
                b[static_cast<size_t>(i)].push_back(testutil::rnd_rational(rng));
            }
        CHECK(riordan::kernels::triangle_matmul(a, b) ==
              riordan::kernels::triangle_matmul_serial(a, b));
    }
}
