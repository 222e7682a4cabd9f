#include <doctest.h>

#include <cmath>
#include <random>

#include "riordan/bell.hpp"
#include "riordan/combinatorics.hpp"
#include "riordan/presets.hpp"
#include "test_util.hpp"

using namespace riordan;
using testutil::rnd_rational;
using testutil::rnd_series;

TEST_CASE("partial Bell polynomials") {
    WeightSeq fact = WeightSeq::factorials(12);
    WeightSeq ones = WeightSeq::ones(12);

    // f_j = 1 for all j gives Stirling numbers of the second kind
    std::vector<Rational> allones(12, Rational(1));
    CHECK(bell::partial_bell(4, 2, allones, fact) == Rational(7));
    CHECK(bell::partial_bell(5, 3, allones, fact) == Rational(25));
    CHECK(bell::partial_bell(6, 1, allones, fact) == Rational(1));

    for (int n = 1; n <= 8; ++n) CHECK(bell::partial_bell(n, n, allones, ones) == Rational(1));
    CHECK(bell::partial_bell(5, 0, allones, fact) == Rational(0));
    CHECK(bell::partial_bell(0, 0, allones, fact) == Rational(1));
    CHECK_THROWS_AS(bell::partial_bell(3, 4, allones, fact), std::invalid_argument);

    // with unit weights, B_{n,k} is the sum over compositions of n with k parts
    std::mt19937_64 rng(61);
    std::vector<Rational> b;
    for (int i = 0; i < 9; ++i) b.push_back(rnd_rational(rng));
    auto composition_sum = [&](int n, int k) {
        Rational total;
        std::vector<int> parts;
        std::function<void(int, int)> rec = [&](int rem, int left) {
            if (left == 0) {
                if (rem == 0) {
                    Rational prod(1);
                    for (int p : parts) prod *= b[static_cast<size_t>(p - 1)];
                    total += prod;
                }
                return;
            }
            for (int p = 1; p + left - 1 <= rem; ++p) {
                parts.push_back(p);
                rec(rem - p, left - 1);
                parts.pop_back();
            }
        };
        rec(n, k);
        return total;
    };
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(bell::partial_bell(n, k, b, ones) == composition_sum(n, k));
}

TEST_CASE("partition-sum oracle for exponential Bell polynomials") {
    std::mt19937_64 rng(67);
    std::vector<Rational> g = {rnd_rational(rng, true), rnd_rational(rng), rnd_rational(rng)};
    CHECK(bell::bell_partition_oracle(3, 2, g) == Rational(3) * g[0] * g[1]);
    for (int n = 1; n <= 6; ++n) {
        std::vector<Rational> gs;
        for (int i = 0; i < n; ++i) gs.push_back(rnd_rational(rng));
        CHECK(bell::bell_partition_oracle(n, 1, gs) == gs[static_cast<size_t>(n - 1)]);
    }
    WeightSeq fact = WeightSeq::factorials(10);
    for (int t = 0; t < 5; ++t) {
        std::vector<Rational> gs;
        for (int i = 0; i < 10; ++i) gs.push_back(rnd_rational(rng));
        for (int n = 1; n <= 10; ++n)
            for (int k = 1; k <= n; ++k)
                CHECK(bell::bell_partition_oracle(n, k, gs) == bell::partial_bell(n, k, gs, fact));
    }
}

TEST_CASE("iteration matrices") {
    std::mt19937_64 rng(71);
    WeightSeq ones = WeightSeq::ones(10);
    WeightSeq fact = WeightSeq::factorials(10);

    Triangle<Rational> idm = bell::iteration_matrix(Series<Rational>::z(10), 11, fact);
    CHECK(idm == Triangle<Rational>::identity(11));

    for (int t = 0; t < 10; ++t) {
        Series<Rational> f = rnd_series(rng, 10, 1);
        Series<Rational> g = rnd_series(rng, 10, 1);
        for (const WeightSeq* w : {&ones, &fact}) {
            CHECK(bell::iteration_matrix(compose(f, g), 11, *w) ==
                  triangle_product(bell::iteration_matrix(g, 11, *w),
                                   bell::iteration_matrix(f, 11, *w)));
            CHECK(triangle_product(bell::iteration_matrix(f, 11, *w),
                                   bell::iteration_matrix(comp_inverse(f), 11, *w)) ==
                  Triangle<Rational>::identity(11));
        }
    }
    CHECK_THROWS_AS(bell::iteration_matrix(Series<Rational>::one(10), 11, ones), std::domain_error);
}

TEST_CASE("row sums with unit coefficients count set partitions") {
    WeightSeq fact = WeightSeq::factorials(10);
    std::vector<Rational> allones(10, Rational(1));
    for (int n = 1; n <= 10; ++n) {
        Rational sum;
        for (int k = 1; k <= n; ++k) sum += bell::partial_bell(n, k, allones, fact);
        CHECK(sum == Rational(static_cast<long>(count_set_partitions(n))));
    }
}

TEST_CASE("exponential composition") {
    std::mt19937_64 rng(73);
    std::vector<Rational> f, g;
    for (int i = 0; i <= 8; ++i) {
        f.push_back(rnd_rational(rng));
        g.push_back(rnd_rational(rng));
    }
    g[0] = Rational(0);
    auto h = bell::faa_compose(f, g, 8);
    CHECK(h[0] == f[0]);

    std::vector<Rational> fz = {Rational(0), Rational(1)};  // f = z
    auto hz = bell::faa_compose(fz, g, 8);
    for (int n = 0; n <= 8; ++n) CHECK(hz[static_cast<size_t>(n)] == g[static_cast<size_t>(n)]);

    std::vector<Rational> gbad = g;
    gbad[0] = Rational(1);
    CHECK_THROWS_AS(bell::faa_compose(f, gbad, 8), std::domain_error);

    // agreement with ordinary composition after weight conversion
    for (int t = 0; t < 50; ++t) {
        Series<Rational> fo = rnd_series(rng, 10, 0);
        Series<Rational> go = rnd_series(rng, 10, 1);
        std::vector<Rational> fe, ge;
        for (int i = 0; i <= 10; ++i) {
            fe.push_back(fo[i] * Rational::factorial(static_cast<unsigned long>(i)));
            ge.push_back(go[i] * Rational::factorial(static_cast<unsigned long>(i)));
        }
        auto he = bell::faa_compose(fe, ge, 10);
        Series<Rational> ho = compose(fo, go);
        for (int n = 0; n <= 10; ++n)
            CHECK(he[static_cast<size_t>(n)] ==
                  ho[n] * Rational::factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("set-partition composition oracle") {
    std::mt19937_64 rng(79);
    std::vector<Rational> f, g;
    for (int i = 0; i <= 8; ++i) {
        f.push_back(rnd_rational(rng));
        g.push_back(rnd_rational(rng));
    }
    g[0] = Rational(0);
    CHECK(bell::setpartition_compose_oracle(f, g, 1) == f[1] * g[1]);
    // n = 3: b1 a3 + 3 b2 a1 a2 + b3 a1^3 with a = g, b = f
    CHECK(bell::setpartition_compose_oracle(f, g, 3) ==
          f[1] * g[3] + Rational(3) * f[2] * g[1] * g[2] + f[3] * g[1].pow_int(3));
    auto h = bell::faa_compose(f, g, 7);
    for (int n = 0; n <= 7; ++n)
        CHECK(bell::setpartition_compose_oracle(f, g, n) == h[static_cast<size_t>(n)]);
    CHECK_THROWS_WITH_AS(bell::setpartition_compose_oracle(f, g, 9),
                         "set-partition oracle capped at n = 8", std::invalid_argument);
}

TEST_CASE("Stirling numbers of the first kind") {
    CHECK(bell::stirling1(3, 1) == Rational(2));
    CHECK(bell::stirling1(3, 2) == Rational(-3));
    CHECK(bell::stirling1(4, 2) == Rational(11));
    for (int n = 0; n <= 9; ++n) {
        CHECK(bell::stirling1(n, n) == Rational(1));
        if (n >= 1) CHECK(bell::stirling1(n, 0) == Rational(0));
    }
    // generating product z(z-1)...(z-n+1) = sum_k s(n,k) z^k
    for (int n = 1; n <= 9; ++n) {
        std::vector<Rational> poly = {Rational(1)};
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> next(poly.size() + 1);
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] += poly[j];
                next[j] -= Rational(i) * poly[j];
            }
            poly = std::move(next);
        }
        for (int k = 0; k <= n; ++k) CHECK(bell::stirling1(n, k) == poly[static_cast<size_t>(k)]);
    }
}

TEST_CASE("Lehmer-Comtet numbers") {
    const std::vector<std::vector<long>> golden = {
        {1}, {0, 1}, {0, 1, 1}, {0, -1, 3, 1}, {0, 2, -1, 6, 1}, {0, -6, 0, 5, 10, 1},
        {0, 24, 4, -15, 25, 15, 1}};
    Triangle<Rational> tri = bell::lehmer_comtet_triangle(7);
    for (int n = 0; n < 7; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(tri.at(n, k) == Rational(golden[static_cast<size_t>(n)][static_cast<size_t>(k)]));
    for (int n = 0; n <= 10; ++n) {
        CHECK(bell::lehmer_comtet(n, n) == Rational(1));
        for (int k = 0; k <= n; ++k) {
            Rational v = bell::lehmer_comtet(n, k);
            CHECK(v == bell::lehmer_comtet_via_stirling(n, k));
            CHECK(v == bell::lehmer_comtet_via_expansion(n, k));
        }
    }
}

TEST_CASE("derivative polynomial of x^(ax)") {
    UVPoly u = UVPoly::param(0), v = UVPoly::param(1);
    UVPoly expect = UVPoly(1) + UVPoly(6) * v - v.pow(2) + UVPoly(2) * v.pow(3) +
                    UVPoly(4) * u * (UVPoly(1) + UVPoly(3) * v - v.pow(2)) +
                    UVPoly(6) * u.pow(2) * (UVPoly(1) + v) + UVPoly(4) * u.pow(3) + u.pow(4);
    CHECK(bell::xax_derivative(4) == expect);
    CHECK(bell::xax_derivative(0) == UVPoly(1));
    CHECK(bell::xax_derivative(1) == UVPoly(1) + u);

    // second derivative against a central finite difference at x=2, a=1/2
    double x = 2.0, a = 0.5, h = 0.005;
    auto f = [a](double t) { return std::exp(a * t * std::log(t)); };
    double fd = (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
                (12 * h * h);
    double exact = bell::xax_derivative_value(2, x, a);
    CHECK(std::fabs(fd - exact) / std::fabs(exact) < 1e-6);
}
