#include "riordan/bell.hpp"

#include <cmath>
#include <stdexcept>

#include "riordan/combinatorics.hpp"

namespace riordan::bell {

namespace {

// f(z) = sum_j f_j z^j / c_j as a series at the given truncation.
Series<Rational> weighted_series(std::span<const Rational> fcoeffs, const WeightSeq& w, int trunc) {
    std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
    for (int j = 1; j <= trunc; ++j) {
        if (j - 1 < static_cast<int>(fcoeffs.size()))
            c[static_cast<size_t>(j)] = fcoeffs[static_cast<size_t>(j - 1)] / w.values[static_cast<size_t>(j)];
    }
    return Series<Rational>(std::move(c));
}

}  // namespace

Rational partial_bell(int n, int k, std::span<const Rational> fcoeffs, const WeightSeq& w) {
    if (n < 0 || k > n) throw std::invalid_argument("partial Bell needs 0 <= k <= n");
    if (k < 0) throw std::invalid_argument("partial Bell needs k >= 0");
    if (static_cast<int>(w.values.size()) <= n)
        throw std::invalid_argument("weight sequence shorter than n");
    if (k == 0) return n == 0 ? Rational(1) : Rational(0);
    Series<Rational> f = weighted_series(fcoeffs, w, n);
    Series<Rational> p = f;
    for (int i = 1; i < k; ++i) p = p * f;
    return p[n] * w.values[static_cast<size_t>(n)] / w.values[static_cast<size_t>(k)];
}

Rational bell_partition_oracle(int n, int k, std::span<const Rational> fcoeffs) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("partition oracle needs 1 <= k <= n");
    Rational total;
    Rational nfact = Rational::factorial(static_cast<unsigned long>(n));
    for_each_partition_freq(n, k, [&](const std::vector<int>& freq) {
        Rational weight = nfact;
        Rational prod(1);
        for (int part = 1; part <= n; ++part) {
            int m = freq[static_cast<size_t>(part - 1)];
            if (m == 0) continue;
            weight = weight / Rational::factorial(static_cast<unsigned long>(m));
            weight = weight / Rational::factorial(static_cast<unsigned long>(part)).pow_int(m);
            Rational fp = part - 1 < static_cast<int>(fcoeffs.size())
                              ? fcoeffs[static_cast<size_t>(part - 1)]
                              : Rational(0);
            prod *= fp.pow_int(m);
        }
        total += weight * prod;
    });
    return total;
}

Triangle<Rational> iteration_matrix(const Series<Rational>& f, int nrows, const WeightSeq& w) {
    auto of = f.order();
    if (!of || *of != 1) throw std::domain_error("iteration matrix needs order(f) = 1");
    if (nrows < 1 || nrows > f.trunc() + 1) throw std::invalid_argument("row count out of truncation");
    if (static_cast<int>(w.values.size()) < nrows)
        throw std::invalid_argument("weight sequence shorter than the row count");
    Triangle<Rational> t;
    t.rows.resize(static_cast<size_t>(nrows));
    for (int n = 0; n < nrows; ++n)
        t.rows[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, Rational());
    t.rows[0][0] = Rational(1);
    Series<Rational> p = Series<Rational>::one(f.trunc());
    for (int k = 1; k < nrows; ++k) {
        p = p * f;
        for (int n = k; n < nrows; ++n)
            t.rows[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                p[n] * w.values[static_cast<size_t>(n)] / w.values[static_cast<size_t>(k)];
    }
    return t;
}

std::vector<Rational> faa_compose(std::span<const Rational> fcoeffs,
                                  std::span<const Rational> gcoeffs, int n) {
    if (!gcoeffs.empty() && !gcoeffs[0].is_zero())
        throw std::domain_error("inner series must have zero constant term");
    if (n < 0) throw std::invalid_argument("negative order");
    WeightSeq w = WeightSeq::factorials(n);
    std::vector<Rational> g1;  // g_1, g_2, ... for the Bell polynomials
    for (size_t j = 1; j < gcoeffs.size(); ++j) g1.push_back(gcoeffs[j]);
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    out[0] = fcoeffs.empty() ? Rational(0) : fcoeffs[0];
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        for (int k = 1; k <= m; ++k) {
            Rational fk = k < static_cast<int>(fcoeffs.size()) ? fcoeffs[static_cast<size_t>(k)]
                                                               : Rational(0);
            if (fk.is_zero()) continue;
            acc += fk * partial_bell(m, k, g1, w);
        }
        out[static_cast<size_t>(m)] = acc;
    }
    return out;
}

Rational setpartition_compose_oracle(std::span<const Rational> fcoeffs,
                                     std::span<const Rational> gcoeffs, int n) {
    if (n < 0) throw std::invalid_argument("negative order");
    if (n > set_partition_cap)
        throw std::invalid_argument("set-partition oracle capped at n = " +
                                    std::to_string(set_partition_cap));
    if (!gcoeffs.empty() && !gcoeffs[0].is_zero())
        throw std::domain_error("inner series must have zero constant term");
    if (n == 0) return fcoeffs.empty() ? Rational(0) : fcoeffs[0];
    auto fc = [&](int k) {
        return k < static_cast<int>(fcoeffs.size()) ? fcoeffs[static_cast<size_t>(k)] : Rational(0);
    };
    auto gc = [&](int k) {
        return k < static_cast<int>(gcoeffs.size()) ? gcoeffs[static_cast<size_t>(k)] : Rational(0);
    };
    Rational total;
    for_each_set_partition(n, [&](const std::vector<int>& sizes) {
        Rational term = fc(static_cast<int>(sizes.size()));
        for (int s : sizes) term *= gc(s);
        total += term;
    });
    return total;
}

Triangle<Rational> stirling1_triangle(int nrows) {
    Triangle<Rational> t;
    t.rows.resize(static_cast<size_t>(nrows));
    for (int n = 0; n < nrows; ++n) {
        auto& row = t.rows[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Rational());
        if (n == 0) {
            row[0] = Rational(1);
            continue;
        }
        const auto& prev = t.rows[static_cast<size_t>(n - 1)];
        for (int k = 1; k <= n; ++k) {
            Rational v = prev[static_cast<size_t>(k - 1)];
            if (k <= n - 1) v -= Rational(n - 1) * prev[static_cast<size_t>(k)];
            row[static_cast<size_t>(k)] = v;
        }
    }
    return t;
}

Rational stirling1(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    return stirling1_triangle(n + 1).at(n, k);
}

Triangle<Rational> lehmer_comtet_triangle(int nrows) {
    Triangle<Rational> t;
    t.rows.resize(static_cast<size_t>(nrows));
    auto b = [&](int n, int k) -> Rational {
        if (k < 0 || k > n) return {};
        return t.rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
    };
    for (int n = 0; n < nrows; ++n) {
        auto& row = t.rows[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Rational());
        if (n == 0) {
            row[0] = Rational(1);
            continue;
        }
        // b(n, k) from b(n+1, k) = (k-n) b(n, k) + b(n, k-1) + n b(n-1, k-1)
        // rewritten one step down.
        int m = n - 1;
        for (int k = 0; k <= n; ++k) {
            Rational v = Rational(k - m) * b(m, k) + b(m, k - 1);
            if (m >= 1) v += Rational(m) * b(m - 1, k - 1);
            row[static_cast<size_t>(k)] = v;
        }
    }
    return t;
}

Rational lehmer_comtet(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    return lehmer_comtet_triangle(n + 1).at(n, k);
}

Rational lehmer_comtet_via_stirling(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    Triangle<Rational> s = stirling1_triangle(n + 1);
    Rational total;
    for (int l = k; l <= n; ++l) {
        Rational term = Rational::binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(k));
        term *= Rational(k).pow_int(l - k);
        term *= s.at(n, l);
        total += term;
    }
    return total;
}

Rational lehmer_comtet_via_expansion(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    // log(1+z) up to z^n
    std::vector<Rational> lc(static_cast<size_t>(n) + 1);
    for (int m = 1; m <= n; ++m)
        lc[static_cast<size_t>(m)] = Rational(m % 2 == 1 ? 1 : -1) / Rational(m);
    Series<Rational> log1p(std::move(lc));
    Series<Rational> onepz = Series<Rational>::one(n);
    if (n >= 1) onepz = onepz.with(1, Rational(1));
    Series<Rational> base = onepz * log1p;
    Series<Rational> p = Series<Rational>::one(n);
    for (int i = 0; i < k; ++i) p = p * base;
    return p[n] * Rational::factorial(static_cast<unsigned long>(n)) /
           Rational::factorial(static_cast<unsigned long>(k));
}

UVPoly xax_derivative(int n) {
    if (n < 0) throw std::invalid_argument("negative derivative order");
    Triangle<Rational> b = lehmer_comtet_triangle(n + 1);
    auto bval = [&](int m, int c) -> Rational {
        if (c < 0 || c > m) return {};
        return b.at(m, c);
    };
    UVPoly u = UVPoly::param(0);
    UVPoly v = UVPoly::param(1);
    UVPoly total;
    for (int j = 0; j <= n; ++j) {
        UVPoly inner;
        for (int k = 0; k <= n - j; ++k)
            inner += UVPoly(bval(n - j, n - k - j)) * v.pow(static_cast<unsigned>(k));
        total += UVPoly(Rational::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
                 u.pow(static_cast<unsigned>(j)) * inner;
    }
    return total;
}

double xax_derivative_value(int n, double x, double alpha) {
    UVPoly p = xax_derivative(n);
    double u = std::log(x);
    double v = 1.0 / (alpha * x);
    return std::pow(alpha, n) * std::pow(x, alpha * x) * p.eval_double(u, v);
}

Series<Rational> from_exponential(std::span<const Rational> fcoeffs, int trunc) {
    std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
    for (int j = 0; j <= trunc; ++j) {
        if (j < static_cast<int>(fcoeffs.size()))
            c[static_cast<size_t>(j)] =
                fcoeffs[static_cast<size_t>(j)] / Rational::factorial(static_cast<unsigned long>(j));
    }
    return Series<Rational>(std::move(c));
}

}  // namespace riordan::bell
