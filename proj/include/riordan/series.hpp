#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "riordan/combinatorics.hpp"
#include "riordan/kernels.hpp"
#include "riordan/ring.hpp"

namespace riordan {

// Truncated formal power series: coefficients of z^0..z^N over an exact
// ring. Values are immutable; all operations are pure functions. Two
// series interoperate only at equal truncation; mixing truncations is a
// caller bug and throws.
template <Ring R>
class Series {
public:
    explicit Series(int trunc) : c_(check_trunc(trunc) + 1, R::ring_zero()) {}
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least the z^0 coefficient");
    }

    static Series zero(int trunc) { return Series(trunc); }
    static Series one(int trunc) { return Series(trunc).with(0, R::ring_one()); }
    static Series z(int trunc) {
        if (trunc < 1) throw std::invalid_argument("z needs truncation >= 1");
        return Series(trunc).with(1, R::ring_one());
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }

    const R& operator[](int n) const {
        if (n < 0 || n > trunc()) throw std::invalid_argument("series index out of truncation");
        return c_[static_cast<size_t>(n)];
    }

    const std::vector<R>& coeffs() const { return c_; }

    // Copy with one coefficient replaced.
    Series with(int n, R v) const {
        Series s = *this;
        if (n < 0 || n > trunc()) throw std::invalid_argument("series index out of truncation");
        s.c_[static_cast<size_t>(n)] = std::move(v);
        return s;
    }

    // Explicit narrowing to a smaller truncation.
    Series truncated(int new_trunc) const {
        if (new_trunc < 0 || new_trunc > trunc())
            throw std::invalid_argument("truncated() only narrows");
        std::vector<R> c(c_.begin(), c_.begin() + new_trunc + 1);
        return Series(std::move(c));
    }

    std::optional<int> order() const {
        for (int n = 0; n <= trunc(); ++n)
            if (!c_[static_cast<size_t>(n)].is_zero()) return n;
        return std::nullopt;  // zero at this truncation
    }

    bool is_zero() const { return !order().has_value(); }

    bool operator==(const Series& o) const { return c_ == o.c_; }

    std::string str() const {
        std::ostringstream os;
        for (int n = 0; n <= trunc(); ++n) {
            if (n) os << ",";
            os << c_[static_cast<size_t>(n)].str();
        }
        return os.str();
    }

private:
    static int check_trunc(int t) {
        if (t < 0) throw std::invalid_argument("negative truncation");
        return t;
    }
    std::vector<R> c_;
};

namespace detail {
template <Ring R>
void require_same_trunc(const Series<R>& a, const Series<R>& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("mixed truncations: " + std::to_string(a.trunc()) + " vs " +
                                    std::to_string(b.trunc()));
}
}  // namespace detail

template <Ring R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
    detail::require_same_trunc(a, b);
    std::vector<R> c = a.coeffs();
    for (int n = 0; n <= a.trunc(); ++n) c[static_cast<size_t>(n)] += b[n];
    return Series<R>(std::move(c));
}

template <Ring R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
    detail::require_same_trunc(a, b);
    std::vector<R> c = a.coeffs();
    for (int n = 0; n <= a.trunc(); ++n) c[static_cast<size_t>(n)] += -b[n];
    return Series<R>(std::move(c));
}

template <Ring R>
Series<R> operator-(const Series<R>& a) {
    std::vector<R> c = a.coeffs();
    for (auto& v : c) v = -v;
    return Series<R>(std::move(c));
}

template <Ring R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
    detail::require_same_trunc(a, b);
    return Series<R>(kernels::cauchy_mul(a.coeffs(), b.coeffs(), a.trunc() + 1));
}

template <Ring R>
Series<R> scale(const R& c, const Series<R>& s) {
    std::vector<R> out = s.coeffs();
    for (auto& v : out) v = c * v;
    return Series<R>(std::move(out));
}

// Multiplication by z^k; the result is known one order further per shift.
template <Ring R>
Series<R> shift_up(const Series<R>& s, int k = 1) {
    if (k < 0) throw std::invalid_argument("negative shift");
    std::vector<R> c(static_cast<size_t>(s.trunc() + k + 1), R::ring_zero());
    for (int n = 0; n <= s.trunc(); ++n) c[static_cast<size_t>(n + k)] = s[n];
    return Series<R>(std::move(c));
}

// Division by z^k; requires the low-order coefficients to vanish.
template <Ring R>
Series<R> shift_down(const Series<R>& s, int k = 1) {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (k > s.trunc()) throw std::domain_error("shift below truncation");
    for (int n = 0; n < k; ++n)
        if (!s[n].is_zero()) throw std::domain_error("shift_down of a series with nonzero low terms");
    std::vector<R> c(s.coeffs().begin() + k, s.coeffs().end());
    return Series<R>(std::move(c));
}

// 1/s for s with unit constant term.
template <Ring R>
Series<R> reciprocal(const Series<R>& s) {
    if (!s[0].is_unit()) throw std::domain_error("reciprocal needs a unit constant term");
    const int n = s.trunc();
    std::vector<R> r(static_cast<size_t>(n + 1), R::ring_zero());
    r[0] = R::ring_one().div_unit(s[0]);
    for (int m = 1; m <= n; ++m) {
        R acc = R::ring_zero();
        for (int i = 1; i <= m; ++i) acc += s[i] * r[static_cast<size_t>(m - i)];
        r[static_cast<size_t>(m)] = (-acc).div_unit(s[0]);
    }
    return Series<R>(std::move(r));
}

// Quotient a/b after cancelling the common power of z. The result is well
// defined up to truncation N - order(b).
template <Ring R>
Series<R> div(const Series<R>& a, const Series<R>& b) {
    detail::require_same_trunc(a, b);
    auto ob = b.order();
    if (!ob) throw std::domain_error("division by the zero series");
    const int k = *ob;
    auto oa = a.order();
    if (oa && *oa < k) throw std::domain_error("quotient is not a power series");
    if (!oa && k > 0 && a.trunc() - k < 0) throw std::domain_error("quotient truncation is empty");
    Series<R> num = k > 0 ? shift_down(a, k) : a;
    Series<R> den = k > 0 ? shift_down(b, k) : b;
    return num * reciprocal(den);
}

// f(g(z)) by Horner over the truncated ring; defined for order(g) >= 1.
template <Ring R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
    detail::require_same_trunc(f, g);
    auto og = g.order();
    if (og && *og < 1) throw std::domain_error("composition needs order(g) >= 1");
    const int n = f.trunc();
    Series<R> acc = Series<R>(n).with(0, f[n]);
    for (int i = n - 1; i >= 0; --i) {
        Series<R> t = acc * g;
        acc = t.with(0, t[0] + f[i]);
    }
    return acc;
}

// [z^n] f(g(z)) by the explicit sum over partitions of n with multinomial
// weights; the independent cross-check for compose().
template <Ring R>
R compose_oracle(const Series<R>& f, const Series<R>& g, int n) {
    detail::require_same_trunc(f, g);
    auto og = g.order();
    if (og && *og < 1) throw std::domain_error("composition needs order(g) >= 1");
    if (n < 0 || n > f.trunc()) throw std::invalid_argument("coefficient index out of truncation");
    if (n == 0) return f[0];
    R total = R::ring_zero();
    for (int k = 1; k <= n; ++k) {
        R inner = R::ring_zero();
        bool any = false;
        for_each_partition_freq(n, k, [&](const std::vector<int>& freq) {
            R term = R::ring_one();
            for (int part = 1; part <= n; ++part) {
                int m = freq[static_cast<size_t>(part - 1)];
                for (int t = 0; t < m; ++t) term = term * g[part];
            }
            Rational mult = multinomial_of_freq(k, freq);
            long long mi = *mult.to_int();
            inner += R::from_int(static_cast<long>(mi)) * term;
            any = true;
        });
        if (any) total += f[k] * inner;
    }
    return total;
}

// Compositional inverse via Lagrange inversion:
// [z^n] hbar = (1/n) [z^{n-1}] (z/h)^n.
template <Ring R>
Series<R> comp_inverse(const Series<R>& h) {
    auto oh = h.order();
    if (!oh || *oh != 1) throw std::domain_error("compositional inverse needs order exactly 1");
    if (!h[1].is_unit()) throw std::domain_error("compositional inverse needs a unit z coefficient");
    const int n = h.trunc();
    Series<R> w = reciprocal(shift_down(h));  // z/h, truncation N-1
    std::vector<R> out(static_cast<size_t>(n + 1), R::ring_zero());
    Series<R> p = w;  // w^m as m advances
    for (int m = 1; m <= n; ++m) {
        out[static_cast<size_t>(m)] = p[m - 1].div_unit(R::from_int(m));
        if (m < n) p = p * w;
    }
    return Series<R>(std::move(out));
}

// Term-wise derivative; the truncation drops by one.
template <Ring R>
Series<R> derivative(const Series<R>& s) {
    if (s.trunc() == 0) return Series<R>(0);
    std::vector<R> c(static_cast<size_t>(s.trunc()), R::ring_zero());
    for (int m = 1; m <= s.trunc(); ++m)
        c[static_cast<size_t>(m - 1)] = R::from_int(m) * s[m];
    return Series<R>(std::move(c));
}

}  // namespace riordan
