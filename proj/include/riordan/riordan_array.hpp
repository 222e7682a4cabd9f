#pragma once

#include <set>
#include <string>
#include <vector>

#include "riordan/kernels.hpp"
#include "riordan/series.hpp"
#include "riordan/weights.hpp"

namespace riordan {

// Exact lower-triangular table; rows[n] has n+1 entries.
template <Ring R>
struct Triangle {
    std::vector<std::vector<R>> rows;

    static Triangle identity(int nrows) {
        Triangle t;
        t.rows.resize(static_cast<size_t>(nrows));
        for (int n = 0; n < nrows; ++n) {
            t.rows[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, R::ring_zero());
            t.rows[static_cast<size_t>(n)][static_cast<size_t>(n)] = R::ring_one();
        }
        return t;
    }

    int row_count() const { return static_cast<int>(rows.size()); }

    const R& at(int n, int k) const { return rows[static_cast<size_t>(n)][static_cast<size_t>(k)]; }

    bool operator==(const Triangle& o) const { return rows == o.rows; }
};

template <Ring R>
Triangle<R> triangle_product(const Triangle<R>& a, const Triangle<R>& b) {
    if (a.row_count() != b.row_count())
        throw std::invalid_argument("triangle product needs equal row counts");
    Triangle<R> t;
    t.rows = kernels::triangle_matmul(a.rows, b.rows);
    return t;
}

// Matrix-vector product of the triangle with a coefficient column.
template <Ring R>
std::vector<R> triangle_apply(const Triangle<R>& t, const std::vector<R>& v) {
    if (static_cast<int>(v.size()) < t.row_count())
        throw std::invalid_argument("vector shorter than the triangle");
    std::vector<R> out(static_cast<size_t>(t.row_count()), R::ring_zero());
    for (int n = 0; n < t.row_count(); ++n) {
        R acc = R::ring_zero();
        for (int k = 0; k <= n; ++k) acc += t.at(n, k) * v[static_cast<size_t>(k)];
        out[static_cast<size_t>(n)] = acc;
    }
    return out;
}

// Proper Riordan array (d, h): d of order 0, h of order 1, shared
// truncation. The pair is the source of truth; triangles are derived
// views.
template <Ring R>
class RiordanArray {
public:
    RiordanArray(Series<R> d, Series<R> h) : d_(std::move(d)), h_(std::move(h)) {
        detail::require_same_trunc(d_, h_);
        if (d_[0].is_zero()) throw std::invalid_argument("proper array needs d(0) != 0");
        if (!h_[0].is_zero() || h_.trunc() < 1 || h_[1].is_zero())
            throw std::invalid_argument("proper array needs h(0) = 0 and h'(0) != 0");
    }

    static RiordanArray identity(int trunc) {
        return RiordanArray(Series<R>::one(trunc), Series<R>::z(trunc));
    }

    const Series<R>& d() const { return d_; }
    const Series<R>& h() const { return h_; }
    int trunc() const { return d_.trunc(); }

    // [z^n] d(z) h(z)^k; zero above the diagonal.
    R entry(int n, int k) const {
        if (n < 0 || k < 0 || n > trunc()) throw std::invalid_argument("entry index out of truncation");
        if (k > n) return R::ring_zero();
        Series<R> col = d_;
        for (int i = 0; i < k; ++i) col = col * h_;
        return col[n];
    }

    Triangle<R> triangle(int nrows) const {
        if (nrows < 0 || nrows > trunc() + 1)
            throw std::invalid_argument("row count out of truncation");
        Triangle<R> t;
        t.rows.resize(static_cast<size_t>(nrows));
        for (int n = 0; n < nrows; ++n)
            t.rows[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, R::ring_zero());
        Series<R> col = d_;
        for (int k = 0; k < nrows; ++k) {
            for (int n = k; n < nrows; ++n) t.rows[static_cast<size_t>(n)][static_cast<size_t>(k)] = col[n];
            if (k + 1 < nrows) col = col * h_;
        }
        return t;
    }

    bool operator==(const RiordanArray& o) const { return d_ == o.d_ && h_ == o.h_; }

private:
    Series<R> d_, h_;
};

template <Ring R>
RiordanArray<R> multiply(const RiordanArray<R>& a, const RiordanArray<R>& b) {
    if (a.trunc() != b.trunc()) throw std::invalid_argument("mixed truncations in array product");
    return RiordanArray<R>(a.d() * compose(b.d(), a.h()), compose(b.h(), a.h()));
}

template <Ring R>
RiordanArray<R> inverse(const RiordanArray<R>& a) {
    Series<R> hbar = comp_inverse(a.h());
    return RiordanArray<R>(reciprocal(compose(a.d(), hbar)), hbar);
}

// The action (d, h) * f = d(z) f(h(z)).
template <Ring R>
Series<R> ftra_apply(const RiordanArray<R>& a, const Series<R>& f) {
    if (a.trunc() != f.trunc()) throw std::invalid_argument("mixed truncations in array action");
    return a.d() * compose(f, a.h());
}

// Generating function of the A-sequence: A(z) = z / hbar(z).
template <Ring R>
Series<R> a_sequence(const RiordanArray<R>& a) {
    Series<R> hbar = comp_inverse(a.h());
    return div(Series<R>::z(a.trunc()), hbar);
}

// Generating function of the Z-sequence: Z(z) = (1 - d(0)/d(hbar)) / hbar.
// The d(0) factor keeps the column-0 recurrence exact for arrays that are
// not normalized to d(0) = 1.
template <Ring R>
Series<R> z_sequence(const RiordanArray<R>& a) {
    Series<R> hbar = comp_inverse(a.h());
    Series<R> u = Series<R>::one(a.trunc()) - scale(a.d()[0], reciprocal(compose(a.d(), hbar)));
    return div(u, hbar);
}

// A-sequence of a product from the factors' A-sequences:
// A3(z) = A2(z) * A1(z / A2(z)).
template <Ring R>
Series<R> a_of_product(const Series<R>& a1, const Series<R>& a2) {
    detail::require_same_trunc(a1, a2);
    if (a1[0].is_zero() || a2[0].is_zero())
        throw std::domain_error("A-sequence generating functions need nonzero constant terms");
    Series<R> w = div(Series<R>::z(a1.trunc()), a2);
    return a2 * compose(a1, w);
}

enum class Subgroup { Appell, Lagrange, Bell, HittingTime, Derivative, Checkerboard };

inline std::string subgroup_name(Subgroup s) {
    switch (s) {
        case Subgroup::Appell: return "appell";
        case Subgroup::Lagrange: return "lagrange";
        case Subgroup::Bell: return "bell";
        case Subgroup::HittingTime: return "hitting-time";
        case Subgroup::Derivative: return "derivative";
        case Subgroup::Checkerboard: return "checkerboard";
    }
    return "?";
}

// Tests each defining identity verbatim at truncation.
template <Ring R>
std::set<Subgroup> subgroup_flags(const RiordanArray<R>& a) {
    std::set<Subgroup> flags;
    const int n = a.trunc();
    const Series<R>& d = a.d();
    const Series<R>& h = a.h();
    if (h == Series<R>::z(n)) flags.insert(Subgroup::Appell);
    if (d == Series<R>::one(n)) flags.insert(Subgroup::Lagrange);
    if (h == shift_up(d).truncated(n)) flags.insert(Subgroup::Bell);
    Series<R> hp = derivative(h);                       // truncation n-1
    if (d * h == shift_up(hp)) flags.insert(Subgroup::HittingTime);
    if (n >= 1 && d.truncated(n - 1) == hp) flags.insert(Subgroup::Derivative);
    bool d_even = true, h_odd = true;
    for (int m = 0; m <= n; ++m) {
        if (m % 2 == 1 && !d[m].is_zero()) d_even = false;
        if (m % 2 == 0 && !h[m].is_zero()) h_odd = false;
    }
    if (d_even && h_odd) flags.insert(Subgroup::Checkerboard);
    return flags;
}

// Entry of the array taken with respect to a weight sequence (c_n):
// [z^n / c_n] g(z) f(z)^k / c_k. With weights identically 1 this is the
// ordinary entry.
inline Rational generalized_entry(const Series<Rational>& g, const Series<Rational>& f, int n,
                                  int k, const WeightSeq& w) {
    detail::require_same_trunc(g, f);
    if (n < 0 || k < 0 || n > g.trunc()) throw std::invalid_argument("entry index out of truncation");
    if (n >= static_cast<int>(w.values.size()) || k >= static_cast<int>(w.values.size()))
        throw std::invalid_argument("weight sequence shorter than requested index");
    auto of = f.order();
    if (!of || *of != 1) throw std::domain_error("generalized array needs order(f) = 1");
    if (k > n) return {};
    Series<Rational> col = g;
    for (int i = 0; i < k; ++i) col = col * f;
    return col[n] * w.values[static_cast<size_t>(n)] / w.values[static_cast<size_t>(k)];
}

}  // namespace riordan
