#include "riordan/centralizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace riordan {

namespace {

// First index >= from with a nonzero coefficient, or 0 if none.
int first_nonzero_at_least(const Series<Rational>& s, int from) {
    for (int j = from; j <= s.trunc(); ++j)
        if (!s[j].is_zero()) return j;
    return 0;
}

// Splits a residual that is affine in the sentinel parameter s into
// (c, d) with residual = c*s + d, c a rational constant and d free of s.
std::pair<Rational, ParamPoly> split_sentinel(const ParamPoly& e) {
    if (e.deg_second() > 1)
        throw std::logic_error("residual is not affine in the working coefficient");
    Rational c = e.coeff(0, 1);
    for (int i = 1; i <= e.deg_first(); ++i)
        if (!e.coeff(i, 1).is_zero())
            throw std::logic_error("working-coefficient multiplier is not constant");
    ParamPoly d;
    ParamPoly r = ParamPoly::param(0);
    for (int i = 0; i <= e.deg_first(); ++i) {
        Rational ci = e.coeff(i, 0);
        if (!ci.is_zero()) d += ParamPoly(ci) * r.pow(static_cast<unsigned>(i));
    }
    return {c, d};
}

}  // namespace

Series<Rational> CommutantFamily::instantiate(const Rational& r, const Rational& s) const {
    if (!consistent) throw std::domain_error("cannot instantiate an inconsistent family");
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& p : coeffs) c.push_back(p.eval(r, s));
    return Series<Rational>(std::move(c));
}

bool a_commute_criterion(const Series<Rational>& f, const Series<Rational>& h) {
    detail::require_same_trunc(f, h);
    const int n = f.trunc();
    if (n < 2) throw std::invalid_argument("criterion needs truncation >= 2");
    auto of = f.order();
    auto oh = h.order();
    if (!of || *of != 1 || !f[1].is_unit() || !oh || *oh != 1 || !h[1].is_unit())
        throw std::domain_error("criterion needs series of order 1 with unit linear coefficient");
    Series<Rational> af = div(Series<Rational>::z(n), comp_inverse(f));  // truncation n-1
    Series<Rational> ah = div(Series<Rational>::z(n), comp_inverse(h));
    Series<Rational> zz = Series<Rational>::z(n - 1);
    Series<Rational> lhs = af * compose(ah, div(zz, af));
    Series<Rational> rhs = ah * compose(af, div(zz, ah));
    return lhs == rhs;
}

bool inverse_pair_criterion(const Series<Rational>& f, const Series<Rational>& h) {
    detail::require_same_trunc(f, h);
    const int n = f.trunc();
    if (n < 2) throw std::invalid_argument("criterion needs truncation >= 2");
    auto of = f.order();
    auto oh = h.order();
    if (!of || *of != 1 || !f[1].is_unit() || !oh || *oh != 1 || !h[1].is_unit())
        throw std::domain_error("criterion needs series of order 1 with unit linear coefficient");
    Series<Rational> af = div(Series<Rational>::z(n), comp_inverse(f));
    Series<Rational> ah = div(Series<Rational>::z(n), comp_inverse(h));
    Series<Rational> zz = Series<Rational>::z(n - 1);
    Series<Rational> lhs = af * compose(ah, div(zz, af));
    Series<Rational> rhs = ah * compose(af, div(zz, ah));
    Series<Rational> one = Series<Rational>::one(n - 1);
    return lhs == one && rhs == one;
}

CommutantFamily solve_commutant_f1(const Series<Rational>& h, int order, const Rational& f1) {
    auto oh = h.order();
    if (!oh || *oh != 1 || !h[1].is_one())
        throw std::domain_error("commutant solver needs h in F1 with h'(0) = 1");
    if (order < 1) throw std::invalid_argument("order must be positive");
    if (f1.is_zero()) throw std::domain_error("f'(0) must be a unit");

    CommutantFamily fam;
    const int ell = first_nonzero_at_least(h, 2);

    if (ell == 0) {
        // h = z at this truncation: everything commutes, every position is
        // free. Symbolize the first max_free_params positions and report
        // the cap for the rest.
        fam.coeffs.assign(2, ParamPoly(Rational(0)));
        fam.coeffs[1] = ParamPoly(f1);
        int used = 0;
        for (int j = 2; j <= order; ++j) {
            fam.free_positions.push_back(j);
            if (used < max_free_params) {
                fam.coeffs.push_back(ParamPoly::param(used));
                ++used;
            } else {
                fam.param_cap_hit = true;
            }
        }
        return fam;
    }

    const int need = order + ell - 1;
    if (h.trunc() < need)
        throw std::invalid_argument("h must be supplied at truncation >= order + " +
                                    std::to_string(ell - 1) + " to pin every requested coefficient");

    // Rational powers of h, for the f(h) side of the residual.
    std::vector<Series<Rational>> hpow;
    hpow.reserve(static_cast<size_t>(need) + 1);
    hpow.push_back(Series<Rational>::one(need));
    hpow.push_back(h.truncated(need));
    for (int k = 2; k <= need; ++k) hpow.push_back(hpow.back() * hpow[1]);

    // f under construction; the coefficient currently being solved is the
    // sentinel parameter s, genuine free positions get r.
    std::vector<ParamPoly> fc(static_cast<size_t>(need) + 1, ParamPoly());
    fc[1] = ParamPoly(f1);
    const ParamPoly sentinel = ParamPoly::param(1);
    int params_used = 0;

    auto residual_at = [&](int m) -> ParamPoly {
        // [z^m] f(h): f_k times rational coefficients of h^k.
        ParamPoly lhs;
        for (int k = 1; k <= m; ++k)
            if (!fc[static_cast<size_t>(k)].is_zero()) lhs += fc[static_cast<size_t>(k)].scaled(hpow[static_cast<size_t>(k)][m]);
        // [z^m] h(f) over the parametric ring.
        std::vector<ParamPoly> fvec(fc.begin(), fc.begin() + m + 1);
        Series<ParamPoly> F(std::move(fvec));
        std::vector<ParamPoly> hvec;
        hvec.reserve(static_cast<size_t>(m) + 1);
        for (int i = 0; i <= m; ++i) hvec.emplace_back(h[i]);
        Series<ParamPoly> H(std::move(hvec));
        return lhs - compose(H, F)[m];
    };

    for (int m = 2; m <= need; ++m) {
        const int j = m - ell + 1;  // index pinned by this equation
        if (j < 2) {
            // no unknown at this degree; the equation is a pure check
            ParamPoly e = residual_at(m);
            if (!e.is_zero()) {
                fam.consistent = false;
                fam.failing_degree = m;
                fam.residual = e;
                fam.coeffs.assign(fc.begin(), fc.begin() + 2);
                return fam;
            }
            continue;
        }
        if (j > order) break;
        fc[static_cast<size_t>(j)] = sentinel;
        ParamPoly e = residual_at(m);
        auto [c, d] = split_sentinel(e);
        if (!c.is_zero()) {
            fc[static_cast<size_t>(j)] = d.scaled(-c.inverse());
        } else if (d.is_zero()) {
            if (params_used >= max_free_params)
                throw std::domain_error("solver needs more than " + std::to_string(max_free_params) +
                                        " free parameters");
            fc[static_cast<size_t>(j)] = ParamPoly::param(params_used);
            ++params_used;
            fam.free_positions.push_back(j);
        } else {
            fam.consistent = false;
            fam.failing_degree = m;
            fam.residual = d;
            fam.coeffs.assign(fc.begin(), fc.begin() + j);
            return fam;
        }
    }

    fam.coeffs.assign(fc.begin(), fc.begin() + order + 1);
    return fam;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && coeffs[static_cast<size_t>(deg)].is_zero()) --deg;
    if (deg <= 0) return {};
    // clear denominators
    Rational scale(1);
    for (int i = 0; i <= deg; ++i) scale *= (coeffs[static_cast<size_t>(i)] * scale).denominator();
    std::vector<Rational> ic;
    ic.reserve(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) ic.push_back(coeffs[static_cast<size_t>(i)] * scale);
    auto a0 = ic[0].to_int();
    auto ad = ic[static_cast<size_t>(deg)].to_int();
    if (!a0 || !ad) return {};  // out of machine range; caller reports
    auto divisors = [](long long v) {
        std::vector<long long> out;
        v = v < 0 ? -v : v;
        for (long long d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
        return out;
    };
    std::vector<Rational> roots;
    auto eval = [&](const Rational& x) {
        Rational acc;
        for (int i = deg; i >= 0; --i) acc = acc * x + ic[static_cast<size_t>(i)];
        return acc;
    };
    if (*a0 == 0) {
        roots.emplace_back(0);
        // divide out x and recurse on the rest
        std::vector<Rational> rest(ic.begin() + 1, ic.end());
        for (auto& r : rational_roots(rest))
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        return roots;
    }
    for (long long p : divisors(*a0))
        for (long long q : divisors(*ad))
            for (int sign : {1, -1}) {
                Rational cand(static_cast<long>(sign * p), static_cast<long>(q));
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (eval(cand).is_zero()) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) { return a < b; });
    return roots;
}

AppellCentralizer solve_appell_centralizer(const Series<Rational>& g, int order) {
    if (g[0].is_zero()) throw std::domain_error("g must have a nonzero constant term");
    if (order < 1) throw std::invalid_argument("order must be positive");
    const int ell = first_nonzero_at_least(g, 1);
    if (ell == 0)
        throw std::domain_error("constant g commutes with everything; the centralizer is not a family");
    const int need = order + ell - 1;
    if (g.trunc() < need)
        throw std::invalid_argument("g must be supplied at truncation >= order + " +
                                    std::to_string(ell - 1) + " to pin every requested coefficient");

    // First non-vacuous constraint: g_ell * h1^ell = g_ell.
    std::vector<Rational> constraint(static_cast<size_t>(ell) + 1);
    constraint[0] = -g[ell];
    constraint[static_cast<size_t>(ell)] = g[ell];
    std::vector<Rational> roots = rational_roots(constraint);
    roots.erase(std::remove_if(roots.begin(), roots.end(), [](const Rational& r) { return r.is_zero(); }),
                roots.end());

    AppellCentralizer out;
    if (roots.empty()) {
        out.diagnostic = "no rational root for h'(0); only irrational substitutions could commute";
        return out;
    }

    for (const Rational& h1 : roots) {
        std::vector<Rational> hc(static_cast<size_t>(need) + 1);
        hc[1] = h1;
        bool ok = true;
        int fail_m = -1;
        Rational fail_res;
        auto g_of_h_at = [&](int m) {
            std::vector<Rational> hv(hc.begin(), hc.begin() + m + 1);
            return compose(g.truncated(m), Series<Rational>(std::move(hv)))[m];
        };
        for (int m = 1; m <= need && ok; ++m) {
            const int j = m - ell + 1;
            if (j < 2) {
                Rational base = g_of_h_at(m);
                if (!(base == g[m])) {
                    ok = false;
                    fail_m = m;
                    fail_res = base - g[m];
                }
                continue;
            }
            Rational base = g_of_h_at(m);
            hc[static_cast<size_t>(j)] = Rational(1);
            Rational c = g_of_h_at(m) - base;
            hc[static_cast<size_t>(j)] = Rational(0);
            if (c.is_zero())
                throw std::logic_error("degenerate substitution equation in the Appell solver");
            hc[static_cast<size_t>(j)] = (g[m] - base) / c;
        }
        CommutantFamily fam;
        if (ok) {
            fam.coeffs.reserve(static_cast<size_t>(order) + 1);
            for (int i = 0; i <= order; ++i) fam.coeffs.emplace_back(hc[static_cast<size_t>(i)]);
        } else {
            fam.consistent = false;
            fam.failing_degree = fail_m;
            fam.residual = ParamPoly(fail_res);
            out.diagnostic = "root " + h1.str() + " fails at degree " + std::to_string(fail_m);
        }
        if (fam.consistent) out.families.push_back(std::move(fam));
    }
    if (out.families.empty() && out.diagnostic.empty())
        out.diagnostic = "no substitution fixes g at this truncation";
    return out;
}

bool lagrange_centralizer_check(const RiordanArray<Rational>& candidate, const Series<Rational>& h) {
    if (candidate.trunc() != h.trunc())
        throw std::invalid_argument("mixed truncations in centralizer check");
    RiordanArray<Rational> lag(Series<Rational>::one(h.trunc()), h);
    return commute_check(candidate, lag);
}

bool bell_centralizer_check(const RiordanArray<Rational>& candidate, const Series<Rational>& h) {
    if (candidate.trunc() != h.trunc())
        throw std::invalid_argument("mixed truncations in centralizer check");
    const int n = h.trunc() - 1;
    if (n < 1) throw std::invalid_argument("truncation too small for a Bell-type check");
    RiordanArray<Rational> bell_arr(shift_down(h), h.truncated(n));
    RiordanArray<Rational> cand(candidate.d().truncated(n), candidate.h().truncated(n));
    return commute_check(cand, bell_arr);
}

}  // namespace riordan
