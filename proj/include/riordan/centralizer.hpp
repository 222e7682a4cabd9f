#pragma once

#include <string>
#include <vector>

#include "riordan/parampoly.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Degree-by-degree solvers introduce at most this many free parameters
// before giving up; they never fall back to numeric sampling.
inline constexpr int max_free_params = 2;

// A solved commutant family: coefficient n of the commuting series as a
// polynomial in the free parameters. At a free position the coefficient
// is exactly the corresponding formal parameter. When the solver hits a
// contradiction, `consistent` is false and coefficients beyond the
// failing index are absent. When the parameter cap is reached (h = z,
// where every position is free), positions stay recorded in
// free_positions but only the first max_free_params are symbolized and
// param_cap_hit is set.
struct CommutantFamily {
    std::vector<ParamPoly> coeffs;
    std::vector<int> free_positions;
    bool consistent = true;
    int failing_degree = -1;
    ParamPoly residual;
    bool param_cap_hit = false;

    // Coefficients evaluated at concrete parameter values.
    Series<Rational> instantiate(const Rational& r, const Rational& s = Rational()) const;
};

// Commutation criterion through A-sequences: f and h commute iff
// A_f(z) A_h(z/A_f(z)) = A_h(z) A_f(z/A_h(z)) at truncation.
bool a_commute_criterion(const Series<Rational>& f, const Series<Rational>& h);

// Both sides equal to the constant 1, i.e. f and h are compositional
// inverses of each other.
bool inverse_pair_criterion(const Series<Rational>& f, const Series<Rational>& h);

// All f in F1 with the given f'(0) commuting with h up to z^order.
// Requires h'(0) = 1 and h supplied at a truncation deep enough to pin
// every coefficient up to `order` (order + l - 1 where l is the index of
// the first nonzero coefficient of h beyond z).
CommutantFamily solve_commutant_f1(const Series<Rational>& h, int order,
                                   const Rational& f1 = Rational(1));

struct AppellCentralizer {
    std::vector<CommutantFamily> families;  // one per admissible h'(0)
    std::string diagnostic;
};

// All h in F1 with g(h) = g up to z^order: the substitution part of the
// centralizer of the Appell array (g, z). h'(0) is found as the set of
// rational roots of the first non-vacuous constraint; each root is then
// propagated degree by degree.
AppellCentralizer solve_appell_centralizer(const Series<Rational>& g, int order);

// Does the candidate commute with the Lagrange-type array (1, h)?
bool lagrange_centralizer_check(const RiordanArray<Rational>& candidate,
                                const Series<Rational>& h);

// Does the candidate commute with the Bell-type array (h/z, h)?
// Checked at truncation N-1 (the division by z costs one order).
bool bell_centralizer_check(const RiordanArray<Rational>& candidate, const Series<Rational>& h);

template <Ring R>
bool commute_check(const RiordanArray<R>& a, const RiordanArray<R>& b) {
    if (a.trunc() != b.trunc()) throw std::invalid_argument("mixed truncations in commute check");
    return multiply(a, b) == multiply(b, a);
}

// Rational roots of the polynomial sum_i coeffs[i] x^i, by the rational
// root theorem. Candidates whose numerator/denominator exceed the machine
// range are skipped (reported through the callers' diagnostics).
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace riordan
