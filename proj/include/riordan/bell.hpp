#pragma once

#include <span>
#include <vector>

#include "riordan/parampoly.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"
#include "riordan/weights.hpp"

namespace riordan::bell {

// Set-partition enumerations beyond this size are refused; the oracle is
// meant for small cross-checks, not production composition.
inline constexpr int set_partition_cap = 8;

// Partial Bell polynomial with respect to the weights:
// B_{n,k} = [z^n / c_n] (f(z))^k / c_k, where f(z) = sum_j f_j z^j / c_j
// and fcoeffs gives f_1, f_2, ... Computed by truncated powering.
Rational partial_bell(int n, int k, std::span<const Rational> fcoeffs, const WeightSeq& w);

// Exponential-weight partial Bell polynomial by the explicit sum over
// partitions of n into k parts with multinomial coefficients.
Rational bell_partition_oracle(int n, int k, std::span<const Rational> fcoeffs);

// Triangle of B_{n,k}(f_1, f_2, ...) for the series f; equals the
// generalized array (1, f) with respect to the weights.
Triangle<Rational> iteration_matrix(const Series<Rational>& f, int nrows, const WeightSeq& w);

// Composition of exponential-convention series (coefficients of z^n/n!):
// h_0 = f_0, h_n = sum_k f_k B_{n,k}(g_1, ..., g_{n-k+1}).
std::vector<Rational> faa_compose(std::span<const Rational> fcoeffs,
                                  std::span<const Rational> gcoeffs, int n);

// d_n as a sum over set partitions of {1..n} of g_{|B_1|}...g_{|B_k|} f_k;
// refuses n beyond set_partition_cap.
Rational setpartition_compose_oracle(std::span<const Rational> fcoeffs,
                                     std::span<const Rational> gcoeffs, int n);

// Signed Stirling numbers of the first kind.
Rational stirling1(int n, int k);
Triangle<Rational> stirling1_triangle(int nrows);

// Lehmer-Comtet numbers of the first kind, by their recurrence.
Rational lehmer_comtet(int n, int k);
Triangle<Rational> lehmer_comtet_triangle(int nrows);
// The same numbers through the Stirling-sum formula
// b(n,k) = sum_{k<=l<=n} C(l,k) k^{l-k} s(n,l).
Rational lehmer_comtet_via_stirling(int n, int k);
// And through the defining expansion (1/k!)((1+z)log(1+z))^k.
Rational lehmer_comtet_via_expansion(int n, int k);

// The polynomial P_n(u, v) with d^n/dx^n x^{ax} = a^n x^{ax} P_n(u, v),
// u = log x, v = 1/(ax).
UVPoly xax_derivative(int n);
// Numeric value of the n-th derivative at (x, alpha).
double xax_derivative_value(int n, double x, double alpha);

// Series built from exponential coefficients: sum_k f_k z^k / k!.
Series<Rational> from_exponential(std::span<const Rational> fcoeffs, int trunc);

}  // namespace riordan::bell
