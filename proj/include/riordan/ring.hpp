#pragma once

#include <concepts>

namespace riordan {

// Exact commutative coefficient ring: rationals, or polynomials in formal
// parameters over the rationals. Division is available only by units.
template <typename R>
concept Ring = std::regular<R> && requires(const R a, const R b, R m, long v) {
    { R::ring_zero() } -> std::same_as<R>;
    { R::ring_one() } -> std::same_as<R>;
    { R::from_int(v) } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { m += b } -> std::same_as<R&>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.div_unit(b) } -> std::same_as<R>;
};

}  // namespace riordan
