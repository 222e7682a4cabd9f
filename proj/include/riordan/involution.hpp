#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riordan/centralizer.hpp"
#include "riordan/riordan_array.hpp"

namespace riordan {

// The marker array M = (1, -z); MD an involution defines the
// pseudo-involutions.
template <Ring R>
RiordanArray<R> marker_m(int trunc) {
    return RiordanArray<R>(Series<R>::one(trunc),
                           Series<R>(trunc).with(1, -R::ring_one()));
}

// h^{-1} g h, the conjugate of g by h.
template <Ring R>
RiordanArray<R> conjugate(const RiordanArray<R>& g, const RiordanArray<R>& h) {
    if (g.trunc() != h.trunc()) throw std::invalid_argument("mixed truncations in conjugation");
    return multiply(multiply(inverse(h), g), h);
}

// [g, h] = g^{-1} h^{-1} g h; the identity exactly when g and h commute.
template <Ring R>
RiordanArray<R> commutator(const RiordanArray<R>& g, const RiordanArray<R>& h) {
    if (g.trunc() != h.trunc()) throw std::invalid_argument("mixed truncations in commutator");
    return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

// Does h reverse g, i.e. h g h^{-1} = g^{-1}?
template <Ring R>
bool is_reverser(const RiordanArray<R>& h, const RiordanArray<R>& g) {
    if (g.trunc() != h.trunc()) throw std::invalid_argument("mixed truncations in reverser check");
    return multiply(multiply(h, g), inverse(h)) == inverse(g);
}

template <Ring R>
bool is_involution(const RiordanArray<R>& d) {
    return multiply(d, d) == RiordanArray<R>::identity(d.trunc());
}

// (M D)^2 = I at truncation; equivalently M reverses D.
template <Ring R>
bool is_pseudo_involution(const RiordanArray<R>& d) {
    RiordanArray<R> md = multiply(marker_m<R>(d.trunc()), d);
    return multiply(md, md) == RiordanArray<R>::identity(d.trunc());
}

// The twisted-subgroup products x y x and x y^{-1} x of two
// pseudo-involutions; both results are pseudo-involutions again, which is
// asserted before returning.
template <Ring R>
std::pair<RiordanArray<R>, RiordanArray<R>> twisted_closure(const RiordanArray<R>& x,
                                                            const RiordanArray<R>& y) {
    if (!is_pseudo_involution(x))
        throw std::invalid_argument("twisted closure: x is not a pseudo-involution");
    if (!is_pseudo_involution(y))
        throw std::invalid_argument("twisted closure: y is not a pseudo-involution");
    RiordanArray<R> xyx = multiply(multiply(x, y), x);
    RiordanArray<R> xinvyx = multiply(multiply(x, inverse(y)), x);
    if (!is_pseudo_involution(xyx) || !is_pseudo_involution(xinvyx))
        throw std::logic_error("twisted closure produced a non-pseudo-involution");
    return {xyx, xinvyx};
}

// Product of a palindromic word of pseudo-involutions; a pseudo-involution
// again, asserted before returning.
template <Ring R>
RiordanArray<R> palindrome_product(const std::vector<RiordanArray<R>>& words) {
    if (words.empty()) throw std::invalid_argument("palindrome product of an empty word");
    const size_t n = words.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (!(words[i] == words[n - 1 - i]))
            throw std::invalid_argument("word is not palindromic at position " + std::to_string(i));
    for (size_t i = 0; i < n; ++i)
        if (!is_pseudo_involution(words[i]))
            throw std::invalid_argument("word member " + std::to_string(i) +
                                        " is not a pseudo-involution");
    RiordanArray<R> acc = words[0];
    for (size_t i = 1; i < n; ++i) acc = multiply(acc, words[i]);
    if (!is_pseudo_involution(acc))
        throw std::logic_error("palindromic product is not a pseudo-involution");
    return acc;
}

enum class ExtendedMembership { Centralizes, Reverses, Both, Neither };

// Classification of h against the extended centralizer of g.
template <Ring R>
ExtendedMembership extended_centralizer_member(const RiordanArray<R>& h, const RiordanArray<R>& g) {
    bool c = commute_check(h, g);
    bool r = is_reverser(h, g);
    if (c && r) return ExtendedMembership::Both;
    if (c) return ExtendedMembership::Centralizes;
    if (r) return ExtendedMembership::Reverses;
    return ExtendedMembership::Neither;
}

// Membership in the centralizer of M, through both routes: the product
// comparison and the parity characterization (d even, h odd). The routes
// must agree.
template <Ring R>
bool checkerboard_centralizer_check(const RiordanArray<R>& d) {
    bool by_product = commute_check(d, marker_m<R>(d.trunc()));
    bool by_parity = subgroup_flags(d).count(Subgroup::Checkerboard) > 0;
    if (by_product != by_parity)
        throw std::logic_error("checkerboard characterization disagrees with the product check");
    return by_product;
}

}  // namespace riordan
