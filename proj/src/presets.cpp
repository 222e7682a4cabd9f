#include "riordan/presets.hpp"

#include <stdexcept>
#include <string>

namespace riordan {

Series<Rational> ones_d(int trunc) {
    std::vector<Rational> c(static_cast<size_t>(trunc) + 1, Rational(1));
    return Series<Rational>(std::move(c));
}

Series<Rational> geometric_h(int trunc) {
    std::vector<Rational> c(static_cast<size_t>(trunc) + 1, Rational(1));
    c[0] = Rational(0);
    return Series<Rational>(std::move(c));
}

Series<Rational> catalan_d(int trunc) {
    // c_0 = 1, c_{n+1} = sum_i c_i c_{n-i}
    std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
    c[0] = Rational(1);
    for (int n = 0; n < trunc; ++n) {
        Rational acc;
        for (int i = 0; i <= n; ++i) acc += c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - i)];
        c[static_cast<size_t>(n + 1)] = acc;
    }
    return Series<Rational>(std::move(c));
}

Series<Rational> neg_z(int trunc) {
    return Series<Rational>(trunc).with(1, Rational(-1));
}

RiordanArray<Rational> pascal(int trunc) {
    return RiordanArray<Rational>(ones_d(trunc), geometric_h(trunc));
}

RiordanArray<Rational> identity_array(int trunc) {
    return RiordanArray<Rational>::identity(trunc);
}

RiordanArray<Rational> marked_involution(int trunc) {
    return RiordanArray<Rational>(Series<Rational>::one(trunc), neg_z(trunc));
}

Series<Rational> parse_series_spec(std::string_view spec, int trunc) {
    if (spec == "identity") return Series<Rational>::z(trunc);
    if (spec == "pascal_d") return ones_d(trunc);
    if (spec == "pascal_h" || spec == "geometric") return geometric_h(trunc);
    if (spec == "catalan") return catalan_d(trunc);
    if (spec == "neg_z") return neg_z(trunc);
    std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
    size_t idx = 0;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string_view tok =
            comma == std::string_view::npos ? spec.substr(pos) : spec.substr(pos, comma - pos);
        if (idx > static_cast<size_t>(trunc))
            throw std::invalid_argument("series spec longer than truncation " + std::to_string(trunc));
        c[idx++] = Rational::from_string(tok);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Series<Rational>(std::move(c));
}

}  // namespace riordan
