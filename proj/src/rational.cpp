#include "riordan/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace riordan {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational Rational::from_string(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) throw bad();
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        size_t den_digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++den_digits;
        }
        if (den_digits == 0 || i != text.size()) throw bad();
    }
    Rational r;
    std::string buf(text);
    if (mpq_set_str(r.q_, buf.c_str(), 10) != 0) throw bad();
    if (mpz_sgn(mpq_denref(r.q_)) == 0) throw std::domain_error("rational with zero denominator");
    mpq_canonicalize(r.q_);
    return r;
}

Rational Rational::factorial(unsigned long n) {
    Rational r;
    mpz_fac_ui(mpq_numref(r.q_), n);
    return r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    Rational r;
    mpz_bin_uiui(mpq_numref(r.q_), n, k);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    Rational r;
    mpq_div(r.q_, q_, o.q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow_int(long e) const {
    if (e < 0) return inverse().pow_int(-e);
    Rational base = *this;
    Rational acc(1);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::optional<long long> Rational::to_int() const {
    if (!is_integer()) return std::nullopt;
    if (!mpz_fits_slong_p(mpq_numref(q_))) return std::nullopt;
    return static_cast<long long>(mpz_get_si(mpq_numref(q_)));
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace riordan
