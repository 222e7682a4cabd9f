#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace riordan {

// Exact rational number backed by GMP. Values are kept canonical at all
// times: lowest terms, positive denominator.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(long num, long den);
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Accepts "p", "-p", "p/q" with decimal digits only.
    static Rational from_string(std::string_view text);
    static Rational factorial(unsigned long n);
    static Rational binomial(unsigned long n, unsigned long k);

    static Rational ring_zero() { return {}; }
    static Rational ring_one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_unit() const { return !is_zero(); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational operator+(const Rational& o) const {
        Rational r;
        mpq_add(r.q_, q_, o.q_);
        return r;
    }
    Rational operator-(const Rational& o) const {
        Rational r;
        mpq_sub(r.q_, q_, o.q_);
        return r;
    }
    Rational operator*(const Rational& o) const {
        Rational r;
        mpq_mul(r.q_, q_, o.q_);
        return r;
    }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    Rational div_unit(const Rational& u) const { return *this / u; }
    Rational inverse() const;
    Rational pow_int(long e) const;

    bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = mpq_cmp(q_, o.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational numerator() const {
        Rational r;
        mpq_set_num(r.q_, mpq_numref(q_));
        return r;
    }
    Rational denominator() const {
        Rational r;
        mpq_set_num(r.q_, mpq_denref(q_));
        return r;
    }

    // Integer value when the denominator is 1 and it fits a long long.
    std::optional<long long> to_int() const;
    double to_double() const { return mpq_get_d(q_); }
    std::string str() const;

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace riordan
