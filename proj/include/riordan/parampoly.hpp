#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Dense polynomial in up to two formal parameters over Rational.
// grid[i][j] holds the coefficient of x^i y^j; rows and columns carry no
// trailing zeros, the zero polynomial is the empty grid. The first
// variable is the usual free parameter r; the second one, s, exists as
// headroom for solvers that introduce more than one parameter. Printing
// takes the variable names, so the same type also serves as the (u, v)
// polynomial ring.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& c) {
        if (!c.is_zero()) grid_ = {{c}};
    }
    ParamPoly(long v) : ParamPoly(Rational(v)) {}

    // which = 0 gives the first parameter, 1 the second.
    static ParamPoly param(int which);

    static ParamPoly ring_zero() { return {}; }
    static ParamPoly ring_one() { return ParamPoly(1); }
    static ParamPoly from_int(long v) { return ParamPoly(v); }

    bool is_zero() const { return grid_.empty(); }
    bool is_constant() const;
    bool is_unit() const { return is_constant() && !is_zero(); }
    // Value as a constant; requires is_constant().
    Rational constant_value() const;

    int deg_first() const { return static_cast<int>(grid_.size()) - 1; }
    int deg_second() const;
    Rational coeff(int i, int j) const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly scaled(const Rational& c) const;
    // Exact division by a unit (a nonzero constant polynomial).
    ParamPoly div_unit(const ParamPoly& u) const;
    ParamPoly pow(unsigned e) const;

    Rational eval(const Rational& x, const Rational& y = Rational()) const;
    double eval_double(double x, double y) const;

    bool operator==(const ParamPoly& o) const { return grid_ == o.grid_; }

    std::string str(std::string_view xname = "r", std::string_view yname = "s") const;

private:
    void trim();
    std::vector<std::vector<Rational>> grid_;
};

// The same dense two-variable polynomials, used in u = log x, v = 1/(ax).
using UVPoly = ParamPoly;

}  // namespace riordan
