#include <doctest.h>

#include <stdexcept>
#include "riordan/parampoly.hpp"

using riordan::ParamPoly;
using riordan::Rational;

TEST_CASE("ring structure") {
    ParamPoly r = ParamPoly::param(0);
    ParamPoly s = ParamPoly::param(1);
    CHECK(ParamPoly().is_zero());
    CHECK((r - r).is_zero());
    CHECK(r + s == s + r);
    CHECK(r * s == s * r);
    CHECK((r + ParamPoly(1)) * (r - ParamPoly(1)) == r.pow(2) - ParamPoly(1));
    CHECK((r + s).pow(2) == r.pow(2) + ParamPoly(2) * r * s + s.pow(2));
    CHECK(r.pow(0) == ParamPoly(1));
}

TEST_CASE("constants and units") {
    ParamPoly c(Rational(3, 2));
    CHECK(c.is_constant());
    CHECK(c.is_unit());
    CHECK(c.constant_value() == Rational(3, 2));
    CHECK(!ParamPoly::param(0).is_unit());
    CHECK(ParamPoly(6).div_unit(ParamPoly(4)) == ParamPoly(Rational(3, 2)));
    CHECK_THROWS_AS(ParamPoly(1).div_unit(ParamPoly::param(0)), std::domain_error);
    CHECK_THROWS_AS(ParamPoly::param(0).constant_value(), std::domain_error);
}

TEST_CASE("evaluation") {
    ParamPoly r = ParamPoly::param(0);
    ParamPoly s = ParamPoly::param(1);
    ParamPoly p = r.pow(2) * s + ParamPoly(2) * r - ParamPoly(5);
    CHECK(p.eval(Rational(3), Rational(2)) == Rational(19));
    CHECK(p.eval(Rational(0), Rational(0)) == Rational(-5));
    CHECK(p.eval_double(3.0, 2.0) == doctest::Approx(19.0));
}

TEST_CASE("degrees and coefficients") {
    ParamPoly r = ParamPoly::param(0);
    ParamPoly p = r.pow(3).scaled(Rational(1, 2)) + ParamPoly(7);
    CHECK(p.deg_first() == 3);
    CHECK(p.deg_second() == 0);
    CHECK(p.coeff(3, 0) == Rational(1, 2));
    CHECK(p.coeff(0, 0) == Rational(7));
    CHECK(p.coeff(9, 9) == Rational(0));
}

TEST_CASE("printing") {
    ParamPoly r = ParamPoly::param(0);
    ParamPoly s = ParamPoly::param(1);
    CHECK(ParamPoly().str() == "0");
    CHECK(ParamPoly(Rational(-3, 2)).str() == "-3/2");
    CHECK(r.pow(2).str() == "r^2");
    CHECK((r * s).str() == "r*s");
    CHECK((ParamPoly(1) + r.scaled(Rational(2))).str() == "1 + 2*r");
    CHECK((ParamPoly(1) - r).str() == "1 - r");
    CHECK(r.pow(2).str("u", "v") == "u^2");
}
