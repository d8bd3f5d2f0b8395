#include "doctest.h"
#include "latticestick/laurent.hpp"

using latticestick::LaurentPoly;

TEST_CASE("arithmetic") {
  const LaurentPoly a = LaurentPoly::parse("t^-1 + 2");
  const LaurentPoly b = LaurentPoly::parse("t - 1");
  CHECK((a + b).to_string() == "t^-1 + 1 + t");
  CHECK((a * b).to_string() == "-t^-1 - 1 + 2t");
  CHECK((a - a).is_zero());
  CHECK((a - a).to_string() == "0");
  CHECK(LaurentPoly::constant(0).is_zero());
  CHECK(b.pow(3) == b * b * b);
  CHECK(a.shifted(2).to_string() == "t + 2t^2");
}

TEST_CASE("no zero coefficients at the ends") {
  const LaurentPoly p = LaurentPoly::parse("t^3 - t^3 + t^-2 + 5 - 5");
  CHECK(p.min_exponent() == -2);
  CHECK(p.max_exponent() == -2);
  CHECK(p.coefficients().size() == 1);
}

TEST_CASE("printing and parsing") {
  const LaurentPoly trefoil = LaurentPoly::parse("-t^-4 + t^-3 + t^-1");
  CHECK(trefoil.to_string() == "-t^-4 + t^-3 + t^-1");
  CHECK(LaurentPoly::parse(trefoil.to_string()) == trefoil);
  CHECK(LaurentPoly::parse("2*t^2 - 3").to_string() == "-3 + 2t^2");
  CHECK(LaurentPoly::parse("A^-3 + A", "A").to_string("A") == "A^-3 + A");
  CHECK_THROWS(LaurentPoly::parse("t^"));
  CHECK_THROWS(LaurentPoly::parse("x"));
}

TEST_CASE("substitutions") {
  const LaurentPoly p = LaurentPoly::parse("t + t^3 - t^4");
  CHECK(p.inverted().to_string() == "-t^-4 + t^-3 + t^-1");
  CHECK(p.inverted().inverted() == p);
  CHECK(LaurentPoly::parse("A^-8 + A^4", "A").exponents_divided(-4).to_string() == "t^-1 + t^2");
  CHECK_THROWS(LaurentPoly::parse("t^3").exponents_divided(2));
  CHECK(p.evaluate_at_minus_one() == -3);
  CHECK(LaurentPoly::constant(1).evaluate_at_minus_one() == 1);
}

TEST_CASE("total order separates a polynomial from its mirror") {
  const LaurentPoly p = LaurentPoly::parse("t + t^3 - t^4");
  CHECK((p < p.inverted()) != (p.inverted() < p));
  CHECK_FALSE(p < p);
}
