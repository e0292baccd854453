#include "doctest.h"

#include "starlike/laurent.hpp"

using namespace starlike;

TEST_SUITE("laurent") {

TEST_CASE("zero terms are dropped") {
  Laurent p = Laurent::monomial(3, 2) + Laurent::monomial(3, -2);
  CHECK(p.is_zero());
  CHECK(p == Laurent());
}

TEST_CASE("circle value squared") {
  Laurent d = Laurent::circle_value();
  Laurent sq = d * d;
  CHECK(sq.coeff(4) == 1);
  CHECK(sq.coeff(0) == 2);
  CHECK(sq.coeff(-4) == 1);
  CHECK(sq.terms().size() == 3);
  CHECK(d.pow(2) == sq);
  CHECK(d.pow(0) == Laurent(1));
}

TEST_CASE("negation and subtraction") {
  Laurent a = Laurent::monomial(2) - Laurent::monomial(-2);
  CHECK(-a == Laurent::monomial(-2) - Laurent::monomial(2));
  CHECK((a - a).is_zero());
}

TEST_CASE("scale exponents") {
  Laurent p = Laurent::monomial(1, 3) + Laurent::monomial(-2, -1);
  Laurent q = p.scale_exponents(-1);
  CHECK(q.coeff(-1) == 3);
  CHECK(q.coeff(2) == -1);
}

TEST_CASE("bivariate expansion of X") {
  BiLaurent x = BiLaurent::monomial(0, 1);
  BiLaurent e = expand_x(x);
  CHECK(e.coeff(0, 2) == -1);
  CHECK(e.coeff(0, -2) == -1);
  CHECK(substitute_x_by_circle(x * x) == Laurent::circle_value().pow(2));
  CHECK(BiLaurent::from_a(Laurent::monomial(4, 5), 1).coeff(4, 1) == 5);
}

}
