#include <doctest.h>

#include "tcode/curve.hpp"

using namespace tcode;

TEST_CASE("rational points") {
  CHECK(rational_points(Curve::projective_line(7)).size() == 8);
  Curve E = Curve::elliptic(7, 0, 3);
  auto pts = rational_points(E);
  CHECK(pts.size() == 13);
  for (const auto& P : pts) CHECK(E.contains(P));
  CHECK_THROWS_AS(Curve::elliptic(7, 0, 0), std::invalid_argument);
}

TEST_CASE("group law") {
  Curve E = Curve::elliptic(7, 0, 3);
  CurvePoint P = CurvePoint::affine(1, 2);
  CHECK(group_mul(E, 13, P) == CurvePoint::at_infinity());
  CHECK(group_add(E, P, group_neg(E, P)) == CurvePoint::at_infinity());
  CurvePoint Q = CurvePoint::affine(2, 2);
  CHECK(group_add(E, P, Q) == group_add(E, Q, P));
}

TEST_CASE("principal divisors") {
  Curve E = Curve::elliptic(7, 0, 3);
  CurvePoint P = CurvePoint::affine(1, 2), O = CurvePoint::at_infinity();
  CHECK(is_principal(E, {{P, 1}, {group_neg(E, P), 1}, {O, -2}}));
  CHECK_FALSE(is_principal(E, {{P, 1}, {O, -1}}));
  CHECK(is_principal(Curve::projective_line(5), {{CurvePoint::affine(1), 2}, {O, -2}}));
}

TEST_CASE("valuations") {
  Curve E = Curve::elliptic(7, 0, 3);
  CurvePoint O = CurvePoint::at_infinity();
  auto x = FunctionFieldElement::x(E), y = FunctionFieldElement::y(E);
  CHECK(valuation(x, O) == -2);
  CHECK(valuation(y, O) == -3);
  CHECK(valuation(x - FunctionFieldElement::constant(E, 1), CurvePoint::affine(1, 2)) == 1);
  CHECK(valuation(y, CurvePoint::affine(1, 2)) == 0);
  Curve L = Curve::projective_line(5);
  auto t = FunctionFieldElement::x(L);
  CHECK(valuation(t * t, CurvePoint::affine(0)) == 2);
  CHECK(valuation(t * t, O) == -2);
}

TEST_CASE("Riemann-Roch bases") {
  Curve L = Curve::projective_line(7);
  auto B = riemann_roch_basis(L, {{CurvePoint::affine(0), 2}});
  REQUIRE(B.size() == 3);
  CHECK(valuation(B[0], CurvePoint::affine(0)) == 0);
  CHECK(valuation(B[2], CurvePoint::affine(0)) == -2);
  Curve E = Curve::elliptic(7, 0, 3);
  CurvePoint O = CurvePoint::at_infinity();
  auto C = riemann_roch_basis(E, {{O, 3}});
  REQUIRE(C.size() == 3);
  CHECK(C[0] == FunctionFieldElement::constant(E, 1));
  CHECK(riemann_roch_dimension(E, {{O, 1}}) == 1);
  CHECK(riemann_roch_dimension(E, {{O, -1}}) == 0);
  CHECK(riemann_roch_dimension(E, {{CurvePoint::affine(1, 2), 1}, {O, -1}}) == 0);
}

TEST_CASE("twisted evaluation") {
  Curve L = Curve::projective_line(7);
  auto x = FunctionFieldElement::x(L);
  CHECK(evaluate(x, CurvePoint::affine(3)).value() == 3);
  CHECK(twisted_evaluate(x, CurvePoint::affine(0), -1).value() == 1);
  CHECK(twisted_evaluate(x * x, CurvePoint::at_infinity(), 2).value() == 1);
}
