#include <doctest.h>

#include "tcode/convex.hpp"

using namespace tcode;

namespace {
GraphPoint gp(long long u, long long a) { return {{Rational(u)}, Rational(a)}; }
TropicalTerm tt(long long u, long long a) { return {{Rational(u)}, Rational(a)}; }
}  // namespace

TEST_CASE("lattice polytopes") {
  auto P = LatticePolytope::hull(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}});
  CHECK(P.vertices().size() == 3);
  CHECK(P.volume() == Rational(2));
  CHECK(P.lattice_points().size() == 6);
  CHECK(P.inward_normals().size() == 3);
  CHECK(P.support({Rational(1), Rational(1)}) == 0);
  auto S = LatticePolytope::segment(0, 4);
  CHECK(S.lattice_points().size() == 5);
  CHECK(S.in_interior({2}));
  CHECK_FALSE(S.in_interior({0}));
  CHECK(S.minkowski_sum(LatticePolytope::segment(-1, 1)) == LatticePolytope::segment(-1, 5));
}

TEST_CASE("concave functions") {
  auto f = ConcavePL::from_points(1, {gp(0, 0), gp(1, 1), gp(2, 2), gp(3, 1), gp(4, -1), gp(2, -5)});
  CHECK(f.vertices().size() == 4);
  CHECK(f.marks().size() == 1);
  CHECK(f.below_count() == 1);
  CHECK_FALSE(f.strictly_concave());
  CHECK(f.pieces().size() == 3);
  CHECK(f(ZVec{1}) == 1);
  CHECK(f.integral() == Rational(7, 2));
  auto c = ConcavePL::constant(LatticePolytope::segment(0, 2), Rational(3));
  QVec a;
  Rational b;
  CHECK(c.is_affine(&a, &b));
  CHECK(b == 3);
}

TEST_CASE("duality on the surface data") {
  SupportFunctionSlice h1(1, {tt(0, 0), tt(4, 2)});
  auto f1 = dual_of_slice(h1);
  CHECK(f1(QVec{Rational(1)}) == Rational(1, 2));
  SupportFunctionSlice h2(1, {tt(0, 0), tt(2, 2), tt(3, 1), tt(4, -1)});
  auto f2 = dual_of_slice(h2);
  CHECK(f2.pieces().size() == 3);
  CHECK(h2(QVec{Rational(1)}) == slice_of_dual(f2)(QVec{Rational(1)}));
  auto sub = h2.subdivision_vertices();
  CHECK(sub.size() == 3);
}

TEST_CASE("surface example invariants") {
  HStar h;
  h.box = LatticePolytope::segment(0, 4);
  CurvePoint Q1 = CurvePoint::affine(0), Q2 = CurvePoint::at_infinity();
  h.slices[Q1] = dual_of_slice(SupportFunctionSlice(1, {tt(0, 0), tt(4, 2)}));
  h.slices[Q2] = dual_of_slice(SupportFunctionSlice(1, {tt(0, 0), tt(2, 2), tt(3, 1), tt(4, -1)}));
  CHECK(volume(h) == Rational(15, 2));
  CHECK(inn(h) == 8);
  CHECK(sharp(h) == 7);
  CHECK(lambda0(h) == 3);
  CHECK(nu(h, 0) == 4);
  CHECK(nu(h, 1) == 3);
  CHECK(nu(h, 2) == 1);
  CHECK(nu(h, 3) == 0);
  CHECK(mixed_volume({h, h}) == Rational(15, 2));
  CHECK(Rational(2) * mixed_volume({h, point_divisor_dual(1, Q1)}) == 4);
  CHECK(toric_polytope(h, Q1, Q2) == LatticePolytope::hull(2, {{0, 0}, {2, -2}, {3, -1}, {4, 1}, {4, 2}}));
}

TEST_CASE("sup-convolution adds slices") {
  auto g = ConcavePL::from_points(1, {gp(0, 0), gp(2, 2)});
  auto h = ConcavePL::from_points(1, {gp(0, 1), gp(1, 1)});
  auto s = sup_convolution(g, h);
  CHECK(s(ZVec{0}) == 1);
  CHECK(s(ZVec{3}) == 3);
  auto p = tropical_product(slice_of_dual(g), slice_of_dual(h));
  CHECK(dual_of_slice(p)(ZVec{2}) == s(ZVec{2}));
}
