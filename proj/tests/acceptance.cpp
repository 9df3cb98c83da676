#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "support/checks.hpp"
#include "tcode_cli/problem.hpp"

using namespace tcode;
using namespace tcode::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void check(bool c, const std::string& what) {
    if (!c) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

GraphPoint gp(long long u, long long a) { return {{Rational(u)}, Rational(a)}; }

DivisorialPolytope surface(const Curve& Y, const CurvePoint& Q1, const CurvePoint& Q2) {
  DivisorialPolytope dp{Y, {}};
  dp.h.box = LatticePolytope::segment(0, 4);
  dp.h.slices[Q1] = dual_of_slice(SupportFunctionSlice(1, {{{Rational(0)}, Rational(0)}, {{Rational(4)}, Rational(2)}}));
  dp.h.slices[Q2] = dual_of_slice(SupportFunctionSlice(
      1, {{{Rational(0)}, Rational(0)}, {{Rational(2)}, Rational(2)}, {{Rational(3)}, Rational(1)}, {{Rational(4)}, Rational(-1)}}));
  return dp;
}

Curve elliptic7() { return Curve::elliptic(7, 0, 3); }
CurvePoint Q1e() { return CurvePoint::affine(1, 2); }
CurvePoint Q2e() { return CurvePoint::affine(1, 5); }

void criterion1(Outcome& o) {
  for (const Curve& Y : {Curve::projective_line(7), elliptic7()}) {
    CurvePoint Q1 = Y.is_elliptic() ? Q1e() : CurvePoint::affine(0);
    CurvePoint Q2 = Y.is_elliptic() ? Q2e() : CurvePoint::at_infinity();
    DivisorialPolytope dp = surface(Y, Q1, Q2);
    QVec alpha;
    Rational beta;
    const ConcavePL& f1 = dp.h.slices.at(Q1);
    o.check(f1.is_affine(&alpha, &beta) && alpha[0] == Rational(1, 2) && beta == 0, "h*_Q1 = u/2");
    const ConcavePL& f2 = dp.h.slices.at(Q2);
    std::vector<GraphPoint> table{gp(0, 0), gp(2, 2), gp(3, 1), gp(4, -1)};
    o.check(f2.vertices() == table, "h*_Q2 table");
    bool values = true;
    long long expect[] = {0, 1, 2, 1, -1};
    for (long long u = 0; u <= 4; ++u) values = values && f2(ZVec{u}) == Rational(expect[u]);
    o.check(values, "h*_Q2 values");
    Rational self = self_intersection(dp);
    o.check(self == Rational(15), "(D_h)^2 = 15, got " + self.to_string());
    TWeilDivisor W = weil_divisor(dp);
    std::multiset<Rational> rays, verts;
    bool zero_at_half = false;
    for (const auto& r : W.rays)
      if (r.coeff) rays.insert(Rational(r.coeff));
    for (const auto& v : W.vertices) {
      if (v.coeff != 0) verts.insert(v.coeff);
      if (v.point == Q1 && v.v == QVec{Rational(1, 2)} && v.coeff == 0) zero_at_half = true;
    }
    o.check(rays == std::multiset<Rational>{Rational(4)}, "ray coefficients {4}");
    o.check(verts == std::multiset<Rational>{Rational(4), Rational(7)}, "vertex coefficients {4,7}");
    o.check(zero_at_half, "zero coefficient at (Q1, 1/2)");
    o.check(genus_of_section(dp).to_string() == "5+4g", "genus form " + genus_of_section(dp).to_string());
    o.check(euler_characteristic(dp).to_string() == "12-5g", "euler form " + euler_characteristic(dp).to_string());
  }
  o.detail << " (D_h)^2=15 genus=5+4g chi=12-5g Weil rays {4} vertices {4,7}";
}

void criterion2(Outcome& o) {
  auto spec = cli::example("threefold");
  DivisorialPolytope dp = cli::to_polytope(spec);
  Rational vol = volume(dp.h);
  o.detail << " sum of slice integrals = " << vol;
  o.check(vol == Rational(21), "volume 21, computed " + vol.to_string());
  TWeilDivisor W = weil_divisor(dp);
  std::map<std::pair<long long, long long>, Rational> at_inf;
  for (const auto& v : W.vertices)
    if (v.point.infinity && v.v[0].is_integer() && v.v[1].is_integer()) at_inf[{v.v[0].to_ll(), v.v[1].to_ll()}] = v.coeff;
  o.check(at_inf.count({0, 0}) && at_inf[{0, 0}] == 2, "coefficient 2 at (inf,(0,0))");
  o.check(at_inf.count({-1, -1}) && at_inf[{-1, -1}] == 2, "coefficient 2 at (inf,(-1,-1))");
  o.detail << "; anticanonical coefficients at (inf,(0,0)), (inf,(-1,-1)) = " << at_inf[{0, 0}] << ", " << at_inf[{-1, -1}];
}

EvaluationSetup elliptic_setup() {
  Curve Y = elliptic7();
  EvaluationSetup s{surface(Y, Q1e(), Q2e()), {}, 0};
  for (const auto& P : rational_points(Y))
    if (P != Q1e() && P != Q2e()) s.points.push_back(P);
  return s;
}

void criterion3(Outcome& o) {
  EvaluationSetup s = elliptic_setup();
  auto pts = rational_points(s.dp.curve);
  o.check(pts.size() == 13, "13 rational points");
  EvaluationCode C = build_code(s);
  o.check(C.n == 66 && C.k == 8, "n=66 k=8");
  SurfaceBound B = d_lower_surface(s.dp.h, 7, 11);
  o.check(B.lambda0 == 3, "lambda0 = 3");
  o.check(B.nu == std::vector<long long>{4, 3, 1, 0}, "nu = (4,3,1,0)");
  o.check(B.d == 22, "d_lower = 22");
  UpperBound U = d_upper(s.dp, 7, 11);
  o.check(U.d == 33, "d_upper = 33");
  DistanceResult R = d_exact(C.G);
  o.check(22 <= R.d && R.d <= 33, "22 <= d <= 33");
  o.detail << " points=" << pts.size() << " n=" << C.n << " k=" << C.k << " lambda0=" << B.lambda0
           << " d_lower=" << B.d << " d_upper=" << U.d << " d=" << R.d << " (" << R.classes << " classes)";
}

void criterion4(Outcome& o) {
  EvaluationSetup s = elliptic_setup();
  HasseWeil H = hasse_weil_diagnostic(s.dp, 7);
  o.check(H.g == 9, "g = 9");
  o.check(H.q_threshold == 89, "threshold 89");
  o.detail << " g=" << H.g << " q_threshold=" << H.q_threshold;
}

void criterion5(Outcome& o) {
  CurvePoint zero = CurvePoint::affine(0), inf = CurvePoint::at_infinity();
  DivisorialPolytope full = surface(Curve::projective_line(7), zero, inf);
  LatticePolytope expected = LatticePolytope::hull(2, {{0, 0}, {2, -2}, {3, -1}, {4, 1}, {4, 2}});
  LatticePolytope P = toric_polytope(full.h, zero, inf);
  o.check(P == expected, "toric polytope " + P.to_string());
  o.detail << " polytope " << P.to_string() << ";";
  for (u32 q : {5u, 7u}) {
    DivisorialPolytope dp{Curve::projective_line(q), {}};
    dp.h.box = LatticePolytope::segment(0, 2);
    dp.h.slices[zero] = ConcavePL::from_points(1, {gp(0, 0), gp(2, 1)});
    dp.h.slices[inf] = ConcavePL::from_points(1, {gp(0, 0), gp(2, 2)});
    EvaluationSetup s{dp, {}, 0};
    for (u32 x = 1; x < q; ++x) s.points.push_back(CurvePoint::affine(x));
    EvaluationCode C = build_code(s);
    LatticePolytope T = toric_polytope(dp.h, zero, inf);
    MatrixFp G = toric_code(T, q);
    DistanceResult a = d_exact(C.G), b = d_exact(G);
    o.check(C.k == 7 && rank(G) == 7, "k = 7");
    o.check(a.enumerator == b.enumerator, "weight enumerators at q=" + std::to_string(q));
    o.detail << " q=" << q << ": n=" << C.n << " k=" << C.k << " d=" << a.d << " toric d=" << b.d
             << (a.enumerator == b.enumerator ? " enumerators equal;" : " enumerators differ;");
  }
}

void criterion6(Outcome& o) {
  std::pair<const char*, CheckResult> suites[] = {
      {"lattice-count", lattice_count_identity(150, 11)},
      {"dimension", dimension_sandwich(120, 12)},
      {"riemann-roch", riemann_roch_contract(150, 13)},
      {"duality", duality_round_trip(150, 14)},
      {"polarization", polarization(120, 15)},
      {"point-divisor", point_divisor_invariance(120, 16)},
      {"distance", distance_sandwich(30, 17)},
  };
  for (auto& [name, r] : suites) {
    o.detail << " " << name << " " << (r.instances - r.failures) << "/" << r.instances;
    o.check(r.ok(), std::string(name) + ": " + r.first_failure);
  }
}

void criterion7(Outcome& o) {
  RuledSweep s = ruled_sweep(200, 21);
  o.detail << " closed forms " << (s.closed_forms.instances - s.closed_forms.failures) << "/" << s.closed_forms.instances
           << "; k inequality " << (s.k_holds.instances - s.k_holds.failures) << "/" << s.k_holds.instances << "; d inequality "
           << (s.d_holds.instances - s.d_holds.failures) << "/" << s.d_holds.instances;
  o.check(s.closed_forms.ok(), "closed forms: " + s.closed_forms.first_failure);
  o.check(s.k_holds.ok(), "k inequality: " + s.k_holds.first_failure);
  o.check(s.d_holds.ok(), "d inequality: " + s.d_holds.first_failure);
}

void criterion8(Outcome& o) {
  auto spec = cli::example("elliptic");
  EvaluationSetup s = cli::to_setup(spec);
  KBounds K = k_bounds(s.dp);
  long long sh = sharp(s.dp.h);
  EvaluationCode C = build_code(s);
  o.check(sh == 19, "#h* = 19");
  o.check(C.n == 66, "n = 66");
  o.check(K.equality_case && K.lower == 19, "equality case k = 19");
  o.check(C.k == 19, "rank 19");
  o.detail << " #h*=" << sh << " n=" << C.n << " k_formula=" << K.lower << " rank=" << C.k;
}

}  // namespace

int main() {
  std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"surface example divisors and forms", criterion1},
      {"threefold volume and anticanonical coefficients", criterion2},
      {"elliptic T-code parameters and distance", criterion3},
      {"Hasse-Weil diagnostic", criterion4},
      {"toric cross-check", criterion5},
      {"property suites", criterion6},
      {"ruled-surface family", criterion7},
      {"k = 19 equality case on the elliptic curve", criterion8},
  };
  int failed = 0, i = 0;
  for (auto& [name, fn] : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << ++i << " " << name << " (" << secs << " s):"
              << o.detail.str() << std::endl;
  }
  return failed ? 1 : 0;
}
