#include "checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tcode::testing {

long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Curve random_curve(Rng& rng, const std::vector<u32>& primes, bool allow_elliptic) {
  u32 p = primes[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(primes.size()) - 1))];
  if (!allow_elliptic || p < 5 || uniform(rng, 0, 1) == 0) return Curve::projective_line(p);
  while (true) {
    try {
      return Curve::elliptic(p, uniform(rng, 0, p - 1), uniform(rng, 0, p - 1));
    } catch (const std::invalid_argument&) {
    }
  }
}

ConcavePL random_concave_1d(Rng& rng, long long lo, long long hi, long long spread) {
  std::vector<GraphPoint> pts;
  for (long long u = lo; u <= hi; ++u) pts.push_back({{Rational(u)}, Rational(uniform(rng, -spread, spread))});
  return ConcavePL::envelope(1, pts);
}

LatticePolytope random_polygon(Rng& rng, long long r) {
  while (true) {
    std::vector<ZVec> pts;
    long long n = uniform(rng, 3, 5);
    for (long long i = 0; i < n; ++i) pts.push_back({uniform(rng, -r, r), uniform(rng, -r, r)});
    LatticePolytope P = LatticePolytope::hull(2, pts);
    if (P.is_full()) return P;
  }
}

ConcavePL random_concave_2d(Rng& rng, const LatticePolytope& box, long long spread) {
  std::vector<GraphPoint> pts;
  for (const auto& u : box.lattice_points()) pts.push_back({to_qvec(u), Rational(uniform(rng, -spread, spread))});
  return ConcavePL::envelope(2, pts);
}

HStar random_hstar(Rng& rng, const Curve& Y, int m, int max_slices) {
  HStar h;
  if (m == 1) {
    long long lo = uniform(rng, -2, 1);
    h.box = LatticePolytope::segment(lo, lo + uniform(rng, 0, 4));
  } else {
    h.box = random_polygon(rng, 1 + uniform(rng, 0, 1));
  }
  auto pts = rational_points(Y);
  std::shuffle(pts.begin(), pts.end(), rng);
  long long k = uniform(rng, 1, std::min<long long>(max_slices, static_cast<long long>(pts.size())));
  for (long long i = 0; i < k; ++i) {
    auto& P = pts[static_cast<std::size_t>(i)];
    h.slices[P] = m == 1 ? random_concave_1d(rng, h.box.min_coord(0), h.box.max_coord(0)) : random_concave_2d(rng, h.box);
  }
  return h;
}

namespace {

std::string str(const HStar& h) {
  std::ostringstream os;
  os << "box " << h.box.to_string();
  for (const auto& [P, f] : h.slices) os << " | " << P.to_string() << ": " << f.to_string();
  return os.str();
}

}  // namespace

CheckResult lattice_count_identity(int n, std::uint64_t seed) {
  Rng rng(seed);
  CheckResult r;
  for (int i = 0; i < n; ++i) {
    long long lo = uniform(rng, -3, 2), hi = lo + uniform(rng, 1, 6);
    LatticePolytope box = LatticePolytope::segment(lo, hi);
    ConcavePL f = random_concave_1d(rng, lo, hi, 5);
    ++r.instances;
    Rational lhs = Rational(2) * volume(f);
    long long rhs = inn(f, box) + sharp(f, box);
    if (lhs != Rational(rhs)) r.fail(f.to_string() + ": 2vol=" + lhs.to_string() + " inn+#=" + std::to_string(rhs));
  }
  return r;
}

CheckResult dimension_sandwich(int n, std::uint64_t seed) {
  Rng rng(seed);
  CheckResult r;
  int equality_seen = 0;
  while (r.instances < n) {
    Curve Y = random_curve(rng, {5, 7, 11});
    DivisorialPolytope dp{Y, random_hstar(rng, Y, 1, 3)};
    if (!validate(dp).ok) continue;
    ++r.instances;
    KBounds K = k_bounds(dp);
    long long total = graded_sections(dp).total;
    bool ok = K.lower <= K.gamma_sum && K.gamma_sum <= total && total <= K.upper;
    if (K.equality_case) {
      ++equality_seen;
      ok = ok && total == K.lower && K.gamma_sum == K.lower;
    }
    if (euler_characteristic(dp).value != K.lower) ok = false;
    if (!ok)
      r.fail(Y.describe() + " " + str(dp.h) + ": " + std::to_string(K.lower) + " <= " + std::to_string(K.gamma_sum) +
             " <= " + std::to_string(total) + " <= " + std::to_string(K.upper));
  }
  if (equality_seen == 0) r.fail("equality case never exercised");
  return r;
}

CheckResult riemann_roch_contract(int n, std::uint64_t seed) {
  Rng rng(seed);
  CheckResult r;
  for (int i = 0; i < n; ++i) {
    Curve Y = random_curve(rng, {5, 7, 11, 13});
    auto pts = rational_points(Y);
    std::shuffle(pts.begin(), pts.end(), rng);
    DivisorZ D;
    long long k = uniform(rng, 1, std::min<long long>(4, static_cast<long long>(pts.size())));
    for (long long j = 0; j < k; ++j) {
      long long c = uniform(rng, -3, 4);
      if (c) D[pts[static_cast<std::size_t>(j)]] = c;
    }
    ++r.instances;
    const long long g = Y.genus(), deg = degree(D);
    long long expected;
    if (deg < 0)
      expected = 0;
    else if (deg > 2 * g - 2)
      expected = deg + 1 - g;
    else
      expected = is_principal(Y, D) ? 1 : 0;
    auto basis = riemann_roch_basis(Y, D);
    bool ok = static_cast<long long>(basis.size()) == expected && riemann_roch_dimension(Y, D) == expected;
    for (const auto& f : basis)
      for (const auto& P : rational_points(Y)) {
        auto it = D.find(P);
        long long bound = it == D.end() ? 0 : -it->second;
        if (valuation(f, P) < bound) ok = false;
      }
    if (!ok) r.fail(Y.describe() + " D=" + to_string(D) + ": dim " + std::to_string(basis.size()) + " expected " + std::to_string(expected));
  }
  return r;
}

CheckResult duality_round_trip(int n, std::uint64_t seed) {
  Rng rng(seed);
  CheckResult r;
  for (int i = 0; i < n; ++i) {
    int m = 1 + i % 2;
    LatticePolytope box;
    if (m == 1) {
      long long lo = uniform(rng, -3, 1);
      box = LatticePolytope::segment(lo, lo + uniform(rng, 1, 5));
    } else {
      box = random_polygon(rng, 2);
    }
    ConcavePL f = m == 1 ? random_concave_1d(rng, box.min_coord(0), box.max_coord(0), 4) : random_concave_2d(rng, box, 3);
    ++r.instances;
    ConcavePL g = dual_of_slice(slice_of_dual(f));
    bool ok = g.vertices().size() == f.vertices().size();
    for (const auto& u : box.lattice_points())
      if (g(u) != f(u)) ok = false;

    // tropical side: random terms, pruned through the dual, agree pointwise
    std::vector<TropicalTerm> terms;
    for (const auto& u : box.lattice_points())
      if (uniform(rng, 0, 2) > 0) terms.push_back({to_qvec(u), Rational(uniform(rng, -4, 4))});
    for (const auto& v : box.vertices()) terms.push_back({to_qvec(v), Rational(uniform(rng, -4, 4))});
    SupportFunctionSlice h(m, terms);
    SupportFunctionSlice h2 = h.pruned();
    for (int j = 0; j < 10; ++j) {
      QVec v;
      for (int c = 0; c < m; ++c) v.push_back(Rational(uniform(rng, -12, 12), uniform(rng, 1, 4)));
      if (h(v) != h2(v)) ok = false;
    }
    if (!ok) r.fail(f.to_string() + " vs " + g.to_string());
  }
  return r;
}

CheckResult polarization(int n, std::uint64_t seed) {
  Rng rng(seed);
  CheckResult r;
  for (int i = 0; i < n; ++i) {
    int m = 1 + i % 2;
    Curve Y = Curve::projective_line(7);
    HStar h = random_hstar(rng, Y, m, 3);
    ++r.instances;
    std::vector<HStar> hs(static_cast<std::size_t>(m + 1), h);
    Rational mv = mixed_volume(hs), v = volume(h);
    if (mv != v) r.fail(str(h) + ": mixed " + mv.to_string() + " vol " + v.to_string());
  }
  return r;
}

CheckResult point_divisor_invariance(int n, std::uint64_t seed) {
  Rng rng(seed);
  CheckResult r;
  for (int i = 0; i < n; ++i) {
    Curve Y = random_curve(rng, {5, 7, 11});
    HStar h = random_hstar(rng, Y, 1, 3);
    auto pts = rational_points(Y);
    CurvePoint P = pts[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(pts.size()) - 1))];
    ++r.instances;
    Rational lhs = Rational(2) * mixed_volume({h, point_divisor_dual(1, P)});
    if (lhs != h.box.volume()) r.fail(str(h) + " P=" + P.to_string() + ": " + lhs.to_string());
  }
  return r;
}

CheckResult distance_sandwich(int n, std::uint64_t seed) {
  Rng rng(seed);
  CheckResult r;
  int attempts = 0;
  while (r.instances < n && attempts < 200000) {
    ++attempts;
    u32 q = uniform(rng, 0, 1) ? 3 : 5;
    Curve Y = q == 5 && uniform(rng, 0, 2) == 0 ? random_curve(rng, {5}) : Curve::projective_line(q);
    int m = uniform(rng, 0, 3) == 0 ? 2 : 1;
    DivisorialPolytope dp{Y, random_hstar(rng, Y, m, 2)};
    if (!validate(dp).ok) continue;
    EvaluationSetup s{dp, {}, 0};
    for (const auto& P : rational_points(Y))
      if (!dp.h.slices.count(P)) s.points.push_back(P);
    if (s.points.empty()) continue;
    long long l = static_cast<long long>(s.points.size());
    EvaluationCode C = build_code(s);
    if (C.k < 1 || C.k > 7) continue;
    ++r.instances;
    DistanceResult R = d_exact(C.G);
    long long lo = m == 1 ? d_lower_surface(dp.h, q, l).d : d_lower_general(dp.h, q, l);
    long long hi = d_upper(dp, q, l).d;
    if (!(lo <= R.d && R.d <= hi))
      r.fail(Y.describe() + " q=" + std::to_string(q) + " " + str(dp.h) + ": " + std::to_string(lo) + " <= " +
             std::to_string(R.d) + " <= " + std::to_string(hi));
  }
  return r;
}

RuledSweep ruled_sweep(int n, std::uint64_t seed) {
  Rng rng(seed);
  RuledSweep out;
  const std::vector<u32> primes{5, 7, 11, 13};
  while (out.closed_forms.instances < n) {
    u32 q = primes[static_cast<std::size_t>(uniform(rng, 0, 3))];
    bool ell = uniform(rng, 0, 1) == 1;
    Curve Y = ell ? Curve::elliptic(q, 0, 3) : Curve::projective_line(q);
    const long long g = Y.genus();
    long long a = uniform(rng, 0, std::min<long long>(q - 2, 4));
    long long alpha = uniform(rng, 0, 2);
    long long b = uniform(rng, g, g + 3);
    long long points = static_cast<long long>(rational_points(Y).size()) - 1;
    long long lmin = std::max(b + a * alpha, b + a * alpha + 1 - g);
    if (lmin > points) continue;
    long long l = uniform(rng, std::max<long long>(lmin, 1), points);
    CurvePoint Q0 = CurvePoint::at_infinity();
    DivisorialPolytope dp = ruled_surface(Y, a, {{Q0, alpha, b}});
    RuledClosedForms F = ruled_closed_forms(a, alpha, b, l, q, g);
    ++out.closed_forms.instances;
    long long lam = lambda0(dp.h);
    long long dl = d_lower_surface(dp.h, q, l).d;
    long long du = d_upper(dp, q, l).d;
    long long k = graded_sections(dp).total;
    if (lam != F.lambda0 || dl != F.d_lower || du != F.d_upper || k != F.k) {
      std::ostringstream os;
      os << Y.describe() << " q=" << q << " a=" << a << " alpha=" << alpha << " b=" << b << " l=" << l << ": lambda0 "
         << lam << "/" << F.lambda0 << " d_lower " << dl << "/" << F.d_lower << " d_upper " << du << "/" << F.d_upper
         << " k " << k << "/" << F.k;
      out.closed_forms.fail(os.str());
    }

    // product-code comparison in the range l >= q + g - 1
    long long lc = uniform(rng, q + g - 1, q + g + 8);
    long long k1 = uniform(rng, 1, q - 1);
    long long tau = uniform(rng, g, lc - 1);
    Comparison c = compare_product(q, g, lc, k1, tau);
    if (!c.valid) continue;
    std::ostringstream os;
    os << "q=" << q << " g=" << g << " l=" << lc << " k1=" << k1 << " tau=" << tau << ": k_est=" << c.k_est
       << " k_T=" << c.k_tcode << " d_est=" << c.d_est << " d_T=" << c.d_tcode;
    ++out.k_holds.instances;
    ++out.d_holds.instances;
    if (!c.k_holds) out.k_holds.fail(os.str());
    if (!c.d_holds) out.d_holds.fail(os.str());
  }
  return out;
}

}  // namespace tcode::testing
