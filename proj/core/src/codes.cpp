#include "tcode/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tcode {

bool admissible_at(const HStar& h, const CurvePoint& P, AffineSliceData* out) {
  auto it = h.slices.find(P);
  AffineSliceData d;
  d.v.assign(static_cast<std::size_t>(h.rank()), 0);
  if (it != h.slices.end()) {
    QVec alpha;
    Rational beta;
    if (!it->second.is_affine(&alpha, &beta)) return false;
    for (const auto& x : alpha)
      if (!x.is_integer()) return false;
    if (!beta.is_integer()) return false;
    for (std::size_t i = 0; i < alpha.size(); ++i) d.v[i] = alpha[i].to_ll();
    d.c = beta.to_ll();
  }
  if (out) *out = d;
  return true;
}

std::vector<CurvePoint> admissible_points(const DivisorialPolytope& dp) {
  std::vector<CurvePoint> out;
  for (const auto& P : rational_points(dp.curve))
    if (admissible_at(dp.h, P)) out.push_back(P);
  return out;
}

namespace {

long long dotz(const ZVec& a, const ZVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

u32 mod_exp(long long e, u32 q) {
  long long r = e % static_cast<long long>(q - 1);
  return static_cast<u32>(r < 0 ? r + (q - 1) : r);
}

// exponent vectors of (F_q^*)^m in lexicographic order
std::vector<ZVec> torus_exponents(int m, u32 q) {
  std::vector<ZVec> out;
  ZVec e(static_cast<std::size_t>(m), 0);
  if (q < 2) return out;
  while (true) {
    out.push_back(e);
    int i = m - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == static_cast<long long>(q) - 2) e[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<u32> generator_powers(u32 q, u32 g) {
  std::vector<u32> pw(q - 1);
  u32 x = 1;
  for (u32 i = 0; i + 1 < q; ++i) {
    pw[i] = x;
    x = mul_mod(x, g, q);
  }
  return pw;
}

}  // namespace

EvaluationCode build_code(const EvaluationSetup& s) {
  const DivisorialPolytope& dp = s.dp;
  const u32 q = dp.curve.modulus();
  const int m = dp.rank();
  u32 g = s.generator ? s.generator : primitive_root(q).value();
  if (multiplicative_order(g, q) != q - 1) throw std::invalid_argument("generator is not a primitive root");
  std::vector<AffineSliceData> data;
  for (const auto& P : s.points) {
    if (!dp.curve.contains(P)) throw std::invalid_argument("evaluation point not on curve: " + P.to_string());
    AffineSliceData d;
    if (!admissible_at(dp.h, P, &d))
      throw std::invalid_argument("inadmissible evaluation point " + P.to_string() + ": slice is not affine and integral");
    data.push_back(d);
  }
  auto pw = generator_powers(q, g);
  auto tor = torus_exponents(m, q);
  GradedSections sec = graded_sections(dp);

  EvaluationCode C;
  C.n = s.points.size() * tor.size();
  C.rows = static_cast<std::size_t>(sec.total);
  C.G = MatrixFp(C.rows, C.n, q);
  std::size_t r = 0;
  for (const auto& piece : sec.pieces) {
    for (const auto& f : piece.basis) {
      C.row_weights.push_back(piece.u);
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        long long twist = dotz(piece.u, data[i].v) + data[i].c;
        u32 val = twisted_evaluate(f, s.points[i], twist).value();
        for (std::size_t j = 0; j < tor.size(); ++j) {
          u32 tu = val == 0 ? 0 : pw[mod_exp(dotz(tor[j], piece.u), q)];
          C.G.at(r, i * tor.size() + j) = mul_mod(val, tu, q);
        }
      }
      ++r;
    }
  }
  C.k = rank(C.G);
  C.injective = C.k == C.rows;
  return C;
}

KBounds k_bounds(const DivisorialPolytope& dp) {
  KBounds K;
  const long long g = dp.curve.genus();
  auto pts = dp.h.box.lattice_points();
  long long N = static_cast<long long>(pts.size());
  long long s = sharp(dp.h);
  K.lower = s + N * (1 - g);
  K.upper = s + N;
  K.equality_case = true;
  for (const auto& u : pts) {
    long long d = dp.h.floor_degree_at(u);
    if (d <= 2 * g - 2) K.equality_case = false;
    if (d + 1 - g > 0) {
      K.gamma_sum += d + 1 - g;
    } else {
      bool effective = true;
      for (const auto& [P, f] : dp.h.slices)
        if (f(u) < 0) effective = false;
      if (effective) K.gamma_sum += 1;
    }
  }
  return K;
}

SurfaceBound d_lower_surface(const HStar& h, long long q, long long l) {
  if (h.rank() != 1) throw std::invalid_argument("surface bound needs rank 1");
  SurfaceBound B;
  B.lambda0 = lambda0(h);
  B.d = l * (q - 1);
  B.lambda = -1;
  long long top = std::min(B.lambda0, l);
  for (long long lam = 0; lam <= top; ++lam) {
    long long v = nu(h, lam);
    B.nu.push_back(v);
    long long term = (l - lam) * std::max(0LL, q - 1 - v);
    if (B.lambda < 0 || term < B.d) {
      B.d = term;
      B.lambda = lam;
    }
  }
  if (B.lambda < 0) B.lambda = 0;
  return B;
}

long long d_lower_general(const HStar& h, long long q, long long l) {
  if (h.rank() == 1) return d_lower_surface(h, q, l).d;
  if (h.rank() != 2) throw std::invalid_argument("general bound needs rank 1 or 2");
  HStar pr = project(h);
  long long curves = l * (q - 1);
  long long dl = d_lower_surface(pr, q, l).d;
  long long lam_max = std::min(curves - dl, curves);
  long long w = std::min(h.box.width(1), q - 1);
  long long Z = lam_max * (q - 1) + (curves - lam_max) * w;
  return std::max(0LL, curves * (q - 1) - Z);
}

namespace {

std::vector<ZVec> rect_corners(const ZVec& lo, const ZVec& hi) {
  if (lo.size() == 1) return {{lo[0]}, {hi[0]}};
  return {{lo[0], lo[1]}, {lo[0], hi[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}};
}

// D = sum c_j Q_j over the nontrivial slices for the rectangle
DivisorZ rect_divisor(const HStar& h, const ZVec& lo, const ZVec& hi, std::vector<long long>* cs) {
  DivisorZ D;
  for (const auto& [P, f] : h.slices) {
    Rational best;
    bool first = true;
    for (const auto& u : rect_corners(lo, hi)) {
      Rational v = f(u);
      if (first || v < best) best = v;
      first = false;
    }
    long long c = best.floor_ll();
    if (cs) cs->push_back(c);
    if (c != 0) D[P] = c;
  }
  return D;
}

}  // namespace

UpperBound d_upper(const DivisorialPolytope& dp, long long q, long long l) {
  const HStar& h = dp.h;
  const int m = h.rank();
  const long long g = dp.curve.genus();
  UpperBound best;
  if (l < 1) return best;
  auto consider = [&](const ZVec& lo, const ZVec& hi) {
    for (const auto& u : rect_corners(lo, hi))
      if (!h.box.contains(u)) return;
    std::vector<long long> cs;
    DivisorZ D = rect_divisor(h, lo, hi, &cs);
    long long sc = degree(D);
    long long r0;
    if (sc - g >= 0)
      r0 = std::min(sc - g, l - 1);
    else if (riemann_roch_dimension(dp.curve, D) >= 1)
      r0 = 0;
    else
      return;
    long long bound = l - r0;
    for (int i = 0; i < m; ++i) bound *= (q - 1 - (hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)]));
    if (!best.found || bound < best.d) {
      best.found = true;
      best.d = bound;
      best.lo = lo;
      best.hi = hi;
      best.r0 = r0;
      best.c = cs;
    }
  };
  if (m == 1) {
    for (long long s = h.box.min_coord(0); s <= h.box.max_coord(0); ++s)
      for (long long t = s; t <= h.box.max_coord(0) && t - s <= q - 2; ++t) consider({s}, {t});
  } else {
    long long x0 = h.box.min_coord(0), x1 = h.box.max_coord(0), y0 = h.box.min_coord(1), y1 = h.box.max_coord(1);
    for (long long a = x0; a <= x1; ++a)
      for (long long b = a; b <= x1 && b - a <= q - 2; ++b)
        for (long long c = y0; c <= y1; ++c)
          for (long long d = c; d <= y1 && d - c <= q - 2; ++d) consider({a, c}, {b, d});
  }
  if (!best.found) {
    long long n = l;
    for (int i = 0; i < m; ++i) n *= (q - 1);
    best.d = n;
  }
  return best;
}

long long witness_weight(const EvaluationSetup& s, const UpperBound& ub) {
  if (!ub.found) return -1;
  const DivisorialPolytope& dp = s.dp;
  const u32 q = dp.curve.modulus();
  const int m = dp.rank();
  u32 g = s.generator ? s.generator : primitive_root(q).value();
  auto pw = generator_powers(q, g);
  DivisorZ D = rect_divisor(dp.h, ub.lo, ub.hi, nullptr);
  for (long long i = 0; i < ub.r0 && i < static_cast<long long>(s.points.size()); ++i)
    D = add(D, DivisorZ{{s.points[static_cast<std::size_t>(i)], -1}});
  auto basis = riemann_roch_basis(dp.curve, D);
  if (basis.empty()) return -1;
  const FunctionFieldElement& f = basis[0];

  // coefficients of prod_i prod_{j<r_i} (chi^{e_i} - eta_j), indexed by offsets from lo
  std::vector<std::vector<u32>> factors;
  for (int i = 0; i < m; ++i) {
    long long r = ub.hi[static_cast<std::size_t>(i)] - ub.lo[static_cast<std::size_t>(i)];
    std::vector<u32> poly{1};
    for (long long j = 0; j < r; ++j) {
      u32 eta = pw[static_cast<std::size_t>(j)];
      std::vector<u32> next(poly.size() + 1, 0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] = add_mod(next[k + 1], poly[k], q);
        next[k] = sub_mod(next[k], mul_mod(poly[k], eta, q), q);
      }
      poly = next;
    }
    factors.push_back(poly);
  }
  std::vector<std::pair<ZVec, u32>> terms;
  if (m == 1) {
    for (std::size_t a = 0; a < factors[0].size(); ++a)
      if (factors[0][a]) terms.push_back({{ub.lo[0] + static_cast<long long>(a)}, factors[0][a]});
  } else {
    for (std::size_t a = 0; a < factors[0].size(); ++a)
      for (std::size_t b = 0; b < factors[1].size(); ++b) {
        u32 c = mul_mod(factors[0][a], factors[1][b], q);
        if (c) terms.push_back({{ub.lo[0] + static_cast<long long>(a), ub.lo[1] + static_cast<long long>(b)}, c});
      }
  }
  auto tor = torus_exponents(m, q);
  long long weight = 0;
  for (const auto& P : s.points) {
    AffineSliceData d;
    if (!admissible_at(dp.h, P, &d)) return -1;
    std::vector<u32> vals;
    for (const auto& [u, c] : terms) vals.push_back(mul_mod(c, twisted_evaluate(f, P, dotz(u, d.v) + d.c).value(), q));
    for (const auto& e : tor) {
      u32 acc = 0;
      for (std::size_t k = 0; k < terms.size(); ++k)
        if (vals[k]) acc = add_mod(acc, mul_mod(vals[k], pw[mod_exp(dotz(e, terms[k].first), q)], q), q);
      if (acc) ++weight;
    }
  }
  return weight;
}

BudgetExceeded::BudgetExceeded(unsigned long long n, unsigned long long b)
    : std::runtime_error("distance oracle needs " + std::to_string(n) + " projective messages, budget is " +
                         std::to_string(b)),
      needed(n),
      budget(b) {}

unsigned long long projective_classes(std::size_t k, u32 q) {
  const unsigned long long cap = std::numeric_limits<unsigned long long>::max() / 4;
  unsigned long long total = 0, pw = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += pw;
    if (total > cap) return cap;
    if (pw > cap / q) pw = cap;
    else pw *= q;
  }
  return total;
}

DistanceResult d_exact(const MatrixFp& Gin, unsigned long long budget) {
  const u32 q = Gin.modulus();
  RowReduction rr = rank_and_rref(Gin);
  const std::size_t k = rr.rank, n = Gin.cols();
  DistanceResult R;
  R.enumerator.assign(n + 1, 0);
  R.enumerator[0] = 1;
  R.classes = projective_classes(k, q);
  if (R.classes > budget) throw BudgetExceeded(R.classes, budget);
  if (k == 0) return R;
  R.d = static_cast<long long>(n) + 1;
  std::vector<u32> cw(n), digit(k);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::copy(rr.rref.row(lead), rr.rref.row(lead) + n, cw.begin());
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      std::size_t w = 0;
      for (u32 x : cw) w += x != 0;
      R.enumerator[w] += q - 1;
      R.d = std::min<long long>(R.d, static_cast<long long>(w));
      std::size_t j = k;
      while (j-- > lead + 1) {
        const u32* row = rr.rref.row(j);
        for (std::size_t c = 0; c < n; ++c) cw[c] = add_mod(cw[c], row[c], q);
        if (++digit[j] < q) break;
        digit[j] = 0;
      }
      if (j <= lead) break;
    }
  }
  return R;
}

bool is_prime_power_ll(long long n) { return n >= 2 && is_prime_power(static_cast<u64>(n)); }

long long hasse_weil_threshold(long long g) {
  // least q >= 2 with q - 2 >= g sqrt(q), then the next prime power
  long long q = 2;
  while (!((q - 2) * (q - 2) >= g * g * q)) ++q;
  while (!is_prime_power_ll(q)) ++q;
  return q;
}

HasseWeil hasse_weil_diagnostic(const DivisorialPolytope& dp, long long q) {
  HasseWeil H;
  H.g = genus_of_section(dp).value;
  H.q_threshold = hasse_weil_threshold(H.g);
  H.point_bound = static_cast<double>(q) + 1.0 + 2.0 * static_cast<double>(H.g) * std::sqrt(static_cast<double>(q));
  return H;
}

MatrixFp rs_code(u32 q, std::size_t k) {
  auto pw = generator_powers(q, primitive_root(q).value());
  MatrixFp G(k, q - 1, q);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t e = 0; e + 1 < q; ++e) G.at(j, e) = pw[(e * j) % (q - 1)];
  return G;
}

MatrixFp ag_one_point(const Curve& Y, long long tau, const CurvePoint& Q0, const std::vector<CurvePoint>& points) {
  auto basis = riemann_roch_basis(Y, DivisorZ{{Q0, tau}});
  MatrixFp G(basis.size(), points.size(), Y.modulus());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) G.at(i, j) = evaluate(basis[i], points[j]).value();
  return G;
}

MatrixFp product_code(const MatrixFp& A, const MatrixFp& B) {
  const u32 q = A.modulus();
  MatrixFp G(A.rows() * B.rows(), A.cols() * B.cols(), q);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < B.rows(); ++j)
      for (std::size_t a = 0; a < A.cols(); ++a)
        for (std::size_t b = 0; b < B.cols(); ++b) G.at(i * B.rows() + j, a * B.cols() + b) = mul_mod(A.at(i, a), B.at(j, b), q);
  return G;
}

MatrixFp toric_code(const LatticePolytope& P, u32 q) {
  auto pts = P.lattice_points();
  auto tor = torus_exponents(2, q);
  auto pw = generator_powers(q, primitive_root(q).value());
  MatrixFp G(pts.size(), tor.size(), q);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < tor.size(); ++j) G.at(i, j) = pw[mod_exp(dotz(tor[j], pts[i]), q)];
  return G;
}

Comparison compare_product(long long q, long long g, long long l, long long k1, long long tau) {
  Comparison C;
  C.q = q;
  C.g = g;
  C.l = l;
  C.k1 = k1;
  C.tau = tau;
  C.k_est = k1 * (tau - g + 1);
  C.d_est = (q - k1) * (l - tau);
  if (tau <= g - 1 || k1 < 1 || k1 > q - 1) {
    C.valid = false;
    C.note = "estimate invalid: need tau > g-1 and 1 <= k1 <= q-1";
    return C;
  }
  long long kk = k1, tt = tau;
  if (tau < k1 - 1) {
    C.swapped = true;
    kk = tau - (g - 1);
    tt = k1 + (g - 1);
  }
  C.a = kk - 1;
  C.alpha = (C.a % 2 == 0) ? 1 : 2;
  if (C.alpha * C.a > 2 * tt) {
    C.valid = false;
    C.note = "no admissible alpha";
    return C;
  }
  C.b = tt - C.alpha * C.a / 2;
  RuledClosedForms F = ruled_closed_forms(C.a, C.alpha, C.b, l, q, g);
  C.k_tcode = F.k;
  C.d_tcode = F.d_lower;
  C.k_holds = C.k_est <= C.k_tcode;
  C.d_holds = C.d_est < C.d_tcode;
  return C;
}

DivisorialPolytope ruled_surface(const Curve& Y, long long a, const std::vector<RuledTerm>& terms) {
  DivisorialPolytope dp;
  dp.curve = Y;
  dp.h.box = LatticePolytope::segment(0, a);
  for (const auto& t : terms) {
    ConcavePL f = ConcavePL::envelope(1, {{{Rational(0)}, Rational(t.b)}, {{Rational(a)}, Rational(t.alpha * a + t.b)}});
    if (!f.is_zero()) dp.h.slices[t.point] = f;
  }
  return dp;
}

RuledClosedForms ruled_closed_forms(long long a, long long alpha, long long b, long long l, long long q, long long g) {
  RuledClosedForms F;
  F.lambda0 = b + a * alpha;
  F.d_lower = std::min((l - b - a * alpha) * (q - 1), (l - b) * (q - 1 - a));
  F.d_upper = std::min((l - b - a * alpha + g) * (q - 1), (l - b + g) * (q - 1 - a));
  F.k = (a + 1) * (b + 1 - g) + alpha * a * (a + 1) / 2;
  return F;
}

}  // namespace tcode
