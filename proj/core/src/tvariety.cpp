#include "tcode/tvariety.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcode {

namespace {

bool domain_matches(const ConcavePL& f, const LatticePolytope& box) {
  std::vector<QVec> bv;
  for (const auto& v : box.vertices()) bv.push_back(to_qvec(v));
  std::vector<QVec> fv = f.domain_vertices();
  if (box.rank() == 1) {
    Rational lo = fv.front()[0], hi = fv.back()[0];
    return lo == Rational(box.min_coord(0)) && hi == Rational(box.max_coord(0));
  }
  return fv == bv;
}

bool has_principal_multiple(const Curve& Y, const DivisorQ& D) {
  mpz_class L = 1;
  for (const auto& [P, c] : D.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.den().get_mpz_t());
  long long bound = Y.is_elliptic() ? static_cast<long long>(rational_points(Y).size()) : 1;
  for (long long j = 1; j <= bound; ++j) {
    DivisorZ Z;
    for (const auto& [P, c] : D.terms()) {
      Rational k = c * Rational(mpz_class(L * static_cast<long>(j)), mpz_class(1));
      Z[P] = k.to_ll();
    }
    if (is_principal(Y, Z)) return true;
  }
  return false;
}

}  // namespace

ValidationReport validate(const DivisorialPolytope& dp) {
  ValidationReport r;
  const HStar& h = dp.h;
  auto fail = [&](int c, const std::string& msg) {
    if (r.ok) {
      r.ok = false;
      r.failed_condition = c;
      r.message = msg;
    }
  };
  for (const auto& [P, f] : h.slices) {
    if (!dp.curve.contains(P)) fail(3, "point " + P.to_string() + " is not on the curve");
    if (f.rank() != h.rank()) fail(3, "slice at " + P.to_string() + " has the wrong rank");
    else if (!domain_matches(f, h.box)) fail(3, "slice at " + P.to_string() + " is not defined on the box");
  }
  if (!r.ok) return r;
  for (const auto& u : h.box.vertices()) {
    Rational d = h.degree_at(to_qvec(u));
    if (d < 0) {
      fail(1, "deg h*(u) = " + d.to_string() + " < 0 at vertex " + to_string(u));
    } else if (d == 0 && !has_principal_multiple(dp.curve, h.at(to_qvec(u)))) {
      fail(2, "no multiple of h*(u) is principal at vertex " + to_string(u));
    }
  }
  for (const auto& [P, f] : h.slices)
    if (!f.has_integral_vertices()) fail(3, "slice at " + P.to_string() + " has a non-lattice graph vertex");
  r.notes.push_back("over a finite field every degree-0 divisor has a principal multiple");
  if (r.ok) r.message = "ok";
  return r;
}

long long mu_of(const QVec& v) {
  mpz_class L = 1;
  for (const auto& x : v) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.den().get_mpz_t());
  return L.get_si();
}

TWeilDivisor weil_divisor(const DivisorialPolytope& dp) {
  const HStar& h = dp.h;
  TWeilDivisor W;
  for (const auto& n : h.box.inward_normals()) {
    RayTerm t;
    t.normal = n;
    QVec nq = to_qvec(n);
    t.coeff = -h.box.support(nq).to_ll();
    Rational s;
    for (const auto& [P, f] : h.slices) {
      if (f.is_zero()) continue;
      Rational best;
      bool first = true;
      for (const auto& pc : f.pieces()) {
        Rational x = dot(pc.alpha, nq);
        if (first || x > best) best = x;
        first = false;
      }
      s += best;
    }
    t.contracted = s > 0;
    W.rays.push_back(t);
  }
  for (const auto& [P, f] : h.slices) {
    if (f.is_zero()) continue;
    for (const auto& pc : f.pieces()) {
      VertexTerm t;
      t.point = P;
      t.v = pc.alpha;
      t.mu = mu_of(pc.alpha);
      t.h_value = -pc.beta;
      t.coeff = Rational(t.mu) * pc.beta;
      W.vertices.push_back(t);
    }
  }
  return W;
}

std::string TWeilDivisor::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& r : rays) {
    if (!first) os << " + ";
    first = false;
    os << r.coeff << "*D_ray" << tcode::to_string(r.normal);
  }
  for (const auto& v : vertices) {
    if (!first) os << " + ";
    first = false;
    os << v.coeff << "*D_(" << v.point.to_string() << "," << tcode::to_string(v.v) << ")";
  }
  return first ? "0" : os.str();
}

bool is_semiample(const DivisorialPolytope& dp) {
  for (const auto& u : dp.h.box.vertices()) {
    Rational d = dp.h.degree_at(to_qvec(u));
    if (d < 0) return false;
    if (d == 0 && !has_principal_multiple(dp.curve, dp.h.at(to_qvec(u)))) return false;
  }
  return true;
}

bool is_ample(const DivisorialPolytope& dp) {
  if (!is_semiample(dp)) return false;
  for (const auto& [P, f] : dp.h.slices)
    if (!f.strictly_concave()) return false;
  for (const auto& u : dp.h.box.vertices())
    if (dp.h.degree_at(to_qvec(u)) <= 0) return false;
  return true;
}

GradedSections graded_sections(const DivisorialPolytope& dp) {
  GradedSections G;
  for (const auto& u : dp.h.box.lattice_points()) {
    GradedPiece piece;
    piece.u = u;
    piece.D = dp.h.floor_at(u);
    piece.basis = riemann_roch_basis(dp.curve, piece.D);
    G.total += static_cast<long long>(piece.basis.size());
    G.pieces.push_back(std::move(piece));
  }
  return G;
}

namespace {

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

}  // namespace

Rational self_intersection(const DivisorialPolytope& dp) { return factorial(dp.rank() + 1) * volume(dp.h); }

Rational intersection(const std::vector<HStar>& hs) {
  if (hs.empty()) throw std::invalid_argument("intersection of no divisors");
  int m = hs[0].rank();
  if (static_cast<int>(hs.size()) != m + 1) throw std::invalid_argument("intersection needs rank+1 divisors");
  return factorial(m + 1) * mixed_volume(hs);
}

std::string LinearInGenus::to_string() const {
  std::string s = std::to_string(constant);
  if (coefficient >= 0)
    s += "+" + std::to_string(coefficient) + "g";
  else
    s += std::to_string(coefficient) + "g";
  return s;
}

LinearInGenus genus_of_section(const DivisorialPolytope& dp) {
  if (dp.rank() != 1) throw std::invalid_argument("genus formula is available for surfaces only");
  long long vb = dp.h.box.volume().to_ll();
  LinearInGenus r;
  r.constant = inn(dp.h) + 1 - vb;
  r.coefficient = vb;
  r.value = r.constant + r.coefficient * dp.curve.genus();
  return r;
}

LinearInGenus euler_characteristic(const DivisorialPolytope& dp) {
  if (dp.rank() != 1) throw std::invalid_argument("Euler characteristic formula is available for surfaces only");
  auto pts = dp.h.box.lattice_points();
  long long N = static_cast<long long>(pts.size());
  long long s = sharp(dp.h);
  LinearInGenus r;
  r.constant = s + N;
  r.coefficient = -N;
  const long long g = dp.curve.genus();
  r.value = s - (g - 1) * N;
  long long direct = 0;
  for (const auto& u : pts) direct += dp.h.floor_degree_at(u) + 1 - g;
  if (direct != r.value) throw std::logic_error("Euler characteristic cross-check failed");
  return r;
}

}  // namespace tcode
