#include "tcode/curve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tcode {

std::string CurvePoint::to_string() const {
  if (infinity) return "inf";
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// --------------------------------------------------------------------- Curve

Curve Curve::projective_line(u32 p) {
  Curve Y;
  Y.kind_ = CurveKind::ProjectiveLine;
  Y.p_ = checked_prime(p);
  return Y;
}

Curve Curve::elliptic(u32 p, long long A, long long B) {
  checked_prime(p);
  if (p < 5) throw std::invalid_argument("short Weierstrass curves need p >= 5");
  Curve Y;
  Y.kind_ = CurveKind::Elliptic;
  Y.p_ = p;
  Y.A_ = reduce_mod(A, p);
  Y.B_ = reduce_mod(B, p);
  u32 a3 = mul_mod(4, pow_mod(Y.A_, 3, p), p);
  u32 b2 = mul_mod(27, pow_mod(Y.B_, 2, p), p);
  if (add_mod(a3, b2, p) == 0) throw std::invalid_argument("singular curve: 4A^3 + 27B^2 = 0");
  return Y;
}

Polynomial Curve::rhs() const {
  if (kind_ == CurveKind::ProjectiveLine) return Polynomial(p_);
  return Polynomial(p_, {B_, A_, 0, 1});
}

bool Curve::contains(const CurvePoint& P) const {
  if (P.infinity) return true;
  if (P.x >= p_) return false;
  if (kind_ == CurveKind::ProjectiveLine) return P.y == 0;
  if (P.y >= p_) return false;
  return mul_mod(P.y, P.y, p_) == rhs().eval(P.x);
}

std::string Curve::describe() const {
  if (kind_ == CurveKind::ProjectiveLine) return "p1";
  return "elliptic A=" + std::to_string(A_) + " B=" + std::to_string(B_);
}

bool sqrt_mod(u32 a, u32 p, u32& root) {
  a %= p;
  if (a == 0 || p == 2) {
    root = a;
    return true;
  }
  if (pow_mod(a, (p - 1) / 2, p) != 1) return false;
  u32 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u32 z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  u32 m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    u32 i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    u32 b = c;
    for (u32 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  root = std::min(r, p - r);
  return true;
}

std::vector<CurvePoint> rational_points(const Curve& Y) {
  const u32 p = Y.modulus();
  std::vector<CurvePoint> pts;
  if (!Y.is_elliptic()) {
    for (u32 x = 0; x < p; ++x) pts.push_back(CurvePoint::affine(x));
  } else {
    Polynomial F = Y.rhs();
    for (u32 x = 0; x < p; ++x) {
      u32 r = F.eval(x), s;
      if (r == 0) {
        pts.push_back(CurvePoint::affine(x, 0));
      } else if (sqrt_mod(r, p, s)) {
        pts.push_back(CurvePoint::affine(x, s));
        pts.push_back(CurvePoint::affine(x, p - s));
      }
    }
  }
  pts.push_back(CurvePoint::at_infinity());
  return pts;
}

CurvePoint group_neg(const Curve& Y, const CurvePoint& P) {
  if (P.infinity) return P;
  return CurvePoint::affine(P.x, neg_mod(P.y, Y.modulus()));
}

CurvePoint group_add(const Curve& Y, const CurvePoint& P, const CurvePoint& Q) {
  if (!Y.is_elliptic()) throw std::invalid_argument("group law needs an elliptic curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const u32 p = Y.modulus();
  u32 lambda;
  if (P.x == Q.x) {
    if (add_mod(P.y, Q.y, p) == 0) return CurvePoint::at_infinity();
    u32 num = add_mod(mul_mod(3, mul_mod(P.x, P.x, p), p), Y.a(), p);
    lambda = mul_mod(num, inv_mod(add_mod(P.y, P.y, p), p), p);
  } else {
    lambda = mul_mod(sub_mod(Q.y, P.y, p), inv_mod(sub_mod(Q.x, P.x, p), p), p);
  }
  u32 x3 = sub_mod(sub_mod(mul_mod(lambda, lambda, p), P.x, p), Q.x, p);
  u32 y3 = sub_mod(mul_mod(lambda, sub_mod(P.x, x3, p), p), P.y, p);
  return CurvePoint::affine(x3, y3);
}

CurvePoint group_mul(const Curve& Y, long long n, const CurvePoint& P) {
  CurvePoint base = n < 0 ? group_neg(Y, P) : P;
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  CurvePoint acc = CurvePoint::at_infinity();
  while (k > 0) {
    if (k & 1ULL) acc = group_add(Y, acc, base);
    base = group_add(Y, base, base);
    k >>= 1;
  }
  return acc;
}

// ------------------------------------------------------------------ Divisors

void DivisorQ::add(const CurvePoint& P, const Rational& c) {
  Rational v = coeff(P) + c;
  if (v == 0)
    terms_.erase(P);
  else
    terms_[P] = v;
}

Rational DivisorQ::coeff(const CurvePoint& P) const {
  auto it = terms_.find(P);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational DivisorQ::degree() const {
  Rational d;
  for (const auto& [P, c] : terms_) d += c;
  return d;
}

DivisorZ DivisorQ::floor() const {
  DivisorZ D;
  for (const auto& [P, c] : terms_) {
    long long f = c.floor_ll();
    if (f != 0) D[P] = f;
  }
  return D;
}

DivisorQ DivisorQ::operator+(const DivisorQ& o) const {
  DivisorQ r = *this;
  for (const auto& [P, c] : o.terms_) r.add(P, c);
  return r;
}

std::string DivisorQ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [P, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << P.to_string();
  }
  return os.str();
}

long long degree(const DivisorZ& D) {
  long long d = 0;
  for (const auto& [P, n] : D) d += n;
  return d;
}

DivisorZ add(const DivisorZ& a, const DivisorZ& b) {
  DivisorZ r = a;
  for (const auto& [P, n] : b) {
    long long v = (r.count(P) ? r[P] : 0) + n;
    if (v == 0)
      r.erase(P);
    else
      r[P] = v;
  }
  return r;
}

std::string to_string(const DivisorZ& D) {
  if (D.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [P, n] : D) {
    if (n == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << n << "*" << P.to_string();
  }
  return first ? "0" : os.str();
}

bool is_principal(const Curve& Y, const DivisorZ& D) {
  for (const auto& [P, n] : D)
    if (!Y.contains(P)) throw std::invalid_argument("divisor point not on curve: " + P.to_string());
  if (degree(D) != 0) return false;
  if (!Y.is_elliptic()) return true;
  CurvePoint s = CurvePoint::at_infinity();
  for (const auto& [P, n] : D) s = group_add(Y, s, group_mul(Y, n, P));
  return s.infinity;
}

// ------------------------------------------------------- FunctionFieldElement

FunctionFieldElement::FunctionFieldElement(const Curve& Y, Polynomial a, Polynomial b, Polynomial c)
    : Y_(Y), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (c_.is_zero()) throw std::domain_error("function field element with zero denominator");
  if (!Y_.is_elliptic() && !b_.is_zero()) throw std::invalid_argument("y does not exist on P^1");
  normalize();
}

void FunctionFieldElement::normalize() {
  const u32 p = Y_.modulus();
  if (a_.is_zero() && b_.is_zero()) {
    a_ = Polynomial(p);
    b_ = Polynomial(p);
    c_ = Polynomial::constant(p, 1);
    return;
  }
  Polynomial g = gcd(gcd(a_, b_), c_);
  if (g.degree() > 0) {
    a_ = a_ / g;
    b_ = b_ / g;
    c_ = c_ / g;
  }
  u32 s = inv_mod(c_.lead(), p);
  a_ = a_.scaled(s);
  b_ = b_.scaled(s);
  c_ = c_.scaled(s);
}

FunctionFieldElement FunctionFieldElement::constant(const Curve& Y, long long v) {
  u32 p = Y.modulus();
  return FunctionFieldElement(Y, Polynomial::constant(p, v), Polynomial(p), Polynomial::constant(p, 1));
}

FunctionFieldElement FunctionFieldElement::x(const Curve& Y) {
  u32 p = Y.modulus();
  return FunctionFieldElement(Y, Polynomial::monomial(p, 1, 1), Polynomial(p), Polynomial::constant(p, 1));
}

FunctionFieldElement FunctionFieldElement::y(const Curve& Y) {
  u32 p = Y.modulus();
  return FunctionFieldElement(Y, Polynomial(p), Polynomial::constant(p, 1), Polynomial::constant(p, 1));
}

FunctionFieldElement FunctionFieldElement::from_polynomial(const Curve& Y, const Polynomial& a) {
  u32 p = Y.modulus();
  return FunctionFieldElement(Y, a, Polynomial(p), Polynomial::constant(p, 1));
}

FunctionFieldElement FunctionFieldElement::operator+(const FunctionFieldElement& o) const {
  if (Y_ != o.Y_) throw std::invalid_argument("elements of different function fields");
  return FunctionFieldElement(Y_, a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_);
}

FunctionFieldElement FunctionFieldElement::operator-(const FunctionFieldElement& o) const {
  return *this + o.scaled(Y_.modulus() - 1);
}

FunctionFieldElement FunctionFieldElement::operator*(const FunctionFieldElement& o) const {
  if (Y_ != o.Y_) throw std::invalid_argument("elements of different function fields");
  Polynomial F = Y_.rhs();
  return FunctionFieldElement(Y_, a_ * o.a_ + b_ * o.b_ * F, a_ * o.b_ + b_ * o.a_, c_ * o.c_);
}

FunctionFieldElement FunctionFieldElement::scaled(u32 s) const {
  return FunctionFieldElement(Y_, a_.scaled(s), b_.scaled(s), c_);
}

FunctionFieldElement FunctionFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero function");
  Polynomial N = a_ * a_ - b_ * b_ * Y_.rhs();
  return FunctionFieldElement(Y_, c_ * a_, -(c_ * b_), N);
}

FunctionFieldElement FunctionFieldElement::operator/(const FunctionFieldElement& o) const {
  return *this * o.inverse();
}

std::string FunctionFieldElement::to_string() const {
  std::string num;
  if (b_.is_zero())
    num = a_.to_string();
  else if (a_.is_zero())
    num = "(" + b_.to_string() + ")*y";
  else
    num = a_.to_string() + " + (" + b_.to_string() + ")*y";
  if (c_.degree() == 0) return num;
  return "(" + num + ")/(" + c_.to_string() + ")";
}

// ------------------------------------------------------------ Laurent series

u32 LaurentSeries::coeff(int e) const {
  if (e < lo) return 0;
  if (e >= prec) throw std::logic_error("series coefficient beyond known precision");
  std::size_t i = static_cast<std::size_t>(e - lo);
  return i < c.size() ? c[i] : 0;
}

int LaurentSeries::valuation() const {
  for (std::size_t i = 0; i < c.size(); ++i) {
    int e = lo + static_cast<int>(i);
    if (e >= prec) break;
    if (c[i] != 0) return e;
  }
  return prec;
}

namespace {

constexpr int kExact = LaurentSeries::kExact;

LaurentSeries exact_series(u32 p, int lo, std::vector<u32> c) {
  LaurentSeries s;
  s.p = p;
  s.lo = lo;
  s.prec = kExact;
  s.c = std::move(c);
  return s;
}

void trim(LaurentSeries& s) {
  long long len = static_cast<long long>(s.prec) - s.lo;
  if (len < 0) len = 0;
  if (static_cast<long long>(s.c.size()) > len) s.c.resize(static_cast<std::size_t>(len));
  while (!s.c.empty() && s.c.back() == 0) s.c.pop_back();
}

LaurentSeries s_add(const LaurentSeries& A, const LaurentSeries& B) {
  LaurentSeries r;
  r.p = A.p;
  r.lo = std::min(A.lo, B.lo);
  r.prec = std::min(A.prec, B.prec);
  int hi = std::max(A.lo + static_cast<int>(A.c.size()), B.lo + static_cast<int>(B.c.size()));
  hi = std::min(hi, r.prec);
  for (int e = r.lo; e < hi; ++e) {
    u32 a = (e >= A.lo && e - A.lo < static_cast<int>(A.c.size())) ? A.c[e - A.lo] : 0;
    u32 b = (e >= B.lo && e - B.lo < static_cast<int>(B.c.size())) ? B.c[e - B.lo] : 0;
    r.c.push_back(add_mod(a, b, r.p));
  }
  trim(r);
  return r;
}

LaurentSeries s_mul(const LaurentSeries& A, const LaurentSeries& B) {
  LaurentSeries r;
  r.p = A.p;
  r.lo = A.lo + B.lo;
  int va = A.valuation(), vb = B.valuation();
  long long pr = std::min(static_cast<long long>(A.prec) + vb, static_cast<long long>(B.prec) + va);
  r.prec = static_cast<int>(std::min<long long>(pr, kExact));
  if (A.c.empty() || B.c.empty()) return r;
  long long len = std::min<long long>(static_cast<long long>(A.c.size() + B.c.size() - 1),
                                      static_cast<long long>(r.prec) - r.lo);
  if (len <= 0) return r;
  std::vector<u64> acc(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; i < A.c.size() && static_cast<long long>(i) < len; ++i) {
    if (A.c[i] == 0) continue;
    for (std::size_t j = 0; j < B.c.size() && static_cast<long long>(i + j) < len; ++j)
      acc[i + j] = (acc[i + j] + static_cast<u64>(A.c[i]) * B.c[j]) % r.p;
  }
  r.c.assign(acc.begin(), acc.end());
  trim(r);
  return r;
}

// At most max_rel terms of the inverse are produced.
LaurentSeries s_inv(const LaurentSeries& A, int max_rel) {
  int v = A.valuation();
  if (v >= A.prec) throw std::domain_error("series inverse: valuation not determined");
  long long rel = std::min<long long>(static_cast<long long>(A.prec) - v, max_rel);
  const u32 p = A.p;
  std::vector<u32> u(static_cast<std::size_t>(rel), 0);
  for (long long i = 0; i < rel; ++i) {
    std::size_t idx = static_cast<std::size_t>(v - A.lo + i);
    u[static_cast<std::size_t>(i)] = idx < A.c.size() ? A.c[idx] : 0;
  }
  std::vector<u32> w(static_cast<std::size_t>(rel), 0);
  u32 u0i = inv_mod(u[0], p);
  w[0] = u0i;
  for (long long k = 1; k < rel; ++k) {
    u64 s = 0;
    for (long long i = 1; i <= k; ++i)
      s = (s + static_cast<u64>(u[static_cast<std::size_t>(i)]) * w[static_cast<std::size_t>(k - i)]) % p;
    w[static_cast<std::size_t>(k)] = mul_mod(neg_mod(static_cast<u32>(s), p), u0i, p);
  }
  LaurentSeries r;
  r.p = p;
  r.lo = -v;
  r.prec = static_cast<int>(-v + rel);
  r.c = std::move(w);
  trim(r);
  return r;
}

LaurentSeries s_poly(const Polynomial& f, const LaurentSeries& X) {
  const u32 p = X.p;
  LaurentSeries acc = exact_series(p, 0, {});
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = s_mul(acc, X);
    if (f.coeffs()[i] != 0) acc = s_add(acc, exact_series(p, 0, {f.coeffs()[i]}));
  }
  return acc;
}

// F(x0 + t) as coefficients in t
std::vector<u32> shifted_coeffs(const Polynomial& F, u32 x0) {
  const u32 p = F.modulus();
  Polynomial shift(p, {x0, 1});
  Polynomial acc(p);
  for (std::size_t i = F.coeffs().size(); i-- > 0;) acc = acc * shift + Polynomial::constant(p, F.coeffs()[i]);
  std::vector<u32> c = acc.coeffs();
  return c;
}

}  // namespace

LocalExpansion local_expansion(const Curve& Y, const CurvePoint& P, int relative) {
  if (!Y.contains(P)) throw std::invalid_argument("point not on curve: " + P.to_string());
  if (relative < 1) relative = 1;
  const u32 p = Y.modulus();
  LocalExpansion L;
  L.point = P;
  if (!Y.is_elliptic()) {
    L.y = exact_series(p, 0, {});
    if (P.infinity) {
      L.uniformizer = Uniformizer::InverseX;
      L.x = exact_series(p, -1, {1});
    } else {
      L.uniformizer = Uniformizer::XMinusX0;
      L.x = exact_series(p, 0, {P.x, 1});
    }
    return L;
  }
  Polynomial F = Y.rhs();
  if (P.infinity) {
    // t = x/y, z = 1/x solves z = t^2 (1 + A z^2 + B z^3)
    L.uniformizer = Uniformizer::XOverY;
    int N = relative + 2;
    std::vector<u32> z(static_cast<std::size_t>(N), 0), z2(static_cast<std::size_t>(N), 0),
        z3(static_cast<std::size_t>(N), 0);
    for (int k = 0; k < N; ++k) {
      if (k >= 2) {
        u64 v = (k == 2) ? 1 : 0;
        v += static_cast<u64>(Y.a()) * z2[k - 2] % p;
        v += static_cast<u64>(Y.b()) * z3[k - 2] % p;
        z[k] = static_cast<u32>(v % p);
      }
      u64 s2 = 0, s3 = 0;
      for (int i = 0; i <= k; ++i) s2 = (s2 + static_cast<u64>(z[i]) * z[k - i]) % p;
      z2[k] = static_cast<u32>(s2);
      for (int i = 0; i <= k; ++i) s3 = (s3 + static_cast<u64>(z[i]) * z2[k - i]) % p;
      z3[k] = static_cast<u32>(s3);
    }
    LaurentSeries zs;
    zs.p = p;
    zs.lo = 0;
    zs.prec = N;
    zs.c = z;
    trim(zs);
    L.x = s_inv(zs, relative);
    L.y = L.x;
    L.y.lo -= 1;
    L.y.prec -= 1;
    return L;
  }
  if (P.y != 0) {
    L.uniformizer = Uniformizer::XMinusX0;
    L.x = exact_series(p, 0, {P.x, 1});
    std::vector<u32> G = shifted_coeffs(F, P.x);
    std::vector<u32> y(static_cast<std::size_t>(relative), 0);
    y[0] = P.y;
    u32 inv2y = inv_mod(add_mod(P.y, P.y, p), p);
    for (int k = 1; k < relative; ++k) {
      u64 s = k < static_cast<int>(G.size()) ? G[k] : 0;
      u64 sub = 0;
      for (int i = 1; i < k; ++i) sub = (sub + static_cast<u64>(y[i]) * y[k - i]) % p;
      y[k] = mul_mod(sub_mod(static_cast<u32>(s % p), static_cast<u32>(sub), p), inv2y, p);
    }
    L.y.p = p;
    L.y.lo = 0;
    L.y.prec = relative;
    L.y.c = y;
    trim(L.y);
    return L;
  }
  // y0 = 0: t = y, x = x0 + s(t) with g1 s + g2 s^2 + s^3 = t^2
  L.uniformizer = Uniformizer::Y;
  std::vector<u32> G = shifted_coeffs(F, P.x);
  u32 g1 = G.size() > 1 ? G[1] : 0, g2 = G.size() > 2 ? G[2] : 0;
  u32 g1i = inv_mod(g1, p);
  int N = relative;
  std::vector<u32> s(static_cast<std::size_t>(N), 0), s2(static_cast<std::size_t>(N), 0),
      s3(static_cast<std::size_t>(N), 0);
  for (int k = 0; k < N; ++k) {
    // s2[k], s3[k] only involve s[i] with i <= k-2
    u64 a2 = 0, a3 = 0;
    for (int i = 0; i < k; ++i) a2 = (a2 + static_cast<u64>(s[i]) * s[k - i]) % p;
    for (int i = 0; i < k; ++i) a3 = (a3 + static_cast<u64>(s[i]) * s2[k - i]) % p;
    u32 rhs = (k == 2) ? 1 : 0;
    rhs = sub_mod(rhs, mul_mod(g2, static_cast<u32>(a2), p), p);
    rhs = sub_mod(rhs, static_cast<u32>(a3), p);
    s[k] = mul_mod(rhs, g1i, p);
    u64 b2 = 0, b3 = 0;
    for (int i = 0; i <= k; ++i) b2 = (b2 + static_cast<u64>(s[i]) * s[k - i]) % p;
    s2[k] = static_cast<u32>(b2);
    for (int i = 0; i <= k; ++i) b3 = (b3 + static_cast<u64>(s[i]) * s2[k - i]) % p;
    s3[k] = static_cast<u32>(b3);
  }
  s[0] = add_mod(s[0], P.x, p);
  L.x.p = p;
  L.x.lo = 0;
  L.x.prec = N;
  L.x.c = s;
  trim(L.x);
  L.y = exact_series(p, 0, {0, 1});
  return L;
}

namespace {

LaurentSeries numerator_series(const FunctionFieldElement& f, const LocalExpansion& L) {
  LaurentSeries num = s_poly(f.a(), L.x);
  if (!f.b().is_zero()) num = s_add(num, s_mul(s_poly(f.b(), L.x), L.y));
  return num;
}

}  // namespace

LaurentSeries series_at(const FunctionFieldElement& f, const CurvePoint& P, int abs_prec) {
  const Curve& Y = f.curve();
  if (f.is_zero()) return exact_series(Y.modulus(), 0, {});
  int rel = std::max(8, abs_prec + 8);
  for (int iter = 0; iter < 16; ++iter, rel *= 2) {
    LocalExpansion L = local_expansion(Y, P, rel);
    LaurentSeries num = numerator_series(f, L);
    LaurentSeries den = s_poly(f.c(), L.x);
    if (!num.known_nonzero() || !den.known_nonzero()) continue;
    LaurentSeries r = s_mul(num, s_inv(den, rel));
    if (r.prec >= abs_prec) return r;
  }
  throw std::runtime_error("series expansion did not reach the requested precision");
}

int valuation(const FunctionFieldElement& f, const CurvePoint& P) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero function");
  const Curve& Y = f.curve();
  if (!Y.contains(P)) throw std::invalid_argument("point not on curve: " + P.to_string());
  if (!Y.is_elliptic()) {
    if (P.infinity) return f.c().degree() - f.a().degree();
    return f.a().root_multiplicity(P.x) - f.c().root_multiplicity(P.x);
  }
  if (P.infinity) {
    int v = 1 << 30;
    if (!f.a().is_zero()) v = std::min(v, -2 * f.a().degree());
    if (!f.b().is_zero()) v = std::min(v, -3 - 2 * f.b().degree());
    return v + 2 * f.c().degree();
  }
  int e = P.y == 0 ? 2 : 1;
  int vc = f.c().root_multiplicity(P.x) * e;
  for (int rel = 8;; rel *= 2) {
    LaurentSeries num = numerator_series(f, local_expansion(Y, P, rel));
    if (num.known_nonzero()) return num.valuation() - vc;
    if (rel > (1 << 20)) throw std::runtime_error("valuation search diverged");
  }
}

FieldElement twisted_evaluate(const FunctionFieldElement& f, const CurvePoint& P, long long k) {
  const u32 p = f.curve().modulus();
  if (f.is_zero()) return FieldElement(0, p);
  int v = valuation(f, P);
  if (v < -k)
    throw std::domain_error("twisted evaluation: pole of order " + std::to_string(-v) + " at " + P.to_string() +
                            " not cancelled by twist " + std::to_string(k));
  if (v > -k) return FieldElement(0, p);
  LaurentSeries s = series_at(f, P, v + 1);
  return FieldElement(s.coeff(v), p);
}

FieldElement evaluate(const FunctionFieldElement& f, const CurvePoint& P) { return twisted_evaluate(f, P, 0); }

long long riemann_roch_dimension(const Curve& Y, const DivisorZ& D) {
  long long d = degree(D);
  if (Y.genus() == 0) return std::max<long long>(0, d + 1);
  if (d >= 1) return d;
  if (d == 0) return is_principal(Y, D) ? 1 : 0;
  return 0;
}

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<FunctionFieldElement> riemann_roch_basis(const Curve& Y, const DivisorZ& D) {
  const u32 p = Y.modulus();
  for (const auto& [P, n] : D)
    if (!Y.contains(P)) throw std::invalid_argument("divisor support not rational on this curve: " + P.to_string());
  if (degree(D) < 0) return {};

  Polynomial c = Polynomial::constant(p, 1);
  long long dO = 0;
  for (const auto& [P, n] : D) {
    if (P.infinity)
      dO = n;
    else if (n > 0)
      c = c * pow(Polynomial::linear_root(p, P.x), static_cast<unsigned>(n));
  }
  const bool ell = Y.is_elliptic();
  long long budget = ell ? dO + 2LL * c.degree() : dO + c.degree();
  long long da = ell ? floor_div(budget, 2) : budget;
  long long db = ell ? floor_div(budget - 3, 2) : -1;
  std::size_t na = da >= 0 ? static_cast<std::size_t>(da + 1) : 0;
  std::size_t nb = db >= 0 ? static_cast<std::size_t>(db + 1) : 0;
  std::size_t N = na + nb;
  if (N == 0) return {};

  // constraint points: support of D plus conjugates
  std::vector<CurvePoint> cand;
  for (const auto& [P, n] : D) {
    if (P.infinity) continue;
    cand.push_back(P);
    if (ell) cand.push_back(group_neg(Y, P));
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  MatrixFp cons(0, N, p);
  for (const auto& Q : cand) {
    long long dq = D.count(Q) ? D.at(Q) : 0;
    int e = (ell && Q.y == 0) ? 2 : 1;
    long long r = static_cast<long long>(c.root_multiplicity(Q.x)) * e - dq;
    if (r <= 0) continue;
    LocalExpansion L = local_expansion(Y, Q, static_cast<int>(r));
    std::vector<LaurentSeries> cols;
    LaurentSeries xp = exact_series(p, 0, {1});
    for (std::size_t i = 0; i < std::max(na, nb); ++i) {
      if (i > 0) xp = s_mul(xp, L.x);
      if (i < na) cols.push_back(xp);
    }
    xp = exact_series(p, 0, {1});
    for (std::size_t j = 0; j < nb; ++j) {
      if (j > 0) xp = s_mul(xp, L.x);
      cols.push_back(s_mul(xp, L.y));
    }
    for (long long k = 0; k < r; ++k) {
      std::vector<u32> row(N);
      for (std::size_t j = 0; j < N; ++j) row[j] = cols[j].coeff(static_cast<int>(k));
      cons.append_row(row);
    }
  }
  MatrixFp ker;
  if (cons.rows() == 0)
    ker = MatrixFp::identity(N, p);
  else
    ker = kernel(cons);
  if (ker.rows() == 0) return {};

  auto element_of = [&](const std::vector<u32>& v) {
    std::vector<u32> ac(v.begin(), v.begin() + static_cast<long>(na));
    std::vector<u32> bc(v.begin() + static_cast<long>(na), v.end());
    return FunctionFieldElement(Y, Polynomial(p, ac), Polynomial(p, bc), c);
  };

  // echelonize by the series at the point of largest coefficient
  CurvePoint star = CurvePoint::at_infinity();
  long long best = 0;
  bool have = false;
  for (const auto& [P, n] : D)
    if (!have || n > best) {
      star = P;
      best = n;
      have = true;
    }
  long long e_lo = -best, e_hi = degree(D) - best;
  std::size_t width = static_cast<std::size_t>(e_hi - e_lo + 1);
  std::size_t k = ker.rows();
  MatrixFp aug(k, width + k, p);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<u32> v(ker.row(i), ker.row(i) + N);
    FunctionFieldElement f = element_of(v);
    LaurentSeries s = series_at(f, star, static_cast<int>(e_hi + 1));
    for (std::size_t j = 0; j < width; ++j) aug.at(i, j) = s.coeff(static_cast<int>(e_lo + static_cast<long long>(j)));
    aug.at(i, width + i) = 1;
  }
  RowReduction rr = rank_and_rref(aug);
  std::vector<FunctionFieldElement> basis;
  for (std::size_t i = rr.rank; i-- > 0;) {
    if (rr.pivots[i] >= width) throw std::logic_error("Riemann-Roch echelon lost a basis element");
    std::vector<u32> v(N, 0);
    for (std::size_t j = 0; j < k; ++j) {
      u32 w = rr.rref.at(i, width + j);
      if (w == 0) continue;
      for (std::size_t t = 0; t < N; ++t) v[t] = add_mod(v[t], mul_mod(w, ker.at(j, t), p), p);
    }
    basis.push_back(element_of(v));
  }
  return basis;
}

}  // namespace tcode
