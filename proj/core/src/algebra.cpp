#include "tcode/algebra.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tcode {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(u64 n) {
  if (n < 2) return false;
  u64 d = 2;
  while (d * d <= n && n % d != 0) ++d;
  if (d * d > n) return true;
  while (n % d == 0) n /= d;
  return n == 1;
}

u32 checked_prime(long long p) {
  if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<u64>(p)))
    throw std::invalid_argument("modulus must be a prime in [2, 2^31): " + std::to_string(p));
  return static_cast<u32>(p);
}

u32 reduce_mod(long long a, u32 p) {
  long long r = a % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<u32>(r);
}

u32 pow_mod(u32 a, long long e, u32 p) {
  if (e < 0) {
    a = inv_mod(a, p);
    e = -e;
  }
  u64 r = 1 % p, b = a % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 inv_mod(u32 a, u32 p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p));
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return reduce_mod(t, p);
}

void FieldElement::check(const FieldElement& o) const {
  if (p_ != o.p_) throw std::invalid_argument("field elements with different moduli");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return FieldElement(add_mod(value_, o.value_, p_), p_);
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return FieldElement(sub_mod(value_, o.value_, p_), p_);
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return FieldElement(mul_mod(value_, o.value_, p_), p_);
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return *this * o.inverse();
}
FieldElement FieldElement::operator-() const { return FieldElement(neg_mod(value_, p_), p_); }
FieldElement FieldElement::inverse() const { return FieldElement(inv_mod(value_, p_), p_); }
FieldElement FieldElement::pow(long long e) const { return FieldElement(pow_mod(value_, e, p_), p_); }

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

u64 multiplicative_order(u32 a, u32 p) {
  a %= p;
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  u64 x = a, k = 1;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

FieldElement primitive_root(u32 p) {
  checked_prime(p);
  if (p == 2) return FieldElement(1, 2);
  std::vector<u64> factors;
  u64 n = p - 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (u32 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : factors)
      if (pow_mod(g, static_cast<long long>((p - 1) / f), p) == 1) {
        ok = false;
        break;
      }
    if (ok) return FieldElement(g, p);
  }
  throw std::logic_error("no primitive root found");
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(u32 p, std::vector<u32> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

Polynomial Polynomial::constant(u32 p, long long c) { return Polynomial(p, {reduce_mod(c, p)}); }

Polynomial Polynomial::monomial(u32 p, u32 c, std::size_t deg) {
  std::vector<u32> v(deg + 1, 0);
  v[deg] = c % p;
  return Polynomial(p, std::move(v));
}

Polynomial Polynomial::linear_root(u32 p, u32 a) { return Polynomial(p, {neg_mod(a % p, p), 1}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u32 Polynomial::eval(u32 x) const {
  u64 r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = (r * x + c_[i]) % p_;
  return static_cast<u32>(r);
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return scaled(inv_mod(lead(), p_));
}

Polynomial Polynomial::scaled(u32 s) const {
  std::vector<u32> v(c_);
  for (auto& c : v) c = mul_mod(c, s, p_);
  return Polynomial(p_, std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(p_);
  std::vector<u32> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = mul_mod(c_[i], static_cast<u32>(i % p_), p_);
  return Polynomial(p_, std::move(v));
}

int Polynomial::root_multiplicity(u32 a) const {
  if (is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
  int m = 0;
  Polynomial q = *this;
  Polynomial lin = linear_root(p_, a);
  while (true) {
    auto [d, r] = q.divmod(lin);
    if (!r.is_zero()) break;
    q = d;
    ++m;
  }
  return m;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<u32> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = add_mod(coeff(i), o.coeff(i), p_);
  return Polynomial(p_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<u32> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = sub_mod(coeff(i), o.coeff(i), p_);
  return Polynomial(p_, std::move(v));
}

Polynomial Polynomial::operator-() const { return Polynomial(p_) - *this; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial(p_);
  std::vector<u64> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] = (acc[i + j] + static_cast<u64>(c_[i]) * o.c_[j]) % p_;
  }
  std::vector<u32> v(acc.begin(), acc.end());
  return Polynomial(p_, std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(p_), *this};
  std::vector<u32> r(c_);
  std::vector<u32> q(c_.size() - d.c_.size() + 1, 0);
  u32 li = inv_mod(d.lead(), p_);
  for (std::size_t k = q.size(); k-- > 0;) {
    u32 f = mul_mod(r[k + d.c_.size() - 1], li, p_);
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] = sub_mod(r[k + j], mul_mod(f, d.c_[j], p_), p_);
  }
  return {Polynomial(p_, std::move(q)), Polynomial(p_, std::move(r))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

Polynomial pow(const Polynomial& a, unsigned e) {
  Polynomial r = Polynomial::constant(a.modulus(), 1), b = a;
  while (e > 0) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// ------------------------------------------------------------------ MatrixFp

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, u32 p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

MatrixFp MatrixFp::identity(std::size_t n, u32 p) {
  MatrixFp m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

MatrixFp MatrixFp::from_rows(const std::vector<std::vector<long long>>& rows, u32 p) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  MatrixFp m(rows.size(), c, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = reduce_mod(rows[i][j], p);
  }
  return m;
}

MatrixFp MatrixFp::transpose() const {
  MatrixFp t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

MatrixFp MatrixFp::operator*(const MatrixFp& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix shape mismatch");
  MatrixFp r(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      u32 a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) = add_mod(r.at(i, j), mul_mod(a, o.at(k, j), p_), p_);
    }
  return r;
}

void MatrixFp::append_row(const std::vector<u32>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (u32 v : r) data_.push_back(v % p_);
  ++rows_;
}

MatrixFp MatrixFp::select_rows(const std::vector<std::size_t>& idx) const {
  MatrixFp m(idx.size(), cols_, p_);
  for (std::size_t i = 0; i < idx.size(); ++i) std::copy(row(idx[i]), row(idx[i]) + cols_, m.row(i));
  return m;
}

RowReduction rank_and_rref(const MatrixFp& m) {
  RowReduction out;
  out.rref = m;
  MatrixFp& a = out.rref;
  const u32 p = a.modulus();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    u32 inv = inv_mod(a.at(r, c), p);
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = mul_mod(a.at(r, j), inv, p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      u32 f = a.at(i, c);
      u32* ri = a.row(i);
      const u32* rr = a.row(r);
      for (std::size_t j = c; j < a.cols(); ++j) ri[j] = sub_mod(ri[j], mul_mod(f, rr[j], p), p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const MatrixFp& m) { return rank_and_rref(m).rank; }

MatrixFp kernel(const MatrixFp& m) {
  RowReduction rr = rank_and_rref(m);
  const u32 p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  MatrixFp k(0, m.cols(), p);
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<u32> v(m.cols(), 0);
    v[f] = 1 % p;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = neg_mod(rr.rref.at(i, f), p);
    k.append_row(v);
  }
  return k;
}

// ------------------------------------------------------------------ Rational

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

Rational Rational::operator/(const Rational& o) const {
  if (o.q_ == 0) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(q_ / o.q_));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

long long Rational::floor_ll() const {
  mpz_class f = floor();
  if (!f.fits_slong_p()) throw std::overflow_error("rational floor out of range");
  return f.get_si();
}

long long Rational::to_ll() const {
  if (!is_integer()) throw std::domain_error("rational is not an integer: " + to_string());
  return floor_ll();
}

std::string Rational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace tcode
