#pragma once

#include <cstddef>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <vector>

namespace tcode {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(u64 n);
bool is_prime_power(u64 n);

// Throws std::invalid_argument unless 2 <= p < 2^31 and p is prime.
u32 checked_prime(long long p);

inline u32 add_mod(u32 a, u32 b, u32 p) {
  u32 s = a + b;
  return s >= p ? s - p : s;
}
inline u32 sub_mod(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 neg_mod(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
inline u32 mul_mod(u32 a, u32 b, u32 p) {
  return static_cast<u32>(static_cast<u64>(a) * b % p);
}
u32 pow_mod(u32 a, long long e, u32 p);
u32 inv_mod(u32 a, u32 p);
u32 reduce_mod(long long a, u32 p);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long long v, u32 p) : value_(reduce_mod(v, p)), p_(p) {}

  u32 value() const { return value_; }
  u32 modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  bool operator==(const FieldElement& o) const { return value_ == o.value_ && p_ == o.p_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void check(const FieldElement& o) const;
  u32 value_ = 0;
  u32 p_ = 2;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

// Smallest positive generator of F_p^*; 1 for p = 2.
FieldElement primitive_root(u32 p);
u64 multiplicative_order(u32 a, u32 p);

// Dense univariate polynomial over F_p, coefficients low to high, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(u32 p) : p_(p) {}
  Polynomial(u32 p, std::vector<u32> coeffs);

  static Polynomial constant(u32 p, long long c);
  static Polynomial monomial(u32 p, u32 c, std::size_t deg);
  // x - a
  static Polynomial linear_root(u32 p, u32 a);

  u32 modulus() const { return p_; }
  const std::vector<u32>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  u32 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u32 lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  u32 eval(u32 x) const;
  Polynomial monic() const;
  Polynomial scaled(u32 s) const;
  Polynomial derivative() const;
  // multiplicity of a as a root
  int root_multiplicity(u32 a) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // (quotient, remainder); divisor must be nonzero
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  u32 p_ = 2;
  std::vector<u32> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& a, unsigned e);

class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(std::size_t rows, std::size_t cols, u32 p);
  static MatrixFp identity(std::size_t n, u32 p);
  static MatrixFp from_rows(const std::vector<std::vector<long long>>& rows, u32 p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u32 modulus() const { return p_; }

  u32& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  u32 at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const u32* row(std::size_t i) const { return data_.data() + i * cols_; }
  u32* row(std::size_t i) { return data_.data() + i * cols_; }

  MatrixFp transpose() const;
  MatrixFp operator*(const MatrixFp& o) const;
  bool operator==(const MatrixFp& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
  }
  void append_row(const std::vector<u32>& r);
  MatrixFp select_rows(const std::vector<std::size_t>& idx) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  u32 p_ = 2;
  std::vector<u32> data_;
};

struct RowReduction {
  std::size_t rank = 0;
  MatrixFp rref;
  std::vector<std::size_t> pivots;
};

RowReduction rank_and_rref(const MatrixFp& m);
std::size_t rank(const MatrixFp& m);
// Basis of {x : M x = 0}, one vector per row of the result.
MatrixFp kernel(const MatrixFp& m);

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit from integers
  Rational(long long n, long long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  // "a", "-a", "a/b"
  static Rational parse(const std::string& s);

  const mpq_class& get() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  mpz_class floor() const;
  mpz_class ceil() const;
  long long floor_ll() const;
  long long to_ll() const;  // requires integer value that fits
  double to_double() const { return q_.get_d(); }
  Rational abs() const { return Rational(::abs(q_)); }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  std::string to_string() const;

 private:
  mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tcode
