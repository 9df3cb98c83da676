#pragma once

#include <map>
#include <string>
#include <vector>

#include "tcode/algebra.hpp"

namespace tcode {

// Affine point (x, y) or the point at infinity.  On P^1 the y coordinate is unused and kept at 0.
struct CurvePoint {
  bool infinity = true;
  u32 x = 0;
  u32 y = 0;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(u32 x, u32 y = 0) { return {false, x, y}; }

  bool operator==(const CurvePoint& o) const {
    return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
  }
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }
  // (x, y) lexicographic, infinity last
  bool operator<(const CurvePoint& o) const {
    if (infinity != o.infinity) return !infinity;
    if (infinity) return false;
    return x != o.x ? x < o.x : y < o.y;
  }
  std::string to_string() const;
};

enum class CurveKind { ProjectiveLine, Elliptic };

class Curve {
 public:
  static Curve projective_line(u32 p);
  // y^2 = x^3 + A x + B, p >= 5, nonsingular
  static Curve elliptic(u32 p, long long A, long long B);

  CurveKind kind() const { return kind_; }
  u32 modulus() const { return p_; }
  u32 a() const { return A_; }
  u32 b() const { return B_; }
  int genus() const { return kind_ == CurveKind::Elliptic ? 1 : 0; }
  bool is_elliptic() const { return kind_ == CurveKind::Elliptic; }
  // x^3 + A x + B (zero polynomial for P^1)
  Polynomial rhs() const;
  bool contains(const CurvePoint& P) const;
  std::string describe() const;

  bool operator==(const Curve& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && A_ == o.A_ && B_ == o.B_;
  }
  bool operator!=(const Curve& o) const { return !(*this == o); }

 private:
  CurveKind kind_ = CurveKind::ProjectiveLine;
  u32 p_ = 2;
  u32 A_ = 0, B_ = 0;
};

std::vector<CurvePoint> rational_points(const Curve& Y);

// Square root mod p if one exists.
bool sqrt_mod(u32 a, u32 p, u32& root);

CurvePoint group_neg(const Curve& Y, const CurvePoint& P);
CurvePoint group_add(const Curve& Y, const CurvePoint& P, const CurvePoint& Q);
CurvePoint group_mul(const Curve& Y, long long n, const CurvePoint& P);

using DivisorZ = std::map<CurvePoint, long long>;

class DivisorQ {
 public:
  DivisorQ() = default;
  void add(const CurvePoint& P, const Rational& c);
  Rational coeff(const CurvePoint& P) const;
  const std::map<CurvePoint, Rational>& terms() const { return terms_; }
  Rational degree() const;
  DivisorZ floor() const;
  DivisorQ operator+(const DivisorQ& o) const;
  bool operator==(const DivisorQ& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

 private:
  std::map<CurvePoint, Rational> terms_;
};

long long degree(const DivisorZ& D);
DivisorZ add(const DivisorZ& a, const DivisorZ& b);
std::string to_string(const DivisorZ& D);

bool is_principal(const Curve& Y, const DivisorZ& D);

// (a + b y) / c with c monic and gcd(a, b, c) = 1; on P^1 b is always zero.
class FunctionFieldElement {
 public:
  FunctionFieldElement() = default;
  FunctionFieldElement(const Curve& Y, Polynomial a, Polynomial b, Polynomial c);
  static FunctionFieldElement constant(const Curve& Y, long long v);
  static FunctionFieldElement x(const Curve& Y);
  static FunctionFieldElement y(const Curve& Y);
  static FunctionFieldElement from_polynomial(const Curve& Y, const Polynomial& a);

  const Curve& curve() const { return Y_; }
  const Polynomial& a() const { return a_; }
  const Polynomial& b() const { return b_; }
  const Polynomial& c() const { return c_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  FunctionFieldElement operator+(const FunctionFieldElement& o) const;
  FunctionFieldElement operator-(const FunctionFieldElement& o) const;
  FunctionFieldElement operator*(const FunctionFieldElement& o) const;
  FunctionFieldElement operator/(const FunctionFieldElement& o) const;
  FunctionFieldElement scaled(u32 s) const;
  FunctionFieldElement inverse() const;
  bool operator==(const FunctionFieldElement& o) const {
    return Y_ == o.Y_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
  }

  std::string to_string() const;

 private:
  void normalize();
  Curve Y_;
  Polynomial a_, b_, c_;
};

// Truncated Laurent series sum c[i] t^(lo+i); coefficients with exponent >= prec are unknown,
// known exponents past the stored vector are zero.
struct LaurentSeries {
  u32 p = 2;
  int lo = 0;
  int prec = 0;
  std::vector<u32> c;

  static constexpr int kExact = 1 << 28;
  u32 coeff(int e) const;
  // first nonzero known exponent, or prec when none is known
  int valuation() const;
  bool known_nonzero() const { return valuation() < prec; }
};

enum class Uniformizer { XMinusX0, Y, InverseX, XOverY };

struct LocalExpansion {
  CurvePoint point;
  Uniformizer uniformizer;
  LaurentSeries x, y;
};

// x(t), y(t) with at least `relative` correct terms each.
LocalExpansion local_expansion(const Curve& Y, const CurvePoint& P, int relative);
// Series of f at P known at least up to (excluding) exponent abs_prec.
LaurentSeries series_at(const FunctionFieldElement& f, const CurvePoint& P, int abs_prec);

int valuation(const FunctionFieldElement& f, const CurvePoint& P);
// value of f * t_P^k at P
FieldElement twisted_evaluate(const FunctionFieldElement& f, const CurvePoint& P, long long k);
FieldElement evaluate(const FunctionFieldElement& f, const CurvePoint& P);

std::vector<FunctionFieldElement> riemann_roch_basis(const Curve& Y, const DivisorZ& D);
// Dimension predicted for genus 0 and 1.
long long riemann_roch_dimension(const Curve& Y, const DivisorZ& D);

}  // namespace tcode
