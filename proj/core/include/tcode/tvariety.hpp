#pragma once

#include <string>
#include <vector>

#include "tcode/convex.hpp"
#include "tcode/curve.hpp"

namespace tcode {

struct DivisorialPolytope {
  Curve curve;
  HStar h;
  int rank() const { return h.rank(); }
};

struct ValidationReport {
  bool ok = true;
  int failed_condition = 0;  // 1 vertex degrees, 2 principal multiple, 3 lattice data
  std::string message;
  std::vector<std::string> notes;
};

ValidationReport validate(const DivisorialPolytope& dp);

struct RayTerm {
  ZVec normal;
  long long coeff = 0;
  // sum of slice vertices extreme in the ray direction has positive pairing with the ray
  bool contracted = false;
};

struct VertexTerm {
  CurvePoint point;
  QVec v;
  long long mu = 1;
  Rational h_value;  // h_P(v)
  Rational coeff;
};

struct TWeilDivisor {
  std::vector<RayTerm> rays;
  std::vector<VertexTerm> vertices;
  std::string to_string() const;
};

long long mu_of(const QVec& v);
TWeilDivisor weil_divisor(const DivisorialPolytope& dp);

bool is_semiample(const DivisorialPolytope& dp);
bool is_ample(const DivisorialPolytope& dp);

struct GradedPiece {
  ZVec u;
  DivisorZ D;
  std::vector<FunctionFieldElement> basis;
};

struct GradedSections {
  std::vector<GradedPiece> pieces;  // lexicographic in u
  long long total = 0;
};

GradedSections graded_sections(const DivisorialPolytope& dp);

// (m+1)! vol h*
Rational self_intersection(const DivisorialPolytope& dp);
Rational intersection(const std::vector<HStar>& hs);

// value = constant + coefficient * g(Y)
struct LinearInGenus {
  long long constant = 0;
  long long coefficient = 0;
  long long value = 0;
  std::string to_string() const;
};

LinearInGenus genus_of_section(const DivisorialPolytope& dp);
LinearInGenus euler_characteristic(const DivisorialPolytope& dp);

}  // namespace tcode
