#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tcode/tvariety.hpp"

namespace tcode {

// h*_P(u) = <u, v> + c
struct AffineSliceData {
  ZVec v;
  long long c = 0;
};

bool admissible_at(const HStar& h, const CurvePoint& P, AffineSliceData* out = nullptr);
std::vector<CurvePoint> admissible_points(const DivisorialPolytope& dp);

struct EvaluationSetup {
  DivisorialPolytope dp;
  std::vector<CurvePoint> points;
  u32 generator = 0;  // 0 selects the smallest primitive root
};

struct EvaluationCode {
  MatrixFp G;  // rows: (u, basis element); columns: (P_i, t)
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t rows = 0;
  bool injective = false;
  std::vector<ZVec> row_weights;
};

EvaluationCode build_code(const EvaluationSetup& s);

struct KBounds {
  long long lower = 0;
  long long gamma_sum = 0;
  long long upper = 0;
  bool equality_case = false;
};

KBounds k_bounds(const DivisorialPolytope& dp);

struct SurfaceBound {
  long long d = 0;
  long long lambda = 0;  // minimizer
  long long lambda0 = 0;
  std::vector<long long> nu;  // nu(0..min(lambda0, l))
};

SurfaceBound d_lower_surface(const HStar& h, long long q, long long l);
long long d_lower_general(const HStar& h, long long q, long long l);

struct UpperBound {
  bool found = false;
  long long d = 0;
  ZVec lo, hi;  // the sub-rectangle
  long long r0 = 0;
  std::vector<long long> c;  // per nontrivial slice, in point order
};

UpperBound d_upper(const DivisorialPolytope& dp, long long q, long long l);
// Weight of the codeword built from the optimal rectangle, or -1 when no section is found.
long long witness_weight(const EvaluationSetup& s, const UpperBound& ub);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(unsigned long long needed, unsigned long long budget);
  unsigned long long needed, budget;
};

struct DistanceResult {
  long long d = 0;
  unsigned long long classes = 0;
  std::vector<unsigned long long> enumerator;  // A_w for w = 0..n
};

constexpr unsigned long long kDefaultBudget = 2000000ULL;
// (q^k - 1)/(q - 1), saturating
unsigned long long projective_classes(std::size_t k, u32 q);
DistanceResult d_exact(const MatrixFp& G, unsigned long long budget = kDefaultBudget);

struct HasseWeil {
  long long g = 0;
  long long q_threshold = 0;
  double point_bound = 0;
};

bool is_prime_power_ll(long long n);
long long hasse_weil_threshold(long long g);
HasseWeil hasse_weil_diagnostic(const DivisorialPolytope& dp, long long q);

MatrixFp rs_code(u32 q, std::size_t k);
MatrixFp ag_one_point(const Curve& Y, long long tau, const CurvePoint& Q0, const std::vector<CurvePoint>& points);
MatrixFp product_code(const MatrixFp& A, const MatrixFp& B);
// monomials of the lattice points of P evaluated on (F_q^*)^2
MatrixFp toric_code(const LatticePolytope& P, u32 q);

struct Comparison {
  long long q = 0, g = 0, l = 0, k1 = 0, tau = 0;
  bool valid = true;
  bool swapped = false;
  long long a = 0, alpha = 0, b = 0;
  long long k_est = 0, d_est = 0;
  long long k_tcode = 0, d_tcode = 0;
  bool k_holds = false, d_holds = false;
  std::string note;
};

Comparison compare_product(long long q, long long g, long long l, long long k1, long long tau);

// h*_{Q_i}(u) = alpha_i u + b_i on [0, a]
struct RuledTerm {
  CurvePoint point;
  long long alpha = 0;
  long long b = 0;
};

DivisorialPolytope ruled_surface(const Curve& Y, long long a, const std::vector<RuledTerm>& terms);

struct RuledClosedForms {
  long long lambda0 = 0;
  long long d_lower = 0;
  long long d_upper = 0;
  long long k = 0;
};

RuledClosedForms ruled_closed_forms(long long a, long long alpha, long long b, long long l, long long q, long long g);

}  // namespace tcode
