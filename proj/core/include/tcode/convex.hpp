#pragma once

#include <map>
#include <string>
#include <vector>

#include "tcode/algebra.hpp"
#include "tcode/curve.hpp"

namespace tcode {

using QVec = std::vector<Rational>;
using ZVec = std::vector<long long>;

QVec to_qvec(const ZVec& u);
Rational dot(const QVec& a, const QVec& b);
std::string to_string(const QVec& v);
std::string to_string(const ZVec& v);

// Lattice polytope of rank 1 or 2.  Rank 1 stores [lo, hi]; rank 2 stores the hull counter-clockwise
// starting from the lexicographically smallest vertex (one or two vertices when degenerate).
class LatticePolytope {
 public:
  LatticePolytope() = default;
  static LatticePolytope segment(long long lo, long long hi);
  static LatticePolytope hull(int m, const std::vector<ZVec>& points);

  int rank() const { return m_; }
  const std::vector<ZVec>& vertices() const { return verts_; }
  // full-dimensional in its rank
  bool is_full() const;
  bool contains(const QVec& u) const;
  bool contains(const ZVec& u) const { return contains(to_qvec(u)); }
  bool in_interior(const ZVec& u) const;
  // lexicographically sorted
  std::vector<ZVec> lattice_points() const;
  Rational volume() const;
  long long width(int axis) const;
  long long min_coord(int axis) const;
  long long max_coord(int axis) const;
  // primitive inward facet normals
  std::vector<ZVec> inward_normals() const;
  // min over the polytope of <u, n>
  Rational support(const QVec& n) const;
  LatticePolytope minkowski_sum(const LatticePolytope& o) const;
  std::string to_string() const;

  bool operator==(const LatticePolytope& o) const { return m_ == o.m_ && verts_ == o.verts_; }
  bool operator!=(const LatticePolytope& o) const { return !(*this == o); }

 private:
  int m_ = 1;
  std::vector<ZVec> verts_;
};

struct GraphPoint {
  QVec u;
  Rational a;
  bool operator==(const GraphPoint& o) const { return u == o.u && a == o.a; }
};

struct AffinePiece {
  QVec alpha;
  Rational beta;
  std::vector<std::size_t> vertices;  // indices into ConcavePL::vertices()
  Rational operator()(const QVec& u) const { return dot(alpha, u) + beta; }
};

// Concave piecewise-affine function given by the upper hull of finitely many graph points.
class ConcavePL {
 public:
  ConcavePL() = default;
  static ConcavePL from_points(int m, std::vector<GraphPoint> pts);
  // upper hull without bookkeeping of marks
  static ConcavePL envelope(int m, std::vector<GraphPoint> pts);
  static ConcavePL constant(const LatticePolytope& domain, const Rational& c);

  int rank() const { return m_; }
  const std::vector<GraphPoint>& vertices() const { return verts_; }
  // input points on the graph that are not vertices
  const std::vector<GraphPoint>& marks() const { return marks_; }
  // number of input points strictly below the graph
  std::size_t below_count() const { return below_; }
  bool strictly_concave() const { return marks_.empty(); }

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  std::vector<QVec> domain_vertices() const;
  bool in_domain(const QVec& u) const;
  Rational operator()(const QVec& u) const;
  Rational operator()(const ZVec& u) const { return (*this)(to_qvec(u)); }
  // affine with the given slope and offset on the whole domain
  bool is_affine(QVec* alpha = nullptr, Rational* beta = nullptr) const;
  bool is_zero() const;
  bool has_integral_vertices() const;
  Rational integral() const;
  std::string to_string() const;

 private:
  void build_pieces();
  bool degenerate_domain() const;
  Rational eval_line(const QVec& u) const;
  int m_ = 1;
  std::vector<GraphPoint> verts_;
  std::vector<GraphPoint> marks_;
  std::size_t below_ = 0;
  std::vector<AffinePiece> pieces_;
};

// h(v) = min_j (<u_j, v> - a_j)
struct TropicalTerm {
  QVec u;
  Rational a;
};

class SupportFunctionSlice {
 public:
  SupportFunctionSlice() = default;
  SupportFunctionSlice(int m, std::vector<TropicalTerm> terms);
  int rank() const { return m_; }
  const std::vector<TropicalTerm>& terms() const { return terms_; }
  Rational operator()(const QVec& v) const;
  // vertices of the induced subdivision of N_Q
  std::vector<QVec> subdivision_vertices() const;
  SupportFunctionSlice pruned() const;
  std::string to_string() const;

 private:
  int m_ = 1;
  std::vector<TropicalTerm> terms_;
};

ConcavePL dual_of_slice(const SupportFunctionSlice& h);
SupportFunctionSlice slice_of_dual(const ConcavePL& hs);
SupportFunctionSlice tropical_product(const SupportFunctionSlice& g, const SupportFunctionSlice& h);
ConcavePL sup_convolution(const ConcavePL& g, const ConcavePL& h);

// The curve-independent part of a divisorial polytope: a box and one concave slice per point.
struct HStar {
  LatticePolytope box;
  std::map<CurvePoint, ConcavePL> slices;  // absent points carry the zero function

  int rank() const { return box.rank(); }
  ConcavePL slice(const CurvePoint& P) const;
  DivisorQ at(const QVec& u) const;
  Rational degree_at(const QVec& u) const;
  // deg of the floor divisor
  long long floor_degree_at(const ZVec& u) const;
  DivisorZ floor_at(const ZVec& u) const;
};

Rational volume(const ConcavePL& f);
Rational volume(const HStar& h);
HStar sum(const HStar& a, const HStar& b);
Rational mixed_volume(const std::vector<HStar>& hs);
// dual of the support function 0 - P
HStar point_divisor_dual(int m, const CurvePoint& P);

long long inn(const ConcavePL& slice, const LatticePolytope& box);
long long inn(const HStar& h);
long long sharp(const ConcavePL& slice, const LatticePolytope& box);
long long sharp(const HStar& h);

std::vector<ZVec> box_lambda(const HStar& h, long long lambda);
long long lambda0(const HStar& h);
long long nu(const HStar& h, long long lambda);
HStar project(const HStar& h);
// conv(graph h*_{Q1} and reflected graph of h*_{Q2}); the other slices must vanish
LatticePolytope toric_polytope(const HStar& h, const CurvePoint& Q1, const CurvePoint& Q2);

}  // namespace tcode
