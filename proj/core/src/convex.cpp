#include "tcode/convex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcode {

QVec to_qvec(const ZVec& u) {
  QVec r;
  r.reserve(u.size());
  for (long long x : u) r.emplace_back(x);
  return r;
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: rank mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

std::string to_string(const ZVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

namespace {

Rational cross(const QVec& o, const QVec& a, const QVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool qless(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

// Counter-clockwise extreme points from the lexicographically smallest; collinear input gives the endpoints.
std::vector<QVec> hull2(std::vector<QVec> pts) {
  std::sort(pts.begin(), pts.end(), qless);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<QVec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool in_hull2(const std::vector<QVec>& h, const QVec& u, bool strict) {
  if (h.empty()) return false;
  if (h.size() == 1) return !strict && h[0] == u;
  if (h.size() == 2) {
    if (strict) return false;
    if (cross(h[0], h[1], u) != 0) return false;
    for (int i = 0; i < 2; ++i)
      if (u[i] < min(h[0][i], h[1][i]) || u[i] > max(h[0][i], h[1][i])) return false;
    return true;
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    Rational c = cross(h[i], h[(i + 1) % h.size()], u);
    if (strict ? c <= 0 : c < 0) return false;
  }
  return true;
}

long long ceil_ll(const Rational& r) { return -((-r).floor_ll()); }

long long gcdll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

// ----------------------------------------------------------- LatticePolytope

LatticePolytope LatticePolytope::segment(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("empty segment");
  LatticePolytope P;
  P.m_ = 1;
  P.verts_.push_back({lo});
  if (hi != lo) P.verts_.push_back({hi});
  return P;
}

LatticePolytope LatticePolytope::hull(int m, const std::vector<ZVec>& points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  if (m == 1) {
    long long lo = points[0].at(0), hi = lo;
    for (const auto& p : points) {
      lo = std::min(lo, p.at(0));
      hi = std::max(hi, p.at(0));
    }
    return segment(lo, hi);
  }
  if (m != 2) throw std::invalid_argument("only ranks 1 and 2 are supported");
  std::vector<QVec> q;
  for (const auto& p : points) {
    if (p.size() != 2) throw std::invalid_argument("point rank mismatch");
    q.push_back(to_qvec(p));
  }
  LatticePolytope P;
  P.m_ = 2;
  for (const auto& v : hull2(q)) P.verts_.push_back({v[0].to_ll(), v[1].to_ll()});
  return P;
}

bool LatticePolytope::is_full() const { return m_ == 1 ? verts_.size() == 2 : verts_.size() >= 3; }

bool LatticePolytope::contains(const QVec& u) const {
  if (static_cast<int>(u.size()) != m_) return false;
  if (m_ == 1) return Rational(min_coord(0)) <= u[0] && u[0] <= Rational(max_coord(0));
  std::vector<QVec> h;
  for (const auto& v : verts_) h.push_back(to_qvec(v));
  return in_hull2(h, u, false);
}

bool LatticePolytope::in_interior(const ZVec& u) const {
  if (m_ == 1) return min_coord(0) < u.at(0) && u.at(0) < max_coord(0);
  std::vector<QVec> h;
  for (const auto& v : verts_) h.push_back(to_qvec(v));
  return in_hull2(h, to_qvec(u), true);
}

std::vector<ZVec> LatticePolytope::lattice_points() const {
  std::vector<ZVec> out;
  if (m_ == 1) {
    for (long long x = min_coord(0); x <= max_coord(0); ++x) out.push_back({x});
    return out;
  }
  for (long long x = min_coord(0); x <= max_coord(0); ++x)
    for (long long y = min_coord(1); y <= max_coord(1); ++y)
      if (contains(ZVec{x, y})) out.push_back({x, y});
  return out;
}

Rational LatticePolytope::volume() const {
  if (m_ == 1) return Rational(max_coord(0) - min_coord(0));
  if (verts_.size() < 3) return Rational(0);
  long long twice = 0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const auto& a = verts_[i];
    const auto& b = verts_[(i + 1) % verts_.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return Rational(twice, 2);
}

long long LatticePolytope::min_coord(int axis) const {
  long long r = verts_.at(0).at(static_cast<std::size_t>(axis));
  for (const auto& v : verts_) r = std::min(r, v[static_cast<std::size_t>(axis)]);
  return r;
}

long long LatticePolytope::max_coord(int axis) const {
  long long r = verts_.at(0).at(static_cast<std::size_t>(axis));
  for (const auto& v : verts_) r = std::max(r, v[static_cast<std::size_t>(axis)]);
  return r;
}

long long LatticePolytope::width(int axis) const { return max_coord(axis) - min_coord(axis); }

std::vector<ZVec> LatticePolytope::inward_normals() const {
  std::vector<ZVec> out;
  if (!is_full()) return out;
  if (m_ == 1) return {{1}, {-1}};
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const auto& a = verts_[i];
    const auto& b = verts_[(i + 1) % verts_.size()];
    long long dx = b[0] - a[0], dy = b[1] - a[1];
    long long g = gcdll(dx, dy);
    out.push_back({-dy / g, dx / g});
  }
  return out;
}

Rational LatticePolytope::support(const QVec& n) const {
  Rational best = dot(to_qvec(verts_.at(0)), n);
  for (const auto& v : verts_) best = min(best, dot(to_qvec(v), n));
  return best;
}

LatticePolytope LatticePolytope::minkowski_sum(const LatticePolytope& o) const {
  if (m_ != o.m_) throw std::invalid_argument("Minkowski sum: rank mismatch");
  std::vector<ZVec> pts;
  for (const auto& a : verts_)
    for (const auto& b : o.verts_) {
      ZVec s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      pts.push_back(s);
    }
  return hull(m_, pts);
}

std::string LatticePolytope::to_string() const {
  if (m_ == 1) return "[" + std::to_string(min_coord(0)) + "," + std::to_string(max_coord(0)) + "]";
  std::string s = "conv{";
  for (std::size_t i = 0; i < verts_.size(); ++i) s += (i ? "," : "") + tcode::to_string(verts_[i]);
  return s + "}";
}

// ----------------------------------------------------------------- ConcavePL

namespace {

void dedupe_max(std::vector<GraphPoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const GraphPoint& x, const GraphPoint& y) {
    if (x.u != y.u) return qless(x.u, y.u);
    return y.a < x.a;
  });
  std::vector<GraphPoint> out;
  for (auto& p : pts)
    if (out.empty() || out.back().u != p.u) out.push_back(p);
  pts = std::move(out);
}

// upper hull of (s, a) pairs sorted by s; returns kept indices
std::vector<std::size_t> upper_chain(const std::vector<std::pair<Rational, Rational>>& sa) {
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    while (h.size() >= 2) {
      const auto& o = sa[h[h.size() - 2]];
      const auto& a = sa[h.back()];
      const auto& b = sa[i];
      Rational c = (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
      if (c >= 0)
        h.pop_back();
      else
        break;
    }
    h.push_back(i);
  }
  return h;
}

}  // namespace

bool ConcavePL::degenerate_domain() const {
  if (m_ == 1) return verts_.size() <= 1;
  std::vector<QVec> proj;
  for (const auto& v : verts_) proj.push_back(v.u);
  return hull2(proj).size() < 3;
}

ConcavePL ConcavePL::from_points(int m, std::vector<GraphPoint> pts) {
  if (pts.empty()) throw std::invalid_argument("concave function needs at least one point");
  if (m != 1 && m != 2) throw std::invalid_argument("only ranks 1 and 2 are supported");
  for (const auto& p : pts)
    if (static_cast<int>(p.u.size()) != m) throw std::invalid_argument("graph point rank mismatch");
  std::vector<GraphPoint> input = pts;
  dedupe_max(pts);
  ConcavePL f;
  f.m_ = m;

  std::vector<QVec> proj;
  for (const auto& p : pts) proj.push_back(p.u);
  std::vector<QVec> dom = m == 2 ? hull2(proj) : std::vector<QVec>{};
  bool line = (m == 1) || dom.size() < 3;

  if (line) {
    // parametrize along the segment spanned by the projections
    QVec p0 = pts.front().u, d(static_cast<std::size_t>(m));
    if (m == 1) {
      d[0] = Rational(1);
    } else if (dom.size() == 2) {
      p0 = dom[0];
      for (int i = 0; i < m; ++i) d[static_cast<std::size_t>(i)] = dom[1][static_cast<std::size_t>(i)] - dom[0][static_cast<std::size_t>(i)];
    }
    std::vector<std::pair<Rational, Rational>> sa;
    for (const auto& p : pts) {
      QVec diff(p.u.size());
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = p.u[i] - p0[i];
      sa.emplace_back(m == 1 ? p.u[0] : dot(diff, d), p.a);
    }
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sa[x].first < sa[y].first; });
    std::vector<std::pair<Rational, Rational>> sorted;
    for (auto i : order) sorted.push_back(sa[i]);
    for (auto i : upper_chain(sorted)) f.verts_.push_back(pts[order[i]]);
    std::sort(f.verts_.begin(), f.verts_.end(), [](const GraphPoint& x, const GraphPoint& y) { return qless(x.u, y.u); });
    f.build_pieces();
  } else {
    // facet planes through triples of lifted points lying above every point
    std::vector<std::pair<QVec, Rational>> planes;
    const std::size_t N = pts.size();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        for (std::size_t k = j + 1; k < N; ++k) {
          Rational det = cross(pts[i].u, pts[j].u, pts[k].u);
          if (det == 0) continue;
          const QVec& A = pts[i].u;
          Rational dx1 = pts[j].u[0] - A[0], dy1 = pts[j].u[1] - A[1], da1 = pts[j].a - pts[i].a;
          Rational dx2 = pts[k].u[0] - A[0], dy2 = pts[k].u[1] - A[1], da2 = pts[k].a - pts[i].a;
          Rational a0 = (da1 * dy2 - da2 * dy1) / det;
          Rational a1 = (dx1 * da2 - dx2 * da1) / det;
          Rational b = pts[i].a - a0 * A[0] - a1 * A[1];
          bool ok = true;
          for (std::size_t t = 0; t < N && ok; ++t)
            if (pts[t].a > a0 * pts[t].u[0] + a1 * pts[t].u[1] + b) ok = false;
          if (!ok) continue;
          QVec al{a0, a1};
          bool dup = false;
          for (const auto& pl : planes)
            if (pl.first == al && pl.second == b) dup = true;
          if (!dup) planes.emplace_back(al, b);
        }
    std::vector<bool> is_vertex(N, false);
    std::vector<std::vector<QVec>> facet_polys;
    for (const auto& pl : planes) {
      std::vector<QVec> on;
      for (std::size_t t = 0; t < N; ++t)
        if (pts[t].a == dot(pl.first, pts[t].u) + pl.second) on.push_back(pts[t].u);
      std::vector<QVec> poly = hull2(on);
      for (const auto& v : poly)
        for (std::size_t t = 0; t < N; ++t)
          if (pts[t].u == v) is_vertex[t] = true;
      facet_polys.push_back(poly);
    }
    for (std::size_t t = 0; t < N; ++t)
      if (is_vertex[t]) f.verts_.push_back(pts[t]);
    std::sort(f.verts_.begin(), f.verts_.end(), [](const GraphPoint& x, const GraphPoint& y) { return qless(x.u, y.u); });
    for (std::size_t i = 0; i < planes.size(); ++i) {
      AffinePiece pc;
      pc.alpha = planes[i].first;
      pc.beta = planes[i].second;
      for (const auto& v : facet_polys[i])
        for (std::size_t t = 0; t < f.verts_.size(); ++t)
          if (f.verts_[t].u == v) pc.vertices.push_back(t);
      f.pieces_.push_back(pc);
    }
    std::sort(f.pieces_.begin(), f.pieces_.end(), [](const AffinePiece& x, const AffinePiece& y) {
      if (x.alpha != y.alpha) return qless(x.alpha, y.alpha);
      return x.beta < y.beta;
    });
  }

  for (const auto& p : input) {
    bool vert = false;
    for (const auto& v : f.verts_)
      if (v.u == p.u && v.a == p.a) vert = true;
    if (vert) continue;
    Rational val = f(p.u);
    if (p.a == val) {
      bool seen = false;
      for (const auto& mk : f.marks_)
        if (mk == p) seen = true;
      if (!seen) f.marks_.push_back(p);
    } else if (p.a < val) {
      ++f.below_;
    }
  }
  return f;
}

ConcavePL ConcavePL::envelope(int m, std::vector<GraphPoint> pts) {
  ConcavePL f = from_points(m, std::move(pts));
  f.marks_.clear();
  f.below_ = 0;
  return f;
}

ConcavePL ConcavePL::constant(const LatticePolytope& domain, const Rational& c) {
  std::vector<GraphPoint> pts;
  for (const auto& v : domain.vertices()) pts.push_back({to_qvec(v), c});
  return envelope(domain.rank(), pts);
}

void ConcavePL::build_pieces() {
  pieces_.clear();
  if (verts_.size() == 1) {
    AffinePiece pc;
    pc.alpha = QVec(static_cast<std::size_t>(m_), Rational(0));
    pc.beta = verts_[0].a;
    pc.vertices = {0};
    pieces_.push_back(pc);
    return;
  }
  // segment domain: slope along the segment, zero across it
  QVec d(static_cast<std::size_t>(m_));
  for (std::size_t k = 0; k + 1 < verts_.size(); ++k) {
    const auto& A = verts_[k];
    const auto& B = verts_[k + 1];
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = B.u[i] - A.u[i];
    Rational len2 = dot(d, d);
    Rational slope = (B.a - A.a) / len2;
    AffinePiece pc;
    for (auto& x : d) pc.alpha.push_back(x * slope);
    pc.beta = A.a - dot(pc.alpha, A.u);
    pc.vertices = {k, k + 1};
    pieces_.push_back(pc);
  }
}

std::vector<QVec> ConcavePL::domain_vertices() const {
  std::vector<QVec> proj;
  for (const auto& v : verts_) proj.push_back(v.u);
  if (m_ == 1) {
    std::vector<QVec> r{proj.front()};
    if (proj.size() > 1) r.push_back(proj.back());
    return r;
  }
  return hull2(proj);
}

bool ConcavePL::in_domain(const QVec& u) const {
  if (static_cast<int>(u.size()) != m_ || verts_.empty()) return false;
  if (m_ == 1) return verts_.front().u[0] <= u[0] && u[0] <= verts_.back().u[0];
  return in_hull2(domain_vertices(), u, false);
}

Rational ConcavePL::eval_line(const QVec& u) const {
  // pieces are ordered along the segment
  for (const auto& pc : pieces_) {
    const QVec& A = verts_[pc.vertices.front()].u;
    const QVec& B = verts_[pc.vertices.back()].u;
    bool inside = true;
    for (int i = 0; i < m_; ++i) {
      auto k = static_cast<std::size_t>(i);
      if (u[k] < min(A[k], B[k]) || u[k] > max(A[k], B[k])) inside = false;
    }
    if (inside) return pc(u);
  }
  throw std::logic_error("segment evaluation fell outside every piece");
}

Rational ConcavePL::operator()(const QVec& u) const {
  if (!in_domain(u)) throw std::domain_error("point " + tcode::to_string(u) + " outside the domain");
  if (degenerate_domain()) {
    if (verts_.size() == 1) return verts_[0].a;
    return eval_line(u);
  }
  if (m_ == 1) return eval_line(u);
  Rational best = pieces_.at(0)(u);
  for (const auto& pc : pieces_) best = min(best, pc(u));
  return best;
}

bool ConcavePL::is_affine(QVec* alpha, Rational* beta) const {
  if (pieces_.size() != 1) return false;
  if (alpha) *alpha = pieces_[0].alpha;
  if (beta) *beta = pieces_[0].beta;
  return true;
}

bool ConcavePL::is_zero() const {
  for (const auto& v : verts_)
    if (v.a != 0) return false;
  return true;
}

bool ConcavePL::has_integral_vertices() const {
  for (const auto& v : verts_) {
    if (!v.a.is_integer()) return false;
    for (const auto& x : v.u)
      if (!x.is_integer()) return false;
  }
  return true;
}

Rational ConcavePL::integral() const {
  if (degenerate_domain() && m_ == 2) return Rational(0);
  Rational s;
  if (m_ == 1) {
    for (std::size_t k = 0; k + 1 < verts_.size(); ++k)
      s += (verts_[k + 1].u[0] - verts_[k].u[0]) * (verts_[k].a + verts_[k + 1].a) / Rational(2);
    return s;
  }
  for (const auto& pc : pieces_) {
    const auto& idx = pc.vertices;
    for (std::size_t k = 1; k + 1 < idx.size(); ++k) {
      const auto& A = verts_[idx[0]];
      const auto& B = verts_[idx[k]];
      const auto& C = verts_[idx[k + 1]];
      Rational area = cross(A.u, B.u, C.u) / Rational(2);
      s += area * (A.a + B.a + C.a) / Rational(3);
    }
  }
  return s;
}

std::string ConcavePL::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) s += " ";
    QVec ua = verts_[i].u;
    std::string t = "(";
    for (const auto& x : ua) t += x.to_string() + ",";
    s += t + verts_[i].a.to_string() + ")";
  }
  return s;
}

// ------------------------------------------------------ SupportFunctionSlice

SupportFunctionSlice::SupportFunctionSlice(int m, std::vector<TropicalTerm> terms) : m_(m), terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("support function needs at least one term");
  for (const auto& t : terms_)
    if (static_cast<int>(t.u.size()) != m_) throw std::invalid_argument("tropical term rank mismatch");
}

Rational SupportFunctionSlice::operator()(const QVec& v) const {
  Rational best = dot(terms_[0].u, v) - terms_[0].a;
  for (const auto& t : terms_) best = min(best, dot(t.u, v) - t.a);
  return best;
}

std::vector<QVec> SupportFunctionSlice::subdivision_vertices() const {
  std::vector<QVec> out;
  ConcavePL f = dual_of_slice(*this);
  for (const auto& pc : f.pieces()) out.push_back(pc.alpha);
  return out;
}

SupportFunctionSlice SupportFunctionSlice::pruned() const { return slice_of_dual(dual_of_slice(*this)); }

std::string SupportFunctionSlice::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    Rational c = -terms_[i].a;
    std::string cs = c.to_string();
    if (c < 0) cs = "(" + cs + ")";
    s += cs + "*x^" + tcode::to_string(terms_[i].u);
  }
  return s;
}

ConcavePL dual_of_slice(const SupportFunctionSlice& h) {
  std::vector<GraphPoint> pts;
  for (const auto& t : h.terms()) pts.push_back({t.u, t.a});
  return ConcavePL::envelope(h.rank(), pts);
}

SupportFunctionSlice slice_of_dual(const ConcavePL& hs) {
  std::vector<TropicalTerm> terms;
  for (const auto& v : hs.vertices()) terms.push_back({v.u, v.a});
  return SupportFunctionSlice(hs.rank(), terms);
}

SupportFunctionSlice tropical_product(const SupportFunctionSlice& g, const SupportFunctionSlice& h) {
  if (g.rank() != h.rank()) throw std::invalid_argument("tropical product: rank mismatch");
  std::vector<TropicalTerm> terms;
  for (const auto& a : g.terms())
    for (const auto& b : h.terms()) {
      QVec u(a.u.size());
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = a.u[i] + b.u[i];
      terms.push_back({u, a.a + b.a});
    }
  return SupportFunctionSlice(g.rank(), terms);
}

ConcavePL sup_convolution(const ConcavePL& g, const ConcavePL& h) {
  if (g.rank() != h.rank()) throw std::invalid_argument("sup-convolution: rank mismatch");
  std::vector<GraphPoint> pts;
  for (const auto& a : g.vertices())
    for (const auto& b : h.vertices()) {
      QVec u(a.u.size());
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = a.u[i] + b.u[i];
      pts.push_back({u, a.a + b.a});
    }
  return ConcavePL::envelope(g.rank(), pts);
}

// --------------------------------------------------------------------- HStar

ConcavePL HStar::slice(const CurvePoint& P) const {
  auto it = slices.find(P);
  if (it != slices.end()) return it->second;
  return ConcavePL::constant(box, Rational(0));
}

DivisorQ HStar::at(const QVec& u) const {
  DivisorQ D;
  for (const auto& [P, f] : slices) D.add(P, f(u));
  return D;
}

Rational HStar::degree_at(const QVec& u) const {
  Rational d;
  for (const auto& [P, f] : slices) d += f(u);
  return d;
}

long long HStar::floor_degree_at(const ZVec& u) const {
  long long d = 0;
  QVec q = to_qvec(u);
  for (const auto& [P, f] : slices) d += f(q).floor_ll();
  return d;
}

DivisorZ HStar::floor_at(const ZVec& u) const {
  DivisorZ D;
  QVec q = to_qvec(u);
  for (const auto& [P, f] : slices) {
    long long v = f(q).floor_ll();
    if (v != 0) D[P] = v;
  }
  return D;
}

Rational volume(const ConcavePL& f) { return f.integral(); }

Rational volume(const HStar& h) {
  Rational s;
  for (const auto& [P, f] : h.slices) s += f.integral();
  return s;
}

HStar sum(const HStar& a, const HStar& b) {
  HStar r;
  r.box = a.box.minkowski_sum(b.box);
  std::vector<CurvePoint> pts;
  for (const auto& [P, f] : a.slices) pts.push_back(P);
  for (const auto& [P, f] : b.slices) pts.push_back(P);
  for (const auto& P : pts) {
    if (r.slices.count(P)) continue;
    ConcavePL s = sup_convolution(a.slice(P), b.slice(P));
    if (!s.is_zero()) r.slices[P] = s;
  }
  return r;
}

Rational mixed_volume(const std::vector<HStar>& hs) {
  const std::size_t k = hs.size();
  if (k == 0 || k > 20) throw std::invalid_argument("mixed volume needs 1..20 arguments");
  Rational total;
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    HStar acc;
    bool first = true;
    std::size_t size = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (1UL << j)) {
        ++size;
        acc = first ? hs[j] : sum(acc, hs[j]);
        first = false;
      }
    Rational v = volume(acc);
    if ((k - size) % 2 == 0)
      total += v;
    else
      total -= v;
  }
  Rational fact(1);
  for (std::size_t j = 2; j <= k; ++j) fact *= Rational(static_cast<long long>(j));
  return total / fact;
}

HStar point_divisor_dual(int m, const CurvePoint& P) {
  HStar h;
  ZVec zero(static_cast<std::size_t>(m), 0);
  h.box = LatticePolytope::hull(m, {zero});
  h.slices[P] = ConcavePL::envelope(m, {{to_qvec(zero), Rational(1)}});
  return h;
}

long long inn(const ConcavePL& slice, const LatticePolytope& box) {
  if (box.rank() != 1) throw std::invalid_argument("inn is defined for rank 1 only");
  long long s = 0;
  for (const auto& u : box.lattice_points()) {
    if (!box.in_interior(u)) continue;
    s += ceil_ll(slice(u));
  }
  return s;
}

long long inn(const HStar& h) {
  long long s = 0;
  for (const auto& [P, f] : h.slices) s += inn(f, h.box);
  return s;
}

long long sharp(const ConcavePL& slice, const LatticePolytope& box) {
  long long s = 0;
  for (const auto& u : box.lattice_points()) s += slice(u).floor_ll();
  return s;
}

long long sharp(const HStar& h) {
  long long s = 0;
  for (const auto& u : h.box.lattice_points()) s += h.floor_degree_at(u);
  return s;
}

std::vector<ZVec> box_lambda(const HStar& h, long long lambda) {
  std::vector<ZVec> out;
  for (const auto& u : h.box.lattice_points())
    if (h.floor_degree_at(u) >= lambda) out.push_back(u);
  return out;
}

long long lambda0(const HStar& h) {
  auto pts = h.box.lattice_points();
  if (pts.empty()) throw std::invalid_argument("box without lattice points");
  long long best = h.floor_degree_at(pts[0]);
  for (const auto& u : pts) best = std::max(best, h.floor_degree_at(u));
  return best;
}

long long nu(const HStar& h, long long lambda) {
  if (h.rank() != 1) throw std::invalid_argument("nu is defined for rank 1 only");
  auto pts = box_lambda(h, lambda);
  if (pts.empty()) throw std::domain_error("nu: empty set for lambda = " + std::to_string(lambda));
  return pts.back()[0] - pts.front()[0];
}

HStar project(const HStar& h) {
  if (h.rank() != 2) throw std::invalid_argument("projection needs rank 2");
  std::map<long long, std::vector<ZVec>> columns;
  for (const auto& u : h.box.lattice_points()) columns[u[0]].push_back(u);
  if (columns.empty()) throw std::invalid_argument("box without lattice points");
  HStar r;
  r.box = LatticePolytope::segment(columns.begin()->first, columns.rbegin()->first);
  for (const auto& [P, f] : h.slices) {
    std::vector<GraphPoint> pts;
    for (const auto& [x, col] : columns) {
      Rational best = f(col[0]);
      for (const auto& u : col) best = max(best, f(u));
      pts.push_back({{Rational(x)}, best});
    }
    ConcavePL g = ConcavePL::from_points(1, pts);
    if (!g.is_zero()) r.slices[P] = g;
  }
  return r;
}

LatticePolytope toric_polytope(const HStar& h, const CurvePoint& Q1, const CurvePoint& Q2) {
  if (h.rank() != 1) throw std::invalid_argument("toric polytope needs rank 1 data");
  for (const auto& [P, f] : h.slices)
    if (P != Q1 && P != Q2 && !f.is_zero())
      throw std::invalid_argument("toric polytope: nontrivial slice at " + P.to_string());
  std::vector<ZVec> pts;
  auto add = [&](const ConcavePL& f, int sign) {
    for (const auto& v : f.vertices()) {
      if (!v.u[0].is_integer() || !v.a.is_integer())
        throw std::invalid_argument("toric polytope: non-lattice graph vertex");
      pts.push_back({v.u[0].to_ll(), sign * v.a.to_ll()});
    }
  };
  add(h.slice(Q1), 1);
  add(h.slice(Q2), -1);
  return LatticePolytope::hull(2, pts);
}

}  // namespace tcode
