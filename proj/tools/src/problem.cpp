#include "tcode_cli/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace tcode::cli {

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg), line(l), col(c) {}

namespace {

class Cursor {
 public:
  Cursor(const std::string& s, int line) : s_(s), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, static_cast<int>(i_) + 1, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(line_, static_cast<int>(pos) + 1, msg);
  }
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    ws();
    return i_ >= s_.size();
  }
  std::size_t pos() {
    ws();
    return i_;
  }
  bool peek(char c) {
    ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    ws();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::string word() {
    ws();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '-')) ++i_;
    if (b == i_) fail("expected a name");
    return s_.substr(b, i_ - b);
  }
  std::string number_token() {
    ws();
    std::size_t b = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    std::string t = s_.substr(b, i_ - b);
    if (t.empty() || t == "-" || t == "+" || t.back() == '/') {
      i_ = b;
      fail("expected a number");
    }
    return t;
  }
  long long integer() {
    std::size_t b = pos();
    std::string t = number_token();
    if (t.find('/') != std::string::npos) fail_at(b, "expected an integer");
    try {
      return std::stoll(t);
    } catch (const std::out_of_range&) {
      fail_at(b, "integer out of range");
    }
  }
  Rational rational() {
    std::size_t b = pos();
    std::string t = number_token();
    try {
      return Rational::parse(t);
    } catch (const std::exception& e) {
      fail_at(b, e.what());
    }
  }
  // (n1, n2, ...)
  std::vector<Rational> tuple() {
    expect('(');
    std::vector<Rational> out{rational()};
    while (peek(',')) {
      expect(',');
      out.push_back(rational());
    }
    expect(')');
    return out;
  }
  long long key_value(const std::string& key) {
    std::size_t b = pos();
    std::string k = word();
    if (k != key) fail_at(b, "unknown key '" + k + "', expected '" + key + "'");
    expect('=');
    return integer();
  }

 private:
  const std::string& s_;
  int line_;
  std::size_t i_ = 0;
};

long long reduce(long long v, long long p) { return ((v % p) + p) % p; }

}  // namespace

Curve make_curve(const ProblemSpec& s) {
  if (s.elliptic) return Curve::elliptic(static_cast<u32>(s.p), s.A, s.B);
  return Curve::projective_line(static_cast<u32>(s.p));
}

namespace {

CurvePoint to_point(const NamedPoint& n) {
  if (n.infinity) return CurvePoint::at_infinity();
  return CurvePoint::affine(static_cast<u32>(n.x), static_cast<u32>(n.y));
}

}  // namespace

ProblemSpec parse(const std::string& text) {
  ProblemSpec s;
  bool have_field = false, have_curve = false, have_box = false, have_eval = false;
  std::set<std::string> names, with_hstar;
  Curve Y;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    Cursor c(line, lineno);
    if (c.done()) continue;
    std::size_t kpos = c.pos();
    std::string key = c.word();
    if (key == "field") {
      if (have_field) c.fail_at(kpos, "duplicate field declaration");
      std::size_t b = c.pos();
      s.p = c.key_value("p");
      if (s.p < 2 || s.p > 65521 || !is_prime(static_cast<u64>(s.p))) c.fail_at(b, "p must be a prime below 65536");
      have_field = true;
    } else if (key == "curve") {
      if (!have_field) c.fail_at(kpos, "curve before field");
      if (have_curve) c.fail_at(kpos, "duplicate curve declaration");
      std::size_t b = c.pos();
      std::string kind = c.word();
      if (kind == "p1") {
        s.elliptic = false;
      } else if (kind == "elliptic") {
        s.elliptic = true;
        s.A = c.key_value("A");
        s.B = c.key_value("B");
      } else {
        c.fail_at(b, "unknown curve '" + kind + "'");
      }
      try {
        Y = make_curve(s);
      } catch (const std::exception& e) {
        c.fail_at(b, e.what());
      }
      have_curve = true;
    } else if (key == "point") {
      if (!have_curve) c.fail_at(kpos, "point before curve");
      std::size_t b = c.pos();
      NamedPoint n;
      n.name = c.word();
      if (names.count(n.name)) c.fail_at(b, "duplicate point name '" + n.name + "'");
      c.expect('=');
      std::size_t vb = c.pos();
      if (c.peek('(')) {
        auto t = c.tuple();
        std::size_t want = s.elliptic ? 2 : 1;
        if (t.size() != want && !(t.size() == 2 && !s.elliptic))
          c.fail_at(vb, s.elliptic ? "expected (x,y)" : "expected (x)");
        for (const auto& v : t)
          if (!v.is_integer()) c.fail_at(vb, "coordinates must be integers");
        n.x = reduce(t[0].to_ll(), s.p);
        n.y = s.elliptic ? reduce(t[1].to_ll(), s.p) : 0;
        if (!s.elliptic && t.size() == 2 && t[1] != Rational(0)) c.fail_at(vb, "points of P1 take the form (x)");
      } else {
        std::string w = c.word();
        if (w != "infinity") c.fail_at(vb, "expected a coordinate tuple or 'infinity'");
        n.infinity = true;
      }
      if (!Y.contains(to_point(n))) c.fail_at(vb, "point " + to_point(n).to_string() + " is not on the curve");
      for (const auto& o : s.points)
        if (to_point(o) == to_point(n)) c.fail_at(vb, "point already declared as '" + o.name + "'");
      names.insert(n.name);
      s.points.push_back(n);
    } else if (key == "box") {
      if (have_box) c.fail_at(kpos, "duplicate box declaration");
      if (c.peek('[')) {
        c.expect('[');
        long long a = c.integer();
        c.expect(',');
        long long b = c.integer();
        c.expect(']');
        if (a > b) c.fail_at(kpos, "empty box");
        s.rank = 1;
        s.box = {{a}, {b}};
      } else {
        std::size_t b = c.pos();
        std::string w = c.word();
        if (w != "poly") c.fail_at(b, "expected '[' or 'poly'");
        s.rank = 2;
        s.box.clear();
        while (!c.done()) {
          std::size_t tb = c.pos();
          auto t = c.tuple();
          if (t.size() != 2 || !t[0].is_integer() || !t[1].is_integer()) c.fail_at(tb, "expected a lattice point (u,v)");
          s.box.push_back({t[0].to_ll(), t[1].to_ll()});
        }
        if (s.box.empty()) c.fail_at(b, "empty box");
      }
      have_box = true;
    } else if (key == "hstar") {
      if (!have_box) c.fail_at(kpos, "hstar before box");
      std::size_t b = c.pos();
      HStarEntry e;
      e.point = c.word();
      if (!names.count(e.point)) c.fail_at(b, "unknown point '" + e.point + "'");
      if (with_hstar.count(e.point)) c.fail_at(b, "duplicate hstar for '" + e.point + "'");
      c.expect(':');
      while (!c.done()) {
        std::size_t tb = c.pos();
        auto t = c.tuple();
        if (static_cast<int>(t.size()) != s.rank + 1) c.fail_at(tb, "expected " + std::to_string(s.rank + 1) + " entries");
        GraphPoint g;
        g.u.assign(t.begin(), t.end() - 1);
        g.a = t.back();
        e.graph.push_back(g);
      }
      if (e.graph.empty()) c.fail_at(b, "hstar needs at least one graph vertex");
      ConcavePL f = ConcavePL::from_points(s.rank, e.graph);
      if (f.below_count() > 0) c.fail_at(b, "graph vertices of '" + e.point + "' are not concave");
      with_hstar.insert(e.point);
      s.hstar.push_back(e);
    } else if (key == "eval") {
      if (have_eval) c.fail_at(kpos, "duplicate eval declaration");
      std::size_t b = c.pos();
      std::string w = c.word();
      if (w == "all-admissible") {
        s.eval_all = true;
        if (!c.done()) c.fail("unexpected text after all-admissible");
      } else {
        s.eval_all = false;
        s.eval.push_back(w);
        while (!c.done()) s.eval.push_back(c.word());
        for (const auto& n : s.eval)
          if (!names.count(n)) c.fail_at(b, "unknown point '" + n + "'");
      }
      have_eval = true;
    } else {
      c.fail_at(kpos, "unknown key '" + key + "'");
    }
    if (!c.done()) c.fail("unexpected trailing text");
  }
  if (!have_field) throw ParseError(lineno + 1, 1, "missing field declaration");
  if (!have_curve) throw ParseError(lineno + 1, 1, "missing curve declaration");
  if (!have_box) throw ParseError(lineno + 1, 1, "missing box declaration");
  return s;
}

std::string render(const ProblemSpec& s) {
  std::ostringstream os;
  os << "field p=" << s.p << "\n";
  if (s.elliptic)
    os << "curve elliptic A=" << s.A << " B=" << s.B << "\n";
  else
    os << "curve p1\n";
  for (const auto& n : s.points) {
    os << "point " << n.name << " = ";
    if (n.infinity)
      os << "infinity";
    else if (s.elliptic)
      os << "(" << n.x << "," << n.y << ")";
    else
      os << "(" << n.x << ")";
    os << "\n";
  }
  if (s.rank == 1) {
    os << "box [" << s.box[0][0] << "," << s.box[1][0] << "]\n";
  } else {
    os << "box poly";
    for (const auto& v : s.box) os << " (" << v[0] << "," << v[1] << ")";
    os << "\n";
  }
  for (const auto& e : s.hstar) {
    os << "hstar " << e.point << " :";
    for (const auto& g : e.graph) {
      os << " (";
      for (const auto& x : g.u) os << x << ",";
      os << g.a << ")";
    }
    os << "\n";
  }
  if (s.eval_all) {
    os << "eval all-admissible\n";
  } else {
    os << "eval";
    for (const auto& n : s.eval) os << " " << n;
    os << "\n";
  }
  return os.str();
}

CurvePoint resolve(const ProblemSpec& s, const std::string& name) {
  for (const auto& n : s.points)
    if (n.name == name) return to_point(n);
  throw std::invalid_argument("unknown point '" + name + "'");
}

DivisorialPolytope to_polytope(const ProblemSpec& s) {
  DivisorialPolytope dp;
  dp.curve = make_curve(s);
  if (s.rank == 1)
    dp.h.box = LatticePolytope::segment(s.box[0][0], s.box[1][0]);
  else
    dp.h.box = LatticePolytope::hull(2, s.box);
  for (const auto& e : s.hstar) dp.h.slices[resolve(s, e.point)] = ConcavePL::from_points(s.rank, e.graph);
  return dp;
}

EvaluationSetup to_setup(const ProblemSpec& s) {
  EvaluationSetup st{to_polytope(s), {}, 0};
  if (s.eval_all) {
    st.points = admissible_points(st.dp);
  } else {
    for (const auto& n : s.eval) st.points.push_back(resolve(s, n));
  }
  return st;
}

namespace {

GraphPoint gp(long long u, long long a) { return {{Rational(u)}, Rational(a)}; }

void set_curve(ProblemSpec& s, const std::string& curve, long long p, long long default_p, bool default_elliptic,
               long long dA, long long dB) {
  s.p = p ? p : default_p;
  s.elliptic = default_elliptic;
  s.A = dA;
  s.B = dB;
  if (curve == "p1") {
    s.elliptic = false;
    s.A = s.B = 0;
  } else if (curve.rfind("elliptic", 0) == 0) {
    s.elliptic = true;
    auto colon = curve.find(':');
    if (colon != std::string::npos) {
      std::string rest = curve.substr(colon + 1);
      auto comma = rest.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("curve must be elliptic:A,B");
      s.A = std::stoll(rest.substr(0, comma));
      s.B = std::stoll(rest.substr(comma + 1));
    }
  } else if (!curve.empty()) {
    throw std::invalid_argument("unknown curve '" + curve + "'");
  }
  if (!is_prime(static_cast<u64>(s.p))) throw std::invalid_argument("p must be prime");
  if (!s.elliptic) s.A = s.B = 0;
}

// Q1, Q2 = 0, infinity on P1; a point and its negative on an elliptic curve
void add_pair(ProblemSpec& s) {
  if (!s.elliptic) {
    s.points.push_back({"Q1", false, 0, 0});
    s.points.push_back({"Q2", true, 0, 0});
    return;
  }
  Curve Y = make_curve(s);
  for (const auto& P : rational_points(Y)) {
    if (P.infinity || P.y == 0) continue;
    s.points.push_back({"Q1", false, P.x, P.y});
    s.points.push_back({"Q2", false, P.x, static_cast<long long>(Y.modulus() - P.y)});
    return;
  }
  throw std::invalid_argument("curve has no point with y != 0");
}

}  // namespace

ProblemSpec example(const std::string& name, const std::string& curve, long long p) {
  ProblemSpec s;
  if (name == "surface") {
    set_curve(s, curve, p, 7, false, 0, 3);
    add_pair(s);
    s.rank = 1;
    s.box = {{0}, {4}};
    SupportFunctionSlice t1(1, {{{Rational(0)}, Rational(0)}, {{Rational(4)}, Rational(2)}});
    s.hstar.push_back({"Q1", dual_of_slice(t1).vertices()});
    s.hstar.push_back({"Q2", {gp(0, 0), gp(2, 2), gp(3, 1), gp(4, -1)}});
  } else if (name == "threefold") {
    set_curve(s, curve, p, 7, false, 0, 0);
    if (s.elliptic) throw std::invalid_argument("the threefold example lives on P1");
    s.points = {{"zero", false, 0, 0}, {"inf", true, 0, 0}, {"one", false, 1, 0}};
    s.rank = 2;
    std::vector<ZVec> U = {{-1, 0}, {-1, 1}, {0, 1}, {1, 0}, {1, -1}, {0, -1}};
    s.box = U;
    std::vector<std::vector<long long>> C = {{0, 0, 0, 0, 1, 1}, {-2, -2, -1, -1, -2, -2}, {1, 1, 0, 0, 0, 0}};
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<TropicalTerm> T;
      for (std::size_t j = 0; j < U.size(); ++j) T.push_back({to_qvec(U[j]), Rational(-C[i][j])});
      s.hstar.push_back({s.points[i].name, dual_of_slice(SupportFunctionSlice(2, T)).vertices()});
    }
  } else if (name == "elliptic") {
    set_curve(s, curve, p, 7, true, 0, 3);
    add_pair(s);
    s.rank = 1;
    s.box = {{0}, {4}};
    s.hstar.push_back({"Q1", {gp(0, 1), gp(4, 1)}});
    s.hstar.push_back({"Q2", {gp(0, 0), gp(3, 6), gp(4, 2)}});
    Curve Y = make_curve(s);
    CurvePoint Q1 = resolve(s, "Q1"), Q2 = resolve(s, "Q2");
    int i = 0;
    for (const auto& P : rational_points(Y)) {
      if (P == Q1 || P == Q2) continue;
      NamedPoint n{"P" + std::to_string(++i), P.infinity, P.x, P.y};
      s.points.push_back(n);
      s.eval.push_back(n.name);
    }
    s.eval_all = false;
    return s;
  } else {
    throw std::invalid_argument("unknown example '" + name + "'");
  }
  s.eval_all = true;
  return s;
}

std::string validate_report(const ProblemSpec& s, bool* ok) {
  DivisorialPolytope dp = to_polytope(s);
  ValidationReport r = validate(dp);
  if (ok) *ok = r.ok;
  std::ostringstream os;
  os << "valid = " << (r.ok ? "true" : "false") << "\n";
  if (!r.ok) os << "failed_condition = " << r.failed_condition << "\n";
  os << "message = " << r.message << "\n";
  os << "semiample = " << (is_semiample(dp) ? "true" : "false") << "\n";
  os << "ample = " << (is_ample(dp) ? "true" : "false") << "\n";
  for (const auto& n : r.notes) os << "note = " << n << "\n";
  return os.str();
}

namespace {

const char* yes(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string info_report(const ProblemSpec& s) {
  EvaluationSetup st = to_setup(s);
  const DivisorialPolytope& dp = st.dp;
  const long long q = s.p;
  const long long l = static_cast<long long>(st.points.size());
  EvaluationCode C = build_code(st);
  KBounds K = k_bounds(dp);
  std::ostringstream os;
  os << "curve = " << dp.curve.describe() << "\n";
  os << "p = " << q << "\n";
  os << "rank = " << dp.rank() << "\n";
  os << "box = " << dp.h.box.to_string() << "\n";
  os << "rational_points = " << rational_points(dp.curve).size() << "\n";
  os << "l = " << l << "\n";
  os << "n = " << C.n << "\n";
  os << "k = " << C.k << "\n";
  os << "sections = " << C.rows << "\n";
  os << "k_lower = " << K.lower << "\n";
  os << "k_gamma = " << K.gamma_sum << "\n";
  os << "k_upper = " << K.upper << "\n";
  os << "k_equality = " << yes(K.equality_case) << "\n";
  if (dp.rank() == 1) {
    SurfaceBound B = d_lower_surface(dp.h, q, l);
    os << "lambda0 = " << B.lambda0 << "\n";
    os << "nu =";
    for (auto v : B.nu) os << " " << v;
    os << "\n";
    os << "d_lower = " << B.d << "\n";
  } else {
    os << "lambda0 = " << lambda0(project(dp.h)) << "\n";
    os << "d_lower = " << d_lower_general(dp.h, q, l) << "\n";
  }
  os << "d_upper = " << d_upper(dp, q, l).d << "\n";
  os << "vol = " << volume(dp.h) << "\n";
  os << "self_intersection = " << self_intersection(dp) << "\n";
  os << "weil_divisor = " << weil_divisor(dp).to_string() << "\n";
  if (dp.rank() == 1) {
    LinearInGenus g = genus_of_section(dp), chi = euler_characteristic(dp);
    os << "genus = " << g.value << "\n";
    os << "genus_form = " << g.to_string() << "\n";
    os << "euler_characteristic = " << chi.value << "\n";
    os << "euler_form = " << chi.to_string() << "\n";
    HasseWeil H = hasse_weil_diagnostic(dp, q);
    os << "hasse_weil_threshold = " << H.q_threshold << "\n";
  }
  os << "semiample = " << yes(is_semiample(dp)) << "\n";
  os << "ample = " << yes(is_ample(dp)) << "\n";
  return os.str();
}

std::string matrix_text(const EvaluationCode& C) {
  MatrixFp G = C.G;
  if (!C.injective) {
    RowReduction rr = rank_and_rref(C.G);
    G = MatrixFp(rr.rank, C.n, C.G.modulus());
    for (std::size_t i = 0; i < rr.rank; ++i)
      for (std::size_t j = 0; j < C.n; ++j) G.at(i, j) = rr.rref.at(i, j);
  }
  std::ostringstream os;
  os << C.n << " " << C.k << " " << G.modulus() << "\n";
  for (std::size_t i = 0; i < G.rows(); ++i) {
    for (std::size_t j = 0; j < G.cols(); ++j) os << (j ? " " : "") << G.at(i, j);
    os << "\n";
  }
  return os.str();
}

std::string distance_report(const ProblemSpec& s, unsigned long long budget) {
  EvaluationSetup st = to_setup(s);
  EvaluationCode C = build_code(st);
  const long long l = static_cast<long long>(st.points.size());
  long long lower = st.dp.rank() == 1 ? d_lower_surface(st.dp.h, s.p, l).d : d_lower_general(st.dp.h, s.p, l);
  long long upper = d_upper(st.dp, s.p, l).d;
  DistanceResult R = d_exact(C.G, budget);
  std::ostringstream os;
  os << "n = " << C.n << "\n";
  os << "k = " << C.k << "\n";
  os << "classes = " << R.classes << "\n";
  os << "d = " << R.d << "\n";
  os << "d_lower = " << lower << "\n";
  os << "d_upper = " << upper << "\n";
  os << "enumerator =";
  for (std::size_t w = 0; w < R.enumerator.size(); ++w)
    if (R.enumerator[w]) os << " " << w << ":" << R.enumerator[w];
  os << "\n";
  return os.str();
}

std::string compare_report(const Comparison& c) {
  std::ostringstream os;
  os << "q = " << c.q << "\ng = " << c.g << "\nl = " << c.l << "\nk1 = " << c.k1 << "\ntau = " << c.tau << "\n";
  os << "valid = " << yes(c.valid) << "\n";
  if (!c.valid) {
    os << "note = " << c.note << "\n";
    return os.str();
  }
  os << "swapped = " << yes(c.swapped) << "\n";
  os << "a = " << c.a << "\nalpha = " << c.alpha << "\nb = " << c.b << "\n";
  os << "k_est = " << c.k_est << "\nd_est = " << c.d_est << "\n";
  os << "k_tcode = " << c.k_tcode << "\nd_tcode = " << c.d_tcode << "\n";
  os << "k_inequality = " << yes(c.k_holds) << "\nd_inequality = " << yes(c.d_holds) << "\n";
  return os.str();
}

}  // namespace tcode::cli
