#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tcode/codes.hpp"

namespace tcode::cli {

struct NamedPoint {
  std::string name;
  bool infinity = false;
  long long x = 0, y = 0;
  bool operator==(const NamedPoint&) const = default;
};

struct HStarEntry {
  std::string point;
  std::vector<GraphPoint> graph;
  bool operator==(const HStarEntry&) const = default;
};

struct ProblemSpec {
  long long p = 0;
  bool elliptic = false;
  long long A = 0, B = 0;
  std::vector<NamedPoint> points;
  int rank = 1;
  std::vector<ZVec> box;  // [lo], [hi] for rank 1; polygon corners for rank 2
  std::vector<HStarEntry> hstar;
  bool eval_all = true;
  std::vector<std::string> eval;
  bool operator==(const ProblemSpec&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg);
  int line, col;
};

ProblemSpec parse(const std::string& text);
std::string render(const ProblemSpec& s);

Curve make_curve(const ProblemSpec& s);
CurvePoint resolve(const ProblemSpec& s, const std::string& name);
DivisorialPolytope to_polytope(const ProblemSpec& s);
EvaluationSetup to_setup(const ProblemSpec& s);

// built-in instances: surface, threefold, elliptic
ProblemSpec example(const std::string& name, const std::string& curve = "", long long p = 0);

std::string validate_report(const ProblemSpec& s, bool* ok);
std::string info_report(const ProblemSpec& s);
std::string matrix_text(const EvaluationCode& C);
std::string distance_report(const ProblemSpec& s, unsigned long long budget);
std::string compare_report(const Comparison& c);

}  // namespace tcode::cli
