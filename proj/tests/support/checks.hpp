#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tcode/codes.hpp"

namespace tcode::testing {

struct CheckResult {
  int instances = 0;
  int failures = 0;
  std::string first_failure;
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
  bool ok() const { return instances > 0 && failures == 0; }
};

using Rng = std::mt19937_64;

long long uniform(Rng& rng, long long lo, long long hi);
Curve random_curve(Rng& rng, const std::vector<u32>& primes, bool allow_elliptic = true);
// integral vertices on [lo, hi]
ConcavePL random_concave_1d(Rng& rng, long long lo, long long hi, long long spread = 3);
LatticePolytope random_polygon(Rng& rng, long long r = 2);
ConcavePL random_concave_2d(Rng& rng, const LatticePolytope& box, long long spread = 2);
HStar random_hstar(Rng& rng, const Curve& Y, int m, int max_slices);

CheckResult lattice_count_identity(int n, std::uint64_t seed);
CheckResult dimension_sandwich(int n, std::uint64_t seed);
CheckResult riemann_roch_contract(int n, std::uint64_t seed);
CheckResult duality_round_trip(int n, std::uint64_t seed);
CheckResult polarization(int n, std::uint64_t seed);
CheckResult point_divisor_invariance(int n, std::uint64_t seed);
CheckResult distance_sandwich(int n, std::uint64_t seed);

struct RuledSweep {
  CheckResult closed_forms;
  CheckResult k_holds;
  CheckResult d_holds;
};
RuledSweep ruled_sweep(int n, std::uint64_t seed);

}  // namespace tcode::testing
