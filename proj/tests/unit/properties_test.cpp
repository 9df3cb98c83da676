#include <doctest.h>

#include "support/checks.hpp"

using namespace tcode::testing;

namespace {

void require(const CheckResult& r, int at_least) {
  INFO(r.first_failure);
  CHECK(r.instances >= at_least);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("lattice count identity per slice") { require(lattice_count_identity(200, 101), 100); }
TEST_CASE("dimension sandwich and equality case") { require(dimension_sandwich(150, 102), 100); }
TEST_CASE("Riemann-Roch dimension on genus 0 and 1") { require(riemann_roch_contract(200, 103), 100); }
TEST_CASE("duality round trip") { require(duality_round_trip(200, 104), 100); }
TEST_CASE("polarization recovers the volume") { require(polarization(150, 105), 100); }
TEST_CASE("point divisor mixed volume") { require(point_divisor_invariance(150, 106), 100); }
TEST_CASE("distance between its bounds") { require(distance_sandwich(30, 107), 30); }
TEST_CASE("ruled closed forms") {
  RuledSweep s = ruled_sweep(200, 108);
  require(s.closed_forms, 200);
  require(s.k_holds, 100);
}
