#include <catch2/catch_amalgamated.hpp>

#include "corado/corado.hpp"

using namespace corado;

TEST_CASE("the construction sweep passes and counts every instance", "[verify]") {
  sweep_report r = verify_theorem(3, 2);
  REQUIRE(r.ok);
  REQUIRE(r.counterexample.empty());
  // 1 + 2 + 6 loopless matroids on 1..3 elements, times the tuples of at
  // most two nonempty subsets on each ground: 1×3 + 2×13 + 6×57.
  REQUIRE(r.instances == 371);
}

TEST_CASE("isomorphism pruning only shrinks the instance count", "[verify]") {
  sweep_report full = verify_theorem(3, 1);
  sweep_report pruned = verify_theorem(3, 1, true);
  REQUIRE(full.ok);
  REQUIRE(pruned.ok);
  REQUIRE(pruned.instances < full.instances);
}

TEST_CASE("the degree sweep passes at desk size", "[verify]") {
  sweep_report r = verify_dhr(3);
  REQUIRE(r.ok);
  REQUIRE(r.instances > 0);
}

TEST_CASE("the matching sweep is deterministic for a fixed seed", "[verify]") {
  sweep_report a = verify_rado(2, 3, 6, 99u);
  sweep_report b = verify_rado(2, 3, 6, 99u);
  REQUIRE(a.ok);
  REQUIRE(a.instances == b.instances);
  REQUIRE(a.instances > 0);
}
