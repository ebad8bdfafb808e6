#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "corado/corado.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace corado;
using fixtures::code_of;

TEST_CASE("canonical subset order sorts by size, then earliest extra element", "[bits]") {
  std::vector<mask_t> all;
  for (mask_t s = 0; s < 8; ++s) all.push_back(s);
  std::sort(all.begin(), all.end(), subset_order{});
  REQUIRE(all == std::vector<mask_t>{0, 1, 2, 4, 3, 5, 6, 7});

  // Within a size class the order is not numeric: {1,4} precedes {2,3}.
  REQUIRE(subset_less(0b1001, 0b0110));
  REQUIRE_FALSE(subset_less(0b0110, 0b1001));
  REQUIRE_FALSE(subset_less(5, 5));
}

TEST_CASE("k-subsets enumerate every set of the requested size", "[bits]") {
  std::vector<mask_t> pairs = k_subsets(4, 2);
  REQUIRE(pairs.size() == 6);
  std::set<mask_t> seen(pairs.begin(), pairs.end());
  REQUIRE(seen.size() == 6);
  for (mask_t s : pairs) REQUIRE(popcount(s) == 2);
  REQUIRE(k_subsets(5, 0) == std::vector<mask_t>{0});
  REQUIRE(k_subsets(3, 3) == std::vector<mask_t>{7});
}

TEST_CASE("for_each_subset walks all subsets of a mask once", "[bits]") {
  std::set<mask_t> seen;
  for_each_subset(0b1010, [&](mask_t s) { seen.insert(s); });
  REQUIRE(seen == std::set<mask_t>{0, 0b0010, 0b1000, 0b1010});
}

TEST_CASE("ground sets map labels to positions and back", "[ground]") {
  ground_set g({"a", "b", "c"});
  REQUIRE(g.size() == 3);
  REQUIRE(g.index("b") == 1);
  REQUIRE(g.label(2) == "c");
  REQUIRE(g.mask_of({"a", "c"}) == 0b101);
  REQUIRE(g.set_string(0b101) == "{a,c}");
  REQUIRE(g.set_string(0) == "{}");
  REQUIRE(ground_set::numbered(3) == ground_set({"1", "2", "3"}));

  REQUIRE(code_of([] { ground_set({"a", "a"}); }) == errc::duplicate_edge_label);
  REQUIRE(code_of([&] { g.index("z"); }) == errc::unknown_label);
}

TEST_CASE("hat copies and concatenation guard their label spaces", "[ground]") {
  ground_set g({"1", "2"});
  ground_set hats = ground_set::hat_copy(g);
  REQUIRE(hats.label(0) == "1^");
  REQUIRE(hats.label(1) == "2^");
  ground_set both = ground_set::concat(hats, ground_set({"A1"}));
  REQUIRE(both.size() == 3);
  REQUIRE(code_of([&] { ground_set::concat(g, g); }) == errc::ground_sets_overlap);
}

TEST_CASE("uniform matroid ranks match the brute-force oracle", "[matroid]") {
  for (int k = 0; k <= 5; ++k) {
    matroid u = matroid::uniform(k, ground_set::numbered(5));
    for (mask_t s = 0; s < 32; ++s) {
      REQUIRE(u.rank_of(s) == oracle::rank(u.bases(), s));
      REQUIRE(u.is_independent(s) == oracle::independent(u.bases(), s));
    }
  }
  REQUIRE(code_of([] { matroid::uniform(4, ground_set::numbered(3)); }) ==
          errc::rank_out_of_range);
}

TEST_CASE("basis-family validation rejects bad input", "[matroid]") {
  ground_set g = ground_set::numbered(4);
  REQUIRE(code_of([&] { matroid::from_bases(g, {}); }) == errc::empty_family);
  REQUIRE(code_of([&] { matroid::from_bases(g, {0b0011, 0b0111}); }) ==
          errc::unequal_cardinalities);
  // {1,2} and {3,4} admit no exchange at all.
  REQUIRE(code_of([&] { matroid::from_bases(g, {0b0011, 0b1100}); }) ==
          errc::exchange_axiom_violation);
  // Duplicates collapse instead of erroring.
  matroid m = matroid::from_bases(g, {0b0011, 0b0011, 0b0101});
  REQUIRE(m.bases().size() == 2);
}

TEST_CASE("graphic matroids are forests of the underlying graph", "[matroid]") {
  matroid triangle = matroid::graphic({"u", "v", "w"},
                                      {{"u", "v", "1"}, {"v", "w", "2"}, {"w", "u", "3"}});
  REQUIRE(triangle == matroid::uniform(2, ground_set::numbered(3)));

  matroid m = fixtures::seven_edge_graphic();
  REQUIRE(m.rank() == 4);
  // Edges 2, 3, 4 bound a triangle, so together they only span two of it.
  REQUIRE(m.rank_of(fixtures::mask_of(m, {"2", "3", "4"})) == 2);
  for (mask_t s = 0; s < (mask_t(1) << 7); ++s)
    REQUIRE(m.rank_of(s) == oracle::rank(m.bases(), s));
  // The pendant edge 7 lies in every spanning forest.
  REQUIRE(m.coloops() == fixtures::mask_of(m, {"7"}));
  REQUIRE(m.loops() == 0);

  REQUIRE(code_of([] {
            matroid::graphic({"u", "u"}, {});
          }) == errc::duplicate_edge_label);
  REQUIRE(code_of([] {
            matroid::graphic({"u"}, {{"u", "x", "1"}});
          }) == errc::unknown_label);
}

TEST_CASE("corank-1 matroids drop one element of the support", "[matroid]") {
  ground_set g = ground_set::numbered(3);
  matroid h = matroid::hyperplane(g, 0b011);
  REQUIRE(h.bases() == std::vector<mask_t>{0b101, 0b110});
  REQUIRE(h.rank() == 2);
  REQUIRE(code_of([&] { matroid::hyperplane(g, 0); }) == errc::empty_support);
  REQUIRE(code_of([&] { matroid::hyperplane(g, 0b1011); }) == errc::ground_set_mismatch);
}

TEST_CASE("duality complements bases and swaps loops with coloops", "[matroid]") {
  matroid m = fixtures::seven_edge_graphic();
  matroid d = m.dual();
  REQUIRE(d.rank() == 3);
  for (mask_t b : m.bases()) REQUIRE(d.is_independent(m.ground().full_mask() ^ b));
  REQUIRE(d.dual() == m);
  REQUIRE(d.loops() == m.coloops());
  REQUIRE(d.coloops() == m.loops());
}

TEST_CASE("closure, flats, and circuits follow their definitions", "[matroid]") {
  matroid m = fixtures::seven_edge_graphic();
  for (mask_t s = 0; s < (mask_t(1) << 7); ++s)
    REQUIRE(m.closure(s) == oracle::closure(m.bases(), 7, s));
  // Completing the triangle: the closure of {2,3} picks up 4.
  REQUIRE(m.closure(fixtures::mask_of(m, {"2", "3"})) == fixtures::mask_of(m, {"2", "3", "4"}));

  matroid u = matroid::uniform(2, ground_set::numbered(3));
  REQUIRE(u.flats() == std::vector<mask_t>{0, 0b001, 0b010, 0b100, 0b111});
  REQUIRE(u.circuits() == std::vector<mask_t>{0b111});
  for (mask_t c : m.circuits()) {
    REQUIRE_FALSE(m.is_independent(c));
    for (int b : bits_of(c)) REQUIRE(m.is_independent(c ^ (mask_t(1) << b)));
  }
}

TEST_CASE("direct sums juxtapose independence", "[matroid]") {
  matroid a = matroid::uniform(1, ground_set({"1", "2"}));
  matroid b = matroid::uniform(2, ground_set({"3", "4", "5"}));
  matroid s = matroid::direct_sum(a, b);
  REQUIRE(s.rank() == 3);
  REQUIRE(s.ground().size() == 5);
  REQUIRE(s.bases().size() == a.bases().size() * b.bases().size());
  for (mask_t x = 0; x < 4; ++x)
    for (mask_t y = 0; y < 8; ++y)
      REQUIRE(s.is_independent(x | (y << 2)) ==
              (a.is_independent(x) && b.is_independent(y)));
  REQUIRE(code_of([&] { matroid::direct_sum(a, a); }) == errc::ground_sets_overlap);
}

TEST_CASE("relabeling renames without changing structure", "[matroid]") {
  matroid u = matroid::uniform(1, ground_set({"1", "2"}));
  matroid r = u.relabel({{"1", "x"}, {"2", "y"}});
  REQUIRE(r.ground() == ground_set({"x", "y"}));
  REQUIRE(r.bases() == u.bases());
  REQUIRE(code_of([&] { u.relabel({{"1", "x"}}); }) == errc::not_a_bijection);
  REQUIRE(code_of([&] { u.relabel({{"1", "x"}, {"2", "x"}}); }) == errc::not_a_bijection);
}

TEST_CASE("matroid counts match the literature", "[enumerate]") {
  // Labeled matroids on n = 1..5 elements: 2, 5, 16, 68, 406.
  const long long expected[] = {2, 5, 16, 68, 406};
  for (int n = 1; n <= 5; ++n) {
    long long count = 0;
    for_each_matroid(n, [&](const matroid&) { ++count; });
    REQUIRE(count == expected[n - 1]);
  }
  long long loopless = 0;
  for_each_loopless_matroid(3, [&](const matroid& m) {
    REQUIRE(m.loops() == 0);
    ++loopless;
  });
  REQUIRE(loopless == 6);
}

TEST_CASE("isomorphism keys are relabeling-invariant", "[enumerate]") {
  matroid m = matroid::from_bases(ground_set::numbered(4), {0b0011, 0b0101, 0b0110});
  matroid r = m.relabel({{"1", "4"}, {"2", "3"}, {"3", "2"}, {"4", "1"}});
  REQUIRE(iso_canonical_form(m) == iso_canonical_form(r));
  REQUIRE(iso_canonical_form(m) !=
          iso_canonical_form(matroid::uniform(2, ground_set::numbered(4))));
}

TEST_CASE("random basis families pass the exchange filter", "[enumerate]") {
  std::mt19937 rng(7);
  for (int i = 0; i < 25; ++i) {
    matroid m = random_matroid(4, rng);
    std::vector<mask_t> family = m.bases();
    REQUIRE(is_basis_family(family));
  }
}
