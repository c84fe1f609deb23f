#include <catch2/catch_amalgamated.hpp>

#include "cayley/perm.hpp"
#include "test_support.hpp"

using cayley::Bitset;
using cayley::Permutation;
using cayley::SplitMix64;

TEST_CASE("composition applies left factor first") {
  // a = (0 1), b = (1 2); a then b sends 0 -> 1 -> 2.
  Permutation a = Permutation::parse_cycles("(0 1)", 3);
  Permutation b = Permutation::parse_cycles("(1 2)", 3);
  Permutation c = compose(a, b);
  REQUIRE(c(0) == 2);
  REQUIRE(c(1) == 0);
  REQUIRE(c(2) == 1);
}

TEST_CASE("inverse undoes composition") {
  SplitMix64 rng(0x1A);
  for (int t = 0; t < 50; ++t) {
    Permutation p = testsupport::random_perm(1 + uint32_t(rng.below(10)), rng);
    REQUIRE(compose(p, p.inverse()).is_identity());
    REQUIRE(compose(p.inverse(), p).is_identity());
  }
}

TEST_CASE("cycle string roundtrip") {
  SplitMix64 rng(0x2B);
  for (int t = 0; t < 50; ++t) {
    uint32_t n = 1 + uint32_t(rng.below(12));
    Permutation p = testsupport::random_perm(n, rng);
    REQUIRE(Permutation::parse_cycles(p.to_cycle_string(), n) == p);
  }
  REQUIRE(Permutation::identity(5).to_cycle_string() == "()");
  REQUIRE(Permutation::parse_cycles("()", 4).is_identity());
}

TEST_CASE("parse_cycles rejects bad input") {
  REQUIRE_THROWS_AS(Permutation::parse_cycles("(0 1", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation::parse_cycles("(0 3)", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation::parse_cycles("(0 1)(1 2)", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation::parse_cycles("0 1", 3), std::invalid_argument);
}

TEST_CASE("apply_to_set maps sets pointwise") {
  Permutation p = Permutation::parse_cycles("(0 1 2 3)", 4);
  Bitset s(4);
  s.set(0);
  s.set(2);
  Bitset img = p.apply_to_set(s);
  REQUIRE(img.test(1));
  REQUIRE(img.test(3));
  REQUIRE(img.count() == 2);
}

TEST_CASE("smallest_moved and identity queries") {
  REQUIRE(Permutation::identity(4).smallest_moved() == 4);
  Permutation p = Permutation::parse_cycles("(2 3)", 5);
  REQUIRE(p.smallest_moved() == 2);
  REQUIRE_FALSE(p.is_identity());
}

TEST_CASE("image table constructor validates bijection") {
  REQUIRE_THROWS_AS(Permutation(std::vector<uint32_t>{0, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation(std::vector<uint32_t>{0, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation(std::vector<uint32_t>{}), std::invalid_argument);
}
