#include <catch2/catch_amalgamated.hpp>

#include "cayley/bitset.hpp"
#include "cayley/rng.hpp"

using cayley::Bitset;
using cayley::SplitMix64;

TEST_CASE("bitset basics") {
  Bitset b(10);
  REQUIRE(b.size() == 10);
  REQUIRE(b.count() == 0);
  b.set(3);
  b.set(9);
  REQUIRE(b.test(3));
  REQUIRE(b.test(9));
  REQUIRE_FALSE(b.test(4));
  REQUIRE(b.count() == 2);
  b.reset(3);
  REQUIRE_FALSE(b.test(3));
  REQUIRE(b.count() == 1);
}

TEST_CASE("bitset hex is little endian in bit order") {
  Bitset b(8);
  b.set(0);
  b.set(4);
  // bits 0 and 4 -> 0x11
  REQUIRE(b.to_hex() == "11");
  Bitset c = Bitset::from_hex(8, "11");
  REQUIRE(c == b);

  Bitset d(12);
  d.set(8);
  REQUIRE(d.to_hex() == "0001");
  REQUIRE(Bitset::from_hex(12, "0001") == d);
}

TEST_CASE("bitset hex roundtrip on random masks") {
  SplitMix64 rng(0xB17);
  for (uint32_t n : {1u, 7u, 8u, 9u, 63u, 64u, 65u, 130u}) {
    for (int trial = 0; trial < 20; ++trial) {
      Bitset b(n);
      for (uint32_t i = 0; i < n; ++i)
        if (rng.below(2)) b.set(i);
      REQUIRE(Bitset::from_hex(n, b.to_hex()) == b);
    }
  }
}

TEST_CASE("bitset from_hex rejects bad input") {
  REQUIRE_THROWS_AS(Bitset::from_hex(8, "zz"), std::invalid_argument);
  // a set bit beyond the stated size
  REQUIRE_THROWS_AS(Bitset::from_hex(4, "ff"), std::invalid_argument);
}

TEST_CASE("bitset set algebra") {
  Bitset a(16), b(16);
  a.set(1);
  a.set(5);
  a.set(9);
  b.set(5);
  b.set(9);
  REQUIRE(b.is_subset_of(a));
  REQUIRE_FALSE(a.is_subset_of(b));
  REQUIRE(a.count_and(b) == 2);
  std::vector<uint32_t> seen;
  a.for_each([&](uint32_t i) { seen.push_back(i); });
  REQUIRE(seen == std::vector<uint32_t>{1, 5, 9});
  REQUIRE(a.to_vector() == seen);
}

TEST_CASE("bitset ordering is by word value from the top") {
  Bitset a(8), b(8);
  a.set(0);
  b.set(1);
  REQUIRE(a < b);
  REQUIRE_FALSE(b < a);
}
