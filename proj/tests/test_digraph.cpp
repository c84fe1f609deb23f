#include <catch2/catch_amalgamated.hpp>

#include "cayley/digraph.hpp"
#include "cayley/group.hpp"
#include "test_support.hpp"

using namespace cayley;

TEST_CASE("connection set roundtrips") {
  ConnectionSet s = ConnectionSet::from_elements(6, {1, 4, 5});
  REQUIRE(s.elements() == std::vector<uint32_t>{1, 4, 5});
  REQUIRE(ConnectionSet::from_hex(6, s.to_hex()) == s);
  REQUIRE(ConnectionSet::from_mask(6, 0b110010) == s);
  REQUIRE_THROWS_AS(ConnectionSet::from_elements(4, {4}), std::invalid_argument);
}

TEST_CASE("cayley digraph arcs follow out(g) = S g") {
  FiniteGroup g = make_group("cyclic:4");
  ColoredDigraph d = cayley_digraph(g, ConnectionSet::from_elements(4, {1}));
  // arc from x to 1+x for every x
  for (uint32_t x = 0; x < 4; ++x) {
    REQUIRE(d.has_arc(x, (x + 1) % 4));
    REQUIRE(d.out(x).count() == 1);
  }
  REQUIRE(d.arc_count() == 4);

  // loops appear exactly when the identity is in the set
  ColoredDigraph with_id = cayley_digraph(g, ConnectionSet::from_elements(4, {0, 2}));
  for (uint32_t x = 0; x < 4; ++x) REQUIRE(with_id.has_arc(x, x));

  // non-abelian spot check: out(g) = {s*g}, not {g*s}
  FiniteGroup d6 = make_group("dihedral:6");
  ColoredDigraph cd = cayley_digraph(d6, ConnectionSet::from_elements(6, {3}));
  for (uint32_t x = 0; x < 6; ++x) {
    REQUIRE(cd.out(x).count() == 1);
    REQUIRE(cd.has_arc(x, d6.mul(3, x)));
  }
}

TEST_CASE("in rows are the transpose of out rows") {
  SplitMix64 rng(0xD1);
  for (int t = 0; t < 30; ++t) {
    ColoredDigraph g = testsupport::random_digraph(1 + uint32_t(rng.below(9)), rng);
    for (uint32_t u = 0; u < g.n(); ++u)
      for (uint32_t v = 0; v < g.n(); ++v) REQUIRE(g.out(u).test(v) == g.in(v).test(u));
  }
}

TEST_CASE("compact encoding roundtrip") {
  SplitMix64 rng(0xD2);
  for (int t = 0; t < 40; ++t) {
    ColoredDigraph g = testsupport::random_digraph(1 + uint32_t(rng.below(9)), rng);
    ColoredDigraph back = from_compact(to_compact(g));
    REQUIRE(back == g);
  }
  // colorless digraphs omit the color section
  ColoredDigraph plain = ColoredDigraph::from_arcs(2, {{0, 1}}, {0, 0});
  REQUIRE(to_compact(plain) == "2;02,00");
  REQUIRE(from_compact("2;02,00") == plain);
}

TEST_CASE("relabel and isomorphism checks agree") {
  SplitMix64 rng(0xD3);
  for (int t = 0; t < 40; ++t) {
    uint32_t n = 1 + uint32_t(rng.below(8));
    ColoredDigraph g = testsupport::random_digraph(n, rng);
    Permutation p = testsupport::random_perm(n, rng);
    ColoredDigraph h = relabel(g, p);
    REQUIRE(is_isomorphism(g, h, p));
    REQUIRE(h.arc_count() == g.arc_count());
    // automorphism test is the special case g == h
    REQUIRE(is_automorphism(g, Permutation::identity(n)));
  }
}

TEST_CASE("colors must match under isomorphism") {
  ColoredDigraph a = ColoredDigraph::from_arcs(2, {}, {0, 1});
  ColoredDigraph b = ColoredDigraph::from_arcs(2, {}, {1, 0});
  Permutation swap = Permutation::parse_cycles("(0 1)", 2);
  REQUIRE(is_isomorphism(a, b, swap));
  REQUIRE_FALSE(is_isomorphism(a, b, Permutation::identity(2)));
  REQUIRE_FALSE(is_automorphism(a, swap));
}
