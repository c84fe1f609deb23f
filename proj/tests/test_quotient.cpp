#include <catch2/catch_amalgamated.hpp>

#include "cayley/quotient.hpp"
#include "test_support.hpp"

using namespace cayley;

TEST_CASE("subgroup fixing a partition, directed 4-cycle") {
  FiniteGroup z4 = make_group("cyclic:4");
  ColoredDigraph cyc = cayley_digraph(z4, ConnectionSet::from_elements(4, {1}));
  BlockPartition p = BlockPartition::from_cells(4, {{0, 2}, {1, 3}});
  // of the four rotations, only the half turn preserves both cells setwise
  PermGroup f = subgroup_fixing_partition(cyc, p);
  REQUIRE(f.order() == 2);
  REQUIRE(f.contains(Permutation::parse_cycles("(0 2)(1 3)", 4)));
}

TEST_CASE("odd quotient of a worked example") {
  FiniteGroup g = make_group("cyclic:6");
  ConnectionSet s = ConnectionSet::from_elements(6, {1, 2, 4});
  ColoredDigraph gamma = cayley_digraph(g, s);
  QuotientGroup q = quotient_group(g, {0, 3});

  // cosets {0,3},{1,4},{2,5}; S meets them 0, 2, 1 times, so only the third
  // coset survives the parity filter
  ConnectionSet sq = odd_connection_set(g, s, q);
  REQUIRE(sq.elements() == std::vector<uint32_t>{2});

  ColoredDigraph dq = odd_quotient(gamma, coset_partition(g, {0, 3}));
  REQUIRE(dq == cayley_digraph(q.group, sq));
}

TEST_CASE("odd quotient demands constant arc counts between cells") {
  // vertex 0 sends one arc into {2,3}, vertex 1 sends two
  ColoredDigraph g = ColoredDigraph::from_arcs(4, {{0, 2}, {1, 2}, {1, 3}}, {});
  BlockPartition p = BlockPartition::from_cells(4, {{0, 1}, {2, 3}});
  REQUIRE_THROWS_AS(odd_quotient(g, p), std::invalid_argument);
}

TEST_CASE("odd quotient of cayley digraphs equals the quotient construction") {
  SplitMix64 rng(0x0DD);
  int done = 0;
  for (const GroupSpec& spec : catalog()) {
    FiniteGroup g = make_group(spec);
    uint32_t r = g.order();
    if (r < 4 || r > 12) continue;
    std::vector<std::vector<uint32_t>> normals;
    for (const auto& nsub : normal_subgroups(g))
      if (nsub.size() > 1 && nsub.size() < r) normals.push_back(nsub);
    if (normals.empty()) continue;
    for (int t = 0; t < 10; ++t) {
      const auto& n_elems = normals[rng.below(normals.size())];
      uint64_t mask = rng.next() & ((uint64_t(1) << r) - 1);
      ConnectionSet s = ConnectionSet::from_mask(r, mask);
      QuotientGroup q = quotient_group(g, n_elems);
      ColoredDigraph lhs = odd_quotient(cayley_digraph(g, s), coset_partition(g, n_elems));
      REQUIRE(lhs == cayley_digraph(q.group, odd_connection_set(g, s, q)));
      ++done;
    }
  }
  REQUIRE(done > 50);
}

TEST_CASE("normal quotient on the regular representation") {
  FiniteGroup g = make_group("cyclic:6");
  ConnectionSet s = ConnectionSet::from_elements(6, {1, 2, 4});
  ColoredDigraph gamma = cayley_digraph(g, s);
  PermGroup reg = regular_representation(g);
  std::vector<Permutation> nperms{right_multiplication(g, 0), right_multiplication(g, 3)};
  QuotientResult res = normal_quotient(gamma, reg, PermGroup(6, nperms));
  REQUIRE(res.cells.cells == std::vector<std::vector<uint32_t>>{{0, 3}, {1, 4}, {2, 5}});
  // union of out-arcs: cell 0 reaches cells 1 and 2, and so on around
  REQUIRE(res.graph.has_arc(0, 1));
  REQUIRE(res.graph.has_arc(0, 2));
  REQUIRE_FALSE(res.graph.has_arc(0, 0));
  REQUIRE(res.graph.arc_count() == 6);
}

TEST_CASE("normal quotient validates its inputs") {
  FiniteGroup g = make_group("cyclic:6");
  ColoredDigraph gamma = cayley_digraph(g, ConnectionSet::from_elements(6, {1}));
  PermGroup reg = regular_representation(g);
  // N not a subgroup of G
  std::vector<Permutation> stray{Permutation::parse_cycles("(0 1)", 6)};
  REQUIRE_THROWS_AS(normal_quotient(gamma, reg, PermGroup(6, stray)), std::invalid_argument);
  // G not a group of automorphisms
  std::vector<Permutation> nperms{right_multiplication(g, 3)};
  PermGroup n(6, nperms);
  PermGroup bad = closure(reg, {Permutation::parse_cycles("(0 1)", 6)});
  REQUIRE_THROWS_AS(normal_quotient(gamma, bad, n), std::invalid_argument);
}
