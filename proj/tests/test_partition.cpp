#include <catch2/catch_amalgamated.hpp>

#include "cayley/partition.hpp"

using cayley::BlockPartition;
using cayley::Dsu;

TEST_CASE("from_cells sorts cells by minimum element") {
  BlockPartition p = BlockPartition::from_cells(6, {{5, 3}, {0, 4}, {2, 1}});
  REQUIRE(p.cells == std::vector<std::vector<uint32_t>>{{0, 4}, {1, 2}, {3, 5}});
  REQUIRE(p.cell_of[4] == 0);
  REQUIRE(p.cell_of[2] == 1);
  REQUIRE(p.cell_of[5] == 2);
  REQUIRE(p.base_cell_index == 0);
  REQUIRE(p.size() == 3);
}

TEST_CASE("from_cells validates cover and disjointness") {
  REQUIRE_THROWS_AS(BlockPartition::from_cells(3, {{0, 1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(BlockPartition::from_cells(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(BlockPartition::from_cells(3, {{0, 1}, {2, 3}}), std::invalid_argument);
  REQUIRE_THROWS_AS(BlockPartition::from_cells(3, {{0, 1}, {2}, {}}), std::invalid_argument);
}

TEST_CASE("singletons and single_cell") {
  REQUIRE(BlockPartition::singletons(3).size() == 3);
  REQUIRE(BlockPartition::single_cell(3).size() == 1);
  REQUIRE(BlockPartition::single_cell(3).cells[0] == std::vector<uint32_t>{0, 1, 2});
}

TEST_CASE("dsu unite and to_partition") {
  Dsu d(6);
  REQUIRE(d.unite(0, 3));
  REQUIRE(d.unite(3, 5));
  REQUIRE_FALSE(d.unite(5, 0));
  REQUIRE(d.unite(1, 2));
  REQUIRE(d.same(0, 5));
  REQUIRE_FALSE(d.same(0, 1));
  BlockPartition p = d.to_partition();
  REQUIRE(p.cells == std::vector<std::vector<uint32_t>>{{0, 3, 5}, {1, 2}, {4}});
}
