#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cayley/autgrp.hpp"
#include "cayley/digraph.hpp"
#include "cayley/group.hpp"
#include "cayley/partition.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

// Subgroup of Aut(g) fixing every cell of p setwise: recolor each vertex by
// the pair (old color, cell) and take the automorphism group of the result.
inline PermGroup subgroup_fixing_partition(const ColoredDigraph& g, const BlockPartition& p) {
  if (p.n != g.n()) throw std::invalid_argument("subgroup_fixing_partition: size mismatch");
  std::vector<std::pair<uint32_t, uint32_t>> keys(g.n());
  for (uint32_t v = 0; v < g.n(); ++v) keys[v] = {g.color(v), p.cell_of[v]};
  std::vector<std::pair<uint32_t, uint32_t>> vals(keys);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<uint32_t> col(g.n());
  for (uint32_t v = 0; v < g.n(); ++v)
    col[v] = uint32_t(std::lower_bound(vals.begin(), vals.end(), keys[v]) - vals.begin());
  std::vector<Bitset> rows;
  rows.reserve(g.n());
  for (uint32_t v = 0; v < g.n(); ++v) rows.push_back(g.out(v));
  return automorphism_group(ColoredDigraph(std::move(rows), std::move(col)));
}

struct QuotientResult {
  ColoredDigraph graph;   // vertex i is cell i
  BlockPartition cells;
};

// Quotient of a vertex-transitive digraph by the orbits of a normal subgroup
// of a transitive automorphism group. Cell a sends an arc to cell b when any
// member does. The orbit count is cross-checked against the group orders:
// #cells * |G_0| * |N| must equal |G| * |N_0|.
inline QuotientResult normal_quotient(const ColoredDigraph& g, const PermGroup& big, const PermGroup& normal) {
  if (big.degree() != g.n() || normal.degree() != g.n())
    throw std::invalid_argument("normal_quotient: degree mismatch");
  for (const Permutation& p : big.generators())
    if (!is_automorphism(g, p)) throw std::invalid_argument("normal_quotient: group does not act on the digraph");
  if (!is_subgroup_of(normal, big)) throw std::invalid_argument("normal_quotient: N is not a subgroup of G");
  if (!is_normal(big, normal)) throw std::invalid_argument("normal_quotient: N is not normal in G");
  if (!big.is_transitive()) throw std::invalid_argument("normal_quotient: G is not transitive");

  BlockPartition cells = normal.orbit_partition();
  uint32_t q = uint32_t(cells.cells.size());
  unsigned __int128 lhs = (unsigned __int128)q * point_stabilizer(big, 0).order() * normal.order();
  unsigned __int128 rhs = (unsigned __int128)big.order() * point_stabilizer(normal, 0).order();
  if (lhs != rhs) throw std::logic_error("normal_quotient: orbit count fails the order identity");

  std::vector<Bitset> members(q, Bitset(g.n()));
  std::vector<uint32_t> colors(q);
  for (uint32_t a = 0; a < q; ++a) {
    colors[a] = g.color(cells.cells[a][0]);
    for (uint32_t v : cells.cells[a]) {
      members[a].set(v);
      if (g.color(v) != colors[a]) throw std::invalid_argument("normal_quotient: cell is not monochromatic");
    }
  }
  std::vector<Bitset> rows(q, Bitset(q));
  for (uint32_t a = 0; a < q; ++a) {
    Bitset reach(g.n());
    for (uint32_t v : cells.cells[a]) reach |= g.out(v);
    for (uint32_t b = 0; b < q; ++b)
      if (reach.intersects(members[b])) rows[a].set(b);
  }
  return QuotientResult{ColoredDigraph(std::move(rows), std::move(colors)), std::move(cells)};
}

// Parity quotient: requires that the number of arcs from a vertex of cell a
// into cell b does not depend on the chosen vertex, and keeps an arc a -> b
// exactly when that number is odd. Cell colors carry over when cells are
// monochromatic; otherwise every quotient vertex gets color 0.
inline ColoredDigraph odd_quotient(const ColoredDigraph& g, const BlockPartition& p) {
  if (p.n != g.n()) throw std::invalid_argument("odd_quotient: size mismatch");
  uint32_t q = uint32_t(p.cells.size());
  std::vector<Bitset> members(q, Bitset(g.n()));
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t v : p.cells[a]) members[a].set(v);
  std::vector<Bitset> rows(q, Bitset(q));
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) {
      uint64_t c0 = g.out(p.cells[a][0]).count_and(members[b]);
      for (uint32_t v : p.cells[a])
        if (g.out(v).count_and(members[b]) != c0)
          throw std::invalid_argument("odd_quotient: arc count into a cell is not constant");
      if (c0 & 1) rows[a].set(b);
    }
  bool mono = true;
  std::vector<uint32_t> colors(q, 0);
  for (uint32_t a = 0; a < q && mono; ++a) {
    colors[a] = g.color(p.cells[a][0]);
    for (uint32_t v : p.cells[a])
      if (g.color(v) != colors[a]) mono = false;
  }
  if (!mono) colors.assign(q, 0);
  return ColoredDigraph(std::move(rows), std::move(colors));
}

// Connection set of the parity quotient on the quotient group: a coset enters
// exactly when it meets S in an odd number of elements. Indices follow the
// coset numbering of q.
inline ConnectionSet odd_connection_set(const FiniteGroup& r, const ConnectionSet& s, const QuotientGroup& q) {
  if (s.r != r.order() || q.projection.size() != r.order())
    throw std::invalid_argument("odd_connection_set: size mismatch");
  std::vector<uint32_t> parity(q.group.order(), 0);
  s.set.for_each([&](uint32_t e) { parity[q.projection[e]] ^= 1; });
  Bitset out(q.group.order());
  for (uint32_t i = 0; i < q.group.order(); ++i)
    if (parity[i]) out.set(i);
  return ConnectionSet(q.group.order(), std::move(out));
}

}  // namespace cayley
