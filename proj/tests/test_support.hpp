#pragma once

// Shared helpers for the unit and acceptance suites: independent oracles that
// recompute the library's answers the slow, obviously-correct way.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "cayley/digraph.hpp"
#include "cayley/perm.hpp"
#include "cayley/rng.hpp"

namespace testsupport {

using cayley::ColoredDigraph;
using cayley::Permutation;
using cayley::SplitMix64;

// Group order by plain BFS closure over composition, no stabilizer chains.
inline uint64_t naive_group_order(uint32_t n, const std::vector<Permutation>& gens) {
  std::set<std::vector<uint32_t>> seen;
  std::vector<Permutation> frontier{Permutation::identity(n)};
  seen.insert(frontier[0].images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier)
      for (const Permutation& g : gens) {
        Permutation q = compose(p, g);
        if (seen.insert(q.images()).second) next.push_back(q);
      }
    frontier = std::move(next);
    if (seen.size() > 2000000) throw std::runtime_error("naive_group_order: too large");
  }
  return seen.size();
}

inline Permutation random_perm(uint32_t n, SplitMix64& rng) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (uint32_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
  return Permutation(img);
}

// Random colored digraph; arc probability num/64, colors drawn from
// {1 class, 2 classes, 3 classes} so refinement sees varied seeds.
inline ColoredDigraph random_digraph(uint32_t n, SplitMix64& rng, uint32_t arc_num = 24) {
  std::vector<std::pair<uint32_t, uint32_t>> arcs;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if (rng.below(64) < arc_num) arcs.emplace_back(a, b);
  uint32_t palette = 1 + uint32_t(rng.below(3));
  std::vector<uint32_t> colors(n, 0);
  if (palette > 1)
    for (uint32_t v = 0; v < n; ++v) colors[v] = uint32_t(rng.below(palette));
  return ColoredDigraph::from_arcs(n, arcs, colors);
}

// All permutations of degree n, for brute-force isomorphism checks.
inline void for_each_perm(uint32_t n, const std::function<void(const Permutation&)>& fn) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  do {
    fn(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

inline bool brute_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.n() != b.n()) return false;
  if (a.n() > 8) throw std::runtime_error("brute_isomorphic: degree too large");
  bool found = false;
  for_each_perm(a.n(), [&](const Permutation& p) {
    if (!found && cayley::is_isomorphism(a, b, p)) found = true;
  });
  return found;
}

}  // namespace testsupport
