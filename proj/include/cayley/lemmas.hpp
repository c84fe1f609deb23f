#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cayley/bounds.hpp"
#include "cayley/digraph.hpp"
#include "cayley/group.hpp"
#include "cayley/partition.hpp"
#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"
#include "cayley/quotient.hpp"

namespace cayley {

// --- fixed subsets of a permutation ------------------------------------------

struct FixedSubsetsCount {
  uint64_t exact = 0;    // 2^(number of cycles, fixed points included)
  double bound = 0.0;    // 2^(|fixed| + (degree - |fixed|)/2)
};

// A subset is fixed setwise iff it is a union of cycles, so the exact count
// is 2^#cycles; the bound trades every non-trivial cycle for at least two
// points.
inline FixedSubsetsCount fixed_subsets_count(const Permutation& p) {
  if (p.degree() > 62) throw std::invalid_argument("fixed_subsets_count: degree too large for exact count");
  auto cycles = p.cycles(true);
  uint64_t fixed = 0;
  for (const auto& c : cycles)
    if (c.size() == 1) ++fixed;
  FixedSubsetsCount out;
  out.exact = uint64_t{1} << cycles.size();
  out.bound = std::pow(2.0, double(fixed) + double(p.degree() - fixed) / 2.0);
  if (double(out.exact) > out.bound * (1 + 1e-12))
    throw std::logic_error("fixed_subsets_count: exact count exceeds the bound");
  return out;
}

// --- invariant digraph counting ------------------------------------------------

struct InvariantDigraphCount {
  uint64_t kappa = 0;  // orbits of a point stabilizer on all points
  uint64_t count = 0;  // 2^kappa invariant digraphs
};

// For transitive G, the digraphs invariant under G correspond to unions of
// arc orbits out of a fixed point, so there are 2^kappa of them. Non-regular
// transitive groups must satisfy 4*kappa <= 3n; a violation is a logic error
// because it would contradict the counting argument this models.
inline InvariantDigraphCount invariant_digraph_count(const PermGroup& g, uint32_t omega) {
  if (!g.is_transitive()) throw std::invalid_argument("invariant_digraph_count: group is not transitive");
  if (omega >= g.degree()) throw std::invalid_argument("invariant_digraph_count: point out of range");
  if (g.degree() > 62) throw std::invalid_argument("invariant_digraph_count: degree too large");
  PermGroup stab = point_stabilizer(g, omega);
  InvariantDigraphCount out;
  out.kappa = stab.orbit_partition().cells.size();
  out.count = uint64_t{1} << out.kappa;
  bool regular = g.order() == g.degree();
  if (!regular && 4 * out.kappa > 3 * g.degree())
    throw std::logic_error("invariant_digraph_count: rank bound violated for a non-regular group");
  return out;
}

// Orbits of g acting on ordered pairs of points. For transitive g this equals
// the point-stabilizer orbit count, giving an independent route to kappa.
inline uint64_t arc_orbit_count(const PermGroup& g) {
  uint32_t n = g.degree();
  if (n > 2048) throw std::invalid_argument("arc_orbit_count: degree too large");
  Dsu dsu(n * n);
  for (const Permutation& p : g.generators())
    for (uint32_t u = 0; u < n; ++u)
      for (uint32_t v = 0; v < n; ++v) dsu.unite(u * n + v, p(u) * n + p(v));
  uint64_t count = 0;
  for (uint32_t i = 0; i < n * n; ++i)
    if (dsu.find(i) == i) ++count;
  return count;
}

// --- kernel of the coset partition ---------------------------------------------

struct Lemma41Report {
  bool hypothesis_holds = false;
  uint64_t fs_order = 0;
  bool equals_n = false;
  // set when the hypothesis fails: cell index and the restricted element that
  // fixes that cell's slice of S
  std::optional<std::pair<uint32_t, Permutation>> witness;
};

namespace detail {

// Restriction of p to a cell it fixes setwise, re-indexed by ascending vertex.
inline Permutation restrict_to_cell(const Permutation& p, const std::vector<uint32_t>& cell) {
  std::vector<uint32_t> img(cell.size());
  for (size_t a = 0; a < cell.size(); ++a) {
    uint32_t target = p(cell[a]);
    size_t pos = size_t(std::lower_bound(cell.begin(), cell.end(), target) - cell.begin());
    if (pos >= cell.size() || cell[pos] != target)
      throw std::invalid_argument("restrict_to_cell: element leaves the cell");
    img[a] = uint32_t(pos);
  }
  return Permutation(std::move(img));
}

}  // namespace detail

// Builds F_S, the subgroup of Aut(cayley(R,S)) fixing every coset of N
// setwise, and tests the hypothesis that no non-base cell's slice of S is
// invariant under a non-identity restriction of the vertex-0 stabilizer of
// F_S. When the hypothesis holds, F_S should be exactly the right-translation
// image of N; equals_n reports that comparison.
inline Lemma41Report lemma41_verify(const FiniteGroup& r, const std::vector<uint32_t>& n_elems,
                                    const ConnectionSet& s, uint32_t cap = 12, size_t element_cap = 1000000) {
  if (r.order() > cap) throw std::invalid_argument("lemma41_verify: order exceeds cap");
  if (n_elems.size() <= 1 || n_elems.size() >= r.order())
    throw std::invalid_argument("lemma41_verify: N must be proper and non-trivial");
  uint64_t nmask = elements_to_mask(r, n_elems);
  if (subgroup_closure_mask(r, nmask) != nmask || !is_normal_mask(r, nmask))
    throw std::invalid_argument("lemma41_verify: N is not a normal subgroup");
  if (s.r != r.order()) throw std::invalid_argument("lemma41_verify: connection set order mismatch");

  ColoredDigraph gamma = cayley_digraph(r, s);
  BlockPartition cells = coset_partition(r, n_elems);
  PermGroup fs = subgroup_fixing_partition(gamma, cells);

  Lemma41Report rep;
  rep.fs_order = fs.order();
  std::vector<Permutation> n_perms;
  for (uint32_t n : n_elems) n_perms.push_back(right_multiplication(r, n));
  rep.equals_n = same_group(fs, PermGroup(r.order(), n_perms));

  PermGroup stab = point_stabilizer(fs, 0);
  std::vector<Permutation> stab_elems = stab.elements(element_cap);
  rep.hypothesis_holds = true;
  for (uint32_t i = 1; i < cells.cells.size() && rep.hypothesis_holds; ++i) {
    const std::vector<uint32_t>& cell = cells.cells[i];
    Bitset si(uint32_t(cell.size()));
    for (size_t a = 0; a < cell.size(); ++a)
      if (s.set.test(cell[a])) si.set(uint32_t(a));
    std::set<Permutation> restricted;
    for (const Permutation& f : stab_elems) restricted.insert(detail::restrict_to_cell(f, cell));
    for (const Permutation& rho : restricted) {
      if (rho.is_identity()) continue;
      if (rho.apply_to_set(si) == si) {
        rep.hypothesis_holds = false;
        rep.witness = {i, rho};
        break;
      }
    }
  }
  return rep;
}

// --- common out-neighbour sets ---------------------------------------------------

// Common out-neighbours of vertex 0 and vertex u lying in cell j, read off the
// digraph adjacency.
inline std::vector<uint32_t> sigma(const FiniteGroup& r, const ConnectionSet& s, uint32_t u, uint32_t j,
                                   const BlockPartition& p) {
  if (s.r != r.order() || p.n != r.order()) throw std::invalid_argument("sigma: size mismatch");
  if (u >= r.order()) throw std::invalid_argument("sigma: vertex out of range");
  if (j >= p.cells.size()) throw std::invalid_argument("sigma: cell index out of range");
  ColoredDigraph gamma = cayley_digraph(r, s);
  Bitset common = gamma.out(0) & gamma.out(u);
  std::vector<uint32_t> out;
  for (uint32_t v : p.cells[j])
    if (common.test(v)) out.push_back(v);
  return out;
}

// The same set computed algebraically: S meets its right translate by u
// inside cell j. Kept separate so tests can compare the two routes.
inline std::vector<uint32_t> sigma_algebraic(const FiniteGroup& r, const ConnectionSet& s, uint32_t u, uint32_t j,
                                             const BlockPartition& p) {
  if (s.r != r.order() || p.n != r.order()) throw std::invalid_argument("sigma_algebraic: size mismatch");
  if (u >= r.order()) throw std::invalid_argument("sigma_algebraic: vertex out of range");
  if (j >= p.cells.size()) throw std::invalid_argument("sigma_algebraic: cell index out of range");
  Bitset translate(r.order());
  s.set.for_each([&](uint32_t e) { translate.set(r.mul(e, u)); });
  Bitset common = s.set & translate;
  std::vector<uint32_t> out;
  for (uint32_t v : p.cells[j])
    if (common.test(v)) out.push_back(v);
  return out;
}

// --- exhaustive counts for the quotient-based subset bounds -----------------------

enum class PhiVariant { plain, normaliser };

struct PhiCensus {
  uint64_t count = 0;
  double log2_bound = 0.0;
};

// Counts subsets S admitting some f in F_S that fixes vertex 0, acts
// non-trivially on cell i, and (normaliser variant) normalises the
// right-translation image of N. The matching closed-form bound is evaluated
// alongside and the count is checked against it.
inline PhiCensus phi_census(const FiniteGroup& r, const std::vector<uint32_t>& n_elems, uint32_t i,
                            PhiVariant variant, size_t element_cap = 1000000) {
  if (r.order() > 10) throw std::invalid_argument("phi_census: order exceeds cap");
  uint64_t nmask = elements_to_mask(r, n_elems);
  if (n_elems.size() <= 1 || n_elems.size() >= r.order() || subgroup_closure_mask(r, nmask) != nmask ||
      !is_normal_mask(r, nmask))
    throw std::invalid_argument("phi_census: N must be a proper non-trivial normal subgroup");
  BlockPartition cells = coset_partition(r, n_elems);
  if (i == 0 || i >= cells.cells.size()) throw std::invalid_argument("phi_census: cell index must name a non-base cell");

  std::set<Permutation> n_set;
  for (uint32_t n : n_elems) n_set.insert(right_multiplication(r, n));

  PhiCensus out;
  uint64_t space = uint64_t{1} << r.order();
  for (uint64_t mask = 0; mask < space; ++mask) {
    ConnectionSet s = ConnectionSet::from_mask(r.order(), mask);
    PermGroup fs = subgroup_fixing_partition(cayley_digraph(r, s), cells);
    bool hit = false;
    for (const Permutation& f : point_stabilizer(fs, 0).elements(element_cap)) {
      bool moves_cell = false;
      for (uint32_t v : cells.cells[i])
        if (f(v) != v) {
          moves_cell = true;
          break;
        }
      if (!moves_cell) continue;
      if (variant == PhiVariant::normaliser) {
        bool normalises = true;
        Permutation finv = f.inverse();
        for (const Permutation& n : n_set)
          if (!n_set.count(compose(compose(finv, n), f))) {
            normalises = false;
            break;
          }
        if (!normalises) continue;
      }
      hit = true;
      break;
    }
    if (hit) ++out.count;
  }

  BoundParams bp;
  bp.r = r.order();
  bp.n = n_elems.size();
  out.log2_bound = bound_eval_log2(variant == PhiVariant::normaliser ? BoundKind::L2_2 : BoundKind::L2_3, bp);
  double limit = std::min(double(r.order()), out.log2_bound);
  if (out.count > 0 && std::log2(double(out.count)) > limit * (1 + 1e-12) + 1e-9)
    throw std::logic_error("phi_census: count exceeds its bound");
  return out;
}

}  // namespace cayley
