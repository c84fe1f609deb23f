#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cayley/autgrp.hpp"
#include "cayley/bounds.hpp"
#include "cayley/census.hpp"
#include "cayley/digraph.hpp"
#include "cayley/group.hpp"
#include "cayley/lemmas.hpp"
#include "cayley/quotient.hpp"
#include "cayley/rng.hpp"

// Verification suites: each runner grinds through a family of instances and
// reports pass/fail plus instance counts as JSON. The CLI `verify` subcommand
// and the acceptance tests both run these.

namespace cayley {

struct SuiteResult {
  std::string name;
  bool pass = true;
  ordered_json report;
};

namespace detail {

inline std::vector<Permutation> regular_seed_perms(const FiniteGroup& g) {
  std::vector<Permutation> out;
  for (uint32_t gen : generating_set(g)) out.push_back(right_multiplication(g, gen));
  return out;
}

inline std::vector<std::vector<uint32_t>> proper_normal_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<uint32_t>> out;
  for (std::vector<uint32_t>& n : normal_subgroups(g))
    if (n.size() > 1 && n.size() < g.order()) out.push_back(std::move(n));
  return out;
}

// Induced permutation on the cells of a partition every generator maps onto
// itself cellwise; nullopt when some cell's image straddles two cells.
inline std::optional<Permutation> induced_cell_permutation(const Permutation& p, const BlockPartition& part) {
  std::vector<uint32_t> img(part.cells.size());
  for (uint32_t a = 0; a < part.cells.size(); ++a) {
    uint32_t target = part.cell_of[p(part.cells[a][0])];
    for (uint32_t v : part.cells[a])
      if (part.cell_of[p(v)] != target) return std::nullopt;
    img[a] = target;
  }
  return Permutation(std::move(img));
}

}  // namespace detail

// Every right-translation permutation of every catalog group with r <= cap:
// the number of subsets it fixes setwise, counted by scanning all 2^r
// subsets, must be 2^#cycles and at most the fixed-point bound.
inline SuiteResult verify_fixed_subsets(uint32_t cap = 12) {
  SuiteResult res{"fixed-subsets", true, {}};
  uint64_t groups = 0, perms = 0;
  for (const GroupSpec& spec : catalog()) {
    FiniteGroup g = make_group(spec);
    uint32_t r = g.order();
    if (r > cap) continue;
    ++groups;
    for (uint32_t e = 0; e < r; ++e) {
      Permutation p = right_multiplication(g, e);
      ++perms;
      uint64_t scan = 0;
      for (uint64_t mask = 0; mask < (uint64_t{1} << r); ++mask) {
        Bitset s = Bitset::from_mask(r, mask);
        if (p.apply_to_set(s) == s) ++scan;
      }
      FixedSubsetsCount fc = fixed_subsets_count(p);
      if (scan != fc.exact || double(scan) > fc.bound * (1 + 1e-12)) {
        res.pass = false;
        res.report["failure"] = {{"group", g.id()}, {"element", e}};
      }
    }
  }
  res.report["suite"] = res.name;
  res.report["groups"] = groups;
  res.report["permutations"] = perms;
  res.report["pass"] = res.pass;
  return res;
}

// Transitive groups of degree 3..6 drawn from the catalog's regular images
// and from automorphism groups of their Cayley digraphs. Degree 3 is checked
// by brute force over all 512 digraphs; larger degrees by counting orbits on
// ordered pairs. The stabilizer rank must match both counts, and non-regular
// groups must respect the 4*kappa <= 3n rank bound (checked inside
// invariant_digraph_count).
inline SuiteResult verify_invariant_digraphs() {
  SuiteResult res{"invariant-digraphs", true, {}};
  std::vector<PermGroup> groups;
  auto add_unique = [&](const PermGroup& g) {
    for (const PermGroup& h : groups)
      if (h.degree() == g.degree() && same_group(h, g)) return;
    groups.push_back(g);
  };
  for (const GroupSpec& spec : catalog()) {
    FiniteGroup g = make_group(spec);
    if (g.order() < 3 || g.order() > 6) continue;
    add_unique(regular_representation(g));
    std::vector<Permutation> seeds = detail::regular_seed_perms(g);
    for (uint64_t mask = 0; mask < (uint64_t{1} << g.order()); ++mask)
      add_unique(automorphism_group(cayley_digraph(g, ConnectionSet::from_mask(g.order(), mask)), seeds));
  }
  uint64_t degree3 = 0, larger = 0;
  for (const PermGroup& g : groups) {
    InvariantDigraphCount ic = invariant_digraph_count(g, 0);
    if (g.degree() == 3) {
      ++degree3;
      uint64_t brute = 0;
      for (uint32_t arcs = 0; arcs < (1u << 9); ++arcs) {
        bool inv = true;
        for (const Permutation& p : g.generators()) {
          for (uint32_t u = 0; u < 3 && inv; ++u)
            for (uint32_t v = 0; v < 3; ++v)
              if (((arcs >> (u * 3 + v)) & 1) != ((arcs >> (p(u) * 3 + p(v))) & 1)) {
                inv = false;
                break;
              }
          if (!inv) break;
        }
        if (inv) ++brute;
      }
      if (brute != ic.count) {
        res.pass = false;
        res.report["failure"] = {{"degree", 3}, {"order", ic.count}, {"brute", brute}};
      }
    } else {
      ++larger;
      if (arc_orbit_count(g) != ic.kappa) {
        res.pass = false;
        res.report["failure"] = {{"degree", g.degree()}, {"kappa", ic.kappa}};
      }
    }
  }
  res.report["suite"] = res.name;
  res.report["groups_checked"] = degree3 + larger;
  res.report["degree3_brute"] = degree3;
  res.report["pair_orbit_checked"] = larger;
  res.report["pass"] = res.pass;
  return res;
}

// Exhaustive implication check: across all catalog groups with r <= cap, all
// proper non-trivial normal subgroups and all 2^r connection sets, whenever
// the cell-slice hypothesis holds the partition-fixing subgroup must equal
// the right-translation image of N.
inline SuiteResult verify_partition_kernel(uint32_t cap = 8) {
  SuiteResult res{"partition-kernel", true, {}};
  uint64_t groups = 0, instances = 0, hypothesis_held = 0;
  for (const GroupSpec& spec : catalog()) {
    FiniteGroup g = make_group(spec);
    uint32_t r = g.order();
    if (r > cap) continue;
    std::vector<std::vector<uint32_t>> normals = detail::proper_normal_subgroups(g);
    if (normals.empty()) continue;
    ++groups;
    for (const std::vector<uint32_t>& n : normals)
      for (uint64_t mask = 0; mask < (uint64_t{1} << r); ++mask) {
        ++instances;
        Lemma41Report rep = lemma41_verify(g, n, ConnectionSet::from_mask(r, mask), cap);
        if (rep.hypothesis_holds) {
          ++hypothesis_held;
          if (!rep.equals_n) {
            res.pass = false;
            res.report["failure"] = {{"group", g.id()}, {"n_size", n.size()}, {"mask", mask}};
          }
        }
      }
  }
  res.report["suite"] = res.name;
  res.report["groups"] = groups;
  res.report["instances"] = instances;
  res.report["hypothesis_held"] = hypothesis_held;
  res.report["pass"] = res.pass;
  return res;
}

// Random instances comparing the adjacency route to sigma with the algebraic
// route through connection-set translates.
inline SuiteResult verify_sigma(uint64_t instances = 10000, uint64_t seed = 0x51600AULL) {
  SuiteResult res{"sigma", true, {}};
  std::vector<FiniteGroup> pool;
  std::vector<std::vector<std::vector<uint32_t>>> pool_normals;
  for (const GroupSpec& spec : catalog()) {
    FiniteGroup g = make_group(spec);
    if (g.order() > 12) continue;
    std::vector<std::vector<uint32_t>> normals = detail::proper_normal_subgroups(g);
    if (normals.empty()) continue;
    pool.push_back(std::move(g));
    pool_normals.push_back(std::move(normals));
  }
  SplitMix64 rng(seed);
  uint64_t mismatches = 0;
  for (uint64_t t = 0; t < instances; ++t) {
    size_t gi = size_t(rng.below(pool.size()));
    const FiniteGroup& g = pool[gi];
    const std::vector<uint32_t>& n = pool_normals[gi][size_t(rng.below(pool_normals[gi].size()))];
    ConnectionSet s = ConnectionSet::from_mask(g.order(), rng.below(uint64_t{1} << g.order()));
    BlockPartition p = coset_partition(g, n);
    uint32_t u = uint32_t(rng.below(g.order()));
    uint32_t j = uint32_t(rng.below(p.cells.size()));
    if (sigma(g, s, u, j, p) != sigma_algebraic(g, s, u, j, p)) {
      ++mismatches;
      res.pass = false;
    }
  }
  res.report["suite"] = res.name;
  res.report["instances"] = instances;
  res.report["mismatches"] = mismatches;
  res.report["pass"] = res.pass;
  return res;
}

// Exhaustive counts of the bounded subset families on a fixed instance list,
// checked against their closed-form bounds and against each other (the
// normaliser variant is the stricter condition).
inline SuiteResult verify_phi() {
  SuiteResult res{"phi", true, {}};
  struct Instance {
    const char* spec;
    std::vector<uint32_t> n;
  };
  std::vector<Instance> list = {
      {"cyclic:4", {0, 2}},
      {"cyclic:6", {0, 3}},
      {"cyclic:6", {0, 2, 4}},
      {"klein4", {0, 1}},
      {"dihedral:6", {0, 1, 2}},
  };
  res.report["suite"] = res.name;
  res.report["instances"] = ordered_json::array();
  for (const Instance& inst : list) {
    FiniteGroup g = make_group(inst.spec);
    BlockPartition cells = coset_partition(g, inst.n);
    for (uint32_t i = 1; i < cells.cells.size(); ++i) {
      PhiCensus plain = phi_census(g, inst.n, i, PhiVariant::plain);
      PhiCensus norm = phi_census(g, inst.n, i, PhiVariant::normaliser);
      if (norm.count > plain.count) res.pass = false;
      ordered_json row;
      row["group"] = g.id();
      row["n_size"] = inst.n.size();
      row["cell"] = i;
      row["plain_count"] = plain.count;
      row["plain_log2_bound"] = plain.log2_bound;
      row["normaliser_count"] = norm.count;
      row["normaliser_log2_bound"] = norm.log2_bound;
      res.report["instances"].push_back(row);
    }
  }
  res.report["pass"] = res.pass;
  return res;
}

// Random (group, normal subgroup, connection set) triples: the parity
// quotient must match the Cayley digraph of the quotient group on the parity
// connection set; translations must induce automorphisms of the orbit
// quotient; the setwise stabilizer of a cell must equal the point stabilizer
// times N (checked through orders); and at r <= 10 the partition-fixing
// subgroup of the automorphism group must be the core of the join of the
// vertex stabilizer with the group core.
inline SuiteResult verify_quotients(uint64_t instances = 200, uint64_t seed = 0x0707ULL) {
  SuiteResult res{"quotients", true, {}};
  std::vector<FiniteGroup> pool;
  std::vector<std::vector<std::vector<uint32_t>>> pool_normals;
  for (const GroupSpec& spec : catalog()) {
    FiniteGroup g = make_group(spec);
    if (g.order() > 16) continue;
    std::vector<std::vector<uint32_t>> normals = detail::proper_normal_subgroups(g);
    if (normals.empty()) continue;
    pool.push_back(std::move(g));
    pool_normals.push_back(std::move(normals));
  }
  SplitMix64 rng(seed);
  uint64_t kernel_checked = 0, kernel_skipped = 0;
  auto fail = [&](const FiniteGroup& g, const char* what) {
    res.pass = false;
    if (!res.report.contains("failure")) res.report["failure"] = {{"group", g.id()}, {"check", what}};
  };
  for (uint64_t t = 0; t < instances; ++t) {
    size_t gi = size_t(rng.below(pool.size()));
    const FiniteGroup& g = pool[gi];
    uint32_t r = g.order();
    const std::vector<uint32_t>& n = pool_normals[gi][size_t(rng.below(pool_normals[gi].size()))];
    ConnectionSet s = ConnectionSet::from_mask(r, rng.below(uint64_t{1} << r));
    ColoredDigraph gamma = cayley_digraph(g, s);
    BlockPartition cells = coset_partition(g, n);

    // parity quotient vs quotient-group Cayley digraph
    QuotientGroup q = quotient_group(g, n);
    if (odd_quotient(gamma, cells) != cayley_digraph(q.group, odd_connection_set(g, s, q))) fail(g, "odd-quotient");

    // translations descend to the orbit quotient
    PermGroup reg = regular_representation(g);
    std::vector<Permutation> n_perms;
    for (uint32_t e : n) n_perms.push_back(right_multiplication(g, e));
    PermGroup n_reg(r, n_perms);
    QuotientResult nq = normal_quotient(gamma, reg, n_reg);
    for (const Permutation& p : reg.generators()) {
      std::optional<Permutation> ind = detail::induced_cell_permutation(p, nq.cells);
      if (!ind || !is_automorphism(nq.graph, *ind)) fail(g, "induced-automorphism");
    }

    // setwise cell stabilizer order identity, for every transitive group G
    // with the N-translations normal inside it
    PermGroup aut = automorphism_group(gamma, detail::regular_seed_perms(g));
    std::vector<const PermGroup*> ambient{&reg};
    if (is_normal(aut, n_reg)) ambient.push_back(&aut);
    for (const PermGroup* gp : ambient) {
      std::vector<Permutation> cell_gens;
      bool well_defined = true;
      for (const Permutation& p : gp->generators()) {
        std::optional<Permutation> ind = detail::induced_cell_permutation(p, nq.cells);
        if (!ind) {
          well_defined = false;
          break;
        }
        cell_gens.push_back(std::move(*ind));
      }
      if (!well_defined) {
        fail(g, "cell-action");
        continue;
      }
      std::vector<uint32_t> orbit{0};
      std::vector<bool> seen(nq.cells.cells.size(), false);
      seen[0] = true;
      for (size_t i = 0; i < orbit.size(); ++i)
        for (const Permutation& p : cell_gens) {
          uint32_t img = p(orbit[i]);
          if (!seen[img]) {
            seen[img] = true;
            orbit.push_back(img);
          }
        }
      uint64_t stab_pt = point_stabilizer(*gp, 0).order();
      uint64_t n_fixing = 0;
      for (const Permutation& p : n_perms)
        if (p(0) == 0) ++n_fixing;
      unsigned __int128 lhs = (unsigned __int128)gp->order() * n_fixing;
      unsigned __int128 rhs = (unsigned __int128)orbit.size() * stab_pt * n.size();
      if (lhs != rhs) fail(g, "cell-stabilizer");
    }

    // kernel identity at r <= 10
    if (r <= 10) {
      PermGroup g1 = point_stabilizer(aut, 0);
      PermGroup core = core_in(aut, reg);
      PermGroup join = closure(core, g1.generators());
      if (join.order() > 100000) {
        ++kernel_skipped;
      } else {
        ++kernel_checked;
        PermGroup lhs = core_in(aut, join);
        PermGroup rhs = subgroup_fixing_partition(gamma, core.orbit_partition());
        if (!same_group(lhs, rhs)) fail(g, "kernel-identity");
      }
    }
  }
  res.report["suite"] = res.name;
  res.report["instances"] = instances;
  res.report["kernel_checked"] = kernel_checked;
  res.report["kernel_skipped"] = kernel_skipped;
  res.report["pass"] = res.pass;
  return res;
}

inline std::vector<std::string> all_suite_names() {
  return {"fixed-subsets", "invariant-digraphs", "partition-kernel", "sigma", "phi", "quotients"};
}

inline SuiteResult run_suite(const std::string& name) {
  if (name == "fixed-subsets") return verify_fixed_subsets();
  if (name == "invariant-digraphs") return verify_invariant_digraphs();
  if (name == "partition-kernel") return verify_partition_kernel();
  if (name == "sigma") return verify_sigma();
  if (name == "phi") return verify_phi();
  if (name == "quotients") return verify_quotients();
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace cayley
