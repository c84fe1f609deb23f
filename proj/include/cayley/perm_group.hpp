#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "cayley/partition.hpp"
#include "cayley/perm.hpp"

namespace cayley {

// Permutation group held as a base and strong generating set. Construction is a
// deterministic Schreier-Sims: base points are the smallest moved points found,
// transversal entries are kept stable while orbits extend, and a verification
// pass repeats until every Schreier generator sifts to the identity. The same
// generator list therefore always produces the same chain.
class PermGroup {
 public:
  explicit PermGroup(uint32_t degree) : degree_(degree) {
    if (degree == 0) throw std::invalid_argument("PermGroup: degree must be positive");
    recompute_order();
  }

  PermGroup(uint32_t degree, const std::vector<Permutation>& generators) : degree_(degree) {
    if (degree == 0) throw std::invalid_argument("PermGroup: degree must be positive");
    std::unordered_set<Permutation, PermHash> seen;
    for (const Permutation& g : generators) {
      if (g.degree() != degree_) throw std::invalid_argument("PermGroup: degree mismatch among generators");
      if (g.is_identity() || !seen.insert(g).second) continue;
      gens_.push_back(g);
    }
    // Every input generator enters at level 0; sifting is a membership test and
    // dropping a generator's level-0 action would shrink the first orbit.
    for (const Permutation& g : gens_) add_strong(Permutation(g), 0);
    close_chain();
    recompute_order();
  }

  uint32_t degree() const { return degree_; }
  uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::vector<uint32_t> base() const {
    std::vector<uint32_t> b;
    for (const Level& L : levels_) b.push_back(L.base);
    return b;
  }

  std::vector<Permutation> strong_generators() const {
    std::vector<Permutation> out;
    std::unordered_set<Permutation, PermHash> seen;
    for (const Level& L : levels_)
      for (const Permutation& g : L.gens)
        if (seen.insert(g).second) out.push_back(g);
    return out;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("PermGroup::contains: degree mismatch");
    auto [r, l] = sift_from(p, 0);
    (void)l;
    return r.is_identity();
  }

  // All elements, enumerated as transversal products deepest level first. Order
  // is fixed by the chain, hence deterministic for a fixed generator list.
  std::vector<Permutation> elements(uint64_t cap = 1000000) const {
    if (order_ > cap) throw std::runtime_error("PermGroup::elements: order exceeds cap");
    std::vector<Permutation> out{Permutation::identity(degree_)};
    for (size_t l = levels_.size(); l-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(out.size() * levels_[l].orbit.size());
      for (uint32_t point = 0; point < degree_; ++point) {
        int32_t ti = levels_[l].tpos[point];
        if (ti < 0) continue;
        for (const Permutation& x : out) next.push_back(compose(x, levels_[l].transversal[size_t(ti)]));
      }
      out = std::move(next);
    }
    return out;
  }

  std::vector<uint32_t> orbit_of(uint32_t p) const {
    if (p >= degree_) throw std::invalid_argument("orbit_of: point out of range");
    std::vector<bool> seen(degree_, false);
    std::vector<uint32_t> orb{p};
    seen[p] = true;
    for (size_t i = 0; i < orb.size(); ++i)
      for (const Permutation& g : gens_) {
        uint32_t q = g(orb[i]);
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    return orb;
  }

  BlockPartition orbit_partition() const {
    Dsu d(degree_);
    for (const Permutation& g : gens_)
      for (uint32_t v = 0; v < degree_; ++v) d.unite(v, g(v));
    return d.to_partition();
  }

  bool is_transitive() const { return orbit_of(0).size() == degree_; }

 private:
  struct Level {
    uint32_t base;
    std::vector<Permutation> gens;          // strong generators living at this level
    std::vector<uint32_t> orbit;            // discovery order; orbit[0] == base
    std::vector<Permutation> transversal;   // transversal[i] maps base to orbit[i]
    std::vector<int32_t> tpos;              // point -> orbit index, -1 outside
  };

  // Returns the residue and the level where sifting stopped (levels_.size() if
  // it ran through every level).
  std::pair<Permutation, size_t> sift_from(Permutation g, size_t from) const {
    for (size_t l = from; l < levels_.size(); ++l) {
      uint32_t p = g(levels_[l].base);
      int32_t ti = levels_[l].tpos[p];
      if (ti < 0) return {std::move(g), l};
      g = compose(g, levels_[l].transversal[size_t(ti)].inverse());
    }
    return {std::move(g), levels_.size()};
  }

  void add_strong(Permutation r, size_t l) {
    if (r.is_identity()) return;
    if (l == levels_.size()) {
      Level L;
      L.base = r.smallest_moved();
      L.tpos.assign(degree_, -1);
      L.orbit.push_back(L.base);
      L.tpos[L.base] = 0;
      L.transversal.push_back(Permutation::identity(degree_));
      levels_.push_back(std::move(L));
    }
    levels_[l].gens.push_back(std::move(r));
    // The new generator fixes every base point above level l, so it acts on
    // each of those levels' orbits as well.
    for (size_t k = 0; k <= l; ++k) extend_orbit(k);
  }

  // Grows the orbit of level l's base under every strong generator stored at
  // level l or deeper (all of them fix the bases above l, so all of them lie
  // in the stabilizer this level represents). Transversal entries of already
  // reached points are never rewritten, so earlier sift results stay valid as
  // the chain grows.
  void extend_orbit(size_t l) {
    Level& L = levels_[l];
    for (size_t i = 0; i < L.orbit.size(); ++i)
      for (size_t m = l; m < levels_.size(); ++m)
        for (const Permutation& s : levels_[m].gens) {
          uint32_t q = s(L.orbit[i]);
          if (L.tpos[q] < 0) {
            L.tpos[q] = int32_t(L.orbit.size());
            L.transversal.push_back(compose(L.transversal[i], s));
            L.orbit.push_back(q);
          }
        }
  }

  void close_chain() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t l = 0; l < levels_.size(); ++l) {
        for (size_t pi = 0; pi < levels_[l].orbit.size(); ++pi) {
          for (size_t m = l; m < levels_.size(); ++m) {
            for (size_t si = 0; si < levels_[m].gens.size(); ++si) {
              uint32_t p = levels_[l].orbit[pi];
              // By value: add_strong below may reallocate generator storage.
              const Permutation s = levels_[m].gens[si];
              uint32_t q = s(p);
              const Permutation& tq = levels_[l].transversal[size_t(levels_[l].tpos[q])];
              Permutation u = compose(compose(levels_[l].transversal[pi], s), tq.inverse());
              if (u.is_identity()) continue;
              auto [r, d] = sift_from(std::move(u), l + 1);
              if (!r.is_identity()) {
                add_strong(std::move(r), d);
                changed = true;
              }
            }
          }
        }
      }
    }
  }

  void recompute_order() {
    unsigned __int128 o = 1;
    for (const Level& L : levels_) {
      o *= L.orbit.size();
      if (o > (unsigned __int128)UINT64_MAX) throw std::overflow_error("PermGroup: order exceeds 64 bits");
    }
    order_ = uint64_t(o);
  }

  uint32_t degree_ = 0;
  uint64_t order_ = 1;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

inline PermGroup group_from_generators(uint32_t degree, const std::vector<Permutation>& gens) {
  return PermGroup(degree, gens);
}

inline bool is_subgroup_of(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw std::invalid_argument("is_subgroup_of: degree mismatch");
  for (const Permutation& x : h.generators())
    if (!g.contains(x)) return false;
  return true;
}

inline bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup_of(a, b);
}

inline PermGroup closure(const PermGroup& g, const std::vector<Permutation>& extra) {
  std::vector<Permutation> gens = g.generators();
  for (const Permutation& e : extra) {
    if (e.degree() != g.degree()) throw std::invalid_argument("closure: degree mismatch");
    gens.push_back(e);
  }
  return PermGroup(g.degree(), gens);
}

inline PermGroup point_stabilizer(const PermGroup& g, uint32_t p) {
  if (p >= g.degree()) throw std::invalid_argument("point_stabilizer: point out of range");
  // Orbit of p with a transversal, then Schreier generators.
  std::vector<int32_t> tpos(g.degree(), -1);
  std::vector<uint32_t> orbit{p};
  std::vector<Permutation> trans{Permutation::identity(g.degree())};
  tpos[p] = 0;
  for (size_t i = 0; i < orbit.size(); ++i)
    for (const Permutation& s : g.generators()) {
      uint32_t q = s(orbit[i]);
      if (tpos[q] < 0) {
        tpos[q] = int32_t(orbit.size());
        trans.push_back(compose(trans[i], s));
        orbit.push_back(q);
      }
    }
  std::vector<Permutation> schreier;
  std::unordered_set<Permutation, PermHash> seen;
  for (size_t i = 0; i < orbit.size(); ++i)
    for (const Permutation& s : g.generators()) {
      uint32_t q = s(orbit[i]);
      Permutation u = compose(compose(trans[i], s), trans[size_t(tpos[q])].inverse());
      if (!u.is_identity() && seen.insert(u).second) schreier.push_back(std::move(u));
    }
  return PermGroup(g.degree(), schreier);
}

// H is normal in G. Precondition: H <= G.
inline bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup_of(h, g)) throw std::invalid_argument("is_normal: H is not a subgroup of G");
  for (const Permutation& x : h.generators())
    for (const Permutation& c : g.generators())
      if (!h.contains(compose(compose(c.inverse(), x), c))) return false;
  return true;
}

// Largest subgroup of R that is normal in G: the set of x in R whose whole
// G-conjugacy class stays inside R. Computed by pruning R's element list until
// it is closed under conjugation by the generators of G.
inline PermGroup core_in(const PermGroup& g, const PermGroup& r, uint64_t element_cap = 1000000) {
  if (!is_subgroup_of(r, g)) throw std::invalid_argument("core_in: R is not a subgroup of G");
  std::vector<Permutation> elems = r.elements(element_cap);
  std::unordered_set<Permutation, PermHash> alive(elems.begin(), elems.end());
  bool removed = true;
  while (removed) {
    removed = false;
    std::vector<Permutation> dead;
    for (const Permutation& x : alive) {
      for (const Permutation& c : g.generators()) {
        if (!alive.count(compose(compose(c.inverse(), x), c))) {
          dead.push_back(x);
          break;
        }
      }
    }
    for (const Permutation& x : dead) alive.erase(x);
    removed = !dead.empty();
  }
  std::vector<Permutation> core_gens(alive.begin(), alive.end());
  std::sort(core_gens.begin(), core_gens.end());
  PermGroup core(g.degree(), core_gens);
  if (!is_normal(g, core)) throw std::logic_error("core_in: result failed the normality check");
  return core;
}

// Overgroups G with R < G <= A in which R is maximal. Every such G equals
// <R, a> for any a in G \ R, so scanning <R, a> over all a in A \ R finds every
// candidate; a candidate survives when each of its elements outside R brings
// back the whole candidate.
inline std::vector<PermGroup> maximal_overgroups(const PermGroup& a, const PermGroup& r,
                                                 uint64_t element_cap = 1000000) {
  if (!is_subgroup_of(r, a)) throw std::invalid_argument("maximal_overgroups: R is not a subgroup of A");
  if (a.order() > element_cap) throw std::runtime_error("maximal_overgroups: |A| exceeds element cap");
  std::vector<Permutation> all = a.elements(element_cap);
  std::sort(all.begin(), all.end());
  std::vector<PermGroup> candidates;
  for (const Permutation& x : all) {
    if (r.contains(x)) continue;
    PermGroup g = closure(r, {x});
    bool dup = false;
    for (const PermGroup& c : candidates)
      if (c.order() == g.order() && is_subgroup_of(g, c)) {
        dup = true;
        break;
      }
    if (!dup) candidates.push_back(std::move(g));
  }
  std::vector<PermGroup> out;
  for (PermGroup& g : candidates) {
    bool maximal = true;
    for (const Permutation& b : g.elements(element_cap)) {
      if (r.contains(b)) continue;
      if (closure(r, {b}).order() != g.order()) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(std::move(g));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PermGroup& x, const PermGroup& y) { return x.order() < y.order(); });
  return out;
}

}  // namespace cayley
