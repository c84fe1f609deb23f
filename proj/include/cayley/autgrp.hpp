#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/digraph.hpp"
#include "cayley/partition.hpp"
#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"

// Automorphism group and canonical form via individualization-refinement.
// Every quantity fed to the refiner depends only on colors and adjacency,
// never on vertex labels, so the search tree of a relabeled digraph is the
// relabeled search tree. That equivariance is what makes the leaf
// certificates comparable and the orbit pruning sound.

namespace cayley {

namespace detail {

inline uint32_t compact_colors(std::vector<uint32_t>& col) {
  std::vector<uint32_t> vals(col);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (uint32_t& c : col) c = uint32_t(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
  return uint32_t(vals.size());
}

// Iterated degree refinement. A vertex signature is its color, its loop flag
// and its out/in arc counts into every color class; new colors are the ranks
// of the distinct signatures. Stops when the class count stops growing and
// returns the coloring from the last round that still split something, so the
// result is a pure function of the isomorphism type.
inline uint32_t refine_colors(const ColoredDigraph& g, std::vector<uint32_t>& col) {
  uint32_t n = g.n();
  uint32_t k = compact_colors(col);
  while (k < n) {
    std::vector<std::vector<uint64_t>> sig(n);
    std::vector<uint32_t> co(k), ci(k);
    for (uint32_t v = 0; v < n; ++v) {
      std::fill(co.begin(), co.end(), 0);
      std::fill(ci.begin(), ci.end(), 0);
      g.out(v).for_each([&](uint32_t u) { ++co[col[u]]; });
      g.in(v).for_each([&](uint32_t u) { ++ci[col[u]]; });
      std::vector<uint64_t>& s = sig[v];
      s.push_back(col[v]);
      s.push_back(g.has_arc(v, v) ? 1 : 0);
      for (uint32_t c = 0; c < k; ++c)
        if (co[c] | ci[c]) {
          s.push_back(c);
          s.push_back(co[c]);
          s.push_back(ci[c]);
        }
    }
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) { return sig[a] < sig[b]; });
    std::vector<uint32_t> col2(n);
    uint32_t k2 = 0;
    for (uint32_t i = 0; i < n; ++i) {
      if (i && sig[order[i]] != sig[order[i - 1]]) ++k2;
      col2[order[i]] = k2;
    }
    ++k2;
    if (k2 == k) break;
    col = std::move(col2);
    k = k2;
  }
  return k;
}

// Splits v off from its class (v strictly below its old classmates) and
// refines. The class count strictly increases when v's class had >= 2
// members, so search depth is bounded.
inline std::vector<uint32_t> individualize(const ColoredDigraph& g, const std::vector<uint32_t>& col, uint32_t v) {
  std::vector<uint32_t> col2(col.size());
  for (uint32_t u = 0; u < col.size(); ++u) col2[u] = 2 * col[u] + (u == v ? 0 : 1);
  refine_colors(g, col2);
  return col2;
}

// Branching cell: smallest non-singleton class, ties broken by color value.
inline std::vector<uint32_t> target_cell(const std::vector<uint32_t>& col, uint32_t k) {
  std::vector<uint32_t> size(k, 0);
  for (uint32_t c : col) ++size[c];
  uint32_t best = k;
  for (uint32_t c = 0; c < k; ++c)
    if (size[c] >= 2 && (best == k || size[c] < size[best])) best = c;
  std::vector<uint32_t> cell;
  for (uint32_t v = 0; v < col.size(); ++v)
    if (col[v] == best) cell.push_back(v);
  return cell;
}

inline void push32(std::vector<uint8_t>& b, uint32_t v) {
  b.push_back(uint8_t(v >> 24));
  b.push_back(uint8_t(v >> 16));
  b.push_back(uint8_t(v >> 8));
  b.push_back(uint8_t(v));
}

// Certificate of a discrete coloring: the digraph rewritten in color order,
// plus the final colors of the individualized vertices in order. The trailer
// pins down where the branching path ended up, so leaves with equal
// certificates agree on their whole path under the relabeling that links them.
inline std::vector<uint8_t> leaf_certificate(const ColoredDigraph& g, const std::vector<uint32_t>& col,
                                             const std::vector<uint32_t>& path) {
  uint32_t n = g.n();
  std::vector<uint32_t> pos2v(n);
  for (uint32_t v = 0; v < n; ++v) pos2v[col[v]] = v;
  std::vector<uint8_t> bytes;
  push32(bytes, n);
  for (uint32_t i = 0; i < n; ++i) push32(bytes, g.color(pos2v[i]));
  for (uint32_t i = 0; i < n; ++i) {
    uint8_t acc = 0;
    uint32_t nb = 0;
    for (uint32_t j = 0; j < n; ++j) {
      acc = uint8_t(acc << 1) | uint8_t(g.has_arc(pos2v[i], pos2v[j]) ? 1 : 0);
      if (++nb == 8) {
        bytes.push_back(acc);
        acc = 0;
        nb = 0;
      }
    }
    if (nb) bytes.push_back(uint8_t(acc << (8 - nb)));
  }
  push32(bytes, uint32_t(path.size()));
  for (uint32_t p : path) push32(bytes, col[p]);
  return bytes;
}

class AutSearch {
 public:
  AutSearch(const ColoredDigraph& g, std::vector<Permutation> seeds, bool canonical_mode)
      : g_(g), n_(g.n()), canonical_(canonical_mode), seeds_(std::move(seeds)) {
    for (const Permutation& s : seeds_)
      if (!is_automorphism(g_, s)) throw std::invalid_argument("AutSearch: seed is not an automorphism");
    seed_chain_.push_back(PermGroup(n_, seeds_));
  }

  void run() {
    std::vector<uint32_t> col = g_.colors();
    refine_colors(g_, col);
    descend(col, 0, true);
  }

  const std::vector<Permutation>& found_generators() const { return gens_; }
  const std::vector<uint8_t>& best_certificate() const { return best_cert_; }
  const std::vector<uint32_t>& best_labeling() const { return best_label_; }

 private:
  // Pruning invariant: when the loop at an anchored node (one whose path is a
  // prefix of the first leaf's path) runs, every generator found so far fixes
  // that prefix pointwise, because generators map their leaf's path onto the
  // first path and deeper anchored loops finished before any generator
  // existed. So orbits of the found group, joined with orbits of the seed
  // stabilizer of the prefix, identify children with isomorphic subtrees.
  void descend(const std::vector<uint32_t>& col, uint32_t depth, bool anchored) {
    uint32_t k = *std::max_element(col.begin(), col.end()) + 1;
    if (k == n_) {
      process_leaf(col);
      return;
    }
    std::vector<uint32_t> cell = target_cell(col, k);
    Dsu local(n_);
    std::vector<uint32_t> explored;
    size_t gens_merged = 0;
    if (anchored) {
      BlockPartition sp = seed_chain_[depth].orbit_partition();
      for (const std::vector<uint32_t>& c : sp.cells)
        for (size_t i = 1; i < c.size(); ++i) local.unite(c[0], c[i]);
    }
    for (uint32_t u : cell) {
      if (anchored) {
        while (gens_merged < gens_.size()) {
          const Permutation& p = gens_[gens_merged++];
          for (uint32_t v = 0; v < n_; ++v) local.unite(v, p(v));
        }
        bool skip = false;
        for (uint32_t w : explored)
          if (local.same(u, w)) {
            skip = true;
            break;
          }
        if (skip) continue;
        explored.push_back(u);
      }
      if (!have_first_) {
        first_path_.push_back(u);
        seed_chain_.push_back(point_stabilizer(seed_chain_[depth], u));
      }
      path_.push_back(u);
      bool child_anchored = anchored && (!have_first_ || first_path_[depth] == u);
      descend(individualize(g_, col, u), depth + 1, child_anchored);
      path_.pop_back();
      if (backjump_to_ >= 0) {
        if (backjump_to_ == int64_t(depth)) backjump_to_ = -1;
        else return;
      }
    }
  }

  void process_leaf(const std::vector<uint32_t>& col) {
    std::vector<uint8_t> cert = leaf_certificate(g_, col, path_);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = cert;
      first_pos2v_.assign(n_, 0);
      for (uint32_t v = 0; v < n_; ++v) first_pos2v_[col[v]] = v;
      if (canonical_) {
        best_cert_ = std::move(cert);
        best_label_ = col;
      }
      return;
    }
    if (canonical_ && cert < best_cert_) {
      best_cert_ = cert;
      best_label_ = col;
    }
    if (cert != first_cert_) return;
    std::vector<uint32_t> img(n_);
    for (uint32_t v = 0; v < n_; ++v) img[v] = first_pos2v_[col[v]];
    Permutation gamma(std::move(img));
    if (gamma.is_identity()) return;
    if (!is_automorphism(g_, gamma)) throw std::logic_error("AutSearch: certificate collision without automorphism");
    gens_.push_back(std::move(gamma));
    if (!canonical_) {
      size_t d = 0;
      while (d < path_.size() && d < first_path_.size() && path_[d] == first_path_[d]) ++d;
      backjump_to_ = int64_t(d);
    }
  }

  const ColoredDigraph& g_;
  uint32_t n_;
  bool canonical_;
  std::vector<Permutation> seeds_;
  std::vector<PermGroup> seed_chain_;
  std::vector<uint32_t> path_;
  std::vector<uint32_t> first_path_;
  bool have_first_ = false;
  std::vector<uint8_t> first_cert_;
  std::vector<uint32_t> first_pos2v_;
  std::vector<uint8_t> best_cert_;
  std::vector<uint32_t> best_label_;
  std::vector<Permutation> gens_;
  int64_t backjump_to_ = -1;
};

}  // namespace detail

// The full automorphism group. Seeds are automorphisms already known to the
// caller (they are verified); their orbits shortcut the search, which matters
// for vertex-transitive inputs.
inline PermGroup automorphism_group(const ColoredDigraph& g, const std::vector<Permutation>& seeds = {}) {
  detail::AutSearch search(g, seeds, false);
  search.run();
  std::vector<Permutation> gens = seeds;
  for (const Permutation& p : search.found_generators()) gens.push_back(p);
  return PermGroup(g.n(), gens);
}

// Relabeling-invariant certificate: equal bytes exactly when two digraphs are
// isomorphic (as colored digraphs). labeling sends a vertex to its canonical
// position.
struct CanonicalCode {
  std::vector<uint8_t> bytes;
  Permutation labeling;

  bool operator==(const CanonicalCode& o) const { return bytes == o.bytes; }
  bool operator!=(const CanonicalCode& o) const { return bytes != o.bytes; }
  bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
      s.push_back(digits[b >> 4]);
      s.push_back(digits[b & 0xF]);
    }
    return s;
  }
};

inline CanonicalCode canonical_form(const ColoredDigraph& g) {
  detail::AutSearch search(g, {}, true);
  search.run();
  return CanonicalCode{search.best_certificate(), Permutation(search.best_labeling())};
}

inline ColoredDigraph canonical_digraph(const ColoredDigraph& g) { return relabel(g, canonical_form(g).labeling); }

// Exhaustive reference implementation for cross-checks.
inline std::vector<Permutation> brute_force_automorphisms(const ColoredDigraph& g) {
  if (g.n() > 8) throw std::runtime_error("brute_force_automorphisms: only for n <= 8");
  std::vector<uint32_t> img(g.n());
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation p(img);
    if (is_automorphism(g, p)) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace cayley
