#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cayley/bitset.hpp"
#include "cayley/group.hpp"
#include "cayley/perm.hpp"

namespace cayley {

// Subset of a group of order r, the future out-connection set of a Cayley
// digraph. Kept separate from Bitset so the group order travels with it.
struct ConnectionSet {
  uint32_t r = 0;
  Bitset set;

  ConnectionSet() = default;
  ConnectionSet(uint32_t r_, Bitset s) : r(r_), set(std::move(s)) {
    if (set.size() != r) throw std::invalid_argument("ConnectionSet: size mismatch");
  }

  static ConnectionSet from_elements(uint32_t r, const std::vector<uint32_t>& elems) {
    Bitset s(r);
    for (uint32_t e : elems) {
      if (e >= r) throw std::invalid_argument("ConnectionSet: element out of range");
      s.set(e);
    }
    return ConnectionSet(r, std::move(s));
  }

  static ConnectionSet from_mask(uint32_t r, uint64_t mask) { return ConnectionSet(r, Bitset::from_mask(r, mask)); }

  static ConnectionSet from_hex(uint32_t r, const std::string& hex) {
    return ConnectionSet(r, Bitset::from_hex(r, hex));
  }

  std::string to_hex() const { return set.to_hex(); }
  std::vector<uint32_t> elements() const { return set.to_vector(); }

  bool operator==(const ConnectionSet& o) const { return r == o.r && set == o.set; }
};

// Digraph with an integer color on every vertex. Arcs are directed, loops are
// allowed, multi-arcs are not. Both adjacency directions are kept so that
// refinement can count in- and out-neighbours cheaply.
class ColoredDigraph {
 public:
  ColoredDigraph(std::vector<Bitset> out_rows, std::vector<uint32_t> colors)
      : out_(std::move(out_rows)), colors_(std::move(colors)) {
    n_ = uint32_t(out_.size());
    if (n_ == 0) throw std::invalid_argument("ColoredDigraph: need at least one vertex");
    if (colors_.size() != n_) throw std::invalid_argument("ColoredDigraph: color count mismatch");
    for (const Bitset& row : out_)
      if (row.size() != n_) throw std::invalid_argument("ColoredDigraph: row size mismatch");
    in_.assign(n_, Bitset(n_));
    for (uint32_t u = 0; u < n_; ++u)
      out_[u].for_each([&](uint32_t v) { in_[v].set(u); });
  }

  static ColoredDigraph from_arcs(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& arcs,
                                  std::vector<uint32_t> colors = {}) {
    std::vector<Bitset> rows(n, Bitset(n));
    for (auto [u, v] : arcs) {
      if (u >= n || v >= n) throw std::invalid_argument("from_arcs: endpoint out of range");
      rows[u].set(v);
    }
    if (colors.empty()) colors.assign(n, 0);
    return ColoredDigraph(std::move(rows), std::move(colors));
  }

  uint32_t n() const { return n_; }
  const Bitset& out(uint32_t v) const { return out_[v]; }
  const Bitset& in(uint32_t v) const { return in_[v]; }
  uint32_t color(uint32_t v) const { return colors_[v]; }
  const std::vector<uint32_t>& colors() const { return colors_; }
  bool has_arc(uint32_t u, uint32_t v) const { return out_[u].test(v); }

  uint64_t arc_count() const {
    uint64_t total = 0;
    for (const Bitset& row : out_) total += row.count();
    return total;
  }

  std::vector<std::pair<uint32_t, uint32_t>> arcs() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t u = 0; u < n_; ++u) out_[u].for_each([&](uint32_t v) { out.emplace_back(u, v); });
    return out;
  }

  bool operator==(const ColoredDigraph& o) const { return n_ == o.n_ && out_ == o.out_ && colors_ == o.colors_; }
  bool operator!=(const ColoredDigraph& o) const { return !(*this == o); }

 private:
  uint32_t n_ = 0;
  std::vector<Bitset> out_;
  std::vector<Bitset> in_;
  std::vector<uint32_t> colors_;
};

// Cayley digraph of (R, S): vertex set the group elements, with an arc g -> h
// exactly when h*g^-1 lies in S; equivalently out(g) = S*g. All vertices get
// color 0. A loop at every vertex appears iff S contains the identity.
inline ColoredDigraph cayley_digraph(const FiniteGroup& g, const ConnectionSet& s) {
  if (s.r != g.order()) throw std::invalid_argument("cayley: connection set order mismatch");
  std::vector<Bitset> rows(g.order(), Bitset(g.order()));
  std::vector<uint32_t> elems = s.elements();
  for (uint32_t v = 0; v < g.order(); ++v)
    for (uint32_t e : elems) rows[v].set(g.mul(e, v));
  return ColoredDigraph(std::move(rows), std::vector<uint32_t>(g.order(), 0));
}

inline bool is_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b, const Permutation& p) {
  if (a.n() != b.n() || p.degree() != a.n()) return false;
  for (uint32_t v = 0; v < a.n(); ++v) {
    if (a.color(v) != b.color(p(v))) return false;
    if (p.apply_to_set(a.out(v)) != b.out(p(v))) return false;
  }
  return true;
}

inline bool is_automorphism(const ColoredDigraph& g, const Permutation& p) { return is_isomorphism(g, g, p); }

// Image graph H with H.out(p(u)) = p(G.out(u)) and colors carried along.
inline ColoredDigraph relabel(const ColoredDigraph& g, const Permutation& p) {
  if (p.degree() != g.n()) throw std::invalid_argument("relabel: degree mismatch");
  std::vector<Bitset> rows(g.n(), Bitset(g.n()));
  std::vector<uint32_t> colors(g.n());
  for (uint32_t u = 0; u < g.n(); ++u) {
    rows[p(u)] = p.apply_to_set(g.out(u));
    colors[p(u)] = g.color(u);
  }
  return ColoredDigraph(std::move(rows), std::move(colors));
}

// Compact one-line form "<n>;row0,row1,...;c0,c1,..." with hex rows, used by
// test fixtures. The color section is omitted when every color is 0.
inline std::string to_compact(const ColoredDigraph& g) {
  std::ostringstream os;
  os << g.n() << ";";
  for (uint32_t v = 0; v < g.n(); ++v) os << (v ? "," : "") << g.out(v).to_hex();
  bool colored = false;
  for (uint32_t v = 0; v < g.n(); ++v)
    if (g.color(v) != 0) colored = true;
  if (colored) {
    os << ";";
    for (uint32_t v = 0; v < g.n(); ++v) os << (v ? "," : "") << g.color(v);
  }
  return os.str();
}

inline ColoredDigraph from_compact(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ';')) parts.push_back(cur);
  if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("from_compact: expected 2 or 3 sections");
  uint32_t n = uint32_t(std::stoul(parts[0]));
  std::vector<Bitset> rows;
  std::istringstream rs(parts[1]);
  while (std::getline(rs, cur, ',')) rows.push_back(Bitset::from_hex(n, cur));
  if (rows.size() != n) throw std::invalid_argument("from_compact: row count mismatch");
  std::vector<uint32_t> colors(n, 0);
  if (parts.size() == 3) {
    std::istringstream cs(parts[2]);
    uint32_t i = 0;
    while (std::getline(cs, cur, ',')) {
      if (i >= n) throw std::invalid_argument("from_compact: too many colors");
      colors[i++] = uint32_t(std::stoul(cur));
    }
    if (i != n) throw std::invalid_argument("from_compact: color count mismatch");
  }
  return ColoredDigraph(std::move(rows), std::move(colors));
}

}  // namespace cayley
