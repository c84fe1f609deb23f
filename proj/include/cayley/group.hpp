#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"
#include "cayley/rng.hpp"

namespace cayley {

// Finite group given by its full multiplication table. Element 0 is the
// identity. table(g, h) is the product g*h.
class FiniteGroup {
 public:
  FiniteGroup(uint32_t r, std::vector<uint32_t> table, std::vector<std::string> names, std::string id)
      : r_(r), table_(std::move(table)), names_(std::move(names)), id_(std::move(id)) {
    validate();
    inv_.resize(r_);
    for (uint32_t g = 0; g < r_; ++g)
      for (uint32_t x = 0; x < r_; ++x)
        if (mul(g, x) == 0) {
          if (mul(x, g) != 0) throw std::invalid_argument("FiniteGroup: one-sided inverse in table");
          inv_[g] = x;
          break;
        }
  }

  uint32_t order() const { return r_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return table_[size_t(a) * r_ + b]; }
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  uint32_t conj(uint32_t x, uint32_t g) const { return mul(mul(inv(g), x), g); }
  const std::string& id() const { return id_; }
  const std::vector<std::string>& names() const { return names_; }

  uint32_t element_order(uint32_t g) const {
    uint32_t k = 1, x = g;
    while (x != 0) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

 private:
  void validate() const {
    if (r_ == 0) throw std::invalid_argument("FiniteGroup: order must be positive");
    if (table_.size() != size_t(r_) * r_) throw std::invalid_argument("FiniteGroup: table size mismatch");
    for (uint32_t v : table_)
      if (v >= r_) throw std::invalid_argument("FiniteGroup: table entry out of range");
    std::vector<bool> seen(r_);
    for (uint32_t g = 0; g < r_; ++g) {
      std::fill(seen.begin(), seen.end(), false);
      for (uint32_t h = 0; h < r_; ++h) {
        uint32_t v = mul(g, h);
        if (seen[v]) throw std::invalid_argument("FiniteGroup: row is not a permutation");
        seen[v] = true;
      }
      std::fill(seen.begin(), seen.end(), false);
      for (uint32_t h = 0; h < r_; ++h) {
        uint32_t v = mul(h, g);
        if (seen[v]) throw std::invalid_argument("FiniteGroup: column is not a permutation");
        seen[v] = true;
      }
      if (mul(0, g) != g || mul(g, 0) != g) throw std::invalid_argument("FiniteGroup: element 0 is not the identity");
    }
    if (r_ <= 64) {
      for (uint32_t a = 0; a < r_; ++a)
        for (uint32_t b = 0; b < r_; ++b)
          for (uint32_t c = 0; c < r_; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw std::invalid_argument("FiniteGroup: table is not associative");
    } else {
      SplitMix64 rng(0x5EED0F00D);
      for (int t = 0; t < 100000; ++t) {
        uint32_t a = uint32_t(rng.below(r_)), b = uint32_t(rng.below(r_)), c = uint32_t(rng.below(r_));
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("FiniteGroup: table is not associative (sampled)");
      }
    }
  }

  uint32_t r_;
  std::vector<uint32_t> table_;
  std::vector<uint32_t> inv_;
  std::vector<std::string> names_;
  std::string id_;
};

enum class GroupKind { cyclic, dihedral, dicyclic, abelian, direct_product, file };

struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  std::vector<uint32_t> params;
  std::vector<GroupSpec> factors;
  std::string path;

  std::string to_string() const {
    switch (kind) {
      case GroupKind::cyclic: return "cyclic:" + std::to_string(params[0]);
      case GroupKind::dihedral: return "dihedral:" + std::to_string(params[0]);
      case GroupKind::dicyclic: return "dicyclic:" + std::to_string(params[0]);
      case GroupKind::abelian: {
        std::string s = "abelian:";
        for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
        return s;
      }
      case GroupKind::direct_product: {
        std::string s = "product:";
        for (size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i].to_string();
        return s;
      }
      case GroupKind::file: return "file:" + path;
    }
    return "";
  }

  static GroupSpec parse(const std::string& text);
};

namespace detail {

inline std::vector<uint32_t> parse_int_list(const std::string& s) {
  std::vector<uint32_t> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) throw std::invalid_argument("group spec: empty parameter");
    size_t pos = 0;
    unsigned long v = std::stoul(cur, &pos);
    if (pos != cur.size()) throw std::invalid_argument("group spec: bad integer '" + cur + "'");
    out.push_back(uint32_t(v));
  }
  if (out.empty()) throw std::invalid_argument("group spec: missing parameters");
  return out;
}

}  // namespace detail

inline GroupSpec GroupSpec::parse(const std::string& text) {
  if (text == "klein4") return {GroupKind::abelian, {2, 2}, {}, ""};
  auto colon = text.find(':');
  std::string head = colon == std::string::npos ? text : text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  GroupSpec spec;
  if (head == "cyclic" || head == "dihedral" || head == "dicyclic") {
    spec.kind = head == "cyclic" ? GroupKind::cyclic
              : head == "dihedral" ? GroupKind::dihedral : GroupKind::dicyclic;
    spec.params = detail::parse_int_list(rest);
    if (spec.params.size() != 1) throw std::invalid_argument("group spec: " + head + " takes one order");
    return spec;
  }
  if (head == "abelian") {
    spec.kind = GroupKind::abelian;
    spec.params = detail::parse_int_list(rest);
    return spec;
  }
  if (head == "product") {
    spec.kind = GroupKind::direct_product;
    std::string cur;
    std::istringstream is(rest);
    while (std::getline(is, cur, '*')) spec.factors.push_back(GroupSpec::parse(cur));
    if (spec.factors.size() < 2) throw std::invalid_argument("group spec: product needs at least two factors");
    for (const GroupSpec& f : spec.factors)
      if (f.kind == GroupKind::direct_product)
        throw std::invalid_argument("group spec: nested products are not supported");
    return spec;
  }
  if (head == "file") {
    if (rest.empty()) throw std::invalid_argument("group spec: file needs a path");
    spec.kind = GroupKind::file;
    spec.path = rest;
    return spec;
  }
  throw std::invalid_argument("group spec: unknown family '" + head + "'");
}

namespace detail {

inline FiniteGroup make_cyclic(uint32_t n, const std::string& id) {
  if (n == 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<uint32_t> t(size_t(n) * n);
  std::vector<std::string> names(n);
  for (uint32_t a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (uint32_t b = 0; b < n; ++b) t[size_t(a) * n + b] = (a + b) % n;
  }
  return FiniteGroup(n, std::move(t), std::move(names), id);
}

// Order m = 2k, elements 0..k-1 the rotations r^i, elements k..2k-1 the
// reflections s*r^i.
inline FiniteGroup make_dihedral(uint32_t m, const std::string& id) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("dihedral: order must be even and at least 2");
  uint32_t k = m / 2;
  auto rot = [&](uint32_t i) { return i % k; };
  std::vector<uint32_t> t(size_t(m) * m);
  std::vector<std::string> names(m);
  for (uint32_t i = 0; i < k; ++i) {
    names[i] = "r^" + std::to_string(i);
    names[k + i] = "s*r^" + std::to_string(i);
  }
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = 0; b < m; ++b) {
      uint32_t ia = a % k, ib = b % k;
      bool fa = a >= k, fb = b >= k;
      uint32_t v;
      if (!fa && !fb) v = rot(ia + ib);
      else if (!fa && fb) v = k + rot(ib + k - ia % k);
      else if (fa && !fb) v = k + rot(ia + ib);
      else v = rot(ib + k - ia % k);
      t[size_t(a) * m + b] = v;
    }
  return FiniteGroup(m, std::move(t), std::move(names), id);
}

// Order m = 4k, elements 0..2k-1 the powers a^i, elements 2k..4k-1 the words
// b*a^i, with a^(2k) = 1, b^2 = a^k and b a b^-1 = a^-1.
inline FiniteGroup make_dicyclic(uint32_t m, const std::string& id) {
  if (m < 4 || m % 4 != 0) throw std::invalid_argument("dicyclic: order must be a positive multiple of 4");
  uint32_t k = m / 4, two_k = m / 2;
  auto rot = [&](uint32_t i) { return i % two_k; };
  std::vector<uint32_t> t(size_t(m) * m);
  std::vector<std::string> names(m);
  for (uint32_t i = 0; i < two_k; ++i) {
    names[i] = "a^" + std::to_string(i);
    names[two_k + i] = "b*a^" + std::to_string(i);
  }
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = 0; b < m; ++b) {
      uint32_t ia = a % two_k, ib = b % two_k;
      bool fa = a >= two_k, fb = b >= two_k;
      uint32_t v;
      if (!fa && !fb) v = rot(ia + ib);
      else if (!fa && fb) v = two_k + rot(ib + two_k - ia);
      else if (fa && !fb) v = two_k + rot(ia + ib);
      else v = rot(k + ib + two_k - ia);
      t[size_t(a) * m + b] = v;
    }
  return FiniteGroup(m, std::move(t), std::move(names), id);
}

// Mixed-radix element indexing, leftmost factor most significant.
inline FiniteGroup make_abelian(const std::vector<uint32_t>& d, const std::string& id) {
  uint64_t r64 = 1;
  for (uint32_t di : d) {
    if (di == 0) throw std::invalid_argument("abelian: factors must be positive");
    r64 *= di;
    if (r64 > 4096) throw std::invalid_argument("abelian: order too large");
  }
  uint32_t r = uint32_t(r64), k = uint32_t(d.size());
  auto decode = [&](uint32_t x) {
    std::vector<uint32_t> v(k);
    for (uint32_t i = k; i-- > 0;) {
      v[i] = x % d[i];
      x /= d[i];
    }
    return v;
  };
  std::vector<uint32_t> t(size_t(r) * r);
  std::vector<std::string> names(r);
  for (uint32_t a = 0; a < r; ++a) {
    auto va = decode(a);
    std::string nm = "(";
    for (uint32_t i = 0; i < k; ++i) nm += (i ? "," : "") + std::to_string(va[i]);
    names[a] = nm + ")";
    for (uint32_t b = 0; b < r; ++b) {
      auto vb = decode(b);
      uint32_t idx = 0;
      for (uint32_t i = 0; i < k; ++i) idx = idx * d[i] + (va[i] + vb[i]) % d[i];
      t[size_t(a) * r + b] = idx;
    }
  }
  return FiniteGroup(r, std::move(t), std::move(names), id);
}

inline FiniteGroup make_product(const FiniteGroup& x, const FiniteGroup& y, const std::string& id) {
  uint64_t r64 = uint64_t(x.order()) * y.order();
  if (r64 > 4096) throw std::invalid_argument("product: order too large");
  uint32_t r = uint32_t(r64), ny = y.order();
  std::vector<uint32_t> t(size_t(r) * r);
  std::vector<std::string> names(r);
  for (uint32_t a = 0; a < r; ++a) {
    names[a] = "(" + x.names()[a / ny] + "|" + y.names()[a % ny] + ")";
    for (uint32_t b = 0; b < r; ++b)
      t[size_t(a) * r + b] = x.mul(a / ny, b / ny) * ny + y.mul(a % ny, b % ny);
  }
  return FiniteGroup(r, std::move(t), std::move(names), id);
}

}  // namespace detail

// Table file format: a header line "order r" followed by r lines of r
// whitespace-separated element indices (row g lists g*0, g*1, ...).
inline FiniteGroup parse_group_table(std::istream& in, const std::string& id) {
  std::string word;
  uint32_t r = 0;
  if (!(in >> word) || word != "order" || !(in >> r) || r == 0)
    throw std::invalid_argument("group table: expected header 'order r'");
  std::vector<uint32_t> t;
  t.reserve(size_t(r) * r);
  for (size_t i = 0; i < size_t(r) * r; ++i) {
    uint32_t v;
    if (!(in >> v)) throw std::invalid_argument("group table: truncated table");
    t.push_back(v);
  }
  std::vector<std::string> names(r);
  for (uint32_t g = 0; g < r; ++g) names[g] = "g" + std::to_string(g);
  return FiniteGroup(r, std::move(t), std::move(names), id);
}

inline std::string group_table_text(const FiniteGroup& g) {
  std::ostringstream os;
  os << "order " << g.order() << "\n";
  for (uint32_t a = 0; a < g.order(); ++a) {
    for (uint32_t b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
    os << "\n";
  }
  return os.str();
}

inline FiniteGroup make_group(const GroupSpec& spec) {
  const std::string id = spec.to_string();
  switch (spec.kind) {
    case GroupKind::cyclic: return detail::make_cyclic(spec.params[0], id);
    case GroupKind::dihedral: return detail::make_dihedral(spec.params[0], id);
    case GroupKind::dicyclic: return detail::make_dicyclic(spec.params[0], id);
    case GroupKind::abelian: return detail::make_abelian(spec.params, id);
    case GroupKind::direct_product: {
      FiniteGroup acc = make_group(spec.factors[0]);
      for (size_t i = 1; i < spec.factors.size(); ++i)
        acc = detail::make_product(acc, make_group(spec.factors[i]), id);
      return acc;
    }
    case GroupKind::file: {
      std::ifstream in(spec.path);
      if (!in) throw std::runtime_error("group file: cannot open '" + spec.path + "'");
      return parse_group_table(in, id);
    }
  }
  throw std::invalid_argument("make_group: unknown kind");
}

inline FiniteGroup make_group(const std::string& spec_text) { return make_group(GroupSpec::parse(spec_text)); }

// Fixed list of groups exercised by tests and `groups list`.
inline std::vector<GroupSpec> catalog() {
  std::vector<GroupSpec> out;
  for (uint32_t n = 1; n <= 16; ++n) out.push_back({GroupKind::cyclic, {n}, {}, ""});
  out.push_back({GroupKind::abelian, {2, 2}, {}, ""});
  out.push_back({GroupKind::abelian, {2, 4}, {}, ""});
  out.push_back({GroupKind::abelian, {2, 2, 2}, {}, ""});
  out.push_back({GroupKind::abelian, {3, 3}, {}, ""});
  for (uint32_t m = 6; m <= 16; m += 2) out.push_back({GroupKind::dihedral, {m}, {}, ""});
  for (uint32_t m = 8; m <= 16; m += 4) out.push_back({GroupKind::dicyclic, {m}, {}, ""});
  return out;
}

// --- element-set utilities -------------------------------------------------

// Closure of a subset (given as element indices) under multiplication; works
// for any order. The identity is always included.
inline std::vector<uint32_t> subgroup_closure(const FiniteGroup& g, std::vector<uint32_t> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<uint32_t> list;
  auto add = [&](uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  add(0);
  for (uint32_t x : seed) {
    if (x >= g.order()) throw std::invalid_argument("subgroup_closure: element out of range");
    add(x);
  }
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < list.size(); ++j) add(g.mul(list[i], list[j]));
  std::sort(list.begin(), list.end());
  return list;
}

// Greedy generating set: repeatedly adjoin the smallest element outside the
// subgroup generated so far. Each step at least doubles the subgroup, so the
// result has at most floor(log2 r) members.
inline std::vector<uint32_t> generating_set(const FiniteGroup& g) {
  std::vector<uint32_t> gens;
  std::vector<uint32_t> have{0};
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  for (uint32_t x = 1; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    have = subgroup_closure(g, gens);
    std::fill(in.begin(), in.end(), false);
    for (uint32_t y : have) in[y] = true;
  }
  return gens;
}

// Degree-r group of right multiplications x -> x*g over a generating set.
inline PermGroup regular_representation(const FiniteGroup& g) {
  std::vector<Permutation> perms;
  for (uint32_t gen : generating_set(g)) {
    std::vector<uint32_t> img(g.order());
    for (uint32_t x = 0; x < g.order(); ++x) img[x] = g.mul(x, gen);
    perms.push_back(Permutation(std::move(img)));
  }
  return PermGroup(g.order(), perms);
}

inline Permutation right_multiplication(const FiniteGroup& g, uint32_t gen) {
  std::vector<uint32_t> img(g.order());
  for (uint32_t x = 0; x < g.order(); ++x) img[x] = g.mul(x, gen);
  return Permutation(std::move(img));
}

// --- automorphisms ----------------------------------------------------------

namespace detail {

// Extends a partial map known on the listed elements by closing it under
// products; returns false on any conflict with the group structure.
inline bool propagate_hom(const FiniteGroup& g, std::vector<int32_t>& map, std::vector<uint32_t>& defined,
                          uint32_t new_elem) {
  std::vector<uint32_t> queue{new_elem};
  while (!queue.empty()) {
    uint32_t u = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < defined.size(); ++i) {
      uint32_t v = defined[i];
      for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
        uint32_t w = g.mul(x, y);
        int32_t img = int32_t(g.mul(uint32_t(map[x]), uint32_t(map[y])));
        if (map[w] < 0) {
          map[w] = img;
          defined.push_back(w);
          queue.push_back(w);
        } else if (map[w] != img) {
          return false;
        }
      }
    }
  }
  return true;
}

inline void automorphism_search(const FiniteGroup& g, const std::vector<uint32_t>& gens, size_t k,
                                std::vector<int32_t>& map, std::vector<uint32_t>& defined,
                                std::vector<Permutation>& out) {
  if (k == gens.size()) {
    if (defined.size() != g.order()) return;  // generators failed to span
    std::vector<uint32_t> img(g.order());
    std::vector<bool> hit(g.order(), false);
    for (uint32_t x = 0; x < g.order(); ++x) {
      img[x] = uint32_t(map[x]);
      if (hit[img[x]]) return;
      hit[img[x]] = true;
    }
    for (uint32_t a = 0; a < g.order(); ++a)
      for (uint32_t b = 0; b < g.order(); ++b)
        if (img[g.mul(a, b)] != g.mul(img[a], img[b])) return;
    out.push_back(Permutation(std::move(img)));
    return;
  }
  uint32_t gen = gens[k], ord = g.element_order(gen);
  for (uint32_t c = 0; c < g.order(); ++c) {
    if (g.element_order(c) != ord) continue;
    if (map[gen] >= 0) {
      if (uint32_t(map[gen]) == c) automorphism_search(g, gens, k + 1, map, defined, out);
      continue;
    }
    std::vector<int32_t> map2 = map;
    std::vector<uint32_t> defined2 = defined;
    map2[gen] = int32_t(c);
    defined2.push_back(gen);
    if (propagate_hom(g, map2, defined2, gen)) automorphism_search(g, gens, k + 1, map2, defined2, out);
  }
}

}  // namespace detail

// All automorphisms, as permutations of element indices, sorted. The count is
// checked against the r^floor(log2 r) ceiling implied by the generating set.
inline std::vector<Permutation> group_automorphisms(const FiniteGroup& g, uint32_t cap = 64) {
  if (g.order() > cap) throw std::runtime_error("group_automorphisms: order exceeds cap");
  if (g.order() == 1) return {Permutation::identity(1)};
  std::vector<uint32_t> gens = generating_set(g);
  std::vector<int32_t> map(g.order(), -1);
  map[0] = 0;
  std::vector<uint32_t> defined{0};
  std::vector<Permutation> out;
  detail::automorphism_search(g, gens, 0, map, defined, out);
  std::sort(out.begin(), out.end());
  long double ceiling = 1;
  uint32_t lg = 0;
  while ((uint32_t(1) << (lg + 1)) <= g.order()) ++lg;
  for (uint32_t i = 0; i < lg; ++i) ceiling *= g.order();
  if ((long double)out.size() > ceiling) throw std::logic_error("group_automorphisms: count exceeds ceiling");
  return out;
}

// --- subgroup lattice (orders up to 64, subgroups as bitmasks) --------------

inline uint64_t subgroup_closure_mask(const FiniteGroup& g, uint64_t mask) {
  if (g.order() > 64) throw std::runtime_error("subgroup_closure_mask: order exceeds 64");
  uint64_t cur = mask | 1;
  for (;;) {
    uint64_t next = cur;
    for (uint64_t ma = cur; ma;) {
      uint32_t a = uint32_t(std::countr_zero(ma));
      ma &= ma - 1;
      for (uint64_t mb = cur; mb;) {
        uint32_t b = uint32_t(std::countr_zero(mb));
        mb &= mb - 1;
        next |= uint64_t{1} << g.mul(a, b);
      }
    }
    if (next == cur) return cur;
    cur = next;
  }
}

inline uint64_t conjugate_mask(const FiniteGroup& g, uint64_t mask, uint32_t by) {
  uint64_t out = 0;
  while (mask) {
    uint32_t x = uint32_t(std::countr_zero(mask));
    mask &= mask - 1;
    out |= uint64_t{1} << g.conj(x, by);
  }
  return out;
}

inline bool is_normal_mask(const FiniteGroup& g, uint64_t mask) {
  for (uint32_t by = 1; by < g.order(); ++by)
    if (conjugate_mask(g, mask, by) != mask) return false;
  return true;
}

// Every subgroup, found by closing one-element extensions to fixpoint.
inline std::vector<uint64_t> all_subgroups(const FiniteGroup& g, uint32_t cap = 64) {
  if (g.order() > cap) throw std::runtime_error("all_subgroups: order exceeds cap");
  std::unordered_set<uint64_t> seen;
  std::vector<uint64_t> queue{subgroup_closure_mask(g, 1)};
  seen.insert(queue[0]);
  for (size_t i = 0; i < queue.size(); ++i) {
    uint64_t h = queue[i];
    for (uint32_t x = 1; x < g.order(); ++x) {
      if ((h >> x) & 1) continue;
      uint64_t k = subgroup_closure_mask(g, h | (uint64_t{1} << x));
      if (seen.insert(k).second) queue.push_back(k);
    }
  }
  std::sort(queue.begin(), queue.end(), [](uint64_t a, uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return queue;
}

// Normal subgroups, each as a sorted element list. Includes {0} and the whole
// group.
inline std::vector<std::vector<uint32_t>> normal_subgroups(const FiniteGroup& g, uint32_t cap = 64) {
  std::vector<std::vector<uint32_t>> out;
  for (uint64_t h : all_subgroups(g, cap)) {
    if (!is_normal_mask(g, h)) continue;
    std::vector<uint32_t> elems;
    for (uint32_t x = 0; x < g.order(); ++x)
      if ((h >> x) & 1) elems.push_back(x);
    out.push_back(std::move(elems));
  }
  return out;
}

inline uint64_t elements_to_mask(const FiniteGroup& g, const std::vector<uint32_t>& elems) {
  if (g.order() > 64) throw std::runtime_error("elements_to_mask: order exceeds 64");
  uint64_t m = 0;
  for (uint32_t x : elems) {
    if (x >= g.order()) throw std::invalid_argument("elements_to_mask: element out of range");
    m |= uint64_t{1} << x;
  }
  return m;
}

// --- quotients ---------------------------------------------------------------

struct QuotientGroup {
  FiniteGroup group;
  std::vector<uint32_t> projection;  // element -> coset index
  std::vector<uint32_t> reps;        // coset index -> smallest member
};

// Quotient by a normal subgroup, cosets indexed by smallest member so that the
// identity coset gets index 0. The projection is checked to be a homomorphism
// on every pair.
inline QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<uint32_t>& n_elems) {
  uint64_t nmask = elements_to_mask(g, n_elems);
  if (!(nmask & 1)) throw std::invalid_argument("quotient_group: N must contain the identity");
  if (subgroup_closure_mask(g, nmask) != nmask) throw std::invalid_argument("quotient_group: N is not a subgroup");
  if (!is_normal_mask(g, nmask)) throw std::invalid_argument("quotient_group: N is not normal");
  uint32_t r = g.order();
  std::vector<uint32_t> proj(r, UINT32_MAX), reps;
  for (uint32_t x = 0; x < r; ++x) {
    if (proj[x] != UINT32_MAX) continue;
    uint32_t idx = uint32_t(reps.size());
    reps.push_back(x);
    for (uint32_t n : n_elems) proj[g.mul(x, n)] = idx;
  }
  uint32_t q = uint32_t(reps.size());
  std::vector<uint32_t> t(size_t(q) * q);
  std::vector<std::string> names(q);
  for (uint32_t a = 0; a < q; ++a) {
    names[a] = g.names()[reps[a]] + "N";
    for (uint32_t b = 0; b < q; ++b) t[size_t(a) * q + b] = proj[g.mul(reps[a], reps[b])];
  }
  QuotientGroup out{FiniteGroup(q, std::move(t), std::move(names), g.id() + "/" + std::to_string(n_elems.size())),
                    std::move(proj), std::move(reps)};
  for (uint32_t x = 0; x < r; ++x)
    for (uint32_t y = 0; y < r; ++y)
      if (out.projection[g.mul(x, y)] != out.group.mul(out.projection[x], out.projection[y]))
        throw std::logic_error("quotient_group: projection is not a homomorphism");
  return out;
}

// Partition of the group into left cosets xN, cells sorted by smallest member.
inline BlockPartition coset_partition(const FiniteGroup& g, const std::vector<uint32_t>& n_elems) {
  std::vector<std::vector<uint32_t>> cells;
  std::vector<bool> seen(g.order(), false);
  for (uint32_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<uint32_t> cell;
    for (uint32_t n : n_elems) {
      uint32_t y = g.mul(x, n);
      if (!seen[y]) {
        seen[y] = true;
        cell.push_back(y);
      }
    }
    if (cell.size() != n_elems.size()) throw std::invalid_argument("coset_partition: N is not a subgroup");
    cells.push_back(std::move(cell));
  }
  return BlockPartition::from_cells(g.order(), std::move(cells));
}

}  // namespace cayley
