#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cayley {

// Partition of {0..n-1} into disjoint cells. Cells are stored sorted by their
// minimum element, each cell ascending, so the cell containing 0 is cell 0.
struct BlockPartition {
  uint32_t n = 0;
  std::vector<std::vector<uint32_t>> cells;
  std::vector<uint32_t> cell_of;
  uint32_t base_cell_index = 0;  // always 0 under the ordering above; kept explicit

  static BlockPartition from_cells(uint32_t n, std::vector<std::vector<uint32_t>> raw) {
    BlockPartition p;
    p.n = n;
    p.cell_of.assign(n, UINT32_MAX);
    for (auto& c : raw) {
      if (c.empty()) throw std::invalid_argument("BlockPartition: empty cell");
      std::sort(c.begin(), c.end());
    }
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (uint32_t ci = 0; ci < raw.size(); ++ci) {
      for (uint32_t v : raw[ci]) {
        if (v >= n) throw std::invalid_argument("BlockPartition: point out of range");
        if (p.cell_of[v] != UINT32_MAX) throw std::invalid_argument("BlockPartition: cells overlap");
        p.cell_of[v] = ci;
      }
    }
    for (uint32_t v = 0; v < n; ++v)
      if (p.cell_of[v] == UINT32_MAX) throw std::invalid_argument("BlockPartition: cells do not cover");
    p.cells = std::move(raw);
    p.base_cell_index = n ? p.cell_of[0] : 0;
    return p;
  }

  static BlockPartition singletons(uint32_t n) {
    std::vector<std::vector<uint32_t>> c(n);
    for (uint32_t v = 0; v < n; ++v) c[v] = {v};
    return from_cells(n, std::move(c));
  }

  static BlockPartition single_cell(uint32_t n) {
    std::vector<uint32_t> all(n);
    for (uint32_t v = 0; v < n; ++v) all[v] = v;
    return from_cells(n, {all});
  }

  uint32_t size() const { return uint32_t(cells.size()); }

  bool operator==(const BlockPartition& o) const { return n == o.n && cells == o.cells; }
};

// Union-find over {0..n-1}; used for orbit bookkeeping.
struct Dsu {
  std::vector<uint32_t> parent;

  explicit Dsu(uint32_t n = 0) : parent(n) {
    for (uint32_t i = 0; i < n; ++i) parent[i] = i;
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  bool same(uint32_t a, uint32_t b) { return find(a) == find(b); }

  BlockPartition to_partition() {
    std::vector<std::vector<uint32_t>> groups(parent.size());
    for (uint32_t v = 0; v < parent.size(); ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<uint32_t>> cells;
    for (auto& g : groups)
      if (!g.empty()) cells.push_back(std::move(g));
    return BlockPartition::from_cells(uint32_t(parent.size()), std::move(cells));
  }
};

}  // namespace cayley
