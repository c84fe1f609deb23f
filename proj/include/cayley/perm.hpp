#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/bitset.hpp"

namespace cayley {

// Permutation of {0..degree-1} stored as an image table. Composition is left to
// right: compose(a, b) applies a first, so points transform as x -> b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(uint32_t degree) : img_(degree) {
    if (degree == 0) throw std::invalid_argument("Permutation: degree must be positive");
    std::iota(img_.begin(), img_.end(), 0u);
  }
  explicit Permutation(std::vector<uint32_t> images) : img_(std::move(images)) {
    if (img_.empty()) throw std::invalid_argument("Permutation: degree must be positive");
    std::vector<bool> seen(img_.size(), false);
    for (uint32_t v : img_) {
      if (v >= img_.size() || seen[v]) throw std::invalid_argument("Permutation: image table is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(uint32_t degree) { return Permutation(degree); }

  uint32_t degree() const { return uint32_t(img_.size()); }
  uint32_t operator()(uint32_t p) const { return img_[p]; }
  const std::vector<uint32_t>& images() const { return img_; }

  bool is_identity() const {
    for (uint32_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // degree() when the permutation is the identity.
  uint32_t smallest_moved() const {
    for (uint32_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return i;
    return degree();
  }

  Permutation inverse() const {
    std::vector<uint32_t> inv(img_.size());
    for (uint32_t i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
    Permutation p;
    p.img_ = std::move(inv);
    return p;
  }

  friend Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    Permutation c;
    c.img_.resize(a.img_.size());
    for (uint32_t i = 0; i < a.img_.size(); ++i) c.img_[i] = b.img_[a.img_[i]];
    return c;
  }

  // Image of a point set: {p(i) : i in s}.
  Bitset apply_to_set(const Bitset& s) const {
    if (s.size() != degree()) throw std::invalid_argument("apply_to_set: size mismatch");
    Bitset out(s.size());
    s.for_each([&](uint32_t i) { out.set(img_[i]); });
    return out;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::vector<std::vector<uint32_t>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<uint32_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (uint32_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<uint32_t> cyc;
      uint32_t j = i;
      do {
        seen[j] = true;
        cyc.push_back(j);
        j = img_[j];
      } while (j != i);
      if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    return out;
  }

  // "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_cycle_string() const {
    auto cs = cycles(false);
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
      os << '(';
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ' ';
        os << c[i];
      }
      os << ')';
    }
    return os.str();
  }

  static Permutation parse_cycles(const std::string& text, uint32_t degree) {
    Permutation p(degree);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
      ++i;
      std::vector<uint32_t> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        if (!isdigit(uint8_t(text[i]))) throw std::invalid_argument("parse_cycles: expected point");
        uint32_t v = 0;
        while (i < text.size() && isdigit(uint8_t(text[i]))) v = v * 10 + uint32_t(text[i++] - '0');
        if (v >= degree) throw std::invalid_argument("parse_cycles: point out of range");
        cyc.push_back(v);
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
      }
      if (i >= text.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
      ++i;  // ')'
      for (size_t k = 0; k < cyc.size(); ++k) {
        uint32_t from = cyc[k], to = cyc[(k + 1) % cyc.size()];
        if (p.img_[from] != from) throw std::invalid_argument("parse_cycles: point repeated");
        p.img_[from] = to;
      }
      skip_ws();
    }
    Permutation check(p.img_);  // re-validate bijection after overlap checks
    return check;
  }

  size_t hash() const {
    size_t h = img_.size();
    for (uint32_t v : img_) h = h * 1000003u + v;
    return h;
  }

 private:
  std::vector<uint32_t> img_;
};

struct PermHash {
  size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace cayley
