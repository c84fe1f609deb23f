#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

// Runtime-sized bitset. Bit i lives at word i/64, position i%64; tail bits past
// size() are kept zero so whole-word comparison and hashing stay valid.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(uint32_t n) : n_(n), w_((n + 63) / 64, 0) {}

  // n <= 64 convenience path used by subset enumeration.
  static Bitset from_mask(uint32_t n, uint64_t mask) {
    if (n > 64) throw std::invalid_argument("Bitset::from_mask requires n <= 64");
    if (n < 64 && n > 0 && (mask >> n) != 0)
      throw std::invalid_argument("Bitset::from_mask: mask has bits at or past n");
    if (n == 0 && mask != 0) throw std::invalid_argument("Bitset::from_mask: mask nonzero for n = 0");
    Bitset b(n);
    if (!b.w_.empty()) b.w_[0] = mask;
    return b;
  }

  uint32_t size() const { return n_; }
  bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(uint32_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(uint32_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : w_) c += uint32_t(std::popcount(w));
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  uint64_t low64() const { return w_.empty() ? 0 : w_[0]; }

  Bitset& operator&=(const Bitset& o) {
    check_same(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    check_same(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  uint32_t count_and(const Bitset& o) const {
    check_same(o);
    uint32_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += uint32_t(std::popcount(w_[i] & o.w_[i]));
    return c;
  }
  bool intersects(const Bitset& o) const {
    check_same(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    check_same(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  bool operator<(const Bitset& o) const {
    check_same(o);
    for (size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        f(uint32_t(wi * 64 + uint32_t(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<uint32_t> to_vector() const {
    std::vector<uint32_t> v;
    v.reserve(count());
    for_each([&](uint32_t i) { v.push_back(i); });
    return v;
  }

  // Little-endian byte order: byte k carries bits 8k..8k+7, two lowercase hex
  // digits per byte. "02" over 3 bits decodes to {1}.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    uint32_t nb = (n_ + 7) / 8;
    s.reserve(2 * nb);
    for (uint32_t k = 0; k < nb; ++k) {
      uint8_t byte = uint8_t((w_[k >> 3] >> ((k & 7) * 8)) & 0xff);
      s += digits[byte >> 4];
      s += digits[byte & 15];
    }
    return s;
  }

  static Bitset from_hex(uint32_t n, const std::string& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("Bitset::from_hex: odd digit count");
    uint32_t nb = (n + 7) / 8;
    if (s.size() > 2 * size_t(nb)) throw std::invalid_argument("Bitset::from_hex: more bytes than fit in " + std::to_string(n) + " bits");
    Bitset b(n);
    for (size_t k = 0; k * 2 < s.size(); ++k) {
      uint32_t hi = hex_val(s[2 * k]), lo = hex_val(s[2 * k + 1]);
      uint64_t byte = hi * 16 + lo;
      b.w_[k >> 3] |= byte << ((k & 7) * 8);
    }
    for (uint32_t i = n; i < nb * 8; ++i)
      if (i < uint32_t(b.w_.size() * 64) && b.test(i))
        throw std::invalid_argument("Bitset::from_hex: bit set at or past position " + std::to_string(n));
    return b;
  }

  size_t hash() const {
    size_t h = n_;
    for (uint64_t w : w_) h = h * 0x9E3779B97F4A7C15ULL + w;
    return h;
  }

 private:
  static uint32_t hex_val(char c) {
    if (c >= '0' && c <= '9') return uint32_t(c - '0');
    if (c >= 'a' && c <= 'f') return uint32_t(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return uint32_t(c - 'A' + 10);
    throw std::invalid_argument("Bitset::from_hex: bad hex digit");
  }
  void check_same(const Bitset& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Bitset size mismatch");
  }

  uint32_t n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace cayley
