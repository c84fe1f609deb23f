#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

// Closed-form upper bounds on log2 of various Cayley digraph counts. The kind
// tags are the stable public names used by the CLI and the verification
// suite; each one picks a formula below.
enum class BoundKind { T1_3, T6_1, L2_2, L2_3, T2_4, T2_5, T3_3, T3_4 };

struct BoundParams {
  uint64_t r = 0;        // main size parameter
  uint64_t n = 0;        // secondary size parameter (quotient size), where used
  double b = 1.0;        // multiplier on the correction term of T1.3 / T6.1
  double epsilon = 1e-3; // exponent shaving for T3.3
};

inline const char* bound_name(BoundKind k) {
  switch (k) {
    case BoundKind::T1_3: return "T1.3";
    case BoundKind::T6_1: return "T6.1";
    case BoundKind::L2_2: return "L2.2";
    case BoundKind::L2_3: return "L2.3";
    case BoundKind::T2_4: return "T2.4";
    case BoundKind::T2_5: return "T2.5";
    case BoundKind::T3_3: return "T3.3";
    case BoundKind::T3_4: return "T3.4";
  }
  return "";
}

inline std::vector<BoundKind> all_bound_kinds() {
  return {BoundKind::T1_3, BoundKind::T6_1, BoundKind::L2_2, BoundKind::L2_3,
          BoundKind::T2_4, BoundKind::T2_5, BoundKind::T3_3, BoundKind::T3_4};
}

inline BoundKind parse_bound_kind(const std::string& s) {
  for (BoundKind k : all_bound_kinds())
    if (s == bound_name(k)) return k;
  throw std::invalid_argument("unknown bound kind '" + s + "'");
}

namespace detail {

inline bool bound_uses_n(BoundKind k) {
  return k == BoundKind::L2_2 || k == BoundKind::L2_3 || k == BoundKind::T2_4 || k == BoundKind::T2_5;
}

inline void validate_bound_params(BoundKind k, const BoundParams& p) {
  if (p.r < 2) throw std::invalid_argument("bound: r must be at least 2");
  if (bound_uses_n(k)) {
    if (p.n < 2) throw std::invalid_argument("bound: n must be at least 2");
    if (k == BoundKind::T2_4 && p.n < 71) throw std::invalid_argument("bound: T2.4 needs n >= 71");
  }
  if ((k == BoundKind::T1_3 || k == BoundKind::T6_1) && p.b < 0)
    throw std::invalid_argument("bound: b must be non-negative");
  if (k == BoundKind::T3_3 && !(p.epsilon > 0 && p.epsilon < 0.5))
    throw std::invalid_argument("bound: epsilon must lie in (0,1/2)");
}

}  // namespace detail

inline double bound_eval_log2(BoundKind k, const BoundParams& p) {
  detail::validate_bound_params(k, p);
  double r = double(p.r), n = double(p.n);
  double lgr = std::log2(r), lgn = detail::bound_uses_n(k) ? std::log2(n) : 0.0;
  switch (k) {
    case BoundKind::T1_3:
      return r - p.b * std::pow(r, 0.499) / (4 * lgr * lgr * lgr) + 2;
    case BoundKind::T6_1:
      return r - p.b * std::pow(r, 0.499) / (4 * lgr * lgr * lgr) + 1;
    case BoundKind::L2_2:
      return r - n / 4 + lgn * lgn + lgn;
    case BoundKind::L2_3:
      return r + std::log2(n * (n - 1) / 2) + ((r / n - 2) / 3) * std::log2(0.75);
    case BoundKind::T2_4:
      return r - n / 4 + lgn * lgn + lgr * lgr + lgr;
    case BoundKind::T2_5:
      return r - ((r / n - 2) / 3) * std::log2(4.0 / 3.0) + lgr * lgr + lgr + lgn - 1;
    case BoundKind::T3_3:
      return 0.75 * r + std::pow(r, 1.0 - p.epsilon);
    case BoundKind::T3_4:
      return r - (r / (4 * lgr)) * std::log2(std::exp(1.0)) - std::log2(4 * lgr) + lgr * lgr + lgr;
  }
  throw std::invalid_argument("bound: unknown kind");
}

// Integer value when the formula is provably an integer for these parameters
// (power-of-two logs, vanishing irrational terms). Used to cross-check the
// floating evaluation.
inline std::optional<int64_t> bound_eval_log2_exact(BoundKind k, const BoundParams& p) {
  detail::validate_bound_params(k, p);
  auto lg = [](uint64_t v) -> std::optional<int64_t> {
    if (std::popcount(v) == 1) return int64_t(std::countr_zero(v));
    return std::nullopt;
  };
  switch (k) {
    case BoundKind::T1_3:
      if (p.b == 0) return int64_t(p.r) + 2;
      return std::nullopt;
    case BoundKind::T6_1:
      if (p.b == 0) return int64_t(p.r) + 1;
      return std::nullopt;
    case BoundKind::L2_2:
      if (p.n % 4 == 0)
        if (auto e = lg(p.n)) return int64_t(p.r) - int64_t(p.n / 4) + *e * *e + *e;
      return std::nullopt;
    case BoundKind::L2_3:
      if (p.r == 2 * p.n)
        if (auto e = lg(p.n * (p.n - 1) / 2)) return int64_t(p.r) + *e;
      return std::nullopt;
    case BoundKind::T2_4:
      if (p.n % 4 == 0)
        if (auto en = lg(p.n))
          if (auto er = lg(p.r)) return int64_t(p.r) - int64_t(p.n / 4) + *en * *en + *er * *er + *er;
      return std::nullopt;
    case BoundKind::T2_5:
      if (p.r == 2 * p.n)
        if (auto er = lg(p.r))
          if (auto en = lg(p.n)) return int64_t(p.r) + *er * *er + *er + *en - 1;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace cayley
