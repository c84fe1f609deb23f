#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cayley/autgrp.hpp"
#include "cayley/digraph.hpp"
#include "cayley/group.hpp"
#include "cayley/perm_group.hpp"
#include "cayley/rng.hpp"

namespace cayley {

using ordered_json = nlohmann::ordered_json;

enum class CayleyClass { DRR, NORMAL_NON_DRR, NON_NORMAL };

inline const char* class_name(CayleyClass c) {
  switch (c) {
    case CayleyClass::DRR: return "drr";
    case CayleyClass::NORMAL_NON_DRR: return "normal_non_drr";
    case CayleyClass::NON_NORMAL: return "non_normal";
  }
  return "";
}

struct CensusRecord {
  ConnectionSet s;
  uint64_t aut_order = 0;
  CayleyClass cls = CayleyClass::NON_NORMAL;
  uint64_t orbit_size = 0;  // size of the orbit of s under the group's automorphisms; 0 if not computed
};

struct Tally {
  uint64_t drr = 0, normal_non_drr = 0, non_normal = 0, total = 0;

  void add(CayleyClass c, uint64_t w) {
    total += w;
    switch (c) {
      case CayleyClass::DRR: drr += w; break;
      case CayleyClass::NORMAL_NON_DRR: normal_non_drr += w; break;
      case CayleyClass::NON_NORMAL: non_normal += w; break;
    }
  }

  Tally& operator+=(const Tally& o) {
    drr += o.drr;
    normal_non_drr += o.normal_non_drr;
    non_normal += o.non_normal;
    total += o.total;
    return *this;
  }
};

struct Fraction {
  uint64_t num = 0, den = 1;

  static Fraction reduced(uint64_t n, uint64_t d) {
    if (d == 0) throw std::invalid_argument("Fraction: zero denominator");
    uint64_t g = std::gcd(n, d);
    return Fraction{n / g, d / g};
  }

  std::string decimal6() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6Lf", (long double)num / (long double)den);
    return buf;
  }
};

enum class RecordsFormat { csv, jsonl };

struct CensusOptions {
  bool reduce = false;
  uint32_t workers = 1;
  uint32_t chunk_size = 4096;
  uint64_t max_chunks = 0;  // 0 = no per-run budget; nonzero stops after that many chunks this run
  std::string checkpoint_path;
  std::string records_path;
  RecordsFormat records_format = RecordsFormat::csv;
  uint32_t max_exact_r = 20;
  uint32_t max_unlabelled_r = 12;
};

struct CensusOutcome {
  Tally tally;
  bool complete = true;
  ordered_json summary;
};

// --- classification ----------------------------------------------------------

namespace detail {

inline uint64_t mask_image(uint64_t mask, const Permutation& p) {
  uint64_t out = 0;
  while (mask) {
    uint32_t g = uint32_t(std::countr_zero(mask));
    mask &= mask - 1;
    out |= uint64_t{1} << p(g);
  }
  return out;
}

// Smallest mask in the orbit of the automorphism action, and the orbit size.
inline std::pair<uint64_t, uint64_t> orbit_rep_and_size(uint64_t mask, const std::vector<Permutation>& auts) {
  std::vector<uint64_t> seen{mask};
  uint64_t rep = mask;
  for (size_t i = 0; i < seen.size(); ++i)
    for (const Permutation& a : auts) {
      uint64_t im = mask_image(seen[i], a);
      if (im < rep) rep = im;
      if (std::find(seen.begin(), seen.end(), im) == seen.end()) seen.push_back(im);
    }
  return {rep, seen.size()};
}

struct ClassifyContext {
  const FiniteGroup& group;
  std::vector<Permutation> seed_perms;  // regular image of a generating set
  PermGroup regular;
  std::vector<Permutation> auts;  // automorphisms of the group itself, empty if unavailable

  explicit ClassifyContext(const FiniteGroup& g)
      : group(g), regular(regular_representation(g)) {
    for (uint32_t gen : generating_set(g)) seed_perms.push_back(right_multiplication(g, gen));
    if (g.order() <= 64) auts = group_automorphisms(g);
  }

  std::pair<uint64_t, CayleyClass> classify_set(const ConnectionSet& s) const {
    ColoredDigraph gamma = cayley_digraph(group, s);
    PermGroup aut = automorphism_group(gamma, seed_perms);
    uint64_t order = aut.order();
    CayleyClass cls;
    if (order == group.order()) cls = CayleyClass::DRR;
    else if (is_normal(aut, regular)) cls = CayleyClass::NORMAL_NON_DRR;
    else cls = CayleyClass::NON_NORMAL;
    return {order, cls};
  }
};

}  // namespace detail

inline CensusRecord classify(const FiniteGroup& r, const ConnectionSet& s) {
  if (s.r != r.order()) throw std::invalid_argument("classify: connection set order mismatch");
  detail::ClassifyContext ctx(r);
  auto [order, cls] = ctx.classify_set(s);
  uint64_t orbit = 0;
  if (!ctx.auts.empty() && r.order() <= 64) orbit = detail::orbit_rep_and_size(s.set.low64(), ctx.auts).second;
  return CensusRecord{s, order, cls, orbit};
}

// --- hypothesis flags --------------------------------------------------------

struct OvergroupFlags {
  uint64_t g_order = 0;
  uint64_t g1_order = 0;  // point stabilizer of the identity vertex
  uint64_t gr_order = 0;  // largest subgroup of R normal in G
  bool h2 = false;        // |G_1| > 2^(r^0.499)
  bool h3 = false;        // |G_R| <= 4*log2(r)
  bool h4 = false;        // some G_R-orbit is moved setwise by G_1
  bool h5 = false;        // G_R trivial
};

struct HypothesisReport {
  uint64_t aut_order = 0;
  bool h1 = false;  // Aut strictly bigger than R
  std::vector<OvergroupFlags> overgroups;
};

inline HypothesisReport hypothesis_flags(const FiniteGroup& r, const ConnectionSet& s, size_t element_cap = 1000000) {
  detail::ClassifyContext ctx(r);
  ColoredDigraph gamma = cayley_digraph(r, s);
  PermGroup aut = automorphism_group(gamma, ctx.seed_perms);
  HypothesisReport rep;
  rep.aut_order = aut.order();
  rep.h1 = aut.order() > r.order();
  if (!rep.h1) return rep;
  double g1_threshold = std::pow(2.0, std::pow(double(r.order()), 0.499));
  double gr_threshold = 4.0 * std::log2(double(r.order()));
  for (const PermGroup& g : maximal_overgroups(aut, ctx.regular, element_cap)) {
    OvergroupFlags f;
    f.g_order = g.order();
    PermGroup g1 = point_stabilizer(g, 0);
    PermGroup gr = core_in(g, ctx.regular, element_cap);
    f.g1_order = g1.order();
    f.gr_order = gr.order();
    f.h2 = double(f.g1_order) > g1_threshold;
    f.h3 = double(f.gr_order) <= gr_threshold;
    f.h5 = f.gr_order == 1;
    BlockPartition orbits = gr.orbit_partition();
    for (const Permutation& p : g1.generators()) {
      for (const std::vector<uint32_t>& cell : orbits.cells) {
        for (uint32_t v : cell)
          if (orbits.cell_of[p(v)] != orbits.cell_of[cell[0]]) {
            f.h4 = true;
            break;
          }
        if (f.h4) break;
      }
      if (f.h4) break;
    }
    rep.overgroups.push_back(f);
  }
  return rep;
}

// --- exact census ------------------------------------------------------------

namespace detail {

struct ExactItem {
  uint64_t mask;
  uint64_t weight;
};

struct ChunkOutput {
  Tally tally;
  std::string records;
};

inline std::string record_line(uint32_t r, uint64_t mask, uint64_t aut_order, CayleyClass cls, uint64_t orbit_size,
                               RecordsFormat fmt) {
  std::string hex = Bitset::from_mask(r, mask).to_hex();
  if (fmt == RecordsFormat::csv)
    return hex + "," + std::to_string(aut_order) + "," + class_name(cls) + "," + std::to_string(orbit_size) + "\n";
  ordered_json j;
  j["subset"] = hex;
  j["aut_order"] = aut_order;
  j["class"] = class_name(cls);
  j["orbit_size"] = orbit_size;
  return j.dump() + "\n";
}

// Runs fn(chunk_index) for indices [begin, end) on the requested number of
// threads. Chunk indices are claimed atomically; outputs land in slots, so
// the result is independent of scheduling.
template <typename F>
inline void run_chunks(uint64_t begin, uint64_t end, uint32_t workers, F&& fn) {
  if (begin >= end) return;
  uint32_t nthreads = uint32_t(std::min<uint64_t>(std::max<uint32_t>(workers, 1), end - begin));
  if (nthreads <= 1) {
    for (uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<uint64_t> next{begin};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (;;) {
      uint64_t i = next.fetch_add(1);
      if (i >= end) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (uint32_t t = 0; t < nthreads; ++t) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct CheckpointState {
  uint64_t chunks_done = 0;
  Tally tally;
  uint64_t records_offset = 0;
};

inline ordered_json checkpoint_header(const FiniteGroup& g, const std::string& mode, bool reduced,
                                      uint32_t chunk_size, uint64_t items, uint64_t seed, bool with_records) {
  ordered_json h;
  h["schema"] = "census-checkpoint/1";
  h["group"] = g.id();
  h["r"] = g.order();
  h["mode"] = mode;
  h["reduced"] = reduced;
  h["chunk_size"] = chunk_size;
  h["items"] = items;
  h["seed"] = seed;
  h["records"] = with_records;
  return h;
}

inline CheckpointState load_checkpoint(const std::string& path, const ordered_json& expected_header) {
  CheckpointState st;
  std::ifstream in(path);
  if (!in) return st;
  std::string line;
  if (!std::getline(in, line) || line.empty()) return st;
  ordered_json header = ordered_json::parse(line);
  for (const char* key : {"schema", "group", "mode", "seed", "r", "reduced", "chunk_size", "items", "records"})
    if (header.at(key) != expected_header.at(key))
      throw std::runtime_error(std::string("checkpoint: field '") + key + "' does not match this run");
  uint64_t chunk_size = expected_header.at("chunk_size").get<uint64_t>();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json c = ordered_json::parse(line);
    if (c.at("range_start").get<uint64_t>() != st.chunks_done * chunk_size)
      throw std::runtime_error("checkpoint: chunk lines are not consecutive");
    Tally t;
    t.drr = c.at("drr").get<uint64_t>();
    t.normal_non_drr = c.at("normal_non_drr").get<uint64_t>();
    t.non_normal = c.at("non_normal").get<uint64_t>();
    t.total = c.at("total").get<uint64_t>();
    st.tally += t;
    st.records_offset = c.at("records_offset").get<uint64_t>();
    ++st.chunks_done;
  }
  return st;
}

}  // namespace detail

// All 2^r connection sets classified, optionally one representative per orbit
// of the group's automorphisms (classification is constant on those orbits;
// representatives are weighted by orbit size, so both modes tally the same).
// Chunk results are committed in index order, which makes records, checkpoint
// and summary bytes independent of the worker count; max_chunks caps the work
// done by one call so a later call can resume from the checkpoint.
inline CensusOutcome exact_census(const FiniteGroup& g, const CensusOptions& opt = {}) {
  uint32_t r = g.order();
  if (r > opt.max_exact_r) throw std::invalid_argument("exact_census: r exceeds cap");
  if (r >= 16 && !opt.reduce && opt.workers <= 1)
    throw std::invalid_argument("exact_census: r >= 16 needs reduce or workers > 1");
  if (r > 62) throw std::invalid_argument("exact_census: r too large for mask enumeration");

  detail::ClassifyContext ctx(g);
  const std::vector<Permutation>& auts = ctx.auts;

  std::vector<detail::ExactItem> items;
  uint64_t space = uint64_t{1} << r;
  for (uint64_t mask = 0; mask < space; ++mask) {
    auto [rep, size] = detail::orbit_rep_and_size(mask, auts);
    if (opt.reduce) {
      if (rep == mask) items.push_back({mask, size});
    } else {
      items.push_back({mask, size});  // weight 1 for the tally; orbit size only labels the record
    }
  }

  uint64_t n_items = items.size();
  uint64_t n_chunks = (n_items + opt.chunk_size - 1) / opt.chunk_size;
  if (n_items == 0) n_chunks = 0;

  detail::CheckpointState st;
  ordered_json header = detail::checkpoint_header(g, "exact", opt.reduce, opt.chunk_size, n_items, 0,
                                                  !opt.records_path.empty());
  bool fresh = true;
  if (!opt.checkpoint_path.empty() && std::filesystem::exists(opt.checkpoint_path)) {
    st = detail::load_checkpoint(opt.checkpoint_path, header);
    fresh = st.chunks_done == 0;
  }

  uint64_t first = st.chunks_done;
  uint64_t last = n_chunks;
  if (opt.max_chunks && first + opt.max_chunks < last) last = first + opt.max_chunks;

  std::vector<detail::ChunkOutput> outputs(last - first);
  bool want_records = !opt.records_path.empty();
  detail::run_chunks(first, last, opt.workers, [&](uint64_t c) {
    detail::ChunkOutput& out = outputs[c - first];
    uint64_t lo = c * opt.chunk_size, hi = std::min(n_items, lo + opt.chunk_size);
    for (uint64_t i = lo; i < hi; ++i) {
      const detail::ExactItem& item = items[i];
      auto [order, cls] = ctx.classify_set(ConnectionSet::from_mask(r, item.mask));
      out.tally.add(cls, opt.reduce ? item.weight : 1);
      if (want_records) out.records += detail::record_line(r, item.mask, order, cls, item.weight, opt.records_format);
    }
  });

  // Commit in order: records first, then the checkpoint line that covers them.
  std::ofstream records_out;
  if (want_records) {
    if (fresh) {
      records_out.open(opt.records_path, std::ios::trunc);
    } else {
      std::filesystem::resize_file(opt.records_path, st.records_offset);
      records_out.open(opt.records_path, std::ios::app);
    }
    if (!records_out) throw std::runtime_error("exact_census: cannot open records file");
  }
  std::ofstream ck_out;
  if (!opt.checkpoint_path.empty()) {
    ck_out.open(opt.checkpoint_path, fresh ? std::ios::trunc : std::ios::app);
    if (!ck_out) throw std::runtime_error("exact_census: cannot open checkpoint file");
    if (fresh) ck_out << header.dump() << "\n";
  }
  uint64_t offset = st.records_offset;
  for (uint64_t c = first; c < last; ++c) {
    detail::ChunkOutput& out = outputs[c - first];
    if (want_records) {
      records_out << out.records;
      records_out.flush();
      offset += out.records.size();
    }
    st.tally += out.tally;
    if (ck_out.is_open()) {
      ordered_json line;
      line["range_start"] = c * opt.chunk_size;
      line["range_end"] = std::min(n_items, (c + 1) * opt.chunk_size);
      line["drr"] = out.tally.drr;
      line["normal_non_drr"] = out.tally.normal_non_drr;
      line["non_normal"] = out.tally.non_normal;
      line["total"] = out.tally.total;
      line["records_offset"] = offset;
      ck_out << line.dump() << "\n";
      ck_out.flush();
    }
  }

  CensusOutcome outcome;
  outcome.tally = st.tally;
  outcome.complete = last == n_chunks;
  ordered_json& s = outcome.summary;
  s["schema"] = "census-summary/1";
  s["group"] = g.id();
  s["r"] = r;
  s["mode"] = "exact";
  s["reduced"] = opt.reduce;
  s["complete"] = outcome.complete;
  s["total"] = outcome.tally.total;
  s["counts"] = {{"drr", outcome.tally.drr},
                 {"normal_non_drr", outcome.tally.normal_non_drr},
                 {"non_normal", outcome.tally.non_normal}};
  if (outcome.complete && outcome.tally.total != space) throw std::logic_error("exact_census: totals do not sum");
  Fraction prop = Fraction::reduced(outcome.tally.drr, outcome.tally.total ? outcome.tally.total : 1);
  s["drr_proportion"] = {{"num", prop.num}, {"den", prop.den}, {"decimal", prop.decimal6()}};
  return outcome;
}

// --- sampled census ----------------------------------------------------------

// k connection sets drawn with independent fair bits from the counter-based
// stream, so sample i is a pure function of (seed, i) and any worker count or
// chunking produces the same summary.
inline CensusOutcome sampled_census(const FiniteGroup& g, uint64_t k, uint64_t seed, const CensusOptions& opt = {}) {
  if (k == 0) throw std::invalid_argument("sampled_census: need at least one sample");
  uint32_t r = g.order();
  uint32_t words = (r + 63) / 64;
  detail::ClassifyContext ctx(g);

  uint64_t n_chunks = (k + opt.chunk_size - 1) / opt.chunk_size;
  std::vector<Tally> tallies(n_chunks);
  detail::run_chunks(0, n_chunks, opt.workers, [&](uint64_t c) {
    uint64_t lo = c * opt.chunk_size, hi = std::min(k, (c + 1) * opt.chunk_size);
    for (uint64_t i = lo; i < hi; ++i) {
      Bitset s(r);
      for (uint32_t w = 0; w < words; ++w) {
        uint64_t bits = splitmix64_at(seed, i * words + w);
        for (uint32_t b = 0; b < 64; ++b) {
          uint32_t pos = w * 64 + b;
          if (pos < r && ((bits >> b) & 1)) s.set(pos);
        }
      }
      auto [order, cls] = ctx.classify_set(ConnectionSet(r, std::move(s)));
      (void)order;
      tallies[c].add(cls, 1);
    }
  });
  CensusOutcome outcome;
  for (const Tally& t : tallies) outcome.tally += t;

  ordered_json& s = outcome.summary;
  s["schema"] = "census-summary/1";
  s["group"] = g.id();
  s["r"] = r;
  s["mode"] = "sampled";
  s["seed"] = seed;
  s["total"] = outcome.tally.total;
  s["counts"] = {{"drr", outcome.tally.drr},
                 {"normal_non_drr", outcome.tally.normal_non_drr},
                 {"non_normal", outcome.tally.non_normal}};
  Fraction prop = Fraction::reduced(outcome.tally.drr, outcome.tally.total);
  s["drr_proportion"] = {{"num", prop.num}, {"den", prop.den}, {"decimal", prop.decimal6()}};
  double p = double(outcome.tally.drr) / double(outcome.tally.total);
  double half = 1.96 * std::sqrt(p * (1 - p) / double(outcome.tally.total));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", half);
  s["ci95_halfwidth"] = buf;
  return outcome;
}

// --- unlabelled census -------------------------------------------------------

struct UnlabelledCounts {
  uint64_t cd_count = 0;   // isomorphism classes among all 2^r Cayley digraphs
  uint64_t drr_count = 0;  // classes whose members are DRRs
  uint64_t drr_subsets = 0;
  uint64_t drr_orbits = 0;  // orbits of the group's automorphisms on DRR connection sets
};

// Counts isomorphism classes by canonical-form deduplication and cross-checks
// the DRR class count against orbit counting on connection sets: isomorphic
// DRR digraphs have connection sets related by a group automorphism, so the
// two counts must agree.
inline UnlabelledCounts unlabelled_census(const FiniteGroup& g, const CensusOptions& opt = {}) {
  uint32_t r = g.order();
  if (r > opt.max_unlabelled_r) throw std::invalid_argument("unlabelled_census: r exceeds cap");
  detail::ClassifyContext ctx(g);

  UnlabelledCounts out;
  std::map<std::vector<uint8_t>, std::pair<uint64_t, CayleyClass>> classes;
  uint64_t space = uint64_t{1} << r;
  uint64_t drr_rep_orbits = 0;
  for (uint64_t mask = 0; mask < space; ++mask) {
    ConnectionSet s = ConnectionSet::from_mask(r, mask);
    ColoredDigraph gamma = cayley_digraph(g, s);
    auto [order, cls] = ctx.classify_set(s);
    if (cls == CayleyClass::DRR) {
      ++out.drr_subsets;
      if (detail::orbit_rep_and_size(mask, ctx.auts).first == mask) ++drr_rep_orbits;
    }
    std::vector<uint8_t> key = canonical_form(gamma).bytes;
    auto it = classes.find(key);
    if (it == classes.end()) {
      classes.emplace(std::move(key), std::make_pair(order, cls));
    } else if (it->second.first != order || it->second.second != cls) {
      throw std::logic_error("unlabelled_census: one isomorphism class, two classifications");
    }
  }
  out.cd_count = classes.size();
  for (const auto& [key, val] : classes)
    if (val.second == CayleyClass::DRR) ++out.drr_count;
  out.drr_orbits = drr_rep_orbits;
  if (out.drr_count != out.drr_orbits)
    throw std::logic_error("unlabelled_census: canonical DRR classes and connection-set orbits disagree");
  return out;
}

inline CensusOutcome unlabelled_summary(const FiniteGroup& g, const CensusOptions& opt = {}) {
  UnlabelledCounts c = unlabelled_census(g, opt);
  CensusOutcome outcome;
  ordered_json& s = outcome.summary;
  s["schema"] = "census-summary/1";
  s["group"] = g.id();
  s["r"] = g.order();
  s["mode"] = "unlabelled";
  s["total"] = uint64_t{1} << g.order();
  s["cd_count"] = c.cd_count;
  s["drr_count"] = c.drr_count;
  s["drr_subsets"] = c.drr_subsets;
  Fraction prop = Fraction::reduced(c.drr_count, c.cd_count ? c.cd_count : 1);
  s["drr_proportion"] = {{"num", prop.num}, {"den", prop.den}, {"decimal", prop.decimal6()}};
  return outcome;
}

}  // namespace cayley
