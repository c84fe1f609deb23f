#pragma once

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cayley/bounds.hpp"
#include "cayley/census.hpp"
#include "cayley/group.hpp"
#include "cayley/quotient.hpp"
#include "cayley/verify.hpp"

namespace cayley {

namespace detail {

inline uint32_t default_workers() {
  if (const char* env = std::getenv("CAYLEY_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) return uint32_t(v);
  }
  return 1;
}

inline std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

// Exit codes: 0 success, 1 usage or input error, 2 verification failure.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley digraph census and verification laboratory"};
  app.require_subcommand(1);
  bool timings = false;
  app.add_flag("--timings", timings, "print wall times to stderr");

  auto* census = app.add_subcommand("census", "classify connection sets of a group");
  std::string c_group, c_mode = "exact", c_checkpoint, c_out, c_format = "csv";
  bool c_reduce = false;
  uint64_t c_seed = 1, c_samples = 10000, c_max_chunks = 0;
  uint32_t c_workers = detail::default_workers(), c_chunk = 4096;
  census->add_option("--group", c_group, "group spec, e.g. cyclic:8 or dihedral:12")->required();
  census->add_option("--mode", c_mode)->check(CLI::IsMember({"exact", "sampled", "unlabelled"}));
  census->add_flag("--reduce-by-aut", c_reduce, "classify one representative per automorphism orbit");
  census->add_option("--seed", c_seed, "sample stream seed (sampled mode)");
  census->add_option("--samples", c_samples, "sample count (sampled mode)");
  census->add_option("--workers", c_workers, "worker threads (default $CAYLEY_WORKERS or 1)");
  census->add_option("--checkpoint", c_checkpoint, "checkpoint file for interrupt/resume (exact mode)");
  census->add_option("--out", c_out, "record stream path (exact mode)");
  census->add_option("--format", c_format)->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--chunk-size", c_chunk)->check(CLI::PositiveNumber);
  census->add_option("--max-chunks", c_max_chunks, "stop after this many chunks this run (0 = all)");

  auto* classify_cmd = app.add_subcommand("classify", "classify one connection set");
  std::string y_group, y_set;
  bool y_flags = false;
  classify_cmd->add_option("--group", y_group)->required();
  classify_cmd->add_option("--set", y_set, "connection set as little-endian hex bitmask")->required();
  classify_cmd->add_flag("--flags", y_flags, "also report overgroup hypothesis flags");

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient a Cayley digraph by a normal subgroup");
  std::string q_group, q_normal, q_set;
  bool q_odd = false, q_normal_mode = false;
  quotient_cmd->add_option("--group", q_group)->required();
  quotient_cmd->add_option("--normal", q_normal, "normal subgroup as hex bitmask of elements")->required();
  quotient_cmd->add_option("--set", q_set, "connection set as hex bitmask")->required();
  quotient_cmd->add_flag("--odd", q_odd, "parity quotient");
  quotient_cmd->add_flag("--normal-quotient", q_normal_mode, "orbit quotient");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string v_suite = "all";
  {
    std::vector<std::string> choices = all_suite_names();
    choices.push_back("all");
    verify_cmd->add_option("--suite", v_suite)->check(CLI::IsMember(choices));
  }

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a log2 count bound");
  std::string b_kind;
  uint64_t b_r = 0, b_n = 0;
  double b_b = 1.0, b_eps = 1e-3;
  bounds_cmd->add_option("--kind", b_kind)->required();
  bounds_cmd->add_option("--r", b_r)->required();
  bounds_cmd->add_option("--n", b_n);
  bounds_cmd->add_option("--b", b_b);
  bounds_cmd->add_option("--epsilon", b_eps);

  auto* groups_cmd = app.add_subcommand("groups", "group catalog");
  auto* groups_list = groups_cmd->add_subcommand("list", "print the catalog");
  groups_cmd->require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("cayley");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto started = std::chrono::steady_clock::now();
  auto report_time = [&](const char* what) {
    if (!timings) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    err << what << " wall_ms=" << ms.count() << "\n";
  };

  try {
    if (census->parsed()) {
      if (c_mode != "exact") {
        if (c_reduce) throw std::invalid_argument("--reduce-by-aut requires exact mode");
        if (!c_checkpoint.empty()) throw std::invalid_argument("--checkpoint requires exact mode");
        if (!c_out.empty()) throw std::invalid_argument("--out requires exact mode");
        if (c_max_chunks) throw std::invalid_argument("--max-chunks requires exact mode");
      }
      if (c_mode != "sampled" && (census->count("--seed") || census->count("--samples")))
        throw std::invalid_argument("--seed/--samples apply to sampled mode only");
      FiniteGroup g = make_group(c_group);
      CensusOptions opt;
      opt.reduce = c_reduce;
      opt.workers = c_workers;
      opt.chunk_size = c_chunk;
      opt.max_chunks = c_max_chunks;
      opt.checkpoint_path = c_checkpoint;
      opt.records_path = c_out;
      opt.records_format = c_format == "csv" ? RecordsFormat::csv : RecordsFormat::jsonl;
      CensusOutcome outcome;
      if (c_mode == "exact") outcome = exact_census(g, opt);
      else if (c_mode == "sampled") outcome = sampled_census(g, c_samples, c_seed, opt);
      else outcome = unlabelled_summary(g, opt);
      out << outcome.summary.dump(2) << "\n";
      report_time("census");
      return 0;
    }

    if (classify_cmd->parsed()) {
      FiniteGroup g = make_group(y_group);
      ConnectionSet s = ConnectionSet::from_hex(g.order(), y_set);
      CensusRecord rec = classify(g, s);
      ordered_json j;
      j["schema"] = "classify/1";
      j["group"] = g.id();
      j["r"] = g.order();
      j["subset"] = rec.s.to_hex();
      j["aut_order"] = rec.aut_order;
      j["class"] = class_name(rec.cls);
      j["orbit_size"] = rec.orbit_size;
      if (y_flags) {
        HypothesisReport h = hypothesis_flags(g, s);
        ordered_json hj;
        hj["h1"] = h.h1;
        hj["overgroups"] = ordered_json::array();
        for (const OvergroupFlags& f : h.overgroups)
          hj["overgroups"].push_back({{"g_order", f.g_order},
                                      {"g1_order", f.g1_order},
                                      {"gr_order", f.gr_order},
                                      {"h2", f.h2},
                                      {"h3", f.h3},
                                      {"h4", f.h4},
                                      {"h5", f.h5}});
        j["hypotheses"] = hj;
      }
      out << j.dump(2) << "\n";
      report_time("classify");
      return 0;
    }

    if (quotient_cmd->parsed()) {
      if (q_odd == q_normal_mode) throw std::invalid_argument("pass exactly one of --odd / --normal-quotient");
      FiniteGroup g = make_group(q_group);
      std::vector<uint32_t> n_elems = Bitset::from_hex(g.order(), q_normal).to_vector();
      ConnectionSet s = ConnectionSet::from_hex(g.order(), q_set);
      ColoredDigraph gamma = cayley_digraph(g, s);
      ordered_json j;
      j["schema"] = "quotient/1";
      j["group"] = g.id();
      j["r"] = g.order();
      j["normal"] = n_elems;
      j["subset"] = s.to_hex();
      if (q_odd) {
        QuotientGroup q = quotient_group(g, n_elems);
        ConnectionSet sq = odd_connection_set(g, s, q);
        ColoredDigraph dq = odd_quotient(gamma, coset_partition(g, n_elems));
        j["mode"] = "odd";
        j["quotient_order"] = q.group.order();
        j["connection_set"] = sq.to_hex();
        j["digraph"] = to_compact(dq);
      } else {
        PermGroup reg = regular_representation(g);
        std::vector<Permutation> n_perms;
        for (uint32_t e : n_elems) n_perms.push_back(right_multiplication(g, e));
        QuotientResult nq = normal_quotient(gamma, reg, PermGroup(g.order(), n_perms));
        j["mode"] = "normal";
        j["cells"] = nq.cells.cells;
        j["digraph"] = to_compact(nq.graph);
      }
      out << j.dump(2) << "\n";
      report_time("quotient");
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<std::string> names =
          v_suite == "all" ? all_suite_names() : std::vector<std::string>{v_suite};
      bool all_pass = true;
      for (const std::string& name : names) {
        SuiteResult r = run_suite(name);
        out << r.report.dump() << "\n";
        if (!r.pass) all_pass = false;
        report_time(name.c_str());
      }
      return all_pass ? 0 : 2;
    }

    if (bounds_cmd->parsed()) {
      BoundParams p;
      p.r = b_r;
      p.n = b_n;
      p.b = b_b;
      p.epsilon = b_eps;
      out << detail::format_g12(bound_eval_log2(parse_bound_kind(b_kind), p)) << "\n";
      report_time("bounds");
      return 0;
    }

    if (groups_list->parsed()) {
      for (const GroupSpec& spec : catalog()) out << spec.to_string() << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace cayley
