// Command-line surface: analyze, verify, frobenius, sweep, oracle-check.
#include "sumset/core.hpp"
#include "sumset/frobenius.hpp"
#include "sumset/oracle.hpp"
#include "sumset/repcount.hpp"
#include "sumset/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

using json = nlohmann::json;
using namespace sumset;

namespace {

constexpr const char *kVersion = "0.1.0";

// Exit codes: 0 pass, 1 verified failure, 2 usage/input, 3 budget/overflow.
enum ExitCode { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct CommonOpts {
  std::string format = "text";
  std::string output;
  bool no_meta = false;
  bool raw = false;
  Int max_cells = 0; // 0 = library default (possibly overridden by env)
};

Budget make_budget(const CommonOpts &opts) {
  Budget budget;
  if (const char *env = std::getenv("SUMSET_MAX_CELLS")) {
    char *end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw InputError("malformed SUMSET_MAX_CELLS value");
    budget.max_table_cells = v;
  }
  if (opts.max_cells > 0)
    budget.max_table_cells = opts.max_cells;
  return budget;
}

std::vector<Int> parse_int_list(const std::string &text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char *end = nullptr;
    const long long v = std::strtoll(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0')
      throw InputError("cannot parse integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw InputError("empty integer list");
  return out;
}

std::string join(const std::vector<Int> &v, const char *sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join(std::span<const Int> v, const char *sep) {
  return join(std::vector<Int>(v.begin(), v.end()), sep);
}

// Members compacted to runs: "6 8-12".
std::string compact_members(const std::vector<Int> &members) {
  std::string s;
  std::size_t i = 0;
  while (i < members.size()) {
    std::size_t j = i;
    while (j + 1 < members.size() && members[j + 1] == members[j] + 1)
      ++j;
    if (!s.empty())
      s += ' ';
    s += std::to_string(members[i]);
    if (j > i)
      s += '-' + std::to_string(members[j]);
    i = j + 1;
  }
  return s.empty() ? "(empty)" : s;
}

void emit(const CommonOpts &opts, const std::string &text) {
  if (opts.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opts.output, std::ios::binary);
    if (!f)
      throw InputError("cannot open output file " + opts.output);
    f << text;
  }
}

json meta_block() { return json{{"tool", "sumset"}, {"version", kVersion}}; }

json thresholds_json(const ThresholdReport &thr) {
  json j{{"h_stable", thr.h_stable},
         {"h_nathanson", thr.h_nathanson},
         {"c_prime", thr.c_prime}};
  if (thr.h_wcc)
    j["h_wcc"] = *thr.h_wcc;
  if (thr.h_empirical)
    j["h_empirical"] = *thr.h_empirical;
  return j;
}

json decomposition_json(const Decomposition &dec) {
  return json{{"c", dec.c},
              {"d", dec.d},
              {"C", dec.low_fringe},
              {"D", dec.high_fringe},
              {"M", dec.max_value}};
}

json affine_json(const AffineMap &map) {
  return json{{"scale", map.scale},
              {"offset_per_summand", map.offset_per_summand}};
}

std::string decomposition_text(const Decomposition &dec) {
  std::string s = "C={" + join(dec.low_fringe, ",") + "} interval=[" +
                  std::to_string(dec.c) + "," +
                  std::to_string(dec.max_value - dec.d) + "] D={" +
                  join(dec.high_fringe, ",") + "} (c=" + std::to_string(dec.c) +
                  ", d=" + std::to_string(dec.d) +
                  ", M=" + std::to_string(dec.max_value) + ")";
  return s;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
  std::string set;
  Int t = 1;
  Int h = -1; // -1 = default to h_stable
  CommonOpts common;
};

int cmd_analyze(const AnalyzeOpts &opts) {
  const Budget budget = make_budget(opts.common);
  const std::vector<Int> raw = parse_int_list(opts.set);
  const Normalized norm = normalize(raw);
  const GeneratorSet &a = norm.set;

  const ThresholdReport thr = thresholds(a, opts.t);
  const Int h = opts.h >= 0 ? opts.h : thr.h_stable;
  const MembershipSet s = membership_set(a, h, opts.t, budget);

  // Anchor at c' - 1 when it is a member (always true for h >= h_stable),
  // else fall back to the longest run.
  std::optional<Int> anchor;
  if (s.contains(thr.c_prime - 1))
    anchor = thr.c_prime - 1;
  const bool decomposable = !s.empty();
  const Decomposition dec =
      decomposable ? decompose(s, anchor) : Decomposition{};

  if (opts.common.format == "json") {
    json j;
    j["input"] = json{{"set", raw}, {"t", opts.t}, {"h", h}};
    j["normalized"] =
        std::vector<Int>(a.elements().begin(), a.elements().end());
    j["affine_map"] = affine_json(norm.map);
    j["thresholds"] = thresholds_json(thr);
    j["membership"] = json{{"h", h},
                           {"t", opts.t},
                           {"max_value", s.max_value()},
                           {"members", s.to_vector()}};
    j["decomposition"] = decomposable ? decomposition_json(dec) : json(nullptr);
    j["verification"] = json(nullptr);
    if (opts.common.raw) {
      std::vector<Int> raw_members;
      for (Int m : s.to_vector())
        raw_members.push_back(norm.map.to_raw(m, h));
      j["raw"] = json{{"h", h}, {"members", raw_members}};
    }
    if (!opts.common.no_meta)
      j["meta"] = meta_block();
    emit(opts.common, j.dump(2) + "\n");
  } else if (opts.common.format == "csv") {
    std::string csv =
        "set,t,h_stable,h_nathanson,h_wcc,h_empirical,c,d,C,D,status\n";
    csv += "\"" + join(a.elements(), ",") + "\"," + std::to_string(opts.t) +
           "," + std::to_string(thr.h_stable) + "," +
           std::to_string(thr.h_nathanson) + "," +
           (thr.h_wcc ? std::to_string(*thr.h_wcc) : "") + ",," +
           (decomposable ? std::to_string(dec.c) : "") + "," +
           (decomposable ? std::to_string(dec.d) : "") + "," +
           join(dec.low_fringe, ";") + "," + join(dec.high_fringe, ";") +
           ",ok\n";
    emit(opts.common, csv);
  } else {
    std::ostringstream out;
    out << "input:        " << join(raw, ",") << "\n";
    out << "normalized:   " << join(a.elements(), ",") << "\n";
    out << "affine map:   scale " << norm.map.scale << ", offset "
        << norm.map.offset_per_summand << " per summand\n";
    out << "t:            " << opts.t << "\n";
    out << "h:            " << h << "\n";
    out << "h_stable:     " << thr.h_stable << "\n";
    out << "h_nathanson:  " << thr.h_nathanson << "\n";
    if (thr.h_wcc)
      out << "h_wcc:        " << *thr.h_wcc << "\n";
    out << "c_prime:      " << thr.c_prime << "\n";
    out << "membership:   " << compact_members(s.to_vector()) << "\n";
    if (decomposable)
      out << "decomposition: " << decomposition_text(dec) << "\n";
    else
      out << "decomposition: (empty set)\n";
    if (opts.common.raw) {
      std::vector<Int> raw_members;
      for (Int m : s.to_vector())
        raw_members.push_back(norm.map.to_raw(m, h));
      out << "raw members:  " << compact_members(raw_members) << "\n";
    }
    emit(opts.common, out.str());
  }
  return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyOpts {
  std::string set;
  Int t = 1;
  Int horizon = -1; // -1 = default 2*a_k + 2
  bool optimality = false;
  CommonOpts common;
};

int cmd_verify(const VerifyOpts &opts) {
  const Budget budget = make_budget(opts.common);
  const std::vector<Int> raw = parse_int_list(opts.set);
  const Normalized norm = normalize(raw);
  const GeneratorSet &a = norm.set;

  const Int horizon = opts.horizon >= 1 ? opts.horizon : default_horizon(a);
  const VerificationReport rep =
      verify_stabilization(a, opts.t, horizon, budget);

  std::optional<OptimalityReport> opt;
  if (opts.optimality) {
    if (a.k() != 2 || a.at(2) != a.at(1) + 1)
      throw InputError("--optimality needs a set of the form {0, n, n+1}");
    opt = verify_optimality(a.at(1), opts.t, budget);
  }

  const bool pass = rep.pass() && (!opt || opt->pass());

  if (opts.common.format == "json") {
    json j;
    j["input"] = json{{"set", raw}, {"t", opts.t}, {"horizon", horizon}};
    j["normalized"] =
        std::vector<Int>(a.elements().begin(), a.elements().end());
    j["affine_map"] = affine_json(norm.map);
    j["thresholds"] = thresholds_json(rep.thresholds);
    j["decomposition"] = decomposition_json(rep.stable);
    json ver{{"range", {rep.h_lo, rep.h_hi}},
             {"status", pass ? "pass" : "fail"},
             {"anchor_interval_ok", rep.anchor_interval_ok},
             {"anchor_constant_ok", rep.anchor_constant_ok}};
    ver["first_failure"] =
        rep.first_failure ? json(*rep.first_failure) : json(nullptr);
    if (rep.first_failure) {
      ver["missing"] = rep.diff.missing;
      ver["unexpected"] = rep.diff.unexpected;
    }
    j["verification"] = ver;
    if (opt) {
      json oj{{"n", opt->n},
              {"t", opt->t},
              {"h_stable", opt->h_stable},
              {"c", opt->c},
              {"below_bound", opt->below_bound},
              {"structure_ok", opt->structure_ok},
              {"h_matches", opt->h_matches},
              {"c_matches", opt->c_matches},
              {"below_bounded", opt->below_bounded},
              {"status", opt->pass() ? "pass" : "fail"}};
      oj["below_max"] = opt->below_max ? json(*opt->below_max) : json(nullptr);
      j["optimality"] = oj;
    }
    if (!opts.common.no_meta)
      j["meta"] = meta_block();
    emit(opts.common, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "set:          " << join(a.elements(), ",") << "\n";
    out << "t:            " << opts.t << "\n";
    out << "h_stable:     " << rep.thresholds.h_stable << "\n";
    out << "checked h:    [" << rep.h_lo << ", " << rep.h_hi << "]\n";
    out << "stable:       " << decomposition_text(rep.stable) << "\n";
    out << "anchor interval: " << (rep.anchor_interval_ok ? "ok" : "VIOLATED")
        << "\n";
    out << "anchor constant: " << (rep.anchor_constant_ok ? "ok" : "VIOLATED")
        << "\n";
    if (rep.first_failure) {
      out << "first failure: h=" << *rep.first_failure << "\n";
      out << "  missing:    " << join(rep.diff.missing, ",") << "\n";
      out << "  unexpected: " << join(rep.diff.unexpected, ",") << "\n";
    }
    if (opt) {
      out << "optimality:   n=" << opt->n << " t=" << opt->t << "\n";
      out << "  h_stable:   " << opt->h_stable
          << (opt->h_matches ? " (= t(n+1)-2)" : " MISMATCH") << "\n";
      out << "  c:          " << opt->c
          << (opt->c_matches ? " (= tn(n+1)-2n)" : " MISMATCH") << "\n";
      out << "  below max:  "
          << (opt->below_max ? std::to_string(*opt->below_max) : "(empty)")
          << " <= " << opt->below_bound
          << " < c: " << (opt->below_bounded ? "ok" : "VIOLATED") << "\n";
    }
    out << "status:       " << (pass ? "pass" : "fail") << "\n";
    emit(opts.common, out.str());
  }
  return pass ? kOk : kFail;
}

// -------------------------------------------------------------- frobenius

struct FrobeniusOpts {
  Int a = 0;
  Int b = 0;
  Int t = 1;
  CommonOpts common;
};

int cmd_frobenius(const FrobeniusOpts &opts) {
  const CoprimePair pair(std::min(opts.a, opts.b), std::max(opts.a, opts.b));
  const Int searched = t_frobenius(pair, opts.t);
  const Int formula = t_frobenius_closed_form(pair, opts.t);
  const Int at = count_solutions(pair, searched);
  const Int after = count_solutions(pair, searched + 1);

  if (opts.common.format == "json") {
    json j{{"a1", pair.a1()},
           {"a2", pair.a2()},
           {"t", opts.t},
           {"searched", searched},
           {"closed_form", formula},
           {"agree", searched == formula},
           {"count_at_searched", at},
           {"count_at_next", after}};
    if (!opts.common.no_meta)
      j["meta"] = meta_block();
    emit(opts.common, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "pair:         (" << pair.a1() << ", " << pair.a2() << ")\n";
    out << "t:            " << opts.t << "\n";
    out << "searched:     " << searched << "\n";
    out << "closed form:  " << formula << "\n";
    out << "agree:        " << (searched == formula ? "yes" : "NO") << "\n";
    out << "count(" << searched << "): " << at << "\n";
    out << "count(" << searched + 1 << "): " << after << "\n";
    emit(opts.common, out.str());
  }
  return kOk;
}

// ------------------------------------------------------------------ sweep

struct SweepOpts {
  std::vector<std::string> sets;
  std::string family_file;
  Int family_min = 0;
  Int family_max = -1;
  Int t_min = 1;
  Int t_max = 0; // 0 = same as t_min
  Int horizon = -1;
  CommonOpts common;
};

struct SweepRow {
  std::vector<Int> set;
  Int t = 0;
  ThresholdReport thr;
  Decomposition stable;
  std::string status; // pass | fail | error:<what>
};

int cmd_sweep(const SweepOpts &opts) {
  const Budget budget = make_budget(opts.common);

  std::vector<std::vector<Int>> families;
  for (const auto &s : opts.sets)
    families.push_back(parse_int_list(s));
  if (!opts.family_file.empty()) {
    std::ifstream f(opts.family_file);
    if (!f)
      throw InputError("cannot open family file " + opts.family_file);
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty())
        continue;
      families.push_back(parse_int_list(line));
    }
  }
  if (opts.family_max >= opts.family_min && opts.family_max > 0) {
    if (opts.family_min < 3)
      throw InputError("family range starts at n = 3");
    for (Int n = opts.family_min; n <= opts.family_max; ++n)
      families.push_back({0, n, n + 1});
  }
  if (families.empty())
    throw InputError("empty family: give --set, --family-file, or a range");

  const Int t_lo = opts.t_min;
  const Int t_hi = opts.t_max > 0 ? opts.t_max : opts.t_min;
  if (t_lo < 1 || t_hi < t_lo)
    throw InputError("invalid t range");

  // One row per normalized (A, t), A lexicographic then t ascending.
  std::set<std::vector<Int>> seen;
  for (const auto &raw : families) {
    const Normalized norm = normalize(raw);
    seen.insert(std::vector<Int>(norm.set.elements().begin(),
                                 norm.set.elements().end()));
  }

  std::vector<SweepRow> rows;
  bool all_pass = true;
  for (const auto &elems : seen) {
    const GeneratorSet a = GeneratorSet::canonical(elems);
    for (Int t = t_lo; t <= t_hi; ++t) {
      SweepRow row;
      row.set = elems;
      row.t = t;
      try {
        const Int horizon =
            opts.horizon >= 1 ? opts.horizon : default_horizon(a);
        const VerificationReport rep =
            verify_stabilization(a, t, horizon, budget);
        row.thr = rep.thresholds;
        row.stable = rep.stable;
        row.thr.h_empirical = empirical_threshold(a, t, horizon, budget);
        row.status = rep.pass() ? "pass" : "fail";
      } catch (const Error &e) {
        row.status = std::string("error:") + e.what();
      }
      if (row.status != "pass")
        all_pass = false;
      rows.push_back(std::move(row));
    }
  }

  if (opts.common.format == "json") {
    json jrows = json::array();
    for (const auto &row : rows) {
      const bool ok = row.status == "pass" || row.status == "fail";
      json r{{"set", row.set}, {"t", row.t}, {"status", row.status}};
      if (ok) {
        r["h_stable"] = row.thr.h_stable;
        r["h_nathanson"] = row.thr.h_nathanson;
        r["c"] = row.stable.c;
        r["d"] = row.stable.d;
        r["C"] = row.stable.low_fringe;
        r["D"] = row.stable.high_fringe;
        r["h_wcc"] = row.thr.h_wcc ? json(*row.thr.h_wcc) : json(nullptr);
        r["h_empirical"] =
            row.thr.h_empirical ? json(*row.thr.h_empirical) : json(nullptr);
      }
      jrows.push_back(r);
    }
    json j{{"rows", jrows}};
    if (!opts.common.no_meta)
      j["meta"] = meta_block();
    emit(opts.common, j.dump(2) + "\n");
  } else {
    // CSV is the canonical table shape; "text" prints the same rows.
    std::string out =
        "set,t,h_stable,h_nathanson,h_wcc,h_empirical,c,d,C,D,status\n";
    for (const auto &row : rows) {
      const bool ok = row.status == "pass" || row.status == "fail";
      out += "\"" + join(row.set, ",") + "\"," + std::to_string(row.t) + ",";
      if (ok) {
        out += std::to_string(row.thr.h_stable) + "," +
               std::to_string(row.thr.h_nathanson) + "," +
               (row.thr.h_wcc ? std::to_string(*row.thr.h_wcc) : "") + "," +
               (row.thr.h_empirical ? std::to_string(*row.thr.h_empirical)
                                    : "") +
               "," + std::to_string(row.stable.c) + "," +
               std::to_string(row.stable.d) + "," +
               join(row.stable.low_fringe, ";") + "," +
               join(row.stable.high_fringe, ";") + ",";
      } else {
        out += ",,,,,,,,";
      }
      out += row.status + "\n";
    }
    emit(opts.common, out);
  }
  return all_pass ? kOk : kFail;
}

// ----------------------------------------------------------- oracle-check

struct OracleCheckOpts {
  std::string budget = "k=3,a=8,h=5,t=3";
  CommonOpts common;
};

int cmd_oracle_check(const OracleCheckOpts &opts) {
  Int max_k = 3, max_a = 8, max_h = 5, max_t = 3;
  {
    std::stringstream ss(opts.budget);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw InputError("malformed budget entry '" + item + "'");
      const std::string key = item.substr(0, eq);
      char *end = nullptr;
      const long long v = std::strtoll(item.c_str() + eq + 1, &end, 10);
      if (*end != '\0' || v < 1)
        throw InputError("malformed budget value in '" + item + "'");
      if (key == "k")
        max_k = v;
      else if (key == "a")
        max_a = v;
      else if (key == "h")
        max_h = v;
      else if (key == "t")
        max_t = v;
      else
        throw InputError("unknown budget key '" + key + "'");
    }
  }

  oracle::OracleBudget obudget;
  obudget.max_k = static_cast<std::size_t>(std::max<Int>(max_k, 5));
  obudget.max_weight = std::max<Int>(max_h, 12);

  // Enumerate canonical sets {0} + nonzero subsets of [1, max_a].
  std::vector<GeneratorSet> sets;
  std::vector<Int> pick;
  auto collect = [&](auto &&self, Int next, std::size_t depth) -> void {
    if (depth >= 2 && depth <= static_cast<std::size_t>(max_k)) {
      Int g = 0;
      for (Int e : pick)
        g = std::gcd(g, e);
      if (g == 1) {
        std::vector<Int> elems{0};
        elems.insert(elems.end(), pick.begin(), pick.end());
        sets.push_back(GeneratorSet::canonical(std::move(elems)));
      }
    }
    if (depth == static_cast<std::size_t>(max_k))
      return;
    for (Int e = next; e <= max_a; ++e) {
      pick.push_back(e);
      self(self, e + 1, depth + 1);
      pick.pop_back();
    }
  };
  collect(collect, 1, 0);

  long long instances = 0;
  for (const auto &a : sets) {
    for (Int h = 0; h <= max_h; ++h) {
      for (Int t = 1; t <= max_t; ++t) {
        ++instances;
        const MembershipSet fast = membership_set(a, h, t);
        const MembershipSet slow =
            oracle::brute_force_membership(a, h, t, obudget);
        if (fast.bits() != slow.bits()) {
          std::ostringstream out;
          out << "DISAGREEMENT set=" << join(a.elements(), ",") << " h=" << h
              << " t=" << t << "\n";
          out << "  engine: " << compact_members(fast.to_vector()) << "\n";
          out << "  oracle: " << compact_members(slow.to_vector()) << "\n";
          emit(opts.common, out.str());
          return kFail;
        }
      }
    }
  }
  std::ostringstream out;
  out << "checked " << instances << " instances (k<=" << max_k
      << ", a<=" << max_a << ", h<=" << max_h << ", t<=" << max_t
      << "): all agree\n";
  emit(opts.common, out.str());
  return kOk;
}

void add_common(CLI::App *cmd, CommonOpts &common,
                const std::set<std::string> &formats) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember(formats));
  cmd->add_option("--output", common.output, "Write the report to a file");
  cmd->add_flag("--no-meta", common.no_meta, "Omit the meta block");
  cmd->add_option("--max-cells", common.max_cells,
                  "Override the table cell budget (default 2^24, or "
                  "SUMSET_MAX_CELLS)");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"h-fold sumset structure toolkit"};
  app.require_subcommand(1);
  // --h is a domain option on analyze; keep help on --help only.
  app.set_help_flag("--help", "Print help");
  app.option_defaults()->ignore_case(false);

  AnalyzeOpts analyze;
  auto *cmd_an = app.add_subcommand(
      "analyze", "Thresholds, membership set, and decomposition for one set");
  cmd_an->add_option("--set", analyze.set, "Comma-separated integers")
      ->required();
  cmd_an->add_option("--t", analyze.t, "Representation multiplicity")
      ->required();
  cmd_an->add_option("--h", analyze.h, "Fold count (default: h_stable)");
  cmd_an->add_flag("--raw", analyze.common.raw,
                   "Also report values in raw input coordinates");
  add_common(cmd_an, analyze.common, {"text", "json", "csv"});

  VerifyOpts verify;
  auto *cmd_ve = app.add_subcommand(
      "verify", "Check the stable decomposition over a horizon of h values");
  cmd_ve->add_option("--set", verify.set, "Comma-separated integers")
      ->required();
  cmd_ve->add_option("--t", verify.t, "Representation multiplicity")
      ->required();
  cmd_ve->add_option("--horizon", verify.horizon,
                     "Number of h values past h_stable (default 2*a_k + 2)");
  cmd_ve->add_flag("--optimality", verify.optimality,
                   "Also run the {0, n, n+1} sharpness check");
  add_common(cmd_ve, verify.common, {"text", "json"});

  FrobeniusOpts frob;
  auto *cmd_fr = app.add_subcommand(
      "frobenius", "t-Frobenius number of a coprime pair, by search");
  cmd_fr->add_option("--a", frob.a, "First generator")->required();
  cmd_fr->add_option("--b", frob.b, "Second generator")->required();
  cmd_fr->add_option("--t", frob.t, "Solution multiplicity")->required();
  add_common(cmd_fr, frob.common, {"text", "json"});

  SweepOpts sweep;
  auto *cmd_sw = app.add_subcommand(
      "sweep", "Verify a family of sets and tabulate thresholds");
  cmd_sw->add_option("--set", sweep.sets, "Explicit set (repeatable)");
  cmd_sw->add_option("--family-file", sweep.family_file,
                     "File with one comma-separated set per line");
  cmd_sw->add_option("--family-min", sweep.family_min,
                     "Generate {0, n, n+1} from this n");
  cmd_sw->add_option("--family-max", sweep.family_max,
                     "Generate {0, n, n+1} up to this n");
  cmd_sw->add_option("--t", sweep.t_min, "Multiplicity (single value)");
  cmd_sw->add_option("--t-min", sweep.t_min, "Start of the t range");
  cmd_sw->add_option("--t-max", sweep.t_max, "End of the t range");
  cmd_sw->add_option("--horizon", sweep.horizon,
                     "Horizon for each verification (default 2*a_k + 2)");
  add_common(cmd_sw, sweep.common, {"text", "json", "csv"});

  OracleCheckOpts ocheck;
  auto *cmd_oc = app.add_subcommand(
      "oracle-check", "Compare the DP engine against brute force");
  cmd_oc->add_option("--budget", ocheck.budget,
                     "Instance budget, e.g. k=3,a=8,h=5,t=3");
  add_common(cmd_oc, ocheck.common, {"text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(cmd_an))
      return cmd_analyze(analyze);
    if (app.got_subcommand(cmd_ve))
      return cmd_verify(verify);
    if (app.got_subcommand(cmd_fr))
      return cmd_frobenius(frob);
    if (app.got_subcommand(cmd_sw))
      return cmd_sweep(sweep);
    if (app.got_subcommand(cmd_oc))
      return cmd_oracle_check(ocheck);
  } catch (const BudgetError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
