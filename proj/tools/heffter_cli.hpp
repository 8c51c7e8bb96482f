#pragma once

// Command-line front end: construct, analyze and catalog.
//
// Exit codes: 0 success, 1 a checked property failed, 2 bad parameters.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heffter/analysis.hpp"
#include "heffter/family.hpp"
#include "heffter/json_io.hpp"

namespace heffter::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadParameters = 2;
inline constexpr std::uint64_t kCatalogBudget = 500;

struct JobConfig {
  std::optional<std::uint64_t> m, n, q, xi, eps;
  std::size_t ell = 0;
  std::string mode = "restricted";
  std::string format = "text";
  std::string out;
  std::string in;
  std::string faces_out;
  std::uint64_t qmax = 100;
  bool force = false;
};

namespace detail {

inline SearchMode parse_mode(const std::string& s) {
  if (s == "restricted") return SearchMode::Restricted;
  if (s == "exhaustive") return SearchMode::Exhaustive;
  return SearchMode::Both;
}

inline std::optional<std::chrono::milliseconds> budget_from_env() {
  const char* raw = std::getenv("HEFFTER_BUDGET_MS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::size_t used = 0;
  unsigned long long ms = 0;
  try {
    ms = std::stoull(raw, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0') throw Error(ErrorCode::BadParameters, "HEFFTER_BUDGET_MS must be an integer");
  return std::chrono::milliseconds(ms);
}

inline SearchOptions search_options(const JobConfig& cfg) {
  SearchOptions opts;
  opts.force = cfg.force;
  if (auto budget = budget_from_env()) opts.deadline = std::chrono::steady_clock::now() + *budget;
  return opts;
}

// Writes to --out when given, otherwise to the fallback stream.
inline void emit(const JobConfig& cfg, std::ostream& fallback, const std::string& text) {
  if (cfg.out.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::BadParameters, "cannot write " + cfg.out);
  file << text;
}

inline std::string heffter_summary(const HeffterReport& r) {
  std::ostringstream os;
  os << "heffter: " << (r.ok ? "ok" : "FAILED");
  if (r.h && r.k) os << " (h=" << *r.h << ", k=" << *r.k << ")";
  os << '\n';
  for (const auto& v : r.violations) os << "  " << to_string(v.kind) << ": " << v.detail << '\n';
  return os.str();
}

inline std::string analysis_text(const Analysis& a) {
  std::ostringstream os;
  os << "q=" << a.q << " m=" << a.m << " n=" << a.n << " ell=" << a.ell << '\n';
  os << heffter_summary(a.heffter);
  os << "rank-one: " << (a.rank_one ? "yes" : "no") << '\n';
  os << "globally simple: " << (a.globally_simple ? "yes" : "no") << '\n';
  if (a.orderings) {
    os << "omega_r: " << cycle_notation(a.orderings->row_cycles()) << '\n';
    os << "omega_c: " << cycle_notation(a.orderings->col_cycles()) << '\n';
    os << "compatible: " << (a.compatible ? "yes" : "no") << '\n';
  }
  if (a.embedding) os << "rho0: " << cycle_notation(a.embedding->rho0_cycles()) << '\n';
  if (a.surface) {
    os << "faces:";
    for (const auto& [len, count] : a.surface->census) os << ' ' << len << ':' << count;
    os << " (total " << a.surface->faces << ")\n";
    os << "euler characteristic: " << a.surface->euler_characteristic << '\n';
    os << "genus: " << a.surface->genus << '\n';
  }
  auto aut_line = [&](const AutReport& r) {
    os << "aut (" << to_string(r.method) << "): |Aut0+|=" << r.aut0_plus << " |Aut0-|=" << r.aut0_minus
       << " |Aut|=" << r.total << " cyclic=" << (r.cyclic ? "yes" : "no");
    if (r.cyclic) os << " generator=" << cycle_notation(r.generator);
    os << '\n';
  };
  if (a.restricted) aut_line(*a.restricted);
  if (a.exhaustive) aut_line(*a.exhaustive);
  if (a.modes_agree) os << "modes agree: " << (*a.modes_agree ? "yes" : "no") << '\n';
  for (const auto& p : a.properties) {
    os << (p.ok ? "ok   " : "FAIL ") << p.name;
    if (!p.detail.empty()) os << " (" << p.detail << ")";
    os << '\n';
  }
  return os.str();
}

inline int cmd_construct(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instance inst = resolve_instance(cfg.m, cfg.n, cfg.q);
  const RankOneSetup setup = build_instance(inst, cfg.xi, cfg.eps);
  const HeffterReport report = validate_heffter(setup.array);

  std::string report_text;
  if (cfg.format == "json") {
    json j{{"q", inst.q}, {"m", inst.m}, {"n", inst.n}, {"xi", setup.xi.value}, {"eps", setup.eps.value}};
    j["field"] = setup.field.header();
    j["validation"] = to_json(report);
    report_text = j.dump(2) + "\n";
  } else {
    report_text = heffter_summary(report);
  }
  if (cfg.out.empty()) {
    out << array_to_string(setup.array);
    err << report_text;
  } else {
    emit(cfg, out, array_to_string(setup.array));
    out << report_text;
  }
  return report.ok ? kExitOk : kExitFailure;
}

inline int cmd_analyze(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const SearchMode mode = parse_mode(cfg.mode);
  std::optional<PartiallyFilledArray> array;
  if (!cfg.in.empty()) {
    std::ifstream file(cfg.in);
    if (!file) throw Error(ErrorCode::BadParameters, "cannot read " + cfg.in);
    array = read_array(file);
  } else {
    const Instance inst = resolve_instance(cfg.m, cfg.n, cfg.q);
    array = build_instance(inst, cfg.xi, cfg.eps).array;
  }
  SearchOptions opts = search_options(cfg);
  if (mode != SearchMode::Restricted && array->field().q() > opts.exhaustive_limit && !opts.force) {
    throw Error(ErrorCode::TooLarge, "exhaustive search for q=" + std::to_string(array->field().q()) +
                                         " needs --force");
  }
  if (array->is_totally_filled() && cfg.ell >= array->rows()) {
    throw Error(ErrorCode::BadParameters, "--ell must be smaller than m");
  }

  const Analysis a = analyze_array(*array, cfg.ell, mode, opts);
  emit(cfg, out, cfg.format == "json" ? to_json(a).dump(2) + "\n" : analysis_text(a));

  if (!cfg.faces_out.empty()) {
    std::ofstream file(cfg.faces_out, std::ios::binary);
    if (!file) throw Error(ErrorCode::BadParameters, "cannot write " + cfg.faces_out);
    if (cfg.format == "json") {
      file << faces_to_json(a.faces).dump(2) << '\n';
    } else {
      write_faces(file, a.faces);
    }
  }
  if (const auto* failed = a.first_failure()) {
    err << failed->name << " failed";
    if (!failed->detail.empty()) err << ": " << failed->detail;
    err << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

struct CatalogRow {
  Instance inst;
  bool globally_simple = false;
  bool compatible = false;
  std::size_t aut0 = 0;
  std::uint64_t total = 0;
  std::int64_t genus = 0;
  bool ok = false;
};

inline CatalogRow catalog_row(const Instance& inst, const SearchOptions& opts) {
  CatalogRow row{inst};
  const auto setup = build_instance(inst);
  const Analysis a = analyze_array(setup.array, 0, SearchMode::Restricted, opts);
  row.globally_simple = a.globally_simple;
  row.compatible = a.compatible;
  if (const auto* aut = a.aut()) {
    row.aut0 = aut->aut0_plus + aut->aut0_minus;
    row.total = aut->total;
  }
  if (a.surface) row.genus = a.surface->genus;
  row.ok = a.ok();
  return row;
}

inline int cmd_catalog(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.qmax > kCatalogBudget && !cfg.force) {
    throw Error(ErrorCode::TooLarge, "--qmax above " + std::to_string(kCatalogBudget) + " needs --force");
  }
  const auto instances = admissible_instances(cfg.qmax);
  const std::optional<std::chrono::milliseconds> budget = budget_from_env();

  std::vector<std::future<CatalogRow>> pending;
  for (const auto& inst : instances) {
    pending.push_back(std::async(std::launch::async, [inst, budget, force = cfg.force] {
      SearchOptions opts;
      opts.force = force;
      if (budget) opts.deadline = std::chrono::steady_clock::now() + *budget;
      return catalog_row(inst, opts);
    }));
  }
  std::vector<CatalogRow> rows;
  for (auto& f : pending) rows.push_back(f.get());

  std::ostringstream os;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back(json{{"m", r.inst.m},
                         {"n", r.inst.n},
                         {"q", r.inst.q},
                         {"kind", r.inst.e == 1 ? "prime" : "prime-power"},
                         {"globally_simple", r.globally_simple},
                         {"compatible", r.compatible},
                         {"aut0", r.aut0},
                         {"total", r.total},
                         {"genus", r.genus}});
    }
    os << arr.dump(2) << '\n';
  } else {
    os << "m,n,q,kind,globally_simple,compatible,aut0,total,genus\n";
    for (const auto& r : rows) {
      os << r.inst.m << ',' << r.inst.n << ',' << r.inst.q << ',' << (r.inst.e == 1 ? "prime" : "prime-power") << ','
         << (r.globally_simple ? "true" : "false") << ',' << (r.compatible ? "true" : "false") << ',' << r.aut0
         << ',' << r.total << ',' << r.genus << '\n';
    }
  }
  emit(cfg, out, os.str());
  for (const auto& r : rows) {
    if (!r.ok) {
      err << "instance (" << r.inst.m << "," << r.inst.n << "," << r.inst.q << ") failed its checks\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

}  // namespace detail

/// Parses argv-style arguments (args[0] is the program name) and runs one command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-one Heffter arrays and their Archdeacon embeddings"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "number of rows (odd, >= 3)");
    sub->add_option("--n", cfg.n, "number of columns (odd, >= 3, coprime to m)");
    sub->add_option("--q", cfg.q, "field order 2mn+1");
    sub->add_option("--xi", cfg.xi, "element of order n (default: smallest)");
    sub->add_option("--eps", cfg.eps, "element of order m (default: smallest)");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
  };

  auto* construct = app.add_subcommand("construct", "build the rank-one array and validate it");
  add_params(construct);
  add_output(construct);

  auto* analyze = app.add_subcommand("analyze", "embedding, faces, genus and automorphism group");
  add_params(analyze);
  add_output(analyze);
  analyze->add_option("--ell", cfg.ell, "number of rows ordered right to left");
  analyze->add_option("--mode", cfg.mode, "automorphism search")
      ->check(CLI::IsMember({"restricted", "exhaustive", "both"}));
  analyze->add_option("--in", cfg.in, "analyze an array file instead of constructing one");
  analyze->add_option("--faces", cfg.faces_out, "write the face list to this path");
  analyze->add_flag("--force", cfg.force, "allow exhaustive search above q=71");

  auto* catalog = app.add_subcommand("catalog", "all admissible instances with q <= qmax");
  add_output(catalog);
  catalog->add_option("--qmax", cfg.qmax, "largest field order");
  catalog->add_flag("--force", cfg.force, "allow qmax above the default budget");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitBadParameters;
  }

  try {
    if (*construct) return detail::cmd_construct(cfg, out, err);
    if (*analyze) return detail::cmd_analyze(cfg, out, err);
    return detail::cmd_catalog(cfg, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::BudgetExceeded:
      case ErrorCode::VerificationFailed:
        return kExitFailure;
      default:
        return kExitBadParameters;
    }
  }
}

}  // namespace heffter::cli
