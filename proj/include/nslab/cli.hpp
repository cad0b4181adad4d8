// Command-line front end. run() parses arguments, dispatches to the library
// and maps errors to exit codes:
//   0 all checks pass, 1 a check failed (witness found), 2 usage or invalid
//   input, 3 resource cap hit, 4 internal consistency failure.

#ifndef NSLAB_CLI_HPP_
#define NSLAB_CLI_HPP_

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classify.hpp"
#include "error.hpp"
#include "lab.hpp"
#include "record.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "semigroup.hpp"
#include "store.hpp"
#include "tangent_cone.hpp"

namespace nslab::cli {

enum ExitCode : int {
  kAllPass     = 0,
  kWitness     = 1,
  kUsage       = 2,
  kResource    = 3,
  kConsistency = 4,
};

struct Options {
  std::vector<Int>         gens;
  std::vector<int>         chars{0, 2};
  std::size_t              jobs = 1;
  bool                     json = false;
  bool                     csv  = false;
  bool                     no_timestamps = false;
  std::string              out;
  std::string              store;
  std::size_t              cap_factorizations = kDefaultFactorizationCap;
  std::size_t              cap_rf             = 1'000'000;
  std::size_t              cap_faces          = kDefaultFaceCap;
  std::optional<Int>       cap_b1g;
  Bounds                   bounds;
  std::vector<std::string> checks;
  std::vector<std::string> suite_ids;
  std::string              target;
  std::optional<Int>       e, m, w;
  bool                     pattern = false;
  std::size_t              witness_id = 0;
  Int                      e_max = 10;
  Int                      m_max = 16;

  Config config() const {
    Config c;
    c.characteristics     = chars;
    c.jobs                = jobs;
    c.caps.factorizations = cap_factorizations;
    c.caps.rf_product     = cap_rf;
    c.caps.faces          = cap_faces;
    c.caps.b1g_degree     = cap_b1g;
    c.validate();
    return c;
  }

  NumericalSemigroup semigroup() const {
    if (gens.empty()) {
      throw InvalidInput("--gens is required");
    }
    return NumericalSemigroup::from_generators(gens);
  }
};

namespace detail {

// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(std::string const& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        throw InvalidInput("cannot open output file " + path);
      }
      os_ = file_.get();
    }
  }

  std::ostream& operator*() {
    return *os_;
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream*                  os_;
};

inline std::string join(std::vector<Int> const& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  }
  return s;
}

inline void stamp(CheckReport& r, Options const& o) {
  if (!o.no_timestamps) {
    r.timestamp = utc_timestamp();
  }
}

inline void emit_report(std::ostream& os, CheckReport const& r, Options const& o) {
  if (o.csv) {
    os << r.check << ",\"" << join(r.gens) << "\"," << to_string(r.verdict) << '\n';
  } else {
    os << r.to_json().dump() << '\n';
  }
}

// Plain "key: value" lines for a flat view of a JSON object.
inline void emit_plain(std::ostream& os, Json const& j) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << it.key() << ": "
       << (it.value().is_string() ? it.value().get<std::string>()
                                  : it.value().dump())
       << '\n';
  }
}

inline int persist_failures(std::vector<CheckReport> const& flagged,
                            Options const& o, Config const& cfg) {
  int code = kAllPass;
  std::optional<WitnessStore> store;
  if (!o.store.empty()) {
    store.emplace(o.store);
  }
  for (auto const& r : flagged) {
    if (r.verdict == Verdict::fail) {
      code = kWitness;
      if (store) {
        store->append(r, cfg);
      }
    }
  }
  return code;
}

inline int cmd_invariants(Options const& o, std::ostream& out) {
  auto const rec = invariant_record(o.semigroup(), o.config());
  if (o.json) {
    out << rec.dump() << '\n';
  } else {
    emit_plain(out, rec);
  }
  return kAllPass;
}

inline int cmd_betti(Options const& o, std::ostream& out) {
  auto const S   = o.semigroup();
  auto const cfg = o.config();
  if (o.csv) {
    out << "characteristic,i,j,b\n";
  }
  Json all = Json::array();
  for (int c : cfg.characteristics) {
    auto const T = graded_betti(S, c, cfg.caps.faces);
    if (o.csv) {
      for (auto const& [key, b] : T.entries) {
        out << c << ',' << key.first << ',' << key.second << ',' << b << '\n';
      }
    } else if (o.json) {
      all.push_back(betti_table_json(T));
    } else {
      out << "char " << c << ": totals " << Json(T.totals()).dump()
          << ", regularity " << regularity(S, T) << '\n';
      for (auto const& [key, b] : T.entries) {
        out << "  b_{" << key.first << ',' << key.second << "} = " << b << '\n';
      }
    }
  }
  if (o.json) {
    out << all.dump() << '\n';
  }
  return kAllPass;
}

inline int cmd_tangent_cone(Options const& o, std::ostream& out) {
  auto const j = tangent_cone_json(o.semigroup(), o.config());
  if (o.json) {
    out << j.dump() << '\n';
  } else {
    emit_plain(out, j);
  }
  return kAllPass;
}

inline int cmd_series(Options const& o, std::ostream& out) {
  auto const S = o.semigroup();
  Json       j = polynomial_json(S);
  j["complete_intersection"] = is_complete_intersection(S);
  auto const g = gluing_decomposition(S);
  j["gluing"]  = g ? Json(g->to_string()) : Json(nullptr);
  if (o.json) {
    out << j.dump() << '\n';
  } else {
    emit_plain(out, j);
  }
  return kAllPass;
}

inline int cmd_enumerate(Options const& o, std::ostream& out) {
  if (o.checks.empty()) {
    throw InvalidInput("enumerate: at least one --check is required");
  }
  auto const cfg   = o.config();
  bool const keep  = true;
  auto       tally = run_checks(o.bounds, o.checks, cfg, keep);
  Sink       sink(o.out, out);
  if (o.csv) {
    *sink << "check,gens,verdict\n";
  }
  for (auto& r : tally.all) {
    stamp(r, o);
    emit_report(*sink, r, o);
  }
  Json summary         = tally.counts();
  summary["checks"]    = o.checks;
  summary["bounds"]    = o.bounds.to_json();
  summary["marker"]    = "bounded search, not a proof";
  out << Json{{"summary", summary}}.dump() << '\n';
  return persist_failures(tally.flagged, o, cfg);
}

inline int cmd_verify(Options const& o, std::ostream& out) {
  auto const cfg = o.config();
  std::vector<std::string> ids = o.suite_ids;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    ids.clear();
    for (auto const& s : suites()) {
      ids.push_back(s.id);
    }
  }
  Sink sink(o.out, out);
  int  code = kAllPass;
  for (auto const& id : ids) {
    auto const res = verify_suite(id, o.bounds, cfg);
    auto       sum = res.summary(o.bounds);
    stamp(sum, o);
    emit_report(*sink, sum, o);
    for (auto r : res.tally.flagged) {
      stamp(r, o);
      emit_report(*sink, r, o);
    }
    code = std::max(code, persist_failures(res.tally.flagged, o, cfg));
  }
  return code;
}

inline int cmd_search(Options const& o, std::ostream& out) {
  auto const   cfg = o.config();
  SearchParams p;
  p.e           = o.e;
  p.m           = o.m;
  p.w           = o.w;
  p.sum_pattern = o.pattern;
  auto const wt  = search_supremum(o.target, p, o.bounds, cfg);
  auto       rep = wt.report();
  stamp(rep, o);
  Json j{{"witness", rep.to_json()}};
  if (wt.semigroup) {
    j["record"] = invariant_record(*wt.semigroup, cfg);
    if (!o.store.empty()) {
      j["stored_id"] = WitnessStore(o.store).append(rep, cfg);
    }
  }
  out << (o.json ? j.dump() : j.dump(2)) << '\n';
  return kAllPass;
}

inline int cmd_replay(Options const& o, std::ostream& out) {
  if (o.store.empty()) {
    throw InvalidInput("replay: --store is required");
  }
  auto const r = replay(WitnessStore::find(o.store, o.witness_id));
  Json       j{{"id", o.witness_id},
               {"identical", r.identical()},
               {"record_diff", r.record_diff},
               {"verdict_matches", r.verdict_matches},
               {"report", r.report.to_json()}};
  out << j.dump() << '\n';
  return r.identical() ? kAllPass : kWitness;
}

inline int cmd_probe(Options const& o, std::ostream& out) {
  auto const e   = static_cast<std::size_t>(o.e.value_or(4));
  auto const res = boundedness_probe(e, o.bounds, o.config());
  Sink       sink(o.out, out);
  if (o.csv) {
    *sink << "rho,type,betti,count,example\n";
    for (auto const& r : res.rows) {
      std::vector<Int> b(r.betti.begin(), r.betti.end());
      *sink << r.rho << ',' << r.type << ",\"" << join(b) << "\"," << r.count
            << ",\"" << join(r.example) << "\"\n";
    }
  } else {
    *sink << res.to_json().dump() << '\n';
  }
  return persist_failures(res.tally.flagged, o, o.config());
}

// Known values for sup rho by (e, m), with edim = e + 1, next to
// the general bounds C(e, m) and D(e, m).
inline int cmd_bounds(Options const& o, std::ostream& out) {
  out << "e,m,rho_known,C,D\n";
  for (Int e = 3; e <= o.e_max; ++e) {
    for (Int m = e + 1; m <= o.m_max; ++m) {
      auto const v = rem_table_value(e, m);
      out << e << ',' << m << ',' << (v ? std::to_string(*v) : "") << ','
          << bound_C(e, m) << ',' << bound_D(e, m) << '\n';
    }
  }
  return kAllPass;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"numerical semigroup laboratory", "nslab"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--char", o.chars, "characteristics (0 or prime)")->delimiter(',');
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    c->add_flag("--json", o.json, "JSON output");
    c->add_flag("--csv", o.csv, "CSV output");
    c->add_flag("--no-timestamps", o.no_timestamps, "omit report timestamps");
    c->add_option("--out", o.out, "write the report stream here");
    c->add_option("--store", o.store, "JSON-lines witness store");
    c->add_option("--cap-factorizations", o.cap_factorizations)->check(CLI::PositiveNumber);
    c->add_option("--cap-rf", o.cap_rf, "RF row-pair cap")->check(CLI::PositiveNumber);
    c->add_option("--cap-faces", o.cap_faces)->check(CLI::PositiveNumber);
    c->add_option("--cap-b1g", o.cap_b1g, "degree cap for b1 of G");
  };
  auto gens = [&](CLI::App* c) {
    c->add_option("--gens", o.gens, "generators, e.g. 4,5,6")
        ->delimiter(',')
        ->required();
  };
  auto bounds = [&](CLI::App* c) {
    c->add_option("--genus-max", o.bounds.genus_max);
    c->add_option("--frob-max", o.bounds.frob_max);
    c->add_option("--gen-max", o.bounds.gen_max);
    c->add_option("--edim", o.bounds.edim);
    c->add_option("--mult", o.bounds.mult);
    c->add_option("--width", o.bounds.width);
    c->add_flag("--symmetric", o.bounds.symmetric_only, "symmetric only");
  };

  std::vector<std::pair<CLI::App*, int (*)(Options const&, std::ostream&)>> cmds;
  auto add = [&](char const* name, char const* help,
                 int (*fn)(Options const&, std::ostream&)) {
    auto* c = app.add_subcommand(name, help);
    common(c);
    cmds.emplace_back(c, fn);
    return c;
  };
  gens(add("invariants", "full invariant record", detail::cmd_invariants));
  gens(add("betti", "graded Betti numbers", detail::cmd_betti));
  gens(add("tangent-cone", "associated graded ring data", detail::cmd_tangent_cone));
  gens(add("series", "semigroup polynomial and CI structure", detail::cmd_series));
  auto* en = add("enumerate", "run checks over a bounded population",
                 detail::cmd_enumerate);
  bounds(en);
  en->add_option("--check", o.checks, "wilf, weak-wilf, widthr, widthg, "
                                      "cyclo-ci, rossi, rf, ci-structure, char-dep")
      ->delimiter(',');
  auto* ve = add("verify", "run known-result suites", detail::cmd_verify);
  bounds(ve);
  ve->add_option("--suite", o.suite_ids, "suite ids or all")->delimiter(',');
  auto* se = add("search", "lower-bound witness search", detail::cmd_search);
  bounds(se);
  se->add_option("--target", o.target, "R, T, S, A or W")->required();
  se->add_option("--e", o.e, "e = edim - 1 for R and T; edim itself for S, A and probe");
  se->add_option("--m", o.m, "multiplicity");
  se->add_option("--w", o.w, "width");
  se->add_flag("--pattern", o.pattern, "require g_i + g_j = g_h + g_k (target S)");
  auto* re = add("replay", "recompute a stored witness", detail::cmd_replay);
  re->add_option("id", o.witness_id, "witness id")->required();
  auto* pr = add("probe", "boundedness probe", detail::cmd_probe);
  bounds(pr);
  pr->add_option("--e", o.e, "embedding dimension (>= 4)");
  auto* bo = add("bounds", "rho table and C, D bounds as CSV", detail::cmd_bounds);
  bo->add_option("--e-max", o.e_max);
  bo->add_option("--m-max", o.m_max);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kAllPass;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAllPass;
  } catch (CLI::ParseError const& e) {
    for (auto const& [c, fn] : cmds) {
      if (c->parsed()) {
        err << "nslab " << c->get_name() << ": " << e.what() << '\n';
        return kUsage;
      }
    }
    err << "nslab: " << e.what() << '\n' << app.help();
    return kUsage;
  }
  if (o.json && o.csv) {
    err << "nslab: --json and --csv are exclusive\n";
    return kUsage;
  }
  try {
    for (auto const& [c, fn] : cmds) {
      if (c->parsed()) {
        return fn(o, out);
      }
    }
  } catch (ResourceLimit const& e) {
    err << "nslab: resource limit: " << e.what() << '\n';
    return kResource;
  } catch (ConsistencyFailure const& e) {
    err << "nslab: internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (Error const& e) {
    err << "nslab: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, char const* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace nslab::cli

#endif  // NSLAB_CLI_HPP_
