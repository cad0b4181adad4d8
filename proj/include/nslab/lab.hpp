// Checks on single semigroups, theorem suites over bounded populations,
// lower-bound witness searches and the embedding-dimension-4 boundedness
// probe.

#ifndef NSLAB_LAB_HPP_
#define NSLAB_LAB_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "classify.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "factorization.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "semigroup.hpp"
#include "tangent_cone.hpp"

namespace nslab {

struct Caps {
  std::size_t        factorizations = kDefaultFactorizationCap;
  std::size_t        rf_product     = 1'000'000;
  std::optional<Int> b1g_degree;
  std::size_t        faces = kDefaultFaceCap;
};

struct Config {
  std::vector<int> characteristics{0, 2};
  Caps             caps;
  std::size_t      jobs = 1;

  void validate() const {
    if (characteristics.empty()) {
      throw InvalidInput("config: at least one characteristic is required");
    }
    for (int c : characteristics) {
      if (c < 0 || (c > 0 && !linalg::is_prime(c))) {
        throw InvalidInput("config: characteristic " + std::to_string(c)
                           + " is neither 0 nor prime");
      }
    }
    if (caps.factorizations == 0 || caps.rf_product == 0 || caps.faces == 0
        || (caps.b1g_degree && *caps.b1g_degree < 2) || jobs == 0) {
      throw InvalidInput("config: caps and job count must be positive");
    }
  }
};

// ---------------------------------------------------------------------------
// Single-semigroup checks

// Frob < edim * eta, eta the number of elements below Frob. Frob < 3 mult
// settles it without counting.
inline CheckReport check_wilf(NumericalSemigroup const& S) {
  Json      data;
  Int const F = S.frobenius();
  Int const m = S.multiplicity();
  auto const e = static_cast<Int>(S.embedding_dimension());
  data["frob"] = F;
  if (F < 3 * m) {
    data["fast_path"] = true;
    return make_report("wilf", S, Verdict::pass, std::move(data));
  }
  Int const eta = S.is_N() ? 0 : F - S.genus() + 1;
  data["fast_path"] = false;
  data["edim"]      = e;
  data["eta"]       = eta;
  return make_report("wilf", S, F < e * eta ? Verdict::pass : Verdict::fail,
                     std::move(data));
}

// Every Betti degree is at most edim (eta - 1) + sum g_i + 1.
inline CheckReport check_weak_wilf(NumericalSemigroup const& S,
                                   Caps const&               caps = {}) {
  auto const e     = static_cast<Int>(S.embedding_dimension());
  Int const  eta   = S.is_N() ? 0 : S.frobenius() - S.genus() + 1;
  Int const  bound = e * (eta - 1) + S.sum_of_generators() + 1;
  auto const betti = betti_elements(S, caps.factorizations);
  Int const  top   = betti.empty() ? 0 : betti.rbegin()->first;
  Json       data;
  data["max_betti_degree"] = top;
  data["bound"]            = bound;
  return make_report("weak-wilf", S, top <= bound ? Verdict::pass : Verdict::fail,
                     std::move(data));
}

namespace detail {

inline Verdict at_most(Int lhs, Int rhs) {
  return lhs <= rhs ? Verdict::pass : Verdict::fail;
}

}  // namespace detail

// rho <= C(width + 1, 2), rho <= rho(interval completion), and the same for
// every b_i against i C(width + 1, i + 1) and the completion. Parts whose
// Betti tables exceed the face cap are inconclusive.
inline CheckReport check_width_R(NumericalSemigroup const& S,
                                 Caps const&               caps = {}) {
  Int const  w   = S.width();
  auto const ic  = interval_completion(S);
  auto const r   = static_cast<Int>(rho(S, caps.factorizations));
  auto const ric = static_cast<Int>(rho(ic, caps.factorizations));
  Json data;
  data["width"]           = w;
  data["rho"]             = r;
  data["rho_completion"]  = ric;
  data["completion"]      = ic.generators();
  data["rho_width_bound"] = binomial(w + 1, 2);
  Verdict const v_rho_w = detail::at_most(r, binomial(w + 1, 2));
  Verdict const v_rho_c = detail::at_most(r, ric);
  Verdict       v_b_w   = Verdict::pass;
  Verdict       v_b_c   = Verdict::pass;
  try {
    auto const t  = graded_betti(S, 0, caps.faces).totals();
    auto const tc = graded_betti(ic, 0, caps.faces).totals();
    data["betti"]            = t;
    data["betti_completion"] = tc;
    for (std::size_t i = 1; i < t.size(); ++i) {
      auto const ii = static_cast<Int>(i);
      v_b_w = combine(v_b_w, detail::at_most(static_cast<Int>(t[i]),
                                             ii * binomial(w + 1, ii + 1)));
      Int const other = i < tc.size() ? static_cast<Int>(tc[i]) : 0;
      v_b_c = combine(v_b_c, detail::at_most(static_cast<Int>(t[i]), other));
    }
  } catch (ResourceLimit const&) {
    v_b_w = v_b_c = Verdict::inconclusive;
  }
  data["rho_width_verdict"]        = to_string(v_rho_w);
  data["rho_completion_verdict"]   = to_string(v_rho_c);
  data["betti_width_verdict"]      = to_string(v_b_w);
  data["betti_completion_verdict"] = to_string(v_b_c);
  return make_report("width-R", S,
                     combine(combine(v_rho_w, v_rho_c), combine(v_b_w, v_b_c)),
                     std::move(data));
}

// Complete intersection versus cyclotomic numerator. Both directions fail
// on disagreement; CI without cyclotomic is a bug, the converse a witness.
inline CheckReport check_cyclo_ci(NumericalSemigroup const& S) {
  bool const ci  = is_complete_intersection(S);
  auto const cyc = is_cyclotomic(S);
  Json       data;
  data["ci"]         = ci;
  data["cyclotomic"] = cyc.cyclotomic;
  data["factors"]    = cyc.factors;
  Verdict v = Verdict::pass;
  if (ci && !cyc.cyclotomic) {
    data["direction"] = "ci-not-cyclotomic";
    v                 = Verdict::fail;
  } else if (!ci && cyc.cyclotomic) {
    data["direction"] = "cyclotomic-not-ci";
    v                 = Verdict::fail;
  }
  return make_report("cyclo-ci", S, v, std::move(data));
}

// HF of G non-decreasing for complete intersections; vacuous otherwise.
inline CheckReport check_rossi(NumericalSemigroup const& S) {
  Json data;
  bool const ci    = is_complete_intersection(S);
  data["applicable"] = ci;
  if (!ci) {
    return make_report("rossi", S, Verdict::pass, std::move(data));
  }
  auto const res = is_HF_nondecreasing(S);
  data["hf"]     = res.hf.values;
  if (res.violation_at) {
    data["violation_at"] = *res.violation_at;
  }
  return make_report("rossi", S, res.nondecreasing ? Verdict::pass : Verdict::fail,
                     std::move(data));
}

// Betti tables over several characteristics; a difference is reported as a
// witness.
inline CheckReport check_characteristics(NumericalSemigroup const& S,
                                         Config const&             cfg) {
  Json data      = Json::object();
  bool differ    = false;
  std::optional<std::vector<std::size_t>> first;
  for (int c : cfg.characteristics) {
    auto const t = graded_betti(S, c, cfg.caps.faces).totals();
    data["totals"][std::to_string(c)] = t;
    if (first && *first != t) {
      differ = true;
    }
    first = first.value_or(t);
  }
  data["differ"] = differ;
  return make_report("char-dep", S, differ ? Verdict::fail : Verdict::pass,
                     std::move(data));
}

// ---------------------------------------------------------------------------
// RF-matrices and RF-relations

struct RFMatrix {
  Int                           p;
  std::vector<std::vector<Int>> rows;  // rows[i][i] = -1
};

namespace detail {

// Row choices for p: row i is a factorization of p + g_i (which cannot use
// g_i, as p is a gap) with its i-th entry set to -1.
inline std::vector<std::vector<std::vector<Int>>> rf_rows(
    NumericalSemigroup const& S, Int p, std::size_t cap) {
  auto const&                                 gens = S.generators();
  std::vector<std::vector<std::vector<Int>>> rows(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto const& f : factorizations(S, p + gens[i], cap)) {
      auto r = f.exponents;
      r[i]   = -1;
      rows[i].push_back(std::move(r));
    }
  }
  return rows;
}

inline void check_pf(NumericalSemigroup const& S, Int p, char const* where) {
  if (S.is_N() || !pseudo_frobenius(S).contains(p)) {
    throw InvalidInput(std::string(where) + ": " + std::to_string(p)
                       + " is not a pseudo-Frobenius number of <"
                       + S.to_string() + ">");
  }
}

}  // namespace detail

// Every RF-matrix of p: the Cartesian product of the row choices.
inline std::vector<RFMatrix> rf_matrices(NumericalSemigroup const& S, Int p,
                                         std::size_t cap = 1'000'000) {
  detail::check_pf(S, p, "rf_matrices");
  auto const  rows  = detail::rf_rows(S, p, cap);
  std::size_t total = 1;
  for (auto const& r : rows) {
    if (r.empty() || total > cap / r.size()) {
      throw ResourceLimit("rf_matrices: more than " + std::to_string(cap)
                          + " matrices for p = " + std::to_string(p));
    }
    total *= r.size();
  }
  std::vector<RFMatrix> out;
  std::vector<std::size_t> pick(rows.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    RFMatrix M{p, {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      M.rows.push_back(rows[i][pick[i]]);
    }
    out.push_back(std::move(M));
    for (std::size_t i = rows.size(); i-- > 0;) {
      if (++pick[i] < rows[i].size()) {
        break;
      }
      pick[i] = 0;
    }
  }
  return out;
}

// (a+, a-) with a_i - a_j = a+ - a-, stored with a+ >= a- lexicographically
// so that each relation has one representative.
using RFRelation = std::pair<std::vector<Int>, std::vector<Int>>;

inline RFRelation oriented(std::vector<Int> a, std::vector<Int> b) {
  if (a < b) {
    std::swap(a, b);
  }
  return {std::move(a), std::move(b)};
}

// All RF-relations over every pseudo-Frobenius number and every RF-matrix.
// Pairs of rows from different matrices of the same p are pairs of row
// choices, so the product of matrices is never formed; `cap` bounds the
// number of row pairs.
inline std::set<RFRelation> rf_relations(NumericalSemigroup const& S,
                                         std::size_t cap = 1'000'000) {
  std::set<RFRelation> out;
  if (S.is_N()) {
    return out;
  }
  std::size_t pairs = 0;
  std::size_t const e = S.embedding_dimension();
  for (Int p : pseudo_frobenius(S).values) {
    auto const rows = detail::rf_rows(S, p, cap);
    for (std::size_t i = 0; i < e; ++i) {
      for (std::size_t j = i + 1; j < e; ++j) {
        pairs += rows[i].size() * rows[j].size();
        if (pairs > cap) {
          throw ResourceLimit("rf_relations: more than " + std::to_string(cap)
                              + " row pairs");
        }
        for (auto const& a : rows[i]) {
          for (auto const& b : rows[j]) {
            std::vector<Int> plus(e, 0), minus(e, 0);
            for (std::size_t k = 0; k < e; ++k) {
              Int const d = a[k] - b[k];
              (d > 0 ? plus : minus)[k] = d > 0 ? d : -d;
            }
            out.insert(oriented(std::move(plus), std::move(minus)));
          }
        }
      }
    }
  }
  return out;
}

// Mode A: for every Betti element, RF-relations of that degree connect all
// components of its factorization graph, so some minimal presentation
// consists of RF-relations. Mode B: each relation of the canonical minimal
// presentation is an RF-relation. Only mode A decides the verdict.
inline CheckReport check_rf_relations(NumericalSemigroup const& S,
                                      Caps const&               caps = {}) {
  Json data;
  if (S.is_N()) {
    data["mode_a"] = true;
    data["mode_b"] = true;
    return make_report("rf", S, Verdict::pass, std::move(data));
  }
  auto const& gens = S.generators();
  auto const  rels = rf_relations(S, caps.rf_product);
  std::map<Int, std::vector<RFRelation const*>> by_degree;
  for (auto const& r : rels) {
    by_degree[evaluate(gens, r.first)].push_back(&r);
  }
  bool             mode_a = true;
  std::vector<Int> unconnected;
  for (auto const& [b, c] : betti_elements(S, caps.factorizations)) {
    auto const comps = factorization_graph_components(S, b, caps.factorizations);
    std::map<std::vector<Int>, std::size_t> comp_of;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      for (auto const& f : comps[k]) {
        comp_of.emplace(f.exponents, k);
      }
    }
    std::vector<std::size_t> rank(comps.size()), parent(comps.size());
    boost::disjoint_sets<std::size_t*, std::size_t*> ds(rank.data(),
                                                        parent.data());
    for (std::size_t k = 0; k < comps.size(); ++k) {
      ds.make_set(k);
    }
    std::size_t joined = 0;
    for (auto const* r : by_degree[b]) {
      auto const x = ds.find_set(comp_of.at(r->first));
      auto const y = ds.find_set(comp_of.at(r->second));
      if (x != y) {
        ds.link(x, y);
        ++joined;
      }
    }
    if (joined + 1 != comps.size()) {
      mode_a = false;
      unconnected.push_back(b);
    }
  }
  bool mode_b = true;
  for (auto const& rel : minimal_presentation(S, caps.factorizations).relations) {
    if (!rels.count(oriented(rel.left.exponents, rel.right.exponents))) {
      mode_b = false;
    }
  }
  data["mode_a"]            = mode_a;
  data["mode_b"]            = mode_b;
  data["rf_relations"]      = rels.size();
  data["unconnected_betti"] = unconnected;
  return make_report("rf", S, mode_a ? Verdict::pass : Verdict::fail,
                     std::move(data));
}

// ---------------------------------------------------------------------------
// Check registry

using CheckFn = std::function<CheckReport(NumericalSemigroup const&, Config const&)>;

inline std::map<std::string, CheckFn> const& check_registry() {
  static std::map<std::string, CheckFn> const reg = {
      {"wilf", [](auto const& S, auto const&) { return check_wilf(S); }},
      {"weak-wilf",
       [](auto const& S, Config const& c) { return check_weak_wilf(S, c.caps); }},
      {"width-R",
       [](auto const& S, Config const& c) { return check_width_R(S, c.caps); }},
      {"width-G", [](auto const& S, auto const&) { return width_checks_G(S); }},
      {"cyclo-ci", [](auto const& S, auto const&) { return check_cyclo_ci(S); }},
      {"rossi", [](auto const& S, auto const&) { return check_rossi(S); }},
      {"rf",
       [](auto const& S, Config const& c) { return check_rf_relations(S, c.caps); }},
      {"ci-structure",
       [](auto const& S, auto const&) { return ci_structure_checks(S); }},
      {"char-dep",
       [](auto const& S, Config const& c) { return check_characteristics(S, c); }},
  };
  return reg;
}

// Registry keys equal the check ids of the reports; "widthr" and "widthg"
// are accepted as aliases.
inline CheckFn const& find_check(std::string name) {
  if (name == "widthr") {
    name = "width-R";
  } else if (name == "widthg") {
    name = "width-G";
  }
  auto const& reg = check_registry();
  auto        it  = reg.find(name);
  if (it == reg.end()) {
    throw InvalidInput("unknown check: " + name);
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Populations and aggregation

// A bounded population: semigroups by Frobenius number and/or genus,
// optionally restricted to one embedding dimension or to symmetric ones.
struct Bounds {
  std::optional<Int>         frob_max;
  std::optional<Int>         genus_max;
  std::optional<Int>         gen_max;
  std::optional<std::size_t> edim;
  std::optional<Int>         mult;
  std::optional<Int>         width;
  bool                       symmetric_only = false;

  bool bounded() const noexcept {
    return frob_max || genus_max || gen_max;
  }

  Json to_json() const {
    Json j = Json::object();
    if (frob_max) j["frob_max"] = *frob_max;
    if (genus_max) j["genus_max"] = *genus_max;
    if (gen_max) j["gen_max"] = *gen_max;
    if (edim) j["edim"] = *edim;
    if (mult) j["mult"] = *mult;
    if (width) j["width"] = *width;
    if (symmetric_only) j["symmetric_only"] = true;
    return j;
  }
};

// Picks an engine: symmetric semigroups by Frobenius number, the genus tree
// for a pure genus bound, the filtered generator search otherwise. Results
// are merged in a fixed order independent of `jobs`.
template <typename Acc, typename Visit, typename Merge>
Acc reduce_population(Bounds const& b, std::size_t jobs, Visit visit,
                      Merge merge) {
  if (!b.bounded()) {
    throw InvalidInput("population: one of frob_max, genus_max, gen_max is "
                       "required");
  }
  EnumerationFilter f;
  f.edim      = b.edim;
  f.mult      = b.mult;
  f.width     = b.width;
  f.frob_max  = b.frob_max;
  f.gen_max   = b.gen_max;
  f.genus_max = b.genus_max;
  auto filtered_visit = [&](NumericalSemigroup const& S, Acc& acc) {
    if (f.accepts(S) && (!b.symmetric_only || is_symmetric(S))) {
      visit(S, acc);
    }
  };
  if (b.symmetric_only && b.frob_max) {
    return reduce_symmetric<Acc>(*b.frob_max, jobs, filtered_visit, merge);
  }
  if (b.genus_max && !b.frob_max && !b.gen_max && !b.edim && !b.mult
      && !b.width) {
    return reduce_by_genus<Acc>(*b.genus_max, jobs, filtered_visit, merge);
  }
  return reduce_filtered<Acc>(f, jobs, filtered_visit, merge);
}

// Verdict counts plus every non-passing report, in enumeration order.
struct Tally {
  std::size_t              visited = 0;
  std::size_t              pass    = 0;
  std::size_t              fail    = 0;
  std::size_t              inconclusive = 0;
  std::vector<CheckReport> flagged;
  std::vector<CheckReport> all;  // only filled when streaming

  void add(CheckReport r, bool keep_all) {
    switch (r.verdict) {
      case Verdict::pass:
        ++pass;
        break;
      case Verdict::fail:
        ++fail;
        break;
      case Verdict::inconclusive:
        ++inconclusive;
        break;
    }
    if (r.verdict != Verdict::pass) {
      flagged.push_back(r);
    }
    if (keep_all) {
      all.push_back(std::move(r));
    }
  }

  void merge(Tally&& o) {
    visited += o.visited;
    pass += o.pass;
    fail += o.fail;
    inconclusive += o.inconclusive;
    std::move(o.flagged.begin(), o.flagged.end(), std::back_inserter(flagged));
    std::move(o.all.begin(), o.all.end(), std::back_inserter(all));
  }

  Verdict verdict() const noexcept {
    return fail > 0 ? Verdict::fail
                    : inconclusive > 0 ? Verdict::inconclusive : Verdict::pass;
  }

  Json counts() const {
    return {{"visited", visited},
            {"pass", pass},
            {"fail", fail},
            {"inconclusive", inconclusive}};
  }
};

// Runs the named checks on every semigroup of the population.
inline Tally run_checks(Bounds const& b, std::vector<std::string> const& checks,
                        Config const& cfg, bool keep_all = false) {
  std::vector<CheckFn const*> fns;
  for (auto const& c : checks) {
    fns.push_back(&find_check(c));
  }
  return reduce_population<Tally>(
      b, cfg.jobs,
      [&](NumericalSemigroup const& S, Tally& t) {
        ++t.visited;
        for (auto const* fn : fns) {
          t.add((*fn)(S, cfg), keep_all);
        }
      },
      [](Tally& into, Tally&& from) { into.merge(std::move(from)); });
}

// ---------------------------------------------------------------------------
// Theorem suites

struct Suite {
  std::string id;
  std::string statement;
  Bounds      population;  // edim / symmetry restriction; bounds filled in
  // Report for S, or nothing when S is outside the theorem's hypotheses.
  std::function<std::optional<CheckReport>(NumericalSemigroup const&,
                                           Config const&)>
      check;
};

namespace detail {

inline bool has_sum_pattern(std::vector<Int> const& g) {
  std::size_t const e = g.size();
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = i + 1; j < e; ++j) {
      for (std::size_t h = 0; h < e; ++h) {
        for (std::size_t k = h + 1; k < e; ++k) {
          if (h != i && h != j && k != i && k != j && g[i] + g[j] == g[h] + g[k]) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

inline CheckReport bound_report(std::string id, NumericalSemigroup const& S,
                                Int value, Int bound, char const* what) {
  Json data;
  data[what]    = value;
  data["bound"] = bound;
  return make_report(std::move(id), S, at_most(value, bound), std::move(data));
}

}  // namespace detail

// Four distinct indices with g_i + g_j = g_h + g_k.
inline bool has_sum_pattern(NumericalSemigroup const& S) {
  return detail::has_sum_pattern(S.generators());
}

// Upper bounds for sup rho over edim e + 1 and mult m where known exactly:
// C(e + 1, 2) for m - e <= 3, one more for m - e in {4, 5}, two more for
// m - e = 6, four more for m - e = 7 when e >= 9.
inline std::optional<Int> rem_table_value(Int e, Int m) {
  if (e < 3 || m <= e) {
    return std::nullopt;
  }
  Int const base = binomial(e + 1, 2);
  Int const d    = m - e;
  if (d <= 3) {
    return base;
  }
  if (d <= 5) {
    return base + 1;
  }
  if (d == 6) {
    return base + 2;
  }
  if (d == 7 && e >= 9) {
    return base + 4;
  }
  return std::nullopt;
}

inline std::vector<Suite> const& suites() {
  using Opt = std::optional<CheckReport>;
  static std::vector<Suite> const all = [] {
    std::vector<Suite> s;
    Bounds e3, e4, e5, sym4, sym5, any;
    e3.edim = 3;
    e4.edim = 4;
    e5.edim = 5;
    sym4    = e4;
    sym4.symmetric_only = true;
    sym5    = e5;
    sym5.symmetric_only = true;
    s.push_back({"herzog",
                 "edim 3: Betti totals (1,2,1) if symmetric, else (1,3,2)", e3,
                 [](NumericalSemigroup const& S, Config const& cfg) -> Opt {
                   bool const sym = is_symmetric(S);
                   std::vector<std::size_t> const want =
                       sym ? std::vector<std::size_t>{1, 2, 1}
                           : std::vector<std::size_t>{1, 3, 2};
                   Json    data;
                   Verdict v = Verdict::pass;
                   for (int c : cfg.characteristics) {
                     auto const t = graded_betti(S, c, cfg.caps.faces).totals();
                     data["homology"][std::to_string(c)] = t;
                     if (t != want) {
                       v = Verdict::fail;
                     }
                   }
                   std::vector<std::size_t> const pres{
                       1, rho(S, cfg.caps.factorizations), type(S)};
                   data["presentation"] = pres;
                   data["symmetric"]    = sym;
                   if (pres != want) {
                     v = Verdict::fail;
                   }
                   return make_report("herzog", S, v, std::move(data));
                 }});
    s.push_back({"bresinsky4", "symmetric edim 4: rho in {3, 5}", sym4,
                 [](NumericalSemigroup const& S, Config const& cfg) -> Opt {
                   auto const r = rho(S, cfg.caps.factorizations);
                   return make_report("bresinsky4", S,
                                      r == 3 || r == 5 ? Verdict::pass
                                                       : Verdict::fail,
                                      {{"rho", r}});
                 }});
    s.push_back({"bresinsky5",
                 "symmetric edim 5 with g_i + g_j = g_h + g_k: rho <= 13", sym5,
                 [](NumericalSemigroup const& S, Config const& cfg) -> Opt {
                   if (!has_sum_pattern(S)) {
                     return std::nullopt;
                   }
                   return detail::bound_report(
                       "bresinsky5", S,
                       static_cast<Int>(rho(S, cfg.caps.factorizations)), 13,
                       "rho");
                 }});
    s.push_back({"etohw", "almost symmetric edim 4: rho <= 7", e4,
                 [](NumericalSemigroup const& S, Config const& cfg) -> Opt {
                   if (!is_almost_symmetric(S)) {
                     return std::nullopt;
                   }
                   return detail::bound_report(
                       "etohw", S,
                       static_cast<Int>(rho(S, cfg.caps.factorizations)), 7,
                       "rho");
                 }});
    s.push_back({"as4type", "almost symmetric edim 4: type <= 3", e4,
                 [](NumericalSemigroup const& S, Config const&) -> Opt {
                   if (!is_almost_symmetric(S)) {
                     return std::nullopt;
                   }
                   return detail::bound_report(
                       "as4type", S, static_cast<Int>(type(S)), 3, "type");
                 }});
    s.push_back({"as5type", "almost symmetric edim 5: type <= 473", e5,
                 [](NumericalSemigroup const& S, Config const&) -> Opt {
                   if (!is_almost_symmetric(S)) {
                     return std::nullopt;
                   }
                   return detail::bound_report(
                       "as5type", S, static_cast<Int>(type(S)), 473, "type");
                 }});
    s.push_back({"ng4", "nearly Gorenstein edim 4: type <= 3", e4,
                 [](NumericalSemigroup const& S, Config const&) -> Opt {
                   if (!is_nearly_gorenstein(S)) {
                     return std::nullopt;
                   }
                   return detail::bound_report("ng4", S,
                                               static_cast<Int>(type(S)), 3,
                                               "type");
                 }});
    s.push_back({"bresinsky88", "edim 4: rho <= 4 + 9 type", e4,
                 [](NumericalSemigroup const& S, Config const& cfg) -> Opt {
                   auto const t = static_cast<Int>(type(S));
                   auto rep     = detail::bound_report(
                       "bresinsky88", S,
                       static_cast<Int>(rho(S, cfg.caps.factorizations)),
                       4 + 9 * t, "rho");
                   rep.data["type"] = t;
                   return rep;
                 }});
    s.push_back({"rem_table",
                 "rho <= known sup for edim e + 1, mult m with m - e <= 7", any,
                 [](NumericalSemigroup const& S, Config const& cfg) -> Opt {
                   auto const e = static_cast<Int>(S.embedding_dimension()) - 1;
                   auto const v = rem_table_value(e, S.multiplicity());
                   if (!v) {
                     return std::nullopt;
                   }
                   auto rep = detail::bound_report(
                       "rem_table", S,
                       static_cast<Int>(rho(S, cfg.caps.factorizations)), *v,
                       "rho");
                   rep.data["e"] = e;
                   rep.data["m"] = S.multiplicity();
                   return rep;
                 }});
    s.push_back({"erv", "rho <= C(e, m) and type <= D(e, m), e = edim - 1", any,
                 [](NumericalSemigroup const& S, Config const& cfg) -> Opt {
                   auto const e = static_cast<Int>(S.embedding_dimension()) - 1;
                   Int const  m = S.multiplicity();
                   if (e < 3 || m <= e) {
                     return std::nullopt;
                   }
                   auto const r  = static_cast<Int>(rho(S, cfg.caps.factorizations));
                   auto const t  = static_cast<Int>(type(S));
                   Int const  bc = bound_C(e, m);
                   Int const  bd = bound_D(e, m);
                   Json data{{"rho", r}, {"type", t}, {"C", bc}, {"D", bd},
                             {"e", e}, {"m", m}};
                   return make_report(
                       "erv", S,
                       combine(detail::at_most(r, bc), detail::at_most(t, bd)),
                       std::move(data));
                 }});
    return s;
  }();
  return all;
}

inline Suite const& find_suite(std::string const& id) {
  for (auto const& s : suites()) {
    if (s.id == id) {
      return s;
    }
  }
  throw InvalidInput("unknown suite: " + id);
}

struct SuiteResult {
  std::string id;
  Tally       tally;
  std::size_t outside = 0;  // enumerated but outside the hypotheses

  CheckReport summary(Bounds const& b) const {
    Json data        = tally.counts();
    data["outside"]  = outside;
    data["bounds"]   = b.to_json();
    data["marker"]   = "bounded search, not a proof";
    return CheckReport{"suite:" + id, {}, tally.verdict(), std::move(data),
                       std::nullopt};
  }
};

// Runs one theorem suite over the population given by `bounds` (its
// embedding-dimension and symmetry restrictions are added).
inline SuiteResult verify_suite(std::string const& id, Bounds bounds,
                                Config const& cfg) {
  auto const& suite = find_suite(id);
  if (suite.population.edim) {
    bounds.edim = suite.population.edim;
  }
  bounds.symmetric_only = bounds.symmetric_only || suite.population.symmetric_only;
  struct Acc {
    Tally       t;
    std::size_t outside = 0;
  };
  auto acc = reduce_population<Acc>(
      bounds, cfg.jobs,
      [&](NumericalSemigroup const& S, Acc& a) {
        ++a.t.visited;
        if (auto r = suite.check(S, cfg)) {
          a.t.add(std::move(*r), false);
        } else {
          ++a.outside;
        }
      },
      [](Acc& into, Acc&& from) {
        into.t.merge(std::move(from.t));
        into.outside += from.outside;
      });
  return SuiteResult{id, std::move(acc.t), acc.outside};
}

// ---------------------------------------------------------------------------
// Lower-bound witness searches

struct Witness {
  std::string                       target;
  Int                               value = -1;
  std::optional<NumericalSemigroup> semigroup;
  std::size_t                       candidates = 0;
  Json                              params;

  CheckReport report() const {
    Json data;
    data["target"]     = target;
    data["value"]      = value;
    data["candidates"] = candidates;
    data["params"]     = params;
    data["marker"]     = "lower-bound witness";
    return CheckReport{"search:" + target,
                       semigroup ? semigroup->generators() : std::vector<Int>{},
                       semigroup ? Verdict::pass : Verdict::inconclusive,
                       std::move(data), std::nullopt};
  }
};

struct SearchParams {
  std::optional<Int> e;      // R and T: edim = e + 1; S and A: edim = e
  std::optional<Int> m;
  std::optional<Int> w;
  bool               sum_pattern = false;  // target S only
};

// Best value of the target quantity over a bounded population; ties go to
// the first semigroup in enumeration order.
//   R: rho, edim e + 1, mult m      T: type, edim e + 1, mult m
//   S: rho over symmetric, edim e   A: type over almost symmetric, edim e
//   W: rho, width w
inline Witness search_supremum(std::string const& target, SearchParams const& p,
                               Bounds bounds, Config const& cfg) {
  auto need = [&](std::optional<Int> const& v, char const* name) {
    if (!v) {
      throw InvalidInput("search " + target + ": parameter " + name
                         + " is required");
    }
    return *v;
  };
  std::function<std::optional<Int>(NumericalSemigroup const&)> value;
  Json params;
  if (target == "R" || target == "T") {
    Int const e = need(p.e, "e");
    Int const m = need(p.m, "m");
    bounds.edim = static_cast<std::size_t>(e + 1);
    bounds.mult = m;
    params      = {{"e", e}, {"m", m}};
    if (target == "R") {
      value = [&](auto const& S) {
        return std::optional<Int>(static_cast<Int>(rho(S, cfg.caps.factorizations)));
      };
    } else {
      value = [](auto const& S) { return std::optional<Int>(static_cast<Int>(type(S))); };
    }
  } else if (target == "S") {
    Int const e = need(p.e, "e");
    bounds.edim           = static_cast<std::size_t>(e);
    bounds.symmetric_only = true;
    params = {{"edim", e}, {"sum_pattern", p.sum_pattern}};
    value  = [&](auto const& S) -> std::optional<Int> {
      if (p.sum_pattern && !has_sum_pattern(S)) {
        return std::nullopt;
      }
      return static_cast<Int>(rho(S, cfg.caps.factorizations));
    };
  } else if (target == "A") {
    Int const e = need(p.e, "e");
    bounds.edim = static_cast<std::size_t>(e);
    params      = {{"edim", e}};
    value       = [](auto const& S) -> std::optional<Int> {
      if (!is_almost_symmetric(S)) {
        return std::nullopt;
      }
      return static_cast<Int>(type(S));
    };
  } else if (target == "W") {
    Int const w  = need(p.w, "w");
    bounds.width = w;
    params       = {{"w", w}};
    value        = [&](auto const& S) {
      return std::optional<Int>(static_cast<Int>(rho(S, cfg.caps.factorizations)));
    };
  } else {
    throw InvalidInput("unknown search target: " + target);
  }
  params["bounds"] = bounds.to_json();
  Witness best = reduce_population<Witness>(
      bounds, cfg.jobs,
      [&](NumericalSemigroup const& S, Witness& wt) {
        auto const v = value(S);
        if (!v) {
          return;
        }
        ++wt.candidates;
        if (*v > wt.value) {
          wt.value     = *v;
          wt.semigroup = S;
        }
      },
      [](Witness& into, Witness&& from) {
        into.candidates += from.candidates;
        if (from.value > into.value) {
          into.value     = from.value;
          into.semigroup = std::move(from.semigroup);
        }
      });
  best.target = target;
  best.params = std::move(params);
  return best;
}

// ---------------------------------------------------------------------------
// Boundedness probe

struct ProbeRow {
  std::size_t              rho;
  std::size_t              type;
  std::vector<std::size_t> betti;
  std::size_t              count = 0;
  std::vector<Int>         example;  // first semigroup seen
};

struct ProbeResult {
  std::vector<ProbeRow> rows;  // sorted by (rho, type, betti)
  Tally                 tally; // identity and bound checks

  Json to_json() const {
    Json j;
    j["checks"] = tally.counts();
    j["rows"]   = Json::array();
    for (auto const& r : rows) {
      j["rows"].push_back({{"rho", r.rho},
                           {"type", r.type},
                           {"betti", r.betti},
                           {"count", r.count},
                           {"example", r.example}});
    }
    return j;
  }
};

// Joint statistics of (rho, type, Betti totals) over edim-e semigroups.
// For e = 4 every row is checked against b_2 = rho + type - 1,
// rho <= 4 + 9 type, and (rho, type) in {(3,1), (5,1)} when symmetric.
inline ProbeResult boundedness_probe(std::size_t e, Bounds bounds,
                                     Config const& cfg) {
  if (e < 4) {
    throw InvalidInput("boundedness_probe: embedding dimension must be >= 4");
  }
  bounds.edim = e;
  struct Acc {
    std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>,
             ProbeRow>
          rows;
    Tally tally;
    std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>>
        order;
  };
  auto acc = reduce_population<Acc>(
      bounds, cfg.jobs,
      [&](NumericalSemigroup const& S, Acc& a) {
        ++a.tally.visited;
        auto const t   = graded_betti(S, 0, cfg.caps.faces).totals();
        auto const r   = rho(S, cfg.caps.factorizations);
        auto const ty  = type(S);
        if (t[1] != r || t.back() != ty) {
          throw ConsistencyFailure("boundedness_probe: Betti totals of <"
                                   + S.to_string()
                                   + "> disagree with rho and type");
        }
        auto const key = std::make_tuple(r, ty, t);
        auto [it, fresh] = a.rows.try_emplace(key, ProbeRow{r, ty, t, 0, S.generators()});
        ++it->second.count;
        if (e == 4) {
          bool const sym = is_symmetric(S);
          Json data{{"rho", r}, {"type", ty}, {"betti", t}, {"symmetric", sym}};
          bool ok = t[2] + 1 == r + ty && static_cast<Int>(r) <= 4 + 9 * static_cast<Int>(ty);
          if (sym) {
            ok = ok && ty == 1 && (r == 3 || r == 5);
          }
          a.tally.add(make_report("probe4", S, ok ? Verdict::pass : Verdict::fail,
                                  std::move(data)),
                      false);
        }
      },
      [](Acc& into, Acc&& from) {
        for (auto& [k, row] : from.rows) {
          auto [it, fresh] = into.rows.try_emplace(k, row);
          if (!fresh) {
            it->second.count += row.count;
          }
        }
        into.tally.merge(std::move(from.tally));
      });
  ProbeResult res;
  for (auto& [k, row] : acc.rows) {
    res.rows.push_back(std::move(row));
  }
  res.tally = std::move(acc.tally);
  return res;
}

}  // namespace nslab

#endif  // NSLAB_LAB_HPP_
