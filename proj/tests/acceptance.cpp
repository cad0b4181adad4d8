// Acceptance run: one line per criterion. `acceptance --only N` runs a single
// criterion; the exit status is 0 iff every selected criterion passed.

#include <nslab/nslab.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"

using nslab::Int;
using nslab::NumericalSemigroup;

namespace {

// Bounds and seeds. Every comparison below is exact.
constexpr Int           kHerzogFrobMax     = 60;
constexpr Int           kMaxEdimMultMax    = 7;
constexpr Int           kMaxEdimFrobMax    = 40;
constexpr Int           kRegularityGenus   = 15;
constexpr std::size_t   kRandomCount       = 200;
constexpr Int           kRandomGenus       = 30;
constexpr std::uint64_t kRandomSeed        = 20240601;
constexpr Int           kDualityGenus      = 15;
constexpr Int           kEdim4FrobMax      = 80;
constexpr Int           kErvGenus          = 18;
constexpr Int           kWilfGenus         = 18;
constexpr Int           kCycloFrobMax      = 70;
constexpr Int           kRossiFrobMax      = 70;
constexpr std::size_t   kRossiEdimMax      = 5;
constexpr Int           kOracleGenus       = 12;
constexpr Int           kSharpWidthMax     = 10;
constexpr Int           kSharpFrobMax      = 81;
constexpr Int           kSharpRho          = 13;
constexpr Int           kTangentGenus      = 12;
constexpr Int           kArithMultMax      = 12;
constexpr Int           kArithStepMax      = 12;

struct Outcome {
  bool        pass = true;
  std::string detail;
  bool        flagged = false;  // conjecture witness, reported separately
};

struct Context {
  std::size_t   jobs = 1;
  nslab::Config cfg;
  std::string   store;
};

std::string counts(nslab::Tally const& t) {
  std::ostringstream s;
  s << t.visited << " visited, " << t.pass << " pass, " << t.fail << " fail, "
    << t.inconclusive << " inconclusive";
  return s.str();
}

bool clean(nslab::Tally const& t) {
  return t.fail == 0 && t.inconclusive == 0 && t.pass > 0;
}

nslab::Bounds frob(Int f) {
  nslab::Bounds b;
  b.frob_max = f;
  return b;
}

nslab::Bounds genus(Int g) {
  nslab::Bounds b;
  b.genus_max = g;
  return b;
}

void report_first(std::ostringstream& s, nslab::Tally const& t) {
  if (!t.flagged.empty()) {
    s << "; first: " << t.flagged.front().to_json().dump();
  }
}

Outcome herzog(Context const& c) {
  auto const r = nslab::verify_suite("herzog", frob(kHerzogFrobMax), c.cfg);
  std::ostringstream s;
  s << "edim 3, Frob <= " << kHerzogFrobMax << ", homology in char 0 and 2 "
    << "plus presentation: " << counts(r.tally);
  report_first(s, r.tally);
  return {clean(r.tally) && r.outside == 0, s.str()};
}

Outcome max_edim(Context const& c) {
  std::size_t n = 0, bad = 0;
  std::string first;
  for (Int m = 1; m <= kMaxEdimMultMax; ++m) {
    nslab::EnumerationFilter f;
    f.mult     = m;
    f.edim     = static_cast<std::size_t>(m);
    f.frob_max = kMaxEdimFrobMax;
    nslab::enumerate_filtered(f, [&](NumericalSemigroup const& S) {
      ++n;
      bool ok = nslab::is_max_edim(S) && nslab::type(S) == static_cast<std::size_t>(m - 1);
      for (int ch : c.cfg.characteristics) {
        auto const t = nslab::graded_betti(S, ch).totals();
        ok = ok && t.size() == static_cast<std::size_t>(m) && t[0] == 1;
        for (std::size_t i = 1; ok && i < t.size(); ++i) {
          auto const ii = static_cast<Int>(i);
          ok = static_cast<Int>(t[i]) == ii * nslab::binomial(m, ii + 1);
        }
      }
      auto const g = nslab::b1_G(S);
      ok = ok && g.definite()
           && static_cast<Int>(g.count) == nslab::binomial(m, 2);
      if (!ok && bad++ == 0) {
        first = S.to_string();
      }
    });
  }
  std::ostringstream s;
  s << n << " max-edim semigroups, mult <= " << kMaxEdimMultMax << ", Frob <= "
    << kMaxEdimFrobMax << "; b_i = i C(m, i+1), type = m - 1, b1(G) = C(m, 2): "
    << bad << " mismatches";
  if (bad) {
    s << " (first <" << first << ">)";
  }
  return {bad == 0 && n > 0, s.str()};
}

Outcome regularity(Context const& c) {
  struct Acc {
    std::size_t n = 0, bad = 0;
  };
  auto check = [](NumericalSemigroup const& S, Acc& a) {
    ++a.n;
    auto const T = nslab::graded_betti(S, 0);
    if (nslab::regularity(S, T) != S.frobenius() + 1) {
      ++a.bad;
    }
  };
  auto const tree = nslab::reduce_by_genus<Acc>(
      kRegularityGenus, c.jobs, check, [](Acc& x, Acc&& y) {
        x.n += y.n;
        x.bad += y.bad;
      });
  Acc rnd;
  for (auto const& S : nslab::sample_random(kRandomCount, kRandomGenus, kRandomSeed)) {
    check(S, rnd);
  }
  std::ostringstream s;
  s << "reg = Frob + 1 on " << tree.n << " semigroups of genus <= "
    << kRegularityGenus << " (" << tree.bad << " mismatches) and " << rnd.n
    << " random of genus <= " << kRandomGenus << " (" << rnd.bad
    << " mismatches)";
  return {tree.bad == 0 && rnd.bad == 0 && rnd.n == kRandomCount, s.str()};
}

Outcome duality(Context const& c) {
  struct Acc {
    std::size_t n = 0, bad = 0;
  };
  auto const a = nslab::reduce_by_genus<Acc>(
      kDualityGenus, c.jobs,
      [](NumericalSemigroup const& S, Acc& acc) {
        if (S.is_N() || !nslab::is_symmetric(S)) {
          return;
        }
        ++acc.n;
        auto const T = nslab::graded_betti(S, 0);
        auto const t = T.totals();
        bool ok      = T.alternating_sum() == 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
          ok = ok && t[i] == t[t.size() - 1 - i];
        }
        acc.bad += ok ? 0 : 1;
      },
      [](Acc& x, Acc&& y) {
        x.n += y.n;
        x.bad += y.bad;
      });
  std::ostringstream s;
  s << a.n << " symmetric semigroups (N excluded) of genus <= " << kDualityGenus
    << "; alternating sum 0 and b_i = b_{e-1-i}: " << a.bad << " mismatches";
  return {a.bad == 0 && a.n > 0, s.str()};
}

Outcome edim4(Context const& c) {
  std::ostringstream s;
  bool               ok = true;
  for (auto const* id : {"bresinsky4", "etohw", "as4type"}) {
    auto const r = nslab::verify_suite(id, frob(kEdim4FrobMax), c.cfg);
    ok           = ok && clean(r.tally);
    s << id << ": " << r.tally.pass << "/" << (r.tally.visited - r.outside)
      << " pass; ";
    report_first(s, r.tally);
  }
  s << "edim 4, Frob <= " << kEdim4FrobMax;
  return {ok, s.str()};
}

Outcome erv(Context const& c) {
  bool const pins = nslab::bound_C(3, 4) == 6 && nslab::bound_D(3, 4) == 3;
  auto const r    = nslab::verify_suite("erv", genus(kErvGenus), c.cfg);
  std::ostringstream s;
  s << "bound_C(3,4) = " << nslab::bound_C(3, 4) << ", bound_D(3,4) = "
    << nslab::bound_D(3, 4) << "; genus <= " << kErvGenus << ": "
    << counts(r.tally) << ", " << r.outside << " outside (edim < 4)";
  report_first(s, r.tally);
  return {pins && clean(r.tally), s.str()};
}

Outcome wilf(Context const& c) {
  auto const t = nslab::run_checks(genus(kWilfGenus), {"wilf", "weak-wilf"}, c.cfg);
  std::ostringstream s;
  s << "Wilf and weak Wilf over the genus tree to " << kWilfGenus << " ("
    << t.visited << " semigroups, two checks each): " << counts(t);
  report_first(s, t);
  return {clean(t) && t.pass == 2 * t.visited, s.str()};
}

// Both properties imply symmetry, so only symmetric semigroups can disagree.
// CI needs mult >= 2^(edim - 1); below that CI is still computed whenever the
// numerator is cyclotomic.
Outcome cyclo_ci(Context const& c) {
  struct Acc {
    std::size_t                   n = 0, ci = 0, cyc = 0;
    std::vector<nslab::CheckReport> forward, reverse;
  };
  auto const a = nslab::reduce_symmetric<Acc>(
      kCycloFrobMax, c.jobs,
      [](NumericalSemigroup const& S, Acc& acc) {
        ++acc.n;
        auto const e   = S.embedding_dimension();
        bool const cyc = nslab::is_cyclotomic(S).cyclotomic;
        bool const room = S.multiplicity() >= (Int{1} << (e - 1));
        bool const ci  = (cyc || room) && nslab::is_complete_intersection(S);
        acc.cyc += cyc;
        acc.ci += ci;
        if (ci && !cyc) {
          acc.forward.push_back(nslab::check_cyclo_ci(S));
        }
        if (cyc && !ci) {
          acc.reverse.push_back(nslab::check_cyclo_ci(S));
        }
      },
      [](Acc& x, Acc&& y) {
        x.n += y.n;
        x.ci += y.ci;
        x.cyc += y.cyc;
        x.forward.insert(x.forward.end(), y.forward.begin(), y.forward.end());
        x.reverse.insert(x.reverse.end(), y.reverse.begin(), y.reverse.end());
      });
  if (!c.store.empty()) {
    nslab::WitnessStore store(c.store);
    for (auto const* list : {&a.forward, &a.reverse}) {
      for (auto const& r : *list) {
        store.append(r, c.cfg);
      }
    }
  }
  std::ostringstream s;
  s << a.n << " symmetric semigroups with Frob <= " << kCycloFrobMax << ": "
    << a.ci << " CI, " << a.cyc << " cyclotomic; CI without cyclotomic: "
    << a.forward.size() << ", cyclotomic without CI: " << a.reverse.size();
  if (!a.reverse.empty()) {
    s << "; witness " << a.reverse.front().to_json().dump();
  }
  return {a.forward.empty() && a.reverse.empty(), s.str(), !a.reverse.empty()};
}

Outcome rossi(Context const& c) {
  struct Acc {
    std::size_t      n = 0, bad = 0;
    std::vector<Int> first;
  };
  auto const a = nslab::reduce_symmetric<Acc>(
      kRossiFrobMax, c.jobs,
      [](NumericalSemigroup const& S, Acc& acc) {
        auto const e = S.embedding_dimension();
        if (e > kRossiEdimMax || S.multiplicity() < (Int{1} << (e - 1))
            || !nslab::is_complete_intersection(S)) {
          return;
        }
        ++acc.n;
        if (!nslab::is_HF_nondecreasing(S).nondecreasing && acc.bad++ == 0) {
          acc.first = S.generators();
        }
      },
      [](Acc& x, Acc&& y) {
        if (x.bad == 0 && y.bad > 0) {
          x.first = y.first;
        }
        x.n += y.n;
        x.bad += y.bad;
      });
  std::ostringstream s;
  s << a.n << " CI semigroups with edim <= " << kRossiEdimMax << ", Frob <= "
    << kRossiFrobMax << "; HF of G decreasing somewhere: " << a.bad;
  return {a.bad == 0 && a.n > 0, s.str(), a.bad > 0};
}

Outcome oracle(Context const& c) {
  auto const tree = nslab::count_by_genus(kOracleGenus, c.jobs);
  auto const want = oracle::count_by_genus(kOracleGenus);
  std::ostringstream s;
  s << "genus 0.." << kOracleGenus << ": tree " << nslab::Json(tree).dump()
    << (tree == want ? " == " : " != ") << "gap-subset oracle";
  return {tree == want, s.str()};
}

Outcome sharpness(Context const& c) {
  bool               ok = true;
  std::ostringstream s;
  s << "rho(<w..2w-1>) = C(w,2) for w <= " << kSharpWidthMax << ": ";
  for (Int w = 1; w <= kSharpWidthMax; ++w) {
    std::vector<Int> g(static_cast<std::size_t>(w));
    std::iota(g.begin(), g.end(), w);
    auto const r = static_cast<Int>(nslab::rho(NumericalSemigroup::from_generators(g)));
    if (r != nslab::binomial(w, 2)) {
      ok = false;
      s << "w = " << w << " gives " << r << "; ";
    }
  }
  s << (ok ? "all equal; " : "");
  nslab::SearchParams p;
  p.e           = 5;
  p.sum_pattern = true;
  nslab::Bounds b = frob(kSharpFrobMax);
  auto const wt   = nslab::search_supremum("S", p, b, c.cfg);
  s << "symmetric edim 5 with the sum pattern, Frob <= " << kSharpFrobMax
    << ": best rho " << wt.value << " from " << wt.candidates
    << " candidates (lower-bound witness <"
    << (wt.semigroup ? wt.semigroup->to_string() : "none") << ">)";
  return {ok && wt.value == kSharpRho, s.str()};
}

Outcome tangent(Context const& c) {
  struct Acc {
    std::size_t n = 0, definite = 0, bad = 0;
  };
  auto const a = nslab::reduce_by_genus<Acc>(
      kTangentGenus, c.jobs,
      [](NumericalSemigroup const& S, Acc& acc) {
        ++acc.n;
        auto const g = nslab::b1_G(S);
        if (!g.definite()) {
          return;
        }
        ++acc.definite;
        acc.bad += nslab::rho(S) <= g.count ? 0 : 1;
      },
      [](Acc& x, Acc&& y) {
        x.n += y.n;
        x.definite += y.definite;
        x.bad += y.bad;
      });
  std::size_t n = 0, bad = 0;
  std::string first;
  for (Int m = 2; m <= kArithMultMax; ++m) {
    for (Int d = 1; d <= kArithStepMax; ++d) {
      if (std::gcd(m, d) != 1) {
        continue;
      }
      for (Int k = 1; k < m; ++k) {
        std::vector<Int> gens;
        for (Int i = 0; i <= k; ++i) {
          gens.push_back(m + i * d);
        }
        auto const S = NumericalSemigroup::from_generators(gens);
        ++n;
        auto const g  = nslab::b1_G(S);
        bool       ok = nslab::is_G_cohen_macaulay(S) && g.definite()
                  && g.count == nslab::rho(S)
                  && nslab::graded_betti_G(S).totals()
                         == nslab::graded_betti(S).totals();
        if (!ok && bad++ == 0) {
          first = S.to_string();
        }
      }
    }
  }
  std::ostringstream s;
  s << "genus <= " << kTangentGenus << ": b1(R) <= b1(G) on " << a.definite
    << "/" << a.n << " definite cases, " << a.bad << " violations; "
    << n << " arithmetic sequences (mult <= " << kArithMultMax << ", step <= "
    << kArithStepMax << "): equal b1 and Betti totals, " << bad
    << " mismatches";
  if (bad) {
    s << " (first <" << first << ">)";
  }
  return {a.bad == 0 && a.definite > 0 && bad == 0, s.str()};
}

struct Criterion {
  int                                   id;
  char const*                           title;
  std::function<Outcome(Context const&)> run;
};

std::vector<Criterion> const& criteria() {
  static std::vector<Criterion> const all = {
      {1, "Herzog Betti totals in edim 3", herzog},
      {2, "max-edim equivalences", max_edim},
      {3, "regularity = Frob + 1", regularity},
      {4, "alternating sum and self-duality (symmetric)", duality},
      {5, "edim-4 symmetric and almost symmetric bounds", edim4},
      {6, "ERV bounds on rho and type", erv},
      {7, "Wilf and weak Wilf", wilf},
      {8, "cyclotomic iff complete intersection", cyclo_ci},
      {9, "HF of G non-decreasing for CI", rossi},
      {10, "genus-tree counts vs gap-subset oracle", oracle},
      {11, "sharpness witnesses", sharpness},
      {12, "tangent-cone consistency", tangent},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int         only = 0;
  Context     ctx;
  ctx.jobs = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 12));
  app.add_option("--jobs", ctx.jobs)->check(CLI::PositiveNumber);
  app.add_option("--store", ctx.store, "persist conjecture witnesses here");
  CLI11_PARSE(app, argc, argv);
  ctx.cfg.jobs = ctx.jobs;

  int failed = 0;
  for (auto const& c : criteria()) {
    if (only != 0 && c.id != only) {
      continue;
    }
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run(ctx);
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char const* tag = o.pass ? "PASS" : o.flagged ? "FLAGGED" : "FAIL";
    std::printf("AC%02d %-7s %s: %s [%.2f s]\n", c.id, tag, c.title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
