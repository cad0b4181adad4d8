// Enumeration engines: the genus tree, irreducible semigroups by Frobenius
// number, a filtered generator search and a seeded random sampler, plus a
// small deterministic work runner shared by all of them.
//
// Every parallel entry point splits its search space into an ordered list
// of work items, runs one accumulator per item and merges them in item
// order, so the result does not depend on the number of threads.

#ifndef NSLAB_ENUMERATE_HPP_
#define NSLAB_ENUMERATE_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace nslab {

// Runs fn(item) for every item on up to `jobs` threads; results come back in
// item order. The first exception thrown by any call is rethrown here.
template <typename Item, typename Fn>
auto parallel_map(std::vector<Item> const& items, std::size_t jobs, Fn fn)
    -> std::vector<decltype(fn(items.front()))> {
  using Result = decltype(fn(items.front()));
  std::vector<std::optional<Result>> slots(items.size());
  jobs = std::max<std::size_t>(1, std::min(jobs, items.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr       error;
  std::mutex               error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t const i = next.fetch_add(1);
      if (i >= items.size()) {
        return;
      }
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        next = items.size();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
  std::vector<Result> out;
  out.reserve(items.size());
  for (auto& s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

// Folds per-item accumulators left to right with merge(into, std::move(from)).
template <typename Acc, typename Merge>
Acc merge_in_order(std::vector<Acc> parts, Merge merge) {
  Acc total{};
  for (auto& p : parts) {
    merge(total, std::move(p));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Genus tree

// Children of S: remove one minimal generator greater than Frob(S). Ordered
// by the removed generator.
inline std::vector<NumericalSemigroup> genus_tree_children(
    NumericalSemigroup const& S) {
  std::vector<NumericalSemigroup> out;
  for (Int g : S.generators()) {
    if (g <= S.frobenius()) {
      continue;
    }
    if (g == 1) {
      // N -> <2, 3>
      NumericalSemigroup::GapBits bits(2);
      bits.set(1);
      out.push_back(NumericalSemigroup::from_gaps(std::move(bits), false));
      continue;
    }
    auto bits = S.gap_bits();
    bits.resize(static_cast<std::size_t>(g + 1));
    bits.set(static_cast<std::size_t>(g));
    out.push_back(NumericalSemigroup::from_gaps(std::move(bits), false));
  }
  return out;
}

namespace detail {

template <typename Visit>
void genus_dfs(NumericalSemigroup const& S, Int gmax, Visit& visit) {
  visit(S);
  if (S.genus() >= gmax) {
    return;
  }
  for (auto const& child : genus_tree_children(S)) {
    genus_dfs(child, gmax, visit);
  }
}

struct GenusItem {
  NumericalSemigroup root;
  bool               subtree;  // false: visit the root alone
};

// Preorder list in which each node of genus `split` stands for its whole
// subtree. Running the items in order reproduces the serial preorder.
inline std::vector<GenusItem> genus_items(Int gmax, Int split) {
  std::vector<GenusItem> items;
  std::function<void(NumericalSemigroup const&)> walk =
      [&](NumericalSemigroup const& S) {
        if (S.genus() == split || S.genus() == gmax) {
          items.push_back({S, true});
          return;
        }
        items.push_back({S, false});
        for (auto const& c : genus_tree_children(S)) {
          walk(c);
        }
      };
  walk(NumericalSemigroup());
  return items;
}

}  // namespace detail

// Visits every semigroup of genus <= gmax exactly once, in preorder.
template <typename Visit>
void enumerate_by_genus(Int gmax, Visit&& visit) {
  if (gmax < 0) {
    throw InvalidInput("enumerate_by_genus: gmax must be non-negative");
  }
  detail::genus_dfs(NumericalSemigroup(), gmax, visit);
}

// Parallel form: visit(S, acc) per node, one Acc per work item, merged in
// preorder. Identical results for every `jobs`.
template <typename Acc, typename Visit, typename Merge>
Acc reduce_by_genus(Int gmax, std::size_t jobs, Visit visit, Merge merge) {
  if (gmax < 0) {
    throw InvalidInput("reduce_by_genus: gmax must be non-negative");
  }
  Int const  split = std::min<Int>(gmax, 9);
  auto const items = detail::genus_items(gmax, split);
  auto parts = parallel_map(items, jobs, [&](detail::GenusItem const& it) {
    Acc  acc{};
    auto v = [&](NumericalSemigroup const& S) { visit(S, acc); };
    if (it.subtree) {
      detail::genus_dfs(it.root, gmax, v);
    } else {
      v(it.root);
    }
    return acc;
  });
  return merge_in_order(std::move(parts), merge);
}

inline std::vector<std::size_t> count_by_genus(Int gmax, std::size_t jobs = 1) {
  using Counts = std::vector<std::size_t>;
  return reduce_by_genus<Counts>(
      gmax, jobs,
      [gmax](NumericalSemigroup const& S, Counts& c) {
        c.resize(static_cast<std::size_t>(gmax + 1));
        ++c[static_cast<std::size_t>(S.genus())];
      },
      [gmax](Counts& into, Counts&& from) {
        into.resize(static_cast<std::size_t>(gmax + 1));
        for (std::size_t i = 0; i < from.size(); ++i) {
          into[i] += from[i];
        }
      });
}

// ---------------------------------------------------------------------------
// Irreducible semigroups by Frobenius number

inline constexpr Int kMaxIrreducibleFrobenius = 253;

namespace detail {

using Mask = unsigned __int128;

inline Mask bit(Int x) {
  return Mask{1} << x;
}

// S is determined by A = S cap [1, h]: for x < F with x != F/2 exactly one
// of x, F - x lies in S, and F/2 is a gap when F is even. A yields a
// semigroup iff it is closed under sums up to h, no a + b = F/2 (F even)
// and no a + b + c = F.
struct IrreducibleSearch {
  Int F;
  Int h;
  std::function<void(NumericalSemigroup const&)> const* emit;

  void run() {
    rec(1, 0, 0, 0);
  }

  void rec(Int x, Mask A, Mask forbid, Mask forced) {
    if (x > h) {
      (*emit)(build(A));
      return;
    }
    Mask const b = bit(x);
    if (!(forced & b)) {
      rec(x + 1, A, forbid, forced);
    }
    if (forbid & b) {
      return;
    }
    Mask const nA   = A | b;
    Mask const keep = bit(h + 1) - 1;
    Mask const sums = nA << x;
    if ((sums & keep & forbid) || (F % 2 == 0 && (sums & bit(h + 1)))) {
      return;
    }
    Mask const nforced = forced | (sums & keep);
    Mask       nforbid = forbid;
    for (Int a = 1; a <= x; ++a) {
      if (!(nA & bit(a))) {
        continue;
      }
      Int const v = F - x - a;
      if (v < 1 || v > h) {
        continue;
      }
      if ((nA | nforced) & bit(v)) {
        return;
      }
      nforbid |= bit(v);
    }
    rec(x + 1, nA, nforbid, nforced);
  }

  NumericalSemigroup build(Mask A) const {
    NumericalSemigroup::GapBits gaps(static_cast<std::size_t>(F + 1));
    for (Int x = 1; x <= h; ++x) {
      gaps.set(static_cast<std::size_t>((A & bit(x)) ? F - x : x));
    }
    if (F % 2 == 0) {
      gaps.set(static_cast<std::size_t>(F / 2));
    }
    gaps.set(static_cast<std::size_t>(F));
    return NumericalSemigroup::from_gaps(std::move(gaps), false);
  }
};

}  // namespace detail

// Symmetric semigroups (F odd) or pseudo-symmetric ones (F even) with
// Frobenius number exactly F. F = -1 yields N.
template <typename Visit>
void enumerate_irreducible(Int F, Visit&& visit) {
  if (F > kMaxIrreducibleFrobenius) {
    throw InvalidInput("enumerate_irreducible: Frobenius number above "
                       + std::to_string(kMaxIrreducibleFrobenius));
  }
  if (F == -1) {
    visit(NumericalSemigroup());
    return;
  }
  if (F < 1) {
    return;
  }
  std::function<void(NumericalSemigroup const&)> emit =
      [&](NumericalSemigroup const& S) { visit(S); };
  Int const h = F % 2 == 0 ? F / 2 - 1 : (F - 1) / 2;
  detail::IrreducibleSearch{F, h, &emit}.run();
}

// All symmetric semigroups with Frob <= fmax, N included, grouped by
// Frobenius number and merged in that order.
template <typename Acc, typename Visit, typename Merge>
Acc reduce_symmetric(Int fmax, std::size_t jobs, Visit visit, Merge merge) {
  std::vector<Int> items{-1};
  for (Int F = 1; F <= fmax; F += 2) {
    items.push_back(F);
  }
  auto parts = parallel_map(items, jobs, [&](Int F) {
    Acc acc{};
    enumerate_irreducible(F, [&](NumericalSemigroup const& S) { visit(S, acc); });
    return acc;
  });
  return merge_in_order(std::move(parts), merge);
}

// ---------------------------------------------------------------------------
// Filtered generator search

// Search bounds. At least one of frob_max, gen_max, genus_max must be set.
struct EnumerationFilter {
  std::optional<std::size_t> edim;
  std::optional<Int>         mult;
  std::optional<Int>         width;
  std::optional<Int>         frob_max;
  std::optional<Int>         gen_max;
  std::optional<Int>         genus_max;

  bool bounded() const noexcept {
    return frob_max || gen_max || genus_max;
  }

  // Frobenius bound implied by the explicit one and by genus_max
  // (Frob <= 2 genus - 1).
  std::optional<Int> effective_frob_max() const {
    std::optional<Int> f = frob_max;
    if (genus_max) {
      Int const g = 2 * *genus_max - 1;
      f           = f ? std::min(*f, g) : g;
    }
    return f;
  }

  bool accepts(NumericalSemigroup const& S) const {
    auto const f = effective_frob_max();
    return (!edim || S.embedding_dimension() == *edim)
           && (!mult || S.multiplicity() == *mult)
           && (!width || S.width() == *width)
           && (!f || S.frobenius() <= *f)
           && (!gen_max || S.generators().back() <= *gen_max)
           && (!genus_max || S.genus() <= *genus_max);
  }
};

namespace detail {

inline constexpr Int kUnreached = std::numeric_limits<Int>::max() / 4;

// Generators are chosen in increasing order; ap[r] is the least element of
// the current span congruent to r modulo m.
struct FilteredSearch {
  EnumerationFilter const& filter;
  Int                      m;
  Int                      gen_cap;   // largest admissible generator
  Int                      ap_cap;    // Apery elements must end at or below
  std::function<void(NumericalSemigroup const&)> const* emit;

  std::vector<Int> gens;

  static void add_generator(std::vector<Int>& ap, Int g, Int m) {
    Int const d = std::gcd(g, m);
    for (Int c = 0; c < d; ++c) {
      // walk the cycle c, c + g, c + 2g, ... from its least entry, twice
      Int start = c, best = ap[static_cast<std::size_t>(c)];
      for (Int r = (c + g) % m; r != c; r = (r + g) % m) {
        if (ap[static_cast<std::size_t>(r)] < best) {
          best  = ap[static_cast<std::size_t>(r)];
          start = r;
        }
      }
      if (best >= kUnreached) {
        continue;
      }
      Int r = start;
      for (Int k = 0; k < m / d; ++k) {
        Int const nr   = (r + g) % m;
        Int const cand = ap[static_cast<std::size_t>(r)] + g;
        if (cand < ap[static_cast<std::size_t>(nr)]) {
          ap[static_cast<std::size_t>(nr)] = cand;
        }
        r = nr;
      }
    }
  }

  // Residue classes still above ap_cap need an element in (last, ap_cap]
  // built from future generators; with `slots` generators left their count
  // is at most sum over reached a of the nonconstant monomials of degree
  // <= (ap_cap - a) / (last + 1).
  bool feasible(std::vector<Int> const& ap, Int last) const {
    std::size_t missing = 0;
    for (Int r = 0; r < m; ++r) {
      if (ap[static_cast<std::size_t>(r)] <= ap_cap) {
        continue;
      }
      ++missing;
      Int const first = last + 1 + (((r - (last + 1)) % m) + m) % m;
      if (first > std::min(ap_cap, kUnreached - 1)) {
        return false;
      }
    }
    if (missing == 0 || !filter.edim || ap_cap >= kUnreached - 1) {
      return true;
    }
    auto const slots = static_cast<Int>(*filter.edim) - static_cast<Int>(gens.size());
    if (slots <= 0) {
      return false;
    }
    Int reach = 0;
    for (Int a : ap) {
      if (a > ap_cap) {
        continue;
      }
      Int const D = (ap_cap - a) / (last + 1);
      // C(D + slots, slots) - 1, saturating
      Int c = 1;
      for (Int i = 1; i <= slots && c <= static_cast<Int>(missing); ++i) {
        c = c * (D + i) / i;
      }
      reach += c - 1;
      if (reach >= static_cast<Int>(missing)) {
        return true;
      }
    }
    return false;
  }

  void rec(std::vector<Int> const& ap) {
    bool const complete =
        std::all_of(ap.begin(), ap.end(), [&](Int a) { return a <= ap_cap; });
    std::size_t const e = gens.size();
    if (complete && (!filter.edim || e == *filter.edim)) {
      auto S = NumericalSemigroup::from_generators(gens);
      if (filter.accepts(S)) {
        (*emit)(S);
      }
    }
    if (filter.edim && e >= *filter.edim) {
      return;
    }
    if (static_cast<Int>(e) >= m) {
      return;
    }
    Int const last = gens.back();
    if (!feasible(ap, last)) {
      return;
    }
    for (Int g = last + 1; g <= gen_cap; ++g) {
      Int const r = g % m;
      if (r == 0 || ap[static_cast<std::size_t>(r)] <= g) {
        continue;
      }
      auto next = ap;
      add_generator(next, g, m);
      gens.push_back(g);
      rec(next);
      gens.pop_back();
    }
  }
};

struct FilterItem {
  Int m;
  Int g2;  // 0: N or the multiplicity alone
};

}  // namespace detail

// Every semigroup passing `filter`, grouped by (multiplicity, second
// generator) and merged in that order. Throws InvalidInput when no
// finiteness bound is present.
template <typename Acc, typename Visit, typename Merge>
Acc reduce_filtered(EnumerationFilter const& filter, std::size_t jobs,
                    Visit visit, Merge merge) {
  if (!filter.bounded()) {
    throw InvalidInput("enumerate_filtered: one of frob_max, gen_max, genus_max "
                       "is required");
  }
  auto const fmax = filter.effective_frob_max();
  // multiplicity range: m - 1 is a gap, m is a generator
  Int m_hi = std::numeric_limits<Int>::max();
  if (fmax) {
    m_hi = std::min(m_hi, *fmax + 1);
  }
  if (filter.gen_max) {
    m_hi = std::min(m_hi, *filter.gen_max);
  }
  Int m_lo = 1;
  if (filter.mult) {
    m_lo = *filter.mult;
    m_hi = std::min(m_hi, *filter.mult);
  }
  std::vector<detail::FilterItem> items;
  for (Int m = m_lo; m <= m_hi; ++m) {
    Int gen_cap = std::numeric_limits<Int>::max() / 4;
    if (fmax) {
      gen_cap = std::min(gen_cap, *fmax + m);
    }
    if (filter.gen_max) {
      gen_cap = std::min(gen_cap, *filter.gen_max);
    }
    if (filter.width) {
      gen_cap = std::min(gen_cap, m + *filter.width);
    }
    if (m <= 2) {
      items.push_back({m, 0});
      continue;
    }
    for (Int g2 = m + 1; g2 <= gen_cap; ++g2) {
      if (g2 % m != 0) {
        items.push_back({m, g2});
      }
    }
  }
  auto parts = parallel_map(items, jobs, [&](detail::FilterItem const& it) {
    Acc  acc{};
    std::function<void(NumericalSemigroup const&)> emit =
        [&](NumericalSemigroup const& S) { visit(S, acc); };
    Int const m       = it.m;
    Int       gen_cap = std::numeric_limits<Int>::max() / 4;
    Int       ap_cap  = detail::kUnreached - 1;
    if (fmax) {
      gen_cap = std::min(gen_cap, *fmax + m);
      ap_cap  = *fmax + m;
    }
    if (filter.gen_max) {
      gen_cap = std::min(gen_cap, *filter.gen_max);
    }
    if (filter.width) {
      gen_cap = std::min(gen_cap, m + *filter.width);
    }
    detail::FilteredSearch search{filter, m, gen_cap, ap_cap, &emit, {m}};
    std::vector<Int> ap(static_cast<std::size_t>(m), detail::kUnreached);
    ap[0] = 0;
    if (m == 1) {
      // N
      search.rec(ap);
      return acc;
    }
    if (it.g2 == 0) {
      // m = 2: <2, g> for odd g
      for (Int g = 3; g <= gen_cap; g += 2) {
        auto next = ap;
        detail::FilteredSearch::add_generator(next, g, m);
        search.gens = {m, g};
        search.rec(next);
      }
      return acc;
    }
    search.gens = {m, it.g2};
    detail::FilteredSearch::add_generator(ap, it.g2, m);
    search.rec(ap);
    return acc;
  });
  return merge_in_order(std::move(parts), merge);
}

template <typename Visit>
void enumerate_filtered(EnumerationFilter const& filter, Visit&& visit) {
  struct None {};
  reduce_filtered<None>(
      filter, 1, [&](NumericalSemigroup const& S, None&) { visit(S); },
      [](None&, None&&) {});
}

// ---------------------------------------------------------------------------
// Random sampling

// Rejection sampling over generator sets: multiplicity m uniform in
// [2, genus_max + 1] (N only for genus_max = 0), embedding dimension uniform in [2, min(m, max_edim)],
// the other generators distinct and uniform in (m, m + 2 genus_max], which
// holds every minimal generator of a semigroup of genus <= genus_max.
// Draws above genus_max are discarded. Deterministic for a given seed; not
// uniform over semigroups.
inline std::vector<NumericalSemigroup> sample_random(std::size_t   count,
                                                     Int           genus_max,
                                                     std::uint64_t seed,
                                                     Int           max_edim = 8) {
  if (genus_max < 0 || max_edim < 2) {
    throw InvalidInput("sample_random: need genus_max >= 0 and max_edim >= 2");
  }
  std::mt19937_64                 rng(seed);
  std::vector<NumericalSemigroup> out;
  auto uniform = [&](Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
  };
  while (out.size() < count) {
    Int const m = genus_max == 0 ? 1 : uniform(2, genus_max + 1);
    if (m == 1) {
      out.emplace_back();
      continue;
    }
    Int const        e = uniform(2, std::min(m, max_edim));
    std::set<Int>    gens{m};
    while (static_cast<Int>(gens.size()) < e) {
      gens.insert(uniform(m + 1, m + 2 * genus_max));
    }
    Int g = 0;
    for (Int x : gens) {
      g = std::gcd(g, x);
    }
    if (g != 1) {
      continue;
    }
    std::vector<Int> v(gens.begin(), gens.end());
    auto S = NumericalSemigroup::from_generators(v);
    if (S.genus() <= genus_max) {
      out.push_back(std::move(S));
    }
  }
  return out;
}

}  // namespace nslab

#endif  // NSLAB_ENUMERATE_HPP_
