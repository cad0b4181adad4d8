// The associated graded ring G = gr_m(k[[S]]): its Hilbert function and the
// number of minimal generators of the ideal of initial forms I* in
// k[x_1, ..., x_e].
//
// G is spanned by the classes of t^gamma, which sit in degree ord(gamma), so
// both G and I* are graded by (j, gamma). The degree-(j, gamma) part of the
// polynomial ring is spanned by the length-j factorizations of gamma, and
// [I*]_{j,gamma} is all of it when ord(gamma) > j and the hyperplane of
// coefficient vectors summing to zero when ord(gamma) = j. Everything below
// is combinatorics on those two cases.

#ifndef NSLAB_TANGENT_CONE_HPP_
#define NSLAB_TANGENT_CONE_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "factorization.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "semigroup.hpp"

namespace nslab {

inline constexpr std::size_t kDefaultMonomialCap = 5'000'000;

struct HilbertFunction {
  std::vector<Int> values;  // HF(0), ..., HF(jmax)
  Int              stable_value = 1;

  Int operator()(Int j) const {
    return j < static_cast<Int>(values.size())
               ? values[static_cast<std::size_t>(j)]
               : stable_value;
  }
};

// HF(j) = #{ gamma : ord(gamma) = j } for 0 <= j <= jmax. Every gamma above
// Frob + jmax * g_1 is g_1 * jmax plus a nonzero element, so has order
// greater than jmax.
inline HilbertFunction hilbert_function_G(NumericalSemigroup const& S,
                                          Int                       jmax) {
  if (jmax < 1) {
    throw InvalidInput("hilbert_function_G: jmax must be at least 1");
  }
  HilbertFunction hf;
  hf.stable_value = S.multiplicity();
  hf.values.assign(static_cast<std::size_t>(jmax + 1), 0);
  auto const ord = order_table(S, S.frobenius() + jmax * S.multiplicity() + 1);
  for (Int o : ord) {
    if (0 <= o && o <= jmax) {
      ++hf.values[static_cast<std::size_t>(o)];
    }
  }
  return hf;
}

// The least n with (n+1)M = g_1 + nM, where nM = { gamma : ord(gamma) >= n }.
// It suffices to test sums of exactly n + 1 generators. HF(j) = mult for all
// j >= r, and r <= mult - 1.
inline Int reduction_number(NumericalSemigroup const& S) {
  if (S.is_N()) {
    return 0;
  }
  auto const& gens = S.generators();
  Int const   g1   = S.multiplicity();
  Int const   ge   = gens.back();
  auto const  ord  = order_table(S, g1 * ge);
  // sums[x] != 0 iff x is a sum of exactly n + 1 generators
  std::vector<char> sums(static_cast<std::size_t>(g1 * ge + 1), 0);
  for (Int g : gens) {
    sums[static_cast<std::size_t>(g)] = 1;
  }
  for (Int n = 0; n < g1; ++n) {
    bool ok = true;
    for (Int x = 0; x <= (n + 1) * ge && ok; ++x) {
      if (sums[static_cast<std::size_t>(x)]
          && ord[static_cast<std::size_t>(x - g1)] < n) {
        ok = false;
      }
    }
    if (ok) {
      return n;
    }
    std::vector<char> next(sums.size(), 0);
    for (Int x = 0; x <= (n + 1) * ge; ++x) {
      if (!sums[static_cast<std::size_t>(x)]) {
        continue;
      }
      for (Int g : gens) {
        if (x + g < static_cast<Int>(next.size())) {
          next[static_cast<std::size_t>(x + g)] = 1;
        }
      }
    }
    sums.swap(next);
  }
  throw ConsistencyFailure("reduction_number: no n < mult works for <"
                           + S.to_string() + ">");
}

struct MonotonicityResult {
  bool               nondecreasing = true;
  std::optional<Int> violation_at;  // least j with HF(j) < HF(j - 1)
  HilbertFunction    hf;
};

// Checks HF up to the reduction number, past which it is constant.
inline MonotonicityResult is_HF_nondecreasing(NumericalSemigroup const& S) {
  MonotonicityResult res;
  res.hf = hilbert_function_G(S, reduction_number(S) + 1);
  for (std::size_t j = 1; j < res.hf.values.size(); ++j) {
    if (res.hf.values[j] < res.hf.values[j - 1]) {
      res.nondecreasing = false;
      res.violation_at  = static_cast<Int>(j);
      break;
    }
  }
  return res;
}

enum class B1GStatus { definite, capped, inconclusive };

inline char const* to_string(B1GStatus s) noexcept {
  switch (s) {
    case B1GStatus::definite:
      return "definite";
    case B1GStatus::capped:
      return "capped";
    case B1GStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct B1GResult {
  std::size_t                count = 0;
  B1GStatus                  status = B1GStatus::definite;
  Int                        degree_bound = 0;  // generators live in degrees <= this
  Int                        computed_through = 0;
  std::map<Int, std::size_t> per_degree;  // total degree -> new generators

  bool definite() const noexcept {
    return status == B1GStatus::definite;
  }
};

namespace detail {

inline void monomials_rec(std::vector<Int> const&                   gens,
                          std::size_t                               k,
                          Int                                       left,
                          Int                                       value,
                          std::vector<Int>&                         cur,
                          std::map<Int, std::vector<std::vector<Int>>>& out) {
  if (k + 1 == gens.size()) {
    cur[k] = left;
    out[value + left * gens[k]].push_back(cur);
    cur[k] = 0;
    return;
  }
  for (Int a = left; a >= 0; --a) {
    cur[k] = a;
    monomials_rec(gens, k + 1, left - a, value + a * gens[k], cur, out);
  }
  cur[k] = 0;
}

// Minimal generators of I* in bidegree (j, gamma), given the length-j
// factorizations of gamma.
inline std::size_t new_initial_generators(std::vector<Int> const& gens,
                                          std::vector<Int> const& ord,
                                          Int                     j,
                                          Int                     gamma,
                                          std::vector<std::vector<Int>> const& facts) {
  std::size_t const e = gens.size();
  std::size_t const N = facts.size();
  // x_k [I*]_{j-1, gamma-g_k} is every monomial divisible by x_k when
  // ord(gamma - g_k) > j - 1, and the differences of such monomials when
  // ord(gamma - g_k) = j - 1.
  std::vector<char> covered_var(e, 0), linked_var(e, 0);
  for (std::size_t k = 0; k < e; ++k) {
    if (gamma < gens[k]) {
      continue;
    }
    Int const o = ord[static_cast<std::size_t>(gamma - gens[k])];
    if (o < 0) {
      continue;
    }
    covered_var[k] = o > j - 1;
    linked_var[k]  = o == j - 1;
  }
  std::vector<std::size_t> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  for (std::size_t k = 0; k < e; ++k) {
    if (!linked_var[k]) {
      continue;
    }
    std::size_t first = N;
    for (std::size_t i = 0; i < N; ++i) {
      if (facts[i][k] > 0) {
        if (first == N) {
          first = i;
        } else {
          parent[find(i)] = find(first);
        }
      }
    }
  }
  std::vector<char> covered(N, 0), root(N, 0);
  for (std::size_t i = 0; i < N; ++i) {
    root[find(i)] = 1;
    for (std::size_t k = 0; k < e; ++k) {
      if (covered_var[k] && facts[i][k] > 0) {
        covered[find(i)] = 1;
      }
    }
  }
  std::size_t free_components = 0;
  for (std::size_t i = 0; i < N; ++i) {
    free_components += root[i] && !covered[i];
  }
  // the image has dimension N - free_components
  Int const o = ord[static_cast<std::size_t>(gamma)];
  if (o > j) {
    return free_components;
  }
  if (free_components == 0) {
    throw ConsistencyFailure("initial forms: image exceeds [I*] at degree ("
                             + std::to_string(j) + ", "
                             + std::to_string(gamma) + ")");
  }
  return free_components - 1;
}

}  // namespace detail

// dim [I*]_{j, gamma}.
inline std::size_t initial_form_dimension(NumericalSemigroup const& S,
                                          Int j,
                                          Int gamma) {
  std::size_t n = 0;
  for (auto const& f : factorizations(S, gamma)) {
    n += f.length() == j;
  }
  if (n == 0) {
    return 0;
  }
  return order(S, gamma) > j ? n : n - 1;
}

// Number of minimal generators of I*.
//
// I* is generated in degrees <= r + 1 (r the reduction number): in degree
// j >= r + 2 every length-j factorization either lies in the covered part
// of the image or is linked, through the variable it shares, to one that
// uses x_1, and all of those are joined through x_1. So without a cap the
// count is definite. With a cap below r + 1 the result is "capped" when no
// new generator appeared in the last g_e computed degrees and
// "inconclusive" otherwise.
inline B1GResult b1_G(NumericalSemigroup const& S,
                      std::optional<Int>        degree_cap    = std::nullopt,
                      std::size_t               monomial_cap  = kDefaultMonomialCap) {
  if (degree_cap && *degree_cap < 2) {
    throw InvalidInput("b1_G: degree cap must be at least 2");
  }
  B1GResult res;
  if (S.is_N()) {
    return res;
  }
  auto const& gens  = S.generators();
  auto const  e     = static_cast<Int>(gens.size());
  res.degree_bound  = reduction_number(S) + 1;
  Int const jmax    = degree_cap ? std::min(*degree_cap, res.degree_bound)
                                 : res.degree_bound;
  std::size_t monomials = 0;
  for (Int j = 1; j <= jmax; ++j) {
    monomials += static_cast<std::size_t>(binomial(e + j - 1, j));
  }
  if (monomials > monomial_cap) {
    throw ResourceLimit("b1_G: " + std::to_string(monomials)
                        + " monomials exceed the cap of "
                        + std::to_string(monomial_cap));
  }
  auto const ord = order_table(S, jmax * gens.back());
  for (Int j = 2; j <= jmax; ++j) {
    std::map<Int, std::vector<std::vector<Int>>> strata;
    std::vector<Int> cur(gens.size(), 0);
    detail::monomials_rec(gens, 0, j, 0, cur, strata);
    std::size_t found = 0;
    for (auto const& [gamma, facts] : strata) {
      found += detail::new_initial_generators(gens, ord, j, gamma, facts);
    }
    if (found > 0) {
      res.per_degree[j] = found;
      res.count += found;
    }
  }
  res.computed_through = jmax;
  if (jmax < res.degree_bound) {
    Int const quiet_from = jmax - gens.back() + 1;
    bool      quiet      = true;
    for (auto const& [j, c] : res.per_degree) {
      if (j >= quiet_from) {
        quiet = false;
      }
    }
    res.status = quiet ? B1GStatus::capped : B1GStatus::inconclusive;
  }
  return res;
}

// G is Cohen-Macaulay iff the initial form x_1 of t^{g_1} is a
// nonzerodivisor, i.e. ord(w + k g_1) = ord(w) + k for w in Ap(S, g_1) and
// all k. For ord(gamma) >= r + 1, gamma - g_1 has order ord(gamma) - 1, and
// ord(w + k g_1) >= k, so steps k <= r + 1 decide it.
inline bool is_G_cohen_macaulay(NumericalSemigroup const& S) {
  if (S.is_N()) {
    return true;
  }
  Int const  g1  = S.multiplicity();
  Int const  r   = reduction_number(S);
  auto const ap  = apery_set(S);
  Int const  top = *std::max_element(ap.residues().begin(), ap.residues().end());
  auto const ord = order_table(S, top + (r + 1) * g1);
  for (Int w : ap.residues()) {
    for (Int k = 1; k <= r + 1; ++k) {
      if (ord[static_cast<std::size_t>(w + k * g1)]
          != ord[static_cast<std::size_t>(w + (k - 1) * g1)] + 1) {
        return false;
      }
    }
  }
  return true;
}

// Graded Betti numbers of G over k[x_1, ..., x_e], indexed by homological
// degree and standard degree. Requires G Cohen-Macaulay: then they are the
// Betti numbers of G / x_1 G over k[x_2, ..., x_e], whose basis is t^w for w
// in the Apery set, in bidegree (w, ord w), and x_k t^w is t^{w + g_k} when
// w + g_k is again in the Apery set with order ord(w) + 1, and zero
// otherwise. The Koszul complex in bidegree (gamma, d) is spanned by faces
// F of {2..e} with gamma - sum(F) = w in the Apery set and ord(w) = d - |F|.
inline BettiTable graded_betti_G(NumericalSemigroup const& S,
                                 int                       characteristic = 0,
                                 std::size_t face_cap = kDefaultFaceCap) {
  detail::check_edim(S, "graded_betti_G");
  if (!is_G_cohen_macaulay(S)) {
    throw InvalidInput("graded_betti_G: the tangent cone of <" + S.to_string()
                       + "> is not Cohen-Macaulay");
  }
  BettiTable T;
  T.characteristic    = characteristic;
  T.edim              = S.embedding_dimension();
  auto const&       gens = S.generators();
  std::size_t const e    = gens.size();
  if (e == 1) {
    T.entries[{0, 0}] = 1;
    return T;
  }
  std::size_t const n_masks = std::size_t{1} << (e - 1);
  auto const        m       = static_cast<std::size_t>(S.multiplicity());
  if (n_masks > face_cap / m) {
    throw ResourceLimit("graded_betti_G: " + std::to_string(n_masks) + " * "
                        + std::to_string(m) + " faces exceed the cap of "
                        + std::to_string(face_cap));
  }
  auto const ap  = apery_set(S);
  Int const  top = *std::max_element(ap.residues().begin(), ap.residues().end());
  auto const ord = order_table(S, top);
  std::map<std::pair<Int, Int>, std::vector<FaceMask>> by_degree;
  for (Int w : ap.residues()) {
    Int const o = ord[static_cast<std::size_t>(w)];
    for (std::size_t s = 0; s < n_masks; ++s) {
      auto const F = static_cast<FaceMask>(s) << 1;
      by_degree[{w + detail::face_sum(gens, F), o + std::popcount(F)}]
          .push_back(F);
    }
  }
  for (auto& [key, faces] : by_degree) {
    auto const h = detail::family_homology(std::move(faces), e, characteristic);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] != 0) {
        T.entries[{i, key.second}] += h[i];
      }
    }
  }
  return T;
}

// b_1(G) <= b_1(G of the interval completion) and b_1(G) <= C(width + 1, 2).
inline CheckReport width_checks_G(NumericalSemigroup const& S) {
  if (S.is_N()) {
    return make_report("width-G", S, Verdict::pass, {{"vacuous", true}});
  }
  auto const  own  = b1_G(S);
  auto const  ic   = interval_completion(S);
  auto const  full = b1_G(ic);
  Int const   w    = S.width();
  Int const   cap  = binomial(w + 1, 2);
  auto verdict_of  = [](bool ok, bool known) {
    return !known ? Verdict::inconclusive : ok ? Verdict::pass : Verdict::fail;
  };
  bool const known_own  = own.status != B1GStatus::inconclusive;
  bool const known_full = full.status != B1GStatus::inconclusive;
  Verdict const v_completion =
      verdict_of(own.count <= full.count, known_own && known_full);
  Verdict const v_width =
      verdict_of(static_cast<Int>(own.count) <= cap, known_own);
  Json data;
  data["b1_G"]                = own.count;
  data["b1_G_status"]         = to_string(own.status);
  data["b1_G_completion"]     = full.count;
  data["completion"]          = ic.generators();
  data["width"]               = w;
  data["width_bound"]         = cap;
  data["completion_verdict"]  = to_string(v_completion);
  data["width_verdict"]       = to_string(v_width);
  return make_report("width-G", S, combine(v_completion, v_width),
                     std::move(data));
}

}  // namespace nslab

#endif  // NSLAB_TANGENT_CONE_HPP_
