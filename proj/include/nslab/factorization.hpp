// Factorizations of semigroup elements, the order function, and minimal
// presentations via factorization graphs.
//
// Two factorizations of n are adjacent in the graph of n when their supports
// intersect. The element n is a Betti element when this graph is
// disconnected, and a minimal presentation needs exactly (components - 1)
// relations in degree n.

#ifndef NSLAB_FACTORIZATION_HPP_
#define NSLAB_FACTORIZATION_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "error.hpp"
#include "semigroup.hpp"

namespace nslab {

inline constexpr std::size_t kDefaultFactorizationCap = 1'000'000;

struct Factorization {
  std::vector<Int> exponents;
  Int              degree = 0;

  Int length() const noexcept {
    return std::accumulate(exponents.begin(), exponents.end(), Int{0});
  }

  bool shares_support(Factorization const& other) const noexcept {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] > 0 && other.exponents[i] > 0) {
        return true;
      }
    }
    return false;
  }

  friend bool operator==(Factorization const& a, Factorization const& b) {
    return a.exponents == b.exponents;
  }

  friend auto operator<=>(Factorization const& a, Factorization const& b) {
    return a.exponents <=> b.exponents;
  }
};

inline Int evaluate(std::vector<Int> const& gens,
                    std::vector<Int> const& exponents) {
  Int s = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    s += gens[i] * exponents[i];
  }
  return s;
}

struct Relation {
  Factorization left;
  Factorization right;

  Int degree() const noexcept {
    return left.degree;
  }
};

struct Presentation {
  std::vector<Relation> relations;

  std::size_t rho() const noexcept {
    return relations.size();
  }
};

namespace detail {

inline void factorizations_rec(std::vector<Int> const&     gens,
                               NumericalSemigroup const&   S,
                               std::size_t                 k,
                               Int                         rem,
                               std::vector<Int>&           current,
                               std::vector<Factorization>& out,
                               Int                         n,
                               std::size_t                 cap) {
  if (k == 0) {
    if (rem % gens[0] == 0) {
      current[0] = rem / gens[0];
      if (out.size() >= cap) {
        throw ResourceLimit("factorizations: more than " + std::to_string(cap)
                            + " factorizations of " + std::to_string(n));
      }
      out.push_back(Factorization{current, n});
      current[0] = 0;
    }
    return;
  }
  for (Int a = rem / gens[k]; a >= 0; --a) {
    Int const r = rem - a * gens[k];
    if (!S.contains(r)) {
      continue;
    }
    current[k] = a;
    factorizations_rec(gens, S, k - 1, r, current, out, n, cap);
  }
  current[k] = 0;
}

}  // namespace detail

// All exponent vectors a with sum a_i g_i = n, sorted lexicographically.
inline std::vector<Factorization> factorizations(
    NumericalSemigroup const& S,
    Int                       n,
    std::size_t               cap = kDefaultFactorizationCap) {
  std::vector<Factorization> out;
  if (!S.contains(n)) {
    return out;
  }
  auto const&      gens = S.generators();
  std::vector<Int> current(gens.size(), 0);
  detail::factorizations_rec(gens, S, gens.size() - 1, n, current, out, n, cap);
  std::sort(out.begin(), out.end());
  return out;
}

// ord[x] = maximal factorization length of x for 0 <= x <= limit, or -1 when
// x is not in S.
inline std::vector<Int> order_table(NumericalSemigroup const& S, Int limit) {
  std::vector<Int> ord(static_cast<std::size_t>(std::max<Int>(limit, 0) + 1),
                       -1);
  ord[0]           = 0;
  auto const& gens = S.generators();
  for (Int x = 1; x <= limit; ++x) {
    Int best = -1;
    for (Int g : gens) {
      if (g > x) {
        break;
      }
      Int const o = ord[static_cast<std::size_t>(x - g)];
      if (o >= 0 && o + 1 > best) {
        best = o + 1;
      }
    }
    ord[static_cast<std::size_t>(x)] = best;
  }
  return ord;
}

inline Int order(NumericalSemigroup const& S, Int n) {
  if (!S.contains(n)) {
    throw NotMember("order: " + std::to_string(n) + " is not in <"
                    + S.to_string() + ">");
  }
  return order_table(S, n).back();
}

// Connected components of the factorization graph of n, each sorted, and
// the list of components ordered by its least factorization.
inline std::vector<std::vector<Factorization>> factorization_graph_components(
    NumericalSemigroup const& S,
    Int                       n,
    std::size_t               cap = kDefaultFactorizationCap) {
  if (!S.contains(n)) {
    throw NotMember("factorization_graph_components: " + std::to_string(n)
                    + " is not in <" + S.to_string() + ">");
  }
  auto const        facts = factorizations(S, n, cap);
  std::size_t const N     = facts.size();
  std::vector<std::size_t> rank(N), parent(N);
  boost::disjoint_sets<std::size_t*, std::size_t*> ds(rank.data(),
                                                      parent.data());
  for (std::size_t i = 0; i < N; ++i) {
    ds.make_set(i);
  }
  std::size_t const e = S.embedding_dimension();
  for (std::size_t k = 0; k < e; ++k) {
    std::size_t first = N;
    for (std::size_t i = 0; i < N; ++i) {
      if (facts[i].exponents[k] > 0) {
        if (first == N) {
          first = i;
        } else {
          ds.union_set(first, i);
        }
      }
    }
  }
  // facts is sorted, so scanning in order yields components already ordered
  // by their least element.
  std::map<std::size_t, std::size_t>       slot;
  std::vector<std::vector<Factorization>>  comps;
  for (std::size_t i = 0; i < N; ++i) {
    auto root = ds.find_set(i);
    auto it   = slot.find(root);
    if (it == slot.end()) {
      it = slot.emplace(root, comps.size()).first;
      comps.emplace_back();
    }
    comps[it->second].push_back(facts[i]);
  }
  return comps;
}

// Upper bound on Betti degrees: from reg = Frob + 1 and the Betti-table
// expression of the regularity with i = 1.
inline Int betti_degree_window(NumericalSemigroup const& S) noexcept {
  return S.frobenius() + S.sum_of_generators()
         - static_cast<Int>(S.embedding_dimension()) + 2;
}

// Elements n whose factorization graph is disconnected, with the number of
// components.
//
// Candidates are restricted to n = w + g_k with w in Ap(S, g_1) and k >= 2:
// if n - g_k - g_1 is in S whenever n - g_k is in S, every factorization is
// linked to one using g_1, and those are pairwise adjacent; the same holds
// when only k = 1 fails the condition.
inline std::map<Int, std::size_t> betti_elements(
    NumericalSemigroup const& S,
    std::size_t               cap = kDefaultFactorizationCap) {
  std::map<Int, std::size_t> out;
  if (S.is_N()) {
    return out;
  }
  auto const  ap     = apery_set(S);
  auto const& gens   = S.generators();
  Int const   window = betti_degree_window(S);
  std::set<Int> candidates;
  for (Int w : ap.residues()) {
    for (std::size_t k = 1; k < gens.size(); ++k) {
      if (w + gens[k] <= window) {
        candidates.insert(w + gens[k]);
      }
    }
  }
  for (Int n : candidates) {
    auto const c = factorization_graph_components(S, n, cap).size();
    if (c >= 2) {
      out.emplace(n, c);
    }
  }
  return out;
}

// For each Betti element, links the first component to each of the others
// through their least factorizations.
inline Presentation minimal_presentation(
    NumericalSemigroup const& S,
    std::size_t               cap = kDefaultFactorizationCap) {
  Presentation P;
  for (auto const& [n, c] : betti_elements(S, cap)) {
    auto const comps = factorization_graph_components(S, n, cap);
    for (std::size_t i = 1; i < comps.size(); ++i) {
      P.relations.push_back(Relation{comps[0].front(), comps[i].front()});
    }
  }
  return P;
}

inline std::size_t rho(NumericalSemigroup const& S,
                       std::size_t cap = kDefaultFactorizationCap) {
  std::size_t total = 0;
  for (auto const& [n, c] : betti_elements(S, cap)) {
    total += c - 1;
  }
  return total;
}

}  // namespace nslab

#endif  // NSLAB_FACTORIZATION_HPP_
