// Graded Betti numbers of the semigroup ring k[S] over k[x_1, ..., x_e],
// regularity, and the binomial bounds on Betti numbers in terms of
// multiplicity.
//
// b_{i,j} is the reduced homology H~_{i-1} of the squarefree divisor complex
// Delta_j = { F : j - sum_{k in F} g_k in S }. The default route first
// divides out by the regular element t^{g_1}: the same numbers are the
// homology, at faces of size i, of the Koszul complex of k[Ap(S, g_1)] over
// the remaining e - 1 variables. That complex lives on
// { F subset {2..e} : j - sum F in Ap(S, g_1) } and only 2^(e-1) * g_1
// (face, degree) pairs exist in total, with no degree window to guess.

#ifndef NSLAB_RESOLUTION_HPP_
#define NSLAB_RESOLUTION_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "semigroup.hpp"

namespace nslab {

using FaceMask = std::uint64_t;

inline constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 24;

struct SimplicialComplex {
  std::size_t           n_vertices = 0;
  std::vector<FaceMask> facets;  // sorted, pairwise incomparable

  // Every face, the empty face included, sorted by (size, mask).
  std::vector<FaceMask> faces() const {
    std::vector<FaceMask> out;
    for (FaceMask f : facets) {
      // all submasks of f
      for (FaceMask s = f;; s = (s - 1) & f) {
        out.push_back(s);
        if (s == 0) {
          break;
        }
      }
    }
    if (out.empty()) {
      return out;
    }
    std::sort(out.begin(), out.end(), [](FaceMask a, FaceMask b) {
      auto pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

namespace detail {

inline Int face_sum(std::vector<Int> const& gens, FaceMask F) {
  Int s = 0;
  while (F != 0) {
    s += gens[static_cast<std::size_t>(std::countr_zero(F))];
    F &= F - 1;
  }
  return s;
}

// Homology of the chain complex spanned by `faces` (any family of vertex
// sets; the boundary keeps only terms that are again in the family), with
// the usual signs. Entry k is the homology at faces of size k.
inline std::vector<std::size_t> family_homology(std::vector<FaceMask> faces,
                                                std::size_t n_vertices,
                                                int         characteristic) {
  std::vector<std::vector<FaceMask>> by_size(n_vertices + 1);
  for (FaceMask f : faces) {
    by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  }
  for (auto& v : by_size) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  // ranks[k] = rank of the boundary from size k to size k - 1
  std::vector<std::size_t> ranks(n_vertices + 2, 0);
  for (std::size_t k = 1; k <= n_vertices; ++k) {
    auto const& lower = by_size[k - 1];
    if (by_size[k].empty() || lower.empty()) {
      continue;
    }
    std::vector<linalg::SparseRow<std::int64_t>> rows;
    rows.reserve(by_size[k].size());
    for (FaceMask f : by_size[k]) {
      linalg::SparseRow<std::int64_t> row;
      std::int64_t                    sign = 1;
      for (FaceMask rest = f; rest != 0; rest &= rest - 1) {
        FaceMask const v  = rest & (~rest + 1);
        FaceMask const g  = f & ~v;
        auto           it = std::lower_bound(lower.begin(), lower.end(), g);
        if (it != lower.end() && *it == g) {
          row.emplace_back(static_cast<std::uint32_t>(it - lower.begin()),
                           sign);
        }
        sign = -sign;
      }
      if (!row.empty()) {
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
      }
    }
    ranks[k] = linalg::rank(rows, characteristic);
  }
  std::vector<std::size_t> h(n_vertices + 1);
  for (std::size_t k = 0; k <= n_vertices; ++k) {
    h[k] = by_size[k].size() - ranks[k] - ranks[k + 1];
  }
  return h;
}

inline void check_edim(NumericalSemigroup const& S, char const* where) {
  if (S.embedding_dimension() > 64) {
    throw InvalidInput(std::string(where)
                       + ": embedding dimension above 64 is not supported");
  }
}

}  // namespace detail

// Faces F of {1..e} (bit k-1 for generator g_k) with j - sum F in S.
inline SimplicialComplex divisor_complex(NumericalSemigroup const& S, Int j) {
  detail::check_edim(S, "divisor_complex");
  if (!S.contains(j)) {
    throw NotMember("divisor_complex: " + std::to_string(j) + " is not in <"
                    + S.to_string() + ">");
  }
  auto const&       gens = S.generators();
  std::size_t const e    = gens.size();
  // Downward closed, so extending by larger vertices reaches every face.
  std::vector<std::pair<FaceMask, Int>> stack{{0, j}};
  SimplicialComplex                     K;
  K.n_vertices = e;
  while (!stack.empty()) {
    auto [f, rem] = stack.back();
    stack.pop_back();
    bool maximal = true;
    for (std::size_t v = 0; v < e; ++v) {
      if ((f >> v) & 1U) {
        continue;
      }
      if (S.contains(rem - gens[v])) {
        maximal = false;
        if (v >= static_cast<std::size_t>(64 - std::countl_zero(f))) {
          stack.emplace_back(f | (FaceMask{1} << v), rem - gens[v]);
        }
      }
    }
    if (maximal) {
      K.facets.push_back(f);
    }
  }
  std::sort(K.facets.begin(), K.facets.end());
  return K;
}

// Entry k is dim H~_{k-1}(K), for k = 0..n_vertices.
inline std::vector<std::size_t> reduced_homology_dims(
    SimplicialComplex const& K,
    int                      characteristic) {
  return detail::family_homology(K.faces(), K.n_vertices, characteristic);
}

struct BettiTable {
  int         characteristic = 0;
  std::size_t edim           = 1;
  // (i, j) -> b_{i,j}; only nonzero entries are stored
  std::map<std::pair<std::size_t, Int>, std::size_t> entries;

  std::size_t at(std::size_t i, Int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  // b_0, ..., b_{e-1}
  std::vector<std::size_t> totals() const {
    std::vector<std::size_t> t(edim, 0);
    for (auto const& [key, b] : entries) {
      if (key.first >= t.size()) {
        t.resize(key.first + 1, 0);
      }
      t[key.first] += b;
    }
    return t;
  }

  std::size_t total(std::size_t i) const {
    auto t = totals();
    return i < t.size() ? t[i] : 0;
  }

  // Degrees j with b_{i,j} != 0, ascending.
  std::vector<Int> degrees(std::size_t i) const {
    std::vector<Int> out;
    for (auto const& [key, b] : entries) {
      if (key.first == i) {
        out.push_back(key.second);
      }
    }
    return out;
  }

  std::int64_t alternating_sum() const {
    std::int64_t s    = 0;
    std::int64_t sign = 1;
    for (std::size_t b : totals()) {
      s += sign * static_cast<std::int64_t>(b);
      sign = -sign;
    }
    return s;
  }

  friend bool operator==(BettiTable const&, BettiTable const&) = default;
};

// Graded Betti numbers through the Apery-set complex described at the top of
// this file.
inline BettiTable graded_betti(NumericalSemigroup const& S,
                               int                       characteristic = 0,
                               std::size_t face_cap = kDefaultFaceCap) {
  detail::check_edim(S, "graded_betti");
  BettiTable T;
  T.characteristic  = characteristic;
  T.edim            = S.embedding_dimension();
  auto const& gens  = S.generators();
  std::size_t const e = gens.size();
  if (e == 1) {
    T.entries[{0, 0}] = 1;
    return T;
  }
  std::size_t const n_masks = std::size_t{1} << (e - 1);
  auto const        m       = static_cast<std::size_t>(S.multiplicity());
  if (n_masks > face_cap / m) {
    throw ResourceLimit("graded_betti: " + std::to_string(n_masks) + " * "
                        + std::to_string(m) + " faces exceed the cap of "
                        + std::to_string(face_cap));
  }
  std::vector<Int> sums(n_masks);
  for (std::size_t s = 0; s < n_masks; ++s) {
    sums[s] = detail::face_sum(gens, static_cast<FaceMask>(s) << 1);
  }
  auto const                           ap = apery_set(S);
  std::map<Int, std::vector<FaceMask>> by_degree;
  for (Int w : ap.residues()) {
    for (std::size_t s = 0; s < n_masks; ++s) {
      by_degree[w + sums[s]].push_back(static_cast<FaceMask>(s) << 1);
    }
  }
  for (auto& [j, faces] : by_degree) {
    auto const h = detail::family_homology(std::move(faces), e, characteristic);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] != 0) {
        T.entries[{i, j}] = h[i];
      }
    }
  }
  return T;
}

// Graded Betti numbers straight from the divisor complexes Delta_j, for
// every j in S up to the largest degree allowed by reg = Frob + 1. Meant
// for cross-checking on small semigroups.
inline BettiTable graded_betti_direct(NumericalSemigroup const& S,
                                      int characteristic = 0) {
  detail::check_edim(S, "graded_betti_direct");
  BettiTable T;
  T.characteristic  = characteristic;
  T.edim            = S.embedding_dimension();
  auto const  e     = static_cast<Int>(S.embedding_dimension());
  Int const   F     = S.frobenius();
  Int const   sum_g = S.sum_of_generators();
  for (Int j = 0; j <= F + sum_g; ++j) {
    if (!S.contains(j)) {
      continue;
    }
    auto const h = reduced_homology_dims(divisor_complex(S, j), characteristic);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] != 0 && j <= F + 1 + sum_g - e + static_cast<Int>(i)) {
        T.entries[{i, j}] = h[i];
      }
    }
  }
  return T;
}

// max{ j - i : b_{i,j} != 0 } - sum g + e.
inline Int regularity(NumericalSemigroup const& S, BettiTable const& T) {
  Int best = 0;
  for (auto const& [key, b] : T.entries) {
    best = std::max(best, key.second - static_cast<Int>(key.first));
  }
  return best - S.sum_of_generators()
         + static_cast<Int>(S.embedding_dimension());
}

// Regularity from the Betti table; throws ConsistencyFailure unless it
// equals Frob + 1.
inline Int regularity(NumericalSemigroup const& S, int characteristic = 0) {
  Int const reg = regularity(S, graded_betti(S, characteristic));
  if (reg != S.frobenius() + 1) {
    throw ConsistencyFailure("regularity of <" + S.to_string() + "> is "
                             + std::to_string(reg) + ", expected Frob + 1 = "
                             + std::to_string(S.frobenius() + 1));
  }
  return reg;
}

inline Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  __int128 r = 1;
  for (Int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > static_cast<__int128>(INT64_MAX)) {
      throw ResourceLimit("binomial: C(" + std::to_string(n) + ","
                          + std::to_string(k) + ") overflows 64 bits");
    }
  }
  return static_cast<Int>(r);
}

// The d-th Macaulay expansion n = C(a_d, d) + C(a_{d-1}, d-1) + ... with
// a_d > a_{d-1} > ... >= j >= 1; pairs (a_k, k).
inline std::vector<std::pair<Int, Int>> macaulay_expansion(Int n, Int d) {
  if (n < 0 || d < 1) {
    throw InvalidInput("macaulay_expansion: need n >= 0 and d >= 1");
  }
  std::vector<std::pair<Int, Int>> terms;
  for (Int k = d; k >= 1 && n > 0; --k) {
    Int a = k;
    while (binomial(a + 1, k) <= n) {
      ++a;
    }
    terms.emplace_back(a, k);
    n -= binomial(a, k);
  }
  return terms;
}

// n^<d>
inline Int macaulay_upper(Int n, Int d) {
  Int s = 0;
  for (auto [a, k] : macaulay_expansion(n, d)) {
    s += binomial(a + 1, k + 1);
  }
  return s;
}

// n_<d>
inline Int macaulay_lower(Int n, Int d) {
  Int s = 0;
  for (auto [a, k] : macaulay_expansion(n, d)) {
    s += binomial(a - 1, k);
  }
  return s;
}

struct BoundParameters {
  Int r;
  Int s;
};

// r with C(e+r-1, r-1) <= m < C(e+r, r), and s = m - C(e+r-1, r-1).
inline BoundParameters bound_parameters(Int e, Int m) {
  if (!(3 <= e && e < m)) {
    throw InvalidInput("bound parameters need 3 <= e < m, got e = "
                       + std::to_string(e) + ", m = " + std::to_string(m));
  }
  Int r = 1;
  while (!(binomial(e + r - 1, r - 1) <= m && m < binomial(e + r, r))) {
    ++r;
  }
  return {r, m - binomial(e + r - 1, r - 1)};
}

// Upper bound on the number of minimal relations for edim e + 1 and
// multiplicity m.
inline Int bound_C(Int e, Int m) {
  auto [r, s] = bound_parameters(e, m);
  return binomial(e + r - 1, r) + (s == 0 ? 0 : macaulay_upper(s, r)) - s;
}

// Upper bound on the type for edim e + 1 and multiplicity m.
inline Int bound_D(Int e, Int m) {
  auto [r, s] = bound_parameters(e, m);
  return binomial(e + r - 2, r - 1) + (s == 0 ? 0 : macaulay_lower(s, r));
}

// b_i <= i * C(m, i + 1) for a Cohen-Macaulay ring of multiplicity m.
inline Int max_betti_bound(Int i, Int m) {
  if (!(1 <= i && i <= m - 1)) {
    throw InvalidInput("max_betti_bound: need 1 <= i <= m - 1");
  }
  return i * binomial(m, i + 1);
}

}  // namespace nslab

#endif  // NSLAB_RESOLUTION_HPP_
