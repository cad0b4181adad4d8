// Exact rank computations for sparse integer matrices.
//
// Over characteristic 0 the rank is computed by fraction-free elimination on
// integer rows (rows are scaled, never divided except by their content).
// Machine integers are tried first; on overflow the whole computation is
// redone with arbitrary precision. Over F_p the same elimination runs with
// modular arithmetic.

#ifndef NSLAB_LINALG_HPP_
#define NSLAB_LINALG_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace nslab::linalg {

using BigInt = boost::multiprecision::cpp_int;

// Sorted by column, no explicit zeros.
template <typename T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

struct Overflow {};

namespace detail {

template <typename T>
T mul(T a, T b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw Overflow{};
    }
    return r;
  } else {
    return a * b;
  }
}

template <typename T>
T sub(T a, T b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw Overflow{};
    }
    return r;
  } else {
    return a - b;
  }
}

template <typename T>
T abs_gcd(T a, T b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    return std::gcd(a, b);
  } else {
    return boost::multiprecision::gcd(a, b);
  }
}

// Divides the row by the gcd of its entries and makes the leading entry
// positive.
template <typename T>
void normalize(SparseRow<T>& row) {
  if (row.empty()) {
    return;
  }
  T g = 0;
  for (auto const& [c, v] : row) {
    g = abs_gcd(g, v);
    if (g == 1) {
      break;
    }
  }
  if (row.front().second < 0) {
    g = -g;
  }
  if (g != 1) {
    for (auto& [c, v] : row) {
      v /= g;
    }
  }
}

// a*row - b*pivot, merging sorted supports.
template <typename T>
SparseRow<T> combine(SparseRow<T> const& row,
                     T const&            a,
                     SparseRow<T> const& pivot,
                     T const&            b) {
  SparseRow<T> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size()
        || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, mul(a, row[i].second));
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, sub(T(0), mul(b, pivot[j].second)));
      ++j;
    } else {
      T v = sub(mul(a, row[i].second), mul(b, pivot[j].second));
      if (v != 0) {
        out.emplace_back(row[i].first, std::move(v));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename T>
std::vector<SparseRow<T>> sparsest_first(std::vector<SparseRow<T>> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](auto const& x, auto const& y) {
    return x.size() < y.size();
  });
  return rows;
}

}  // namespace detail

// Rank over Q of an integer matrix given by rows. Throws Overflow when T is
// int64 and an intermediate value does not fit.
template <typename T>
std::size_t rank_fraction_free(std::vector<SparseRow<T>> rows) {
  rows = detail::sparsest_first(std::move(rows));
  std::vector<SparseRow<T>>                   pivots;
  std::unordered_map<std::uint32_t, std::size_t> pivot_of_col;
  for (auto& row : rows) {
    detail::normalize(row);
    while (!row.empty()) {
      auto it = pivot_of_col.find(row.front().first);
      if (it == pivot_of_col.end()) {
        break;
      }
      auto const& p = pivots[it->second];
      T const     a = p.front().second;
      T const     b = row.front().second;
      T const     g = detail::abs_gcd(a, b);
      row           = detail::combine(row, T(a / g), p, T(b / g));
      detail::normalize(row);
    }
    if (!row.empty()) {
      pivot_of_col.emplace(row.front().first, pivots.size());
      pivots.push_back(std::move(row));
    }
  }
  return pivots.size();
}

inline std::size_t rank_mod_p(std::vector<SparseRow<std::int64_t>> rows,
                              std::int64_t                          p) {
  auto reduce = [p](std::int64_t v) {
    v %= p;
    return v < 0 ? v + p : v;
  };
  auto inverse = [p](std::int64_t a) {
    // a^(p-2) mod p
    std::int64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) {
        result = static_cast<std::int64_t>(
            static_cast<__int128>(result) * base % p);
      }
      base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
      e >>= 1;
    }
    return result;
  };
  rows = detail::sparsest_first(std::move(rows));
  std::vector<SparseRow<std::int64_t>>           pivots;
  std::unordered_map<std::uint32_t, std::size_t> pivot_of_col;
  for (auto& raw : rows) {
    SparseRow<std::int64_t> row;
    for (auto const& [c, v] : raw) {
      if (auto r = reduce(v); r != 0) {
        row.emplace_back(c, r);
      }
    }
    while (!row.empty()) {
      auto it = pivot_of_col.find(row.front().first);
      if (it == pivot_of_col.end()) {
        break;
      }
      auto const&        piv = pivots[it->second];  // leading entry is 1
      std::int64_t const b   = row.front().second;
      SparseRow<std::int64_t> out;
      out.reserve(row.size() + piv.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size()
            || (i < row.size() && row[i].first < piv[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          out.emplace_back(piv[j].first, reduce(-b * piv[j].second));
          ++j;
        } else {
          auto v = reduce(row[i].second - b * piv[j].second);
          if (v != 0) {
            out.emplace_back(row[i].first, v);
          }
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
    if (!row.empty()) {
      auto const inv = inverse(row.front().second);
      for (auto& [c, v] : row) {
        v = static_cast<std::int64_t>(static_cast<__int128>(v) * inv % p);
      }
      pivot_of_col.emplace(row.front().first, pivots.size());
      pivots.push_back(std::move(row));
    }
  }
  return pivots.size();
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

// Rank in characteristic 0 (exact, over Q) or a prime p.
inline std::size_t rank(std::vector<SparseRow<std::int64_t>> const& rows,
                        int characteristic) {
  if (characteristic == 0) {
    try {
      return rank_fraction_free<std::int64_t>(rows);
    } catch (Overflow const&) {
      std::vector<SparseRow<BigInt>> big;
      big.reserve(rows.size());
      for (auto const& r : rows) {
        SparseRow<BigInt> b;
        for (auto const& [c, v] : r) {
          b.emplace_back(c, BigInt(v));
        }
        big.push_back(std::move(b));
      }
      return rank_fraction_free<BigInt>(std::move(big));
    }
  }
  if (!is_prime(characteristic)) {
    throw InvalidInput("rank: characteristic must be 0 or a prime, got "
                       + std::to_string(characteristic));
  }
  return rank_mod_p(rows, characteristic);
}

// Dense Bareiss elimination; returns the rank. Intermediate values are
// exact minors, so T should be an arbitrary-precision integer.
template <typename T>
std::size_t bareiss_rank(std::vector<std::vector<T>> M) {
  if (M.empty()) {
    return 0;
  }
  std::size_t const rows = M.size();
  std::size_t const cols = M.front().size();
  std::size_t       r    = 0;
  T                 prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c] == 0) {
      ++piv;
    }
    if (piv == rows) {
      continue;
    }
    std::swap(M[piv], M[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) / prev;
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    ++r;
  }
  return r;
}

}  // namespace nslab::linalg

#endif  // NSLAB_LINALG_HPP_
