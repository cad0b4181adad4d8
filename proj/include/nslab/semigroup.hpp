// Numerical semigroups: canonical value type and first-order invariants.
//
// A NumericalSemigroup stores its minimal generators g_1 < ... < g_e and the
// gap set as a bitset over [0, Frob]. Everything above the Frobenius number
// is implicitly a member. The trivial semigroup N has generators {1} and
// Frobenius number -1.

#ifndef NSLAB_SEMIGROUP_HPP_
#define NSLAB_SEMIGROUP_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "error.hpp"

namespace nslab {

using Int = std::int64_t;

class NumericalSemigroup {
 public:
  using GapBits = boost::dynamic_bitset<std::uint64_t>;

  // The semigroup N = <1>.
  NumericalSemigroup() : gens_{1}, frob_(-1), genus_(0) {}

  // Builds the semigroup spanned by `gens`. The input need not be minimal,
  // sorted or duplicate-free; minimal generators are recomputed.
  static NumericalSemigroup from_generators(std::span<Int const> gens) {
    if (gens.empty()) {
      throw InvalidInput("from_generators: empty generator list");
    }
    Int g = 0;
    for (Int x : gens) {
      if (x <= 0) {
        throw InvalidInput("from_generators: generators must be positive, got "
                           + std::to_string(x));
      }
      g = std::gcd(g, x);
    }
    if (g != 1) {
      throw NotCofinite("from_generators: gcd of generators is "
                        + std::to_string(g));
    }
    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() == 1) {
      return NumericalSemigroup();
    }

    // Apery set with respect to the smallest generator, by Dijkstra over
    // residues: dist[r] is the least element congruent to r.
    Int const              m = sorted.front();
    std::vector<Int>       dist(static_cast<std::size_t>(m), -1);
    using Item = std::pair<Int, Int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
      auto [d, r] = queue.top();
      queue.pop();
      if (d != dist[static_cast<std::size_t>(r)]) {
        continue;
      }
      for (std::size_t k = 1; k < sorted.size(); ++k) {
        Int const nd = d + sorted[k];
        auto      s  = static_cast<std::size_t>(nd % m);
        if (dist[s] < 0 || nd < dist[s]) {
          dist[s] = nd;
          queue.emplace(nd, static_cast<Int>(s));
        }
      }
    }
    Int const frob = *std::max_element(dist.begin(), dist.end()) - m;

    NumericalSemigroup S;
    S.frob_ = frob;
    S.gaps_.resize(static_cast<std::size_t>(frob + 1));
    Int genus = 0;
    for (Int n = 1; n <= frob; ++n) {
      if (n < dist[static_cast<std::size_t>(n % m)]) {
        S.gaps_.set(static_cast<std::size_t>(n));
        ++genus;
      }
    }
    S.genus_ = genus;

    // g is redundant iff g - h is in S for some smaller kept generator h.
    S.gens_.clear();
    for (Int x : sorted) {
      bool minimal = true;
      for (Int h : S.gens_) {
        if (S.contains(x - h)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        S.gens_.push_back(x);
      }
    }
    return S;
  }

  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<Int const>(gens.begin(), gens.size()));
  }

  // Parses the canonical textual form "4,5,6" (whitespace tolerated).
  static NumericalSemigroup parse(std::string_view text) {
    std::vector<Int> gens;
    std::string      token;
    auto             flush = [&] {
      auto first = token.find_first_not_of(" \t");
      if (first == std::string::npos) {
        throw InvalidInput("parse: empty entry in generator list");
      }
      auto last = token.find_last_not_of(" \t");
      auto body = token.substr(first, last - first + 1);
      try {
        std::size_t used = 0;
        Int         v    = std::stoll(body, &used);
        if (used != body.size()) {
          throw InvalidInput("parse: not an integer: " + body);
        }
        gens.push_back(v);
      } catch (std::logic_error const&) {
        throw InvalidInput("parse: not an integer: " + body);
      }
      token.clear();
    };
    for (char c : text) {
      if (c == ',') {
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
    return from_generators(gens);
  }

  // Builds a semigroup from its gap set. `gaps` must have bit 0 clear, its
  // highest set bit is the Frobenius number, and the complement must be
  // closed under addition; the last condition is only checked when
  // `validate` is true.
  static NumericalSemigroup from_gaps(GapBits gaps, bool validate = true) {
    NumericalSemigroup S;
    if (gaps.none()) {
      return S;
    }
    if (gaps.test(0)) {
      throw InvalidInput("from_gaps: 0 cannot be a gap");
    }
    Int frob = 0;
    for (auto i = gaps.find_first(); i != GapBits::npos; i = gaps.find_next(i)) {
      frob = static_cast<Int>(i);
    }
    gaps.resize(static_cast<std::size_t>(frob + 1));
    S.frob_  = frob;
    S.gaps_  = std::move(gaps);
    S.genus_ = static_cast<Int>(S.gaps_.count());
    S.gens_.clear();
    Int m = 1;
    while (!S.contains(m)) {
      ++m;
    }
    for (Int s = m; s <= frob + m; ++s) {
      if (!S.contains(s)) {
        continue;
      }
      bool minimal = true;
      for (Int h : S.gens_) {
        if (S.contains(s - h)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        S.gens_.push_back(s);
      }
    }
    if (validate) {
      for (Int a = 1; a <= frob; ++a) {
        if (!S.contains(a)) {
          continue;
        }
        for (Int b = a; a + b <= frob; ++b) {
          if (S.contains(b) && !S.contains(a + b)) {
            throw InvalidInput("from_gaps: complement is not closed under "
                               "addition");
          }
        }
      }
    }
    return S;
  }

  std::vector<Int> const& generators() const noexcept {
    return gens_;
  }

  Int multiplicity() const noexcept {
    return gens_.front();
  }

  std::size_t embedding_dimension() const noexcept {
    return gens_.size();
  }

  Int frobenius() const noexcept {
    return frob_;
  }

  Int genus() const noexcept {
    return genus_;
  }

  Int width() const noexcept {
    return gens_.back() - gens_.front();
  }

  bool is_N() const noexcept {
    return frob_ < 0;
  }

  bool contains(Int n) const noexcept {
    if (n < 0) {
      return false;
    }
    if (n > frob_) {
      return true;
    }
    return !gaps_.test(static_cast<std::size_t>(n));
  }

  GapBits const& gap_bits() const noexcept {
    return gaps_;
  }

  std::vector<Int> gaps() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (auto i = gaps_.find_first(); i != GapBits::npos;
         i      = gaps_.find_next(i)) {
      out.push_back(static_cast<Int>(i));
    }
    return out;
  }

  Int sum_of_generators() const noexcept {
    return std::accumulate(gens_.begin(), gens_.end(), Int{0});
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      os << (i ? "," : "") << gens_[i];
    }
    return os.str();
  }

  friend bool operator==(NumericalSemigroup const& a,
                         NumericalSemigroup const& b) noexcept {
    return a.gens_ == b.gens_;
  }

  friend auto operator<=>(NumericalSemigroup const& a,
                          NumericalSemigroup const& b) noexcept {
    return a.gens_ <=> b.gens_;
  }

 private:
  std::vector<Int> gens_;
  GapBits          gaps_;
  Int              frob_;
  Int              genus_;
};

inline bool membership(NumericalSemigroup const& S, Int n) noexcept {
  return S.contains(n);
}

// Least element of each residue class modulo `modulus`.
class AperySet {
 public:
  AperySet(NumericalSemigroup const& S, Int modulus) : modulus_(modulus) {
    if (modulus <= 0) {
      throw InvalidInput("AperySet: modulus must be positive");
    }
    residues_.assign(static_cast<std::size_t>(modulus), -1);
    std::size_t found = 0;
    for (Int n = 0; found < residues_.size(); ++n) {
      auto r = static_cast<std::size_t>(n % modulus);
      if (residues_[r] < 0 && S.contains(n)) {
        residues_[r] = n;
        ++found;
      }
    }
  }

  Int modulus() const noexcept {
    return modulus_;
  }

  Int operator[](Int r) const {
    return residues_[static_cast<std::size_t>(r)];
  }

  std::vector<Int> const& residues() const noexcept {
    return residues_;
  }

  bool contains(Int w) const noexcept {
    return w >= 0 && residues_[static_cast<std::size_t>(w % modulus_)] == w;
  }

 private:
  Int              modulus_;
  std::vector<Int> residues_;
};

inline AperySet apery_set(NumericalSemigroup const& S, Int modulus) {
  return AperySet(S, modulus);
}

inline AperySet apery_set(NumericalSemigroup const& S) {
  return AperySet(S, S.multiplicity());
}

struct PseudoFrobeniusSet {
  std::vector<Int> values;  // sorted ascending

  std::size_t type() const noexcept {
    return values.size();
  }

  bool contains(Int p) const noexcept {
    return std::binary_search(values.begin(), values.end(), p);
  }
};

// Gaps p with p + g_i in S for every minimal generator g_i. Throws
// EmptyResult for N, whose set is empty by convention.
inline PseudoFrobeniusSet pseudo_frobenius(NumericalSemigroup const& S) {
  if (S.is_N()) {
    throw EmptyResult("pseudo_frobenius: N has no pseudo-Frobenius numbers");
  }
  PseudoFrobeniusSet pf;
  for (Int p : S.gaps()) {
    bool ok = true;
    for (Int g : S.generators()) {
      if (!S.contains(p + g)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      pf.values.push_back(p);
    }
  }
  return pf;
}

inline std::size_t type(NumericalSemigroup const& S) {
  return S.is_N() ? 0 : pseudo_frobenius(S).type();
}

struct Invariants {
  Int         multiplicity;
  std::size_t edim;
  Int         width;
  Int         frobenius;
  Int         genus;
  Int         eta;  // elements of S below the Frobenius number
  std::size_t type;
};

inline Invariants invariants(NumericalSemigroup const& S) {
  Invariants inv{};
  inv.multiplicity = S.multiplicity();
  inv.edim         = S.embedding_dimension();
  inv.width        = S.width();
  inv.frobenius    = S.frobenius();
  inv.genus        = S.genus();
  inv.eta          = S.is_N() ? 0 : S.frobenius() - S.genus() + 1;
  inv.type         = type(S);
  return inv;
}

// Every gap x has Frob - x in S. N counts as symmetric (no gaps).
inline bool is_symmetric(NumericalSemigroup const& S) {
  Int const F = S.frobenius();
  for (Int x : S.gaps()) {
    if (!S.contains(F - x)) {
      return false;
    }
  }
  return true;
}

inline bool is_almost_symmetric(NumericalSemigroup const& S) {
  if (S.is_N()) {
    return true;
  }
  Int const  F  = S.frobenius();
  auto const pf = pseudo_frobenius(S);
  for (Int x : S.gaps()) {
    if (S.contains(F - x)) {
      continue;
    }
    if (!(pf.contains(x) && pf.contains(F - x))) {
      return false;
    }
  }
  return true;
}

// For each generator g there is p in PF with g + p - q in S for all q in PF.
// N is treated as nearly Gorenstein.
inline bool is_nearly_gorenstein(NumericalSemigroup const& S) {
  if (S.is_N()) {
    return true;
  }
  auto const pf = pseudo_frobenius(S);
  for (Int g : S.generators()) {
    bool found = false;
    for (Int p : pf.values) {
      found = std::all_of(pf.values.begin(), pf.values.end(), [&](Int q) {
        return S.contains(g + p - q);
      });
      if (found) {
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

inline bool has_canonical_reduction(NumericalSemigroup const& S) {
  if (S.is_N()) {
    return true;
  }
  auto const pf = pseudo_frobenius(S);
  Int const  a  = S.multiplicity() + S.frobenius();
  return std::all_of(pf.values.begin(), pf.values.end(),
                     [&](Int q) { return S.contains(a - q); });
}

// The semigroup generated by the integer interval [g_1, g_e].
inline NumericalSemigroup interval_completion(NumericalSemigroup const& S) {
  std::vector<Int> gens;
  for (Int g = S.multiplicity(); g <= S.generators().back(); ++g) {
    gens.push_back(g);
  }
  return NumericalSemigroup::from_generators(gens);
}

inline bool is_max_edim(NumericalSemigroup const& S) noexcept {
  return static_cast<Int>(S.embedding_dimension()) == S.multiplicity();
}

}  // namespace nslab

#endif  // NSLAB_SEMIGROUP_HPP_
