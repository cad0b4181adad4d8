// Hilbert-series numerator, cyclotomic test, complete intersections and
// gluings.

#ifndef NSLAB_CLASSIFY_HPP_
#define NSLAB_CLASSIFY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "factorization.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "semigroup.hpp"

namespace nslab {

// P(z) = 1 + (z - 1) sum_{gaps x} z^x, so that H(z) = P(z) / (1 - z).
inline Polynomial semigroup_polynomial(NumericalSemigroup const& S) {
  std::vector<BigInt> c(static_cast<std::size_t>(S.frobenius() + 2), BigInt(0));
  c[0] = 1;
  for (Int x : S.gaps()) {
    c[static_cast<std::size_t>(x + 1)] += 1;
    c[static_cast<std::size_t>(x)] -= 1;
  }
  return Polynomial(std::move(c));
}

struct CyclotomicResult {
  bool             cyclotomic = false;
  std::vector<Int> factors;  // d for each Phi_d peeled, ascending, repeated
  Polynomial       remainder;
};

// Peels Phi_d for ascending d with phi(d) <= deg, each as often as it
// divides. A nonzero value at a primitive d-th root of unity modulo a prime
// rules out Phi_d before any division is attempted.
inline CyclotomicResult is_cyclotomic(Polynomial const& P,
                                      CyclotomicCache&  cache) {
  if (!P.is_monic()) {
    throw InvalidInput("is_cyclotomic: polynomial must be monic");
  }
  CyclotomicResult res;
  Polynomial       rem = P;
  // phi(d) >= sqrt(d / 2)
  auto const         deg0 = static_cast<std::uint64_t>(std::max<long>(P.degree(), 0));
  std::uint64_t const dmax = 2 * deg0 * deg0;
  auto const&        phi  = cache.phi_table(dmax);

  std::vector<std::int64_t> small;
  bool                      small_ok = false;
  auto refresh_small = [&] {
    small.clear();
    small_ok = true;
    for (auto const& c : rem.coefficients()) {
      if (c > INT32_MAX || c < INT32_MIN) {
        small_ok = false;
        return;
      }
      small.push_back(static_cast<std::int64_t>(c));
    }
  };
  refresh_small();
  auto may_vanish = [&](std::uint64_t d) {
    if (!small_ok) {
      return true;
    }
    auto const [p, w] = cache.root(d);
    std::uint64_t acc = 0;
    for (std::size_t i = small.size(); i-- > 0;) {
      auto c = small[i] % static_cast<std::int64_t>(p);
      if (c < 0) {
        c += static_cast<std::int64_t>(p);
      }
      acc = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(acc) * w + static_cast<std::uint64_t>(c))
          % p);
    }
    return acc == 0;
  };
  for (std::uint64_t d = 1; d <= dmax && rem.degree() > 0; ++d) {
    if (phi[d] > static_cast<std::uint64_t>(rem.degree())) {
      continue;
    }
    while (phi[d] <= static_cast<std::uint64_t>(rem.degree()) && may_vanish(d)) {
      auto q = rem.exact_divide(cache.get(d));
      if (!q) {
        break;
      }
      rem = std::move(*q);
      res.factors.push_back(static_cast<Int>(d));
      refresh_small();
    }
  }
  res.cyclotomic = rem.degree() == 0 && rem.leading() == 1;
  res.remainder  = std::move(rem);
  return res;
}

inline CyclotomicResult is_cyclotomic(Polynomial const& P) {
  thread_local CyclotomicCache cache;
  return is_cyclotomic(P, cache);
}

inline CyclotomicResult is_cyclotomic(NumericalSemigroup const& S) {
  return is_cyclotomic(semigroup_polynomial(S));
}

// rho = edim - 1. When true, the Betti totals are checked against the Koszul
// numbers C(e - 1, i) unless `verify` is false.
inline bool is_complete_intersection(NumericalSemigroup const& S,
                                     bool                      verify = true) {
  std::size_t const e  = S.embedding_dimension();
  bool const        ci = rho(S) == e - 1;
  if (ci && verify) {
    auto const t = graded_betti(S).totals();
    for (std::size_t i = 0; i < e; ++i) {
      auto const want = static_cast<std::size_t>(
          binomial(static_cast<Int>(e) - 1, static_cast<Int>(i)));
      if (t[i] != want) {
        throw ConsistencyFailure("complete intersection <" + S.to_string()
                                 + "> has b_" + std::to_string(i) + " = "
                                 + std::to_string(t[i]) + ", expected "
                                 + std::to_string(want));
      }
    }
  }
  return ci;
}

// S = d1 * S1 + d2 * S2. A leaf is a copy of N and has no children.
struct GluingTree {
  NumericalSemigroup      semigroup;
  Int                     d1 = 1;
  Int                     d2 = 1;
  std::vector<GluingTree> children;  // empty, or {S1, S2}

  bool is_leaf() const noexcept {
    return children.empty();
  }

  // The generators obtained by scaling the children's generators back up.
  std::vector<Int> recombine() const {
    if (is_leaf()) {
      return {1};
    }
    std::vector<Int> out;
    for (Int g : children[0].recombine()) {
      out.push_back(d1 * g);
    }
    for (Int g : children[1].recombine()) {
      out.push_back(d2 * g);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string() const {
    if (is_leaf()) {
      return "<1>";
    }
    return std::to_string(d1) + "*(" + children[0].to_string() + ") + "
           + std::to_string(d2) + "*(" + children[1].to_string() + ")";
  }
};

inline constexpr std::size_t kMaxGluingEdim = 20;

// Splits the generators into A1 (containing g_1) and A2 with
// d2 = gcd(A2) in <A1 / d1> and d1 = gcd(A1) in <A2 / d2>. Such a split
// adds exactly one relation to those of the parts, so S is a complete
// intersection iff some (equivalently every) split has complete
// intersection parts; the first split found is used.
inline std::optional<GluingTree> gluing_decomposition(
    NumericalSemigroup const& S) {
  auto const&       gens = S.generators();
  std::size_t const e    = gens.size();
  if (e > kMaxGluingEdim) {
    throw ResourceLimit("gluing_decomposition: embedding dimension "
                        + std::to_string(e) + " above "
                        + std::to_string(kMaxGluingEdim));
  }
  GluingTree node{S, 1, 1, {}};
  if (e == 1) {
    return node;
  }
  for (std::uint32_t mask = 1; mask < (1U << (e - 1)); ++mask) {
    // bit k of mask puts generator k + 1 into A2
    std::vector<Int> A1{gens[0]}, A2;
    for (std::size_t k = 1; k < e; ++k) {
      ((mask >> (k - 1)) & 1U ? A2 : A1).push_back(gens[k]);
    }
    Int d1 = 0, d2 = 0;
    for (Int a : A1) {
      d1 = std::gcd(d1, a);
    }
    for (Int a : A2) {
      d2 = std::gcd(d2, a);
    }
    std::vector<Int> B1, B2;
    for (Int a : A1) {
      B1.push_back(a / d1);
    }
    for (Int a : A2) {
      B2.push_back(a / d2);
    }
    auto const S1 = NumericalSemigroup::from_generators(B1);
    auto const S2 = NumericalSemigroup::from_generators(B2);
    if (!S1.contains(d2) || !S2.contains(d1)) {
      continue;
    }
    auto left  = gluing_decomposition(S1);
    auto right = gluing_decomposition(S2);
    if (!left || !right) {
      return std::nullopt;
    }
    node.d1 = d1;
    node.d2 = d2;
    node.children.push_back(std::move(*left));
    node.children.push_back(std::move(*right));
    return node;
  }
  return std::nullopt;
}

// Some symmetric semigroup has edim e and multiplicity m iff
// 2 <= e <= m - 1 or (e, m) is (1, 1) or (2, 2).
inline bool symmetric_pair_exists(Int e, Int m) noexcept {
  return (2 <= e && e <= m - 1) || (e == 1 && m == 1) || (e == 2 && m == 2);
}

// mult >= 2^(e-1) for complete intersections, plus the (e, m) data.
inline CheckReport ci_structure_checks(NumericalSemigroup const& S) {
  auto const e  = static_cast<Int>(S.embedding_dimension());
  auto const m  = S.multiplicity();
  bool const ci = is_complete_intersection(S);
  Json       data;
  data["ci"]   = ci;
  data["edim"] = e;
  data["mult"] = m;
  data["symmetric_pair_exists"] = symmetric_pair_exists(e, m);
  Verdict v = Verdict::pass;
  if (ci) {
    Int const bound      = Int{1} << (e - 1);
    data["mult_bound"]   = bound;
    if (m < bound) {
      v = Verdict::fail;
    }
    if (!symmetric_pair_exists(e, m)) {
      v = Verdict::fail;
    }
  }
  return make_report("ci-structure", S, v, std::move(data));
}

}  // namespace nslab

#endif  // NSLAB_CLASSIFY_HPP_
