#include <catch_amalgamated.hpp>

#include <nslab/semigroup.hpp>

#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "samples.hpp"

using nslab::Int;
using nslab::NumericalSemigroup;

namespace {

NumericalSemigroup S(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace

TEST_CASE("from_generators canonical forms", "[semigroup]") {
  auto s23 = S({2, 3});
  CHECK(s23.generators() == std::vector<Int>{2, 3});
  CHECK(s23.gaps() == std::vector<Int>{1});
  CHECK(s23.frobenius() == 1);

  auto s456 = S({4, 5, 6});
  CHECK(s456.gaps() == std::vector<Int>{1, 2, 3, 7});
  CHECK(s456.frobenius() == 7);

  CHECK(S({4, 5, 6, 9}).generators() == std::vector<Int>{4, 5, 6});
  CHECK(S({9, 6, 4, 5, 5}).generators() == std::vector<Int>{4, 5, 6});
  CHECK(S({1, 7}).is_N());
}

TEST_CASE("from_generators rejects bad input", "[semigroup]") {
  CHECK_THROWS_AS(NumericalSemigroup::from_generators(std::vector<Int>{}),
                  nslab::InvalidInput);
  CHECK_THROWS_AS(S({4, 6}), nslab::NotCofinite);
  CHECK_THROWS_AS(S({0, 3}), nslab::InvalidInput);
  CHECK_THROWS_AS(S({-2, 3}), nslab::InvalidInput);
  CHECK_THROWS_AS(NumericalSemigroup::parse("3,,4"), nslab::InvalidInput);
  CHECK_THROWS_AS(NumericalSemigroup::parse("3,x"), nslab::InvalidInput);
  CHECK(NumericalSemigroup::parse(" 4, 5 ,6") == S({4, 5, 6}));
}

TEST_CASE("membership", "[semigroup]") {
  CHECK_FALSE(nslab::membership(S({2, 3}), 1));
  CHECK_FALSE(nslab::membership(S({4, 5, 6}), 7));
  CHECK(nslab::membership(S({4, 5, 6}), 8));
  CHECK_FALSE(nslab::membership(S({4, 5, 6}), -3));
  CHECK(nslab::membership(NumericalSemigroup(), 0));
}

TEST_CASE("invariants examples", "[semigroup]") {
  auto a = nslab::invariants(S({3, 4, 5}));
  CHECK(a.multiplicity == 3);
  CHECK(a.edim == 3);
  CHECK(a.width == 2);
  CHECK(a.frobenius == 2);
  CHECK(a.genus == 2);
  CHECK(a.eta == 1);
  CHECK(a.type == 2);

  auto b = nslab::invariants(S({4, 5, 6}));
  CHECK(b.frobenius == 7);
  CHECK(b.genus == 4);
  CHECK(b.eta == 4);
  CHECK(b.type == 1);

  auto n = nslab::invariants(NumericalSemigroup());
  CHECK(n.multiplicity == 1);
  CHECK(n.edim == 1);
  CHECK(n.frobenius == -1);
  CHECK(n.genus == 0);
  CHECK(n.eta == 0);
  CHECK(n.type == 0);
}

TEST_CASE("pseudo-Frobenius examples", "[semigroup]") {
  CHECK(nslab::pseudo_frobenius(S({3, 4, 5})).values == std::vector<Int>{1, 2});
  CHECK(nslab::pseudo_frobenius(S({4, 5, 6})).values == std::vector<Int>{7});
  CHECK(nslab::pseudo_frobenius(S({2, 3})).values == std::vector<Int>{1});
  CHECK_THROWS_AS(nslab::pseudo_frobenius(NumericalSemigroup()),
                  nslab::EmptyResult);
}

TEST_CASE("symmetry predicates", "[semigroup]") {
  CHECK(nslab::is_symmetric(S({4, 5, 6})));
  CHECK_FALSE(nslab::is_symmetric(S({3, 4, 5})));
  CHECK(nslab::is_symmetric(S({2, 3})));
  CHECK(nslab::is_almost_symmetric(S({3, 4, 5})));
  CHECK(nslab::is_almost_symmetric(S({4, 6, 9, 11})));
  CHECK(nslab::pseudo_frobenius(S({4, 6, 9, 11})).values == std::vector<Int>{2, 5, 7});
  CHECK_FALSE(nslab::is_almost_symmetric(S({4, 7, 9, 10})));
  CHECK(nslab::is_nearly_gorenstein(S({4, 5, 6})));
  CHECK(nslab::has_canonical_reduction(S({2, 3})));
}

TEST_CASE("interval completion and max edim", "[semigroup]") {
  CHECK(nslab::interval_completion(S({5, 9})) == S({5, 6, 7, 8, 9}));
  CHECK(nslab::interval_completion(S({3, 7})) == S({3, 4, 5}));
  CHECK(nslab::interval_completion(S({4, 5, 6})) == S({4, 5, 6}));
  CHECK(nslab::is_max_edim(S({3, 4, 5})));
  CHECK_FALSE(nslab::is_max_edim(S({4, 5, 6})));
  CHECK(nslab::is_max_edim(NumericalSemigroup()));
}

TEST_CASE("Apery set", "[semigroup]") {
  auto ap = nslab::apery_set(S({4, 5, 6}));
  CHECK(ap.residues() == std::vector<Int>{0, 5, 6, 11});
  auto s  = S({3, 7, 11});
  auto a7 = nslab::apery_set(s, 7);
  CHECK(a7[0] == 0);
  Int mx = 0;
  for (Int r = 0; r < 7; ++r) {
    CHECK(a7[r] % 7 == r);
    CHECK(a7.contains(a7[r]));
    mx = std::max(mx, a7[r]);
  }
  CHECK(mx - 7 == s.frobenius());
  // 5 is not in S, so only the residue property holds
  auto a5 = nslab::apery_set(s, 5);
  for (Int r = 0; r < 5; ++r) {
    CHECK(a5[r] % 5 == r);
    CHECK(s.contains(a5[r]));
    CHECK_FALSE(s.contains(a5[r] - 5));
  }
}

TEST_CASE("agreement with sieve oracle", "[semigroup][oracle]") {
  for (auto const& gens : samples::small_generator_sets()) {
    auto const s = NumericalSemigroup::from_generators(gens);
    INFO(s.to_string());
    CHECK(s.generators() == oracle::minimal_generators(gens));
    CHECK(s.gaps() == oracle::gaps(gens));
    CHECK(s.frobenius() == oracle::frobenius(gens));
    if (!s.is_N()) {
      CHECK(nslab::pseudo_frobenius(s).values == oracle::pseudo_frobenius(gens));
    }
  }
}

TEST_CASE("from_gaps round trip", "[semigroup]") {
  for (auto const& gens : samples::small_generator_sets()) {
    auto const s = NumericalSemigroup::from_generators(gens);
    auto const t = NumericalSemigroup::from_gaps(s.gap_bits());
    CHECK(s == t);
    CHECK(t.frobenius() == s.frobenius());
    CHECK(t.genus() == s.genus());
  }
  NumericalSemigroup::GapBits g345(3);
  g345.set(1);
  g345.set(2);
  CHECK(NumericalSemigroup::from_gaps(g345) == S({3, 4, 5}));
  NumericalSemigroup::GapBits not_closed(5);
  not_closed.set(1);
  not_closed.set(4);  // 2 in S but 2 + 2 = 4 is a gap
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps(not_closed),
                  nslab::InvalidInput);
}

TEST_CASE("first-order properties on small semigroups", "[semigroup][property]") {
  for (auto const& gens : samples::small_generator_sets()) {
    auto const s = NumericalSemigroup::from_generators(gens);
    if (s.is_N()) {
      continue;
    }
    INFO(s.to_string());
    auto const inv = nslab::invariants(s);
    CHECK(static_cast<Int>(inv.edim) <= inv.multiplicity);
    CHECK(static_cast<Int>(inv.type) <= inv.multiplicity - 1);
    CHECK(inv.eta + inv.genus == inv.frobenius + 1);
    CHECK(nslab::is_symmetric(s) == (inv.type == 1));
    if (nslab::is_symmetric(s)) {
      CHECK(nslab::is_almost_symmetric(s));
    }
    if (nslab::is_almost_symmetric(s)) {
      CHECK(nslab::is_nearly_gorenstein(s));
    }
    if (nslab::is_nearly_gorenstein(s)) {
      CHECK(nslab::has_canonical_reduction(s));
    }
    CHECK(nslab::is_max_edim(s)
          == (static_cast<Int>(inv.type) == inv.multiplicity - 1));
    auto const ic = nslab::interval_completion(s);
    CHECK(nslab::interval_completion(ic) == ic);
    CHECK(ic.multiplicity() == s.multiplicity());
    CHECK(ic.width() <= s.width());
  }
}
