#include <catch_amalgamated.hpp>

#include <nslab/factorization.hpp>
#include <nslab/resolution.hpp>

#include <vector>

#include "samples.hpp"

using nslab::Int;
using nslab::NumericalSemigroup;

namespace {

NumericalSemigroup S(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(gens);
}

using Totals = std::vector<std::size_t>;

}  // namespace

TEST_CASE("divisor complex examples", "[resolution]") {
  auto K = nslab::divisor_complex(S({3, 4, 5}), 8);
  CHECK(K.facets == std::vector<nslab::FaceMask>{0b010, 0b101});
  CHECK(nslab::divisor_complex(S({3, 4, 5}), 0).facets
        == std::vector<nslab::FaceMask>{0});
  CHECK(nslab::divisor_complex(S({2, 3}), 6).facets
        == std::vector<nslab::FaceMask>{0b01, 0b10});
  CHECK_THROWS_AS(nslab::divisor_complex(S({2, 3}), 1), nslab::NotMember);
}

TEST_CASE("reduced homology of standard complexes", "[resolution]") {
  nslab::SimplicialComplex point{1, {0b1}};
  CHECK(nslab::reduced_homology_dims(point, 0) == Totals{0, 0});
  nslab::SimplicialComplex two{2, {0b01, 0b10}};
  CHECK(nslab::reduced_homology_dims(two, 0) == Totals{0, 1, 0});
  nslab::SimplicialComplex hollow{3, {0b011, 0b101, 0b110}};
  CHECK(nslab::reduced_homology_dims(hollow, 0) == Totals{0, 0, 1, 0});
  CHECK(nslab::reduced_homology_dims(hollow, 2) == Totals{0, 0, 1, 0});
  nslab::SimplicialComplex empty_only{2, {0}};
  CHECK(nslab::reduced_homology_dims(empty_only, 0) == Totals{1, 0, 0});
}

TEST_CASE("real projective plane depends on the characteristic",
          "[resolution]") {
  // six-vertex triangulation of RP^2
  std::vector<nslab::FaceMask> tri;
  int const f[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                        {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
  for (auto const& t : f) {
    tri.push_back((1U << t[0]) | (1U << t[1]) | (1U << t[2]));
  }
  nslab::SimplicialComplex rp2{6, tri};
  CHECK(nslab::reduced_homology_dims(rp2, 0) == Totals{0, 0, 0, 0, 0, 0, 0});
  CHECK(nslab::reduced_homology_dims(rp2, 2) == Totals{0, 0, 1, 1, 0, 0, 0});
}

TEST_CASE("Betti totals examples", "[resolution]") {
  CHECK(nslab::graded_betti(S({3, 4, 5})).totals() == Totals{1, 3, 2});
  CHECK(nslab::graded_betti(S({4, 5, 6})).totals() == Totals{1, 2, 1});
  CHECK(nslab::graded_betti(S({4, 5, 6, 7})).totals() == Totals{1, 6, 8, 3});
  CHECK(nslab::graded_betti(NumericalSemigroup()).totals() == Totals{1});
  auto const T = nslab::graded_betti(S({2, 3}));
  CHECK(T.at(0, 0) == 1);
  CHECK(T.at(1, 6) == 1);
  CHECK(T.entries.size() == 2);
}

TEST_CASE("graded Betti face cap", "[resolution]") {
  CHECK_THROWS_AS(nslab::graded_betti(S({5, 6, 7, 8, 9}), 0, 16),
                  nslab::ResourceLimit);
}

TEST_CASE("regularity examples", "[resolution]") {
  CHECK(nslab::regularity(S({2, 3})) == 2);
  CHECK(nslab::regularity(S({4, 5, 6})) == 8);
  CHECK(nslab::regularity(NumericalSemigroup()) == 0);
}

TEST_CASE("Macaulay operators", "[resolution]") {
  CHECK(nslab::macaulay_upper(5, 2) == 7);
  CHECK(nslab::macaulay_lower(5, 2) == 2);
  CHECK(nslab::macaulay_upper(0, 3) == 0);
  CHECK(nslab::macaulay_lower(0, 3) == 0);
  // 9 = C(4,2) + C(3,1)
  CHECK(nslab::macaulay_expansion(9, 2)
        == std::vector<std::pair<Int, Int>>{{4, 2}, {3, 1}});
  for (Int n = 0; n < 200; ++n) {
    for (Int d = 1; d <= 5; ++d) {
      Int  sum  = 0;
      Int  prev = INT64_MAX;
      for (auto [a, k] : nslab::macaulay_expansion(n, d)) {
        CHECK(a < prev);
        CHECK(a >= k);
        prev = a;
        sum += nslab::binomial(a, k);
      }
      CHECK(sum == n);
    }
  }
}

TEST_CASE("bounds C, D and maximal Betti numbers", "[resolution]") {
  CHECK(nslab::bound_C(3, 4) == 6);
  CHECK(nslab::bound_D(3, 4) == 3);
  for (Int e = 3; e <= 12; ++e) {
    CHECK(nslab::bound_C(e, e + 1) == nslab::binomial(e + 1, 2));
  }
  CHECK_THROWS_AS(nslab::bound_C(2, 4), nslab::InvalidInput);
  CHECK_THROWS_AS(nslab::bound_D(4, 4), nslab::InvalidInput);
  CHECK(nslab::max_betti_bound(1, 5) == 10);
  CHECK(nslab::max_betti_bound(3, 4) == 3);
  for (Int m = 2; m <= 10; ++m) {
    CHECK(nslab::max_betti_bound(m - 1, m) == m - 1);
  }
  CHECK_THROWS_AS(nslab::max_betti_bound(0, 4), nslab::InvalidInput);
}

TEST_CASE("Apery route agrees with divisor complexes",
          "[resolution][oracle]") {
  for (auto const& gens : samples::generator_sets(12, 4)) {
    auto const s = NumericalSemigroup::from_generators(gens);
    INFO(s.to_string());
    for (int p : {0, 2, 3}) {
      auto const fast   = nslab::graded_betti(s, p);
      auto const direct = nslab::graded_betti_direct(s, p);
      CHECK(fast.entries == direct.entries);
    }
  }
}

TEST_CASE("Betti table properties", "[resolution][property]") {
  for (auto const& gens : samples::generator_sets(13, 5)) {
    auto const s = NumericalSemigroup::from_generators(gens);
    if (s.is_N()) {
      continue;
    }
    INFO(s.to_string());
    auto const T  = nslab::graded_betti(s);
    auto const t  = T.totals();
    auto const e  = s.embedding_dimension();
    REQUIRE(t.size() == e);
    CHECK(T.at(0, 0) == 1);
    CHECK(t[0] == 1);
    CHECK(T.alternating_sum() == 0);
    CHECK(t[1] == nslab::rho(s));
    CHECK(t[e - 1] == nslab::type(s));
    std::vector<Int> betti_degrees;
    for (auto const& [n, c] : nslab::betti_elements(s)) {
      CHECK(T.at(1, n) == c - 1);
      betti_degrees.push_back(n);
    }
    CHECK(T.degrees(1) == betti_degrees);
    CHECK(nslab::regularity(s, T) == s.frobenius() + 1);
    auto const m = s.multiplicity();
    for (std::size_t i = 1; i < e; ++i) {
      CHECK(static_cast<Int>(t[i])
            <= nslab::max_betti_bound(static_cast<Int>(i), m));
    }
    if (nslab::is_symmetric(s)) {
      for (std::size_t i = 0; i < e; ++i) {
        CHECK(t[i] == t[e - 1 - i]);
      }
    }
    auto const T2 = nslab::graded_betti(s, 2);
    CHECK(T2.total(1) == t[1]);
    CHECK(T2.total(e - 1) == t[e - 1]);
  }
}
