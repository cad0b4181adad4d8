#include <catch_amalgamated.hpp>

#include <nslab/classify.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "samples.hpp"

using nslab::BigInt;
using nslab::Int;
using nslab::NumericalSemigroup;
using nslab::Polynomial;

namespace {

NumericalSemigroup S(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(gens);
}

Polynomial poly(std::initializer_list<int> c) {
  std::vector<BigInt> v;
  for (int x : c) {
    v.emplace_back(x);
  }
  return Polynomial(v);
}

// All complex roots by Durand-Kerner iteration.
std::vector<std::complex<long double>> roots(Polynomial const& P) {
  using C     = std::complex<long double>;
  auto const& c = P.coefficients();
  auto const  n = c.size() - 1;
  std::vector<C> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = std::pow(C(0.4L, 0.9L), static_cast<int>(i));
  }
  auto eval = [&](C x) {
    C acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = acc * x + C(static_cast<long double>(c[i]), 0);
    }
    return acc;
  };
  for (int it = 0; it < 1500; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      C den = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
          den *= z[i] - z[j];
        }
      }
      if (std::abs(den) > 0) {
        z[i] -= eval(z[i]) / den;
      }
    }
  }
  return z;
}

// A monic integer polynomial with P(0) != 0 is a product of cyclotomic
// polynomials iff all of its roots lie on the unit circle.
bool all_roots_on_unit_circle(Polynomial const& P) {
  for (auto const& r : roots(P)) {
    if (std::abs(std::abs(r) - 1.0L) > 1e-3L) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("semigroup polynomial examples", "[classify]") {
  CHECK(nslab::semigroup_polynomial(S({2, 3})) == poly({1, -1, 1}));
  CHECK(nslab::semigroup_polynomial(S({4, 5, 6}))
        == poly({1, -1, 0, 0, 1, 0, 0, -1, 1}));
  CHECK(nslab::semigroup_polynomial(S({3, 4, 5})) == poly({1, -1, 0, 1}));
  CHECK(nslab::semigroup_polynomial(S({2, 3})).to_string() == "1 - z + z^2");
  CHECK(nslab::semigroup_polynomial(NumericalSemigroup()) == poly({1}));
}

TEST_CASE("cyclotomic polynomials", "[classify]") {
  CHECK(nslab::cyclotomic(1) == poly({-1, 1}));
  CHECK(nslab::cyclotomic(6) == poly({1, -1, 1}));
  CHECK(nslab::cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  // first coefficient of absolute value 2 appears in Phi_105
  auto const& c105 = nslab::cyclotomic(105).coefficients();
  CHECK(std::any_of(c105.begin(), c105.end(),
                    [](BigInt const& x) { return x == -2; }));
  for (std::uint64_t n = 1; n <= 60; ++n) {
    Polynomial prod = poly({1});
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        prod = prod * nslab::cyclotomic(d);
      }
    }
    Polynomial want = Polynomial::monomial(n) - poly({1});
    CHECK(prod == want);
    CHECK(nslab::cyclotomic(n).degree()
          == static_cast<long>(nslab::euler_phi(n)));
  }
}

TEST_CASE("roots of unity modulo primes", "[classify]") {
  for (std::uint64_t d = 1; d <= 300; ++d) {
    auto const [p, w] = nslab::root_of_unity_mod_p(d);
    CHECK((p - 1) % d == 0);
    CHECK(nslab::pow_mod(w, d, p) == 1);
    for (std::uint64_t k = 1; k < d; ++k) {
      if (d % k == 0) {
        CHECK(nslab::pow_mod(w, k, p) != 1);
      }
    }
  }
}

TEST_CASE("polynomial division", "[classify]") {
  auto const a   = poly({1, 2, 3, 4});
  auto const b   = poly({-1, 0, 1});
  auto [q, r]    = (a * b + poly({5, 7})).divmod(b);
  CHECK(q == a);
  CHECK(r == poly({5, 7}));
  CHECK_FALSE(poly({1, 1, 1}).exact_divide(poly({1, 1})).has_value());
  CHECK_THROWS_AS(a.divmod(poly({1, 2})), nslab::InvalidInput);
}

TEST_CASE("cyclotomic test examples", "[classify]") {
  auto r6 = nslab::is_cyclotomic(poly({1, -1, 1}));
  CHECK(r6.cyclotomic);
  CHECK(r6.factors == std::vector<Int>{6});
  auto r456 = nslab::is_cyclotomic(S({4, 5, 6}));
  CHECK(r456.cyclotomic);
  CHECK(r456.factors == std::vector<Int>{10, 12});
  CHECK_FALSE(nslab::is_cyclotomic(poly({1, -1, 0, 1})).cyclotomic);
  auto sq = nslab::is_cyclotomic(nslab::cyclotomic(6) * nslab::cyclotomic(6)
                                 * nslab::cyclotomic(15));
  CHECK(sq.cyclotomic);
  CHECK(sq.factors == std::vector<Int>{6, 6, 15});
  CHECK(nslab::is_cyclotomic(NumericalSemigroup()).cyclotomic);
}

TEST_CASE("complete intersection examples", "[classify]") {
  CHECK(nslab::is_complete_intersection(S({4, 5, 6})));
  CHECK_FALSE(nslab::is_complete_intersection(S({3, 4, 5})));
  CHECK(nslab::is_complete_intersection(S({2, 3})));
  CHECK(nslab::is_complete_intersection(NumericalSemigroup()));
}

TEST_CASE("gluing examples", "[classify]") {
  auto g = nslab::gluing_decomposition(S({4, 5, 6}));
  REQUIRE(g.has_value());
  CHECK(g->d1 == 2);
  CHECK(g->d2 == 5);
  CHECK(g->children[0].semigroup == S({2, 3}));
  CHECK(g->children[1].semigroup.is_N());
  CHECK(g->recombine() == std::vector<Int>{4, 5, 6});
  CHECK(g->to_string() == "2*(2*(<1>) + 3*(<1>)) + 5*(<1>)");
  CHECK_FALSE(nslab::gluing_decomposition(S({3, 4, 5})).has_value());
  auto h = nslab::gluing_decomposition(S({2, 3}));
  REQUIRE(h.has_value());
  CHECK(h->d1 == 2);
  CHECK(h->d2 == 3);
  CHECK(h->children[0].is_leaf());
  CHECK(h->children[1].is_leaf());
}

TEST_CASE("CI structure checks", "[classify]") {
  auto r = nslab::ci_structure_checks(S({4, 5, 6}));
  CHECK(r.verdict == nslab::Verdict::pass);
  CHECK(r.data["mult_bound"] == 4);
  CHECK(nslab::ci_structure_checks(S({2, 3})).verdict == nslab::Verdict::pass);
  CHECK(nslab::symmetric_pair_exists(1, 1));
  CHECK(nslab::symmetric_pair_exists(2, 2));
  CHECK_FALSE(nslab::symmetric_pair_exists(3, 3));
  CHECK(nslab::symmetric_pair_exists(3, 4));
}

TEST_CASE("classification properties", "[classify][property]") {
  for (auto const& gens : samples::generator_sets(14, 5)) {
    auto const s = NumericalSemigroup::from_generators(gens);
    INFO(s.to_string());
    auto const P = nslab::semigroup_polynomial(s);
    CHECK(P.degree() == s.frobenius() + 1);
    CHECK(P.is_monic());
    CHECK(P.coefficient(0) == 1);
    CHECK(P.value_at_one() == 1);
    auto const cyc = nslab::is_cyclotomic(P);
    bool const ci  = nslab::is_complete_intersection(s);
    auto const glu = nslab::gluing_decomposition(s);
    CHECK(glu.has_value() == ci);
    if (glu) {
      CHECK(glu->recombine() == s.generators());
      CHECK(s.multiplicity()
            >= (Int{1} << (s.embedding_dimension() - 1)));
    }
    if (ci) {
      CHECK(cyc.cyclotomic);
    }
    if (cyc.cyclotomic) {
      CHECK(nslab::is_symmetric(s));
      Polynomial prod = poly({1});
      for (Int d : cyc.factors) {
        prod = prod * nslab::cyclotomic(static_cast<std::uint64_t>(d));
      }
      CHECK(prod == P);
    }
    if (P.degree() <= 16) {
      CHECK(all_roots_on_unit_circle(P) == cyc.cyclotomic);
    }
  }
}
