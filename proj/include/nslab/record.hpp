// Full invariant snapshot of one semigroup as JSON. Sections whose
// computation hits a resource cap are replaced by {"resource_limit": msg}.

#ifndef NSLAB_RECORD_HPP_
#define NSLAB_RECORD_HPP_

#include <string>
#include <vector>

#include "classify.hpp"
#include "factorization.hpp"
#include "lab.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "semigroup.hpp"
#include "tangent_cone.hpp"

namespace nslab {

inline Json factorization_json(Factorization const& f) {
  return f.exponents;
}

inline Json betti_table_json(BettiTable const& T) {
  Json entries = Json::array();
  for (auto const& [key, b] : T.entries) {
    entries.push_back({key.first, key.second, b});
  }
  return {{"characteristic", T.characteristic},
          {"totals", T.totals()},
          {"entries", entries}};
}

inline Json polynomial_json(NumericalSemigroup const& S) {
  auto const P   = semigroup_polynomial(S);
  auto const cyc = is_cyclotomic(P);
  Json       factors = Json::array();
  for (Int d : cyc.factors) {
    factors.push_back({{"d", d}});
  }
  return {{"polynomial", P.to_string()},
          {"cyclotomic", {{"cyclotomic", cyc.cyclotomic}, {"factors", factors}}}};
}

namespace detail {

template <typename Fn>
Json guarded(Fn&& fn) {
  try {
    return fn();
  } catch (ResourceLimit const& e) {
    return {{"resource_limit", e.what()}};
  }
}

}  // namespace detail

inline Json tangent_cone_json(NumericalSemigroup const& S, Config const& cfg) {
  Json j;
  Int const r        = reduction_number(S);
  j["reduction_number"] = r;
  j["hf"]               = hilbert_function_G(S, std::max<Int>(r + 1, 1)).values;
  j["hf_nondecreasing"] = is_HF_nondecreasing(S).nondecreasing;
  bool const cm         = is_G_cohen_macaulay(S);
  j["cohen_macaulay"]   = cm;
  j["b1"] = detail::guarded([&]() -> Json {
    auto const b = b1_G(S, cfg.caps.b1g_degree);
    return {{"count", b.count},
            {"status", to_string(b.status)},
            {"degree_bound", b.degree_bound}};
  });
  if (cm) {
    j["betti"] = detail::guarded([&]() -> Json {
      return betti_table_json(graded_betti_G(S, 0, cfg.caps.faces));
    });
  }
  return j;
}

inline Json invariant_record(NumericalSemigroup const& S, Config const& cfg) {
  Json       j;
  auto const inv = invariants(S);
  j["gens"]         = S.generators();
  j["multiplicity"] = inv.multiplicity;
  j["edim"]         = inv.edim;
  j["width"]        = inv.width;
  j["frobenius"]    = inv.frobenius;
  j["genus"]        = inv.genus;
  j["eta"]          = inv.eta;
  j["type"]         = inv.type;
  j["pseudo_frobenius"] =
      S.is_N() ? std::vector<Int>{} : pseudo_frobenius(S).values;
  j["apery"]            = apery_set(S).residues();
  j["symmetric"]        = is_symmetric(S);
  j["almost_symmetric"] = is_almost_symmetric(S);
  j["nearly_gorenstein"] = is_nearly_gorenstein(S);
  j["canonical_reduction"] = has_canonical_reduction(S);
  j["max_edim"]         = is_max_edim(S);
  j["interval_completion"] = interval_completion(S).generators();

  j["presentation"] = detail::guarded([&]() -> Json {
    Json rels = Json::array();
    auto const P = minimal_presentation(S, cfg.caps.factorizations);
    for (auto const& rel : P.relations) {
      rels.push_back({factorization_json(rel.left), factorization_json(rel.right)});
    }
    Json be = Json::array();
    for (auto const& [n, c] : betti_elements(S, cfg.caps.factorizations)) {
      be.push_back({n, c});
    }
    return {{"rho", P.rho()}, {"relations", rels}, {"betti_elements", be}};
  });

  Json betti = Json::object();
  for (int c : cfg.characteristics) {
    betti[std::to_string(c)] = detail::guarded([&]() -> Json {
      auto const T = graded_betti(S, c, cfg.caps.faces);
      Json       t = betti_table_json(T);
      t["regularity"] = regularity(S, T);
      return t;
    });
  }
  j["betti"]        = betti;
  j["tangent_cone"] = tangent_cone_json(S, cfg);
  auto const series = polynomial_json(S);
  j["polynomial"]   = series["polynomial"];
  j["cyclotomic"]   = series["cyclotomic"];
  j["complete_intersection"] = detail::guarded([&]() -> Json {
    return is_complete_intersection(S);
  });
  j["gluing"] = detail::guarded([&]() -> Json {
    auto g = gluing_decomposition(S);
    return g ? Json(g->to_string()) : Json(nullptr);
  });
  return j;
}

// Top-level keys whose values differ, in key order.
inline std::vector<std::string> record_diff(Json const& a, Json const& b) {
  std::vector<std::string> out;
  for (auto it = a.begin(); it != a.end(); ++it) {
    if (!b.contains(it.key()) || b.at(it.key()) != it.value()) {
      out.push_back(it.key());
    }
  }
  for (auto it = b.begin(); it != b.end(); ++it) {
    if (!a.contains(it.key())) {
      out.push_back(it.key());
    }
  }
  return out;
}

}  // namespace nslab

#endif  // NSLAB_RECORD_HPP_
