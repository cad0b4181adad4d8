// RF-matrices of each pseudo-Frobenius number and whether RF-relations
// suffice for a minimal presentation.

#include <nslab/nslab.hpp>

#include <iostream>

int main() {
  for (auto const& gens : std::vector<std::vector<nslab::Int>>{
           {2, 3}, {3, 4, 5}, {5, 6, 7, 8}, {6, 7, 15}}) {
    auto const S = nslab::NumericalSemigroup::from_generators(gens);
    std::cout << "<" << S.to_string() << ">\n";
    for (nslab::Int p : nslab::pseudo_frobenius(S).values) {
      auto const Ms = nslab::rf_matrices(S, p);
      std::cout << "  p = " << p << ": " << Ms.size() << " RF-matrices, first "
                << nslab::Json(Ms.front().rows).dump() << '\n';
    }
    auto const rep = nslab::check_rf_relations(S);
    std::cout << "  " << rep.data["rf_relations"] << " RF-relations; mode A "
              << rep.data["mode_a"] << ", mode B " << rep.data["mode_b"] << "\n";
  }
}
