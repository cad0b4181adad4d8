// Invariants, presentation, Betti numbers and tangent cone of a few
// semigroups.

#include <nslab/nslab.hpp>

#include <iostream>

int main() {
  using nslab::NumericalSemigroup;
  for (auto const& gens : std::vector<std::vector<nslab::Int>>{
           {3, 4, 5}, {4, 5, 6}, {4, 5, 11}, {19, 21, 22, 26, 27}}) {
    auto const S   = NumericalSemigroup::from_generators(gens);
    auto const inv = nslab::invariants(S);
    std::cout << "<" << S.to_string() << ">  Frob " << inv.frobenius
              << ", genus " << inv.genus << ", type " << inv.type
              << (nslab::is_symmetric(S) ? ", symmetric" : "") << '\n';

    auto const P = nslab::minimal_presentation(S);
    std::cout << "  rho " << P.rho() << ", Betti elements";
    for (auto const& [n, c] : nslab::betti_elements(S)) {
      std::cout << ' ' << n;
    }
    std::cout << '\n';

    auto const T = nslab::graded_betti(S);
    std::cout << "  Betti totals " << nslab::Json(T.totals()).dump()
              << ", regularity " << nslab::regularity(S, T) << '\n';

    auto const hf = nslab::hilbert_function_G(S, nslab::reduction_number(S) + 1);
    auto const b1 = nslab::b1_G(S);
    std::cout << "  HF(G) " << nslab::Json(hf.values).dump() << ", b1(G) "
              << b1.count << (nslab::is_G_cohen_macaulay(S) ? ", G is CM" : "")
              << '\n';

    auto const cyc = nslab::is_cyclotomic(S);
    std::cout << "  P = " << nslab::semigroup_polynomial(S).to_string()
              << (cyc.cyclotomic ? "  (cyclotomic)" : "") << "\n\n";
  }
}
