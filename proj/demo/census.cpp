// Semigroups per genus with the symmetric ones and the largest rho seen,
// aggregated in parallel. Usage: census [genus_max] [jobs]

#include <nslab/nslab.hpp>

#include <cstdio>
#include <cstdlib>
#include <thread>

int main(int argc, char** argv) {
  nslab::Int const  gmax = argc > 1 ? std::atoll(argv[1]) : 14;
  std::size_t const jobs = argc > 2 ? std::strtoul(argv[2], nullptr, 10)
                                    : std::max(1U, std::thread::hardware_concurrency());
  struct Row {
    std::size_t all = 0, symmetric = 0, max_rho = 0;
  };
  using Acc = std::vector<Row>;
  auto const rows = nslab::reduce_by_genus<Acc>(
      gmax, jobs,
      [&](nslab::NumericalSemigroup const& S, Acc& acc) {
        acc.resize(static_cast<std::size_t>(gmax + 1));
        auto& r = acc[static_cast<std::size_t>(S.genus())];
        ++r.all;
        r.symmetric += nslab::is_symmetric(S);
        r.max_rho = std::max(r.max_rho, nslab::rho(S));
      },
      [](Acc& into, Acc&& from) {
        into.resize(std::max(into.size(), from.size()));
        for (std::size_t g = 0; g < from.size(); ++g) {
          into[g].all += from[g].all;
          into[g].symmetric += from[g].symmetric;
          into[g].max_rho = std::max(into[g].max_rho, from[g].max_rho);
        }
      });
  std::printf("genus  count  symmetric  max rho\n");
  for (std::size_t g = 0; g < rows.size(); ++g) {
    std::printf("%5zu %6zu %10zu %8zu\n", g, rows[g].all, rows[g].symmetric,
                rows[g].max_rho);
  }
}
