#include "mvmlab/corpus.hpp"

#include "mvmlab/mvm.hpp"

namespace mvmlab {

std::vector<FiniteAlgebra> builtin_corpus() {
  std::vector<FiniteAlgebra> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(lukasiewicz_mvm(n).base());
  out.push_back(require_mvm(remark_three_element()).base());

  std::vector<std::vector<bool>> chain(3, std::vector<bool>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) chain[i][j] = i <= j;
  }
  FiniteAlgebra lat = lattice_as_mvm("chain3_lattice", 3, chain);
  lat.add_note(" The 3-chain as a bounded distributive lattice:");
  lat.add_note(" oplus = join, odot = meet.");
  out.push_back(require_mvm(lat).base());

  const FiniteAlgebra l2 = lukasiewicz_mvm(2).base();
  const FiniteAlgebra l3 = lukasiewicz_mvm(3).base();
  const FiniteAlgebra rem = remark_three_element();
  auto prod = [&](const FiniteAlgebra& a, const FiniteAlgebra& b,
                  const std::string& name) {
    FiniteAlgebra p = product(a, b, name);
    p.add_note(" Direct product " + a.name() + " x " + b.name() +
               "; element (a, b) is a * " + std::to_string(b.size()) + " + b.");
    out.push_back(require_mvm(p).base());
  };
  prod(l2, l2, "l2_x_l2");
  prod(l2, l3, "l2_x_l3");
  prod(rem, l2, "remark_x_l2");
  return out;
}

}  // namespace mvmlab
