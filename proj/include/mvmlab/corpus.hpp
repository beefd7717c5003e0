#ifndef MVMLAB_CORPUS_HPP
#define MVMLAB_CORPUS_HPP

#include <vector>

#include "mvmlab/algebra.hpp"

namespace mvmlab {

/// The shipped example MVMs: Łukasiewicz chains of sizes 1..8, the
/// three-element algebra with a ⊕ a = a, a 3-chain lattice, and small
/// products. Each is verified before it is returned. File name is
/// `<name>.alg`.
std::vector<FiniteAlgebra> builtin_corpus();

}  // namespace mvmlab

#endif  // MVMLAB_CORPUS_HPP
