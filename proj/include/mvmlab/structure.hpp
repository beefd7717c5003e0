#ifndef MVMLAB_STRUCTURE_HPP
#define MVMLAB_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mvmlab/congruence.hpp"
#include "mvmlab/goodseq.hpp"
#include "mvmlab/mvm.hpp"
#include "mvmlab/report.hpp"

namespace mvmlab {

/// A lattice congruence with two classes, given by its upper class (a prime
/// filter of the lattice reduct).
struct TwoQuotient {
  std::vector<bool> upper;

  std::vector<Element> upper_elements() const;
  std::vector<Element> lower_elements() const;
  Congruence as_congruence() const;
  bool operator==(const TwoQuotient&) const = default;
};

/// Every 2-class lattice congruence, ordered by the sorted upper class.
/// Throws AlgebraError above the congruence size guard.
std::vector<TwoQuotient> two_quotients(const MvmAlgebra& a);

/// Pairs (a, b) with (a ⊕ x, b ⊕ x) and (a ⊙ x, b ⊙ x) in θ for all x.
/// Throws AlgebraError if the result is not an MVM congruence inside θ.
Congruence theta_star(const MvmAlgebra& a, const TwoQuotient& theta);

/// a ~ a' iff a ⊕ (n·x) >= a' and a' ⊕ (m·x) >= a for some n, m <= |A|.
Congruence sim_bot(const MvmAlgebra& a, Element x);

/// a ~ a' iff a ⊙ xⁿ <= a' and a' ⊙ xᵐ <= a for some n, m <= |A|.
Congruence sim_top(const MvmAlgebra& a, Element x);

struct SiResult {
  bool irreducible = false;
  /// Least non-identity congruence, when irreducible.
  std::optional<Congruence> monolith;
};

/// The 1-element algebra is not irreducible. Throws AlgebraError above the
/// congruence size guard.
SiResult is_subdirectly_irreducible(const MvmAlgebra& a);

/// For irreducible A: total order, x ⊕ y = 1 or x ⊙ y = 0, good sequences of
/// length <= max_len shaped (1, ..., 1, x), and some θ with θ* = Δ.
/// Otherwise a single not-applicable line.
Report si_theorem_suite(const MvmRef& a, std::size_t max_len = 4);

/// True iff the lattice order is a chain.
bool is_totally_ordered(const MvmAlgebra& a);

}  // namespace mvmlab

#endif  // MVMLAB_STRUCTURE_HPP
