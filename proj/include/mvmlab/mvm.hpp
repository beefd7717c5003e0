#ifndef MVMLAB_MVM_HPP
#define MVMLAB_MVM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvmlab/algebra.hpp"
#include "mvmlab/report.hpp"
#include "mvmlab/term.hpp"

namespace mvmlab {

/// A named axiom made of one or more equations, e.g. A1 is the list of
/// distributive-lattice identities.
struct AxiomGroup {
  std::string name;
  std::vector<Equation> equations;
};

/// A1..A7 over {oplus, odot, join, meet, zero, one}.
const std::vector<AxiomGroup>& mvm_axioms();

/// Commutative monoid, absorbing top, involution and the MV law over
/// {oplus, neg, zero}.
const std::vector<AxiomGroup>& mv_axioms();

struct MvmCheck;

/// Algebra over {oplus, odot, join, meet, zero, one}. Only check_mvm and the
/// builders that call it produce verified instances.
class MvmAlgebra {
 public:
  /// Binds the signature without checking axioms. Throws AlgebraError on a
  /// missing name or wrong arity.
  static MvmAlgebra unverified(FiniteAlgebra base);

  const FiniteAlgebra& base() const { return base_; }
  bool verified() const { return verified_; }
  std::size_t size() const { return base_.size(); }

  Element oplus(Element a, Element b) const { return oplus_[a * size() + b]; }
  Element odot(Element a, Element b) const { return odot_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  bool leq(Element a, Element b) const { return join(a, b) == b; }

 private:
  friend MvmCheck check_mvm(const FiniteAlgebra& algebra);

  MvmAlgebra() = default;

  FiniteAlgebra base_;
  bool verified_ = false;
  std::vector<Element> oplus_, odot_, join_, meet_;
  Element zero_ = 0;
  Element one_ = 0;
};

struct AxiomFailure {
  std::string axiom;
  std::string equation;
  std::vector<std::string> var_names;
  std::vector<Element> witness;

  std::string describe() const;
};

struct MvmCheck {
  std::optional<MvmAlgebra> algebra;
  std::optional<AxiomFailure> failure;

  bool passed() const { return algebra.has_value(); }
};

/// Exhaustive A1..A7 check. Throws AlgebraError on a missing operation or
/// constant.
MvmCheck check_mvm(const FiniteAlgebra& algebra);

/// check_mvm that throws AlgebraError describing the first failure.
MvmAlgebra require_mvm(const FiniteAlgebra& algebra);

/// Common value of the four truncated triple sums; throws AlgebraError if
/// they disagree or are not invariant under permuting the arguments.
Element sigma(const MvmAlgebra& a, Element x, Element y, Element z);

/// The derived identities of a verified MVM, each checked exhaustively.
Report lemma_suite(const MvmAlgebra& a);

/// x0 (+) x1 = x0 and x0 (.) x1 = x1.
bool is_good_pair(const MvmAlgebra& a, Element x0, Element x1);

/// Every x has y with x (+) y = 1 and x (.) y = 0.
bool has_mv_negation(const MvmAlgebra& a);

struct MvCheck;

/// Algebra over {oplus, neg, zero} known to satisfy the MV axioms.
class MvAlgebra {
 public:
  const FiniteAlgebra& base() const { return base_; }
  std::size_t size() const { return base_.size(); }

 private:
  friend struct MvCheck;
  friend MvCheck check_mv(const FiniteAlgebra& algebra);
  explicit MvAlgebra(FiniteAlgebra base) : base_(std::move(base)) {}
  FiniteAlgebra base_;
};

struct MvCheck {
  std::optional<MvAlgebra> algebra;
  std::optional<AxiomFailure> failure;

  bool passed() const { return algebra.has_value(); }
};

/// Exhaustive MV-axiom check; extra operations are dropped from the result.
MvCheck check_mv(const FiniteAlgebra& algebra);

/// Materializes 1 = ~0, x (.) y = ~(~x (+) ~y), x \/ y = (x (.) ~y) (+) y,
/// x /\ y = x (.) (~x (+) y) as tables, then runs check_mvm. Throws
/// AlgebraError if that check fails.
MvmAlgebra mv_to_mvm(const MvAlgebra& mv);

/// The n-element chain {0, 1/(n-1), ..., 1}: truncated addition and
/// ~k = (n-1) - k. Throws AlgebraError for n = 0.
MvAlgebra lukasiewicz_chain(std::size_t n);

/// mv_to_mvm(lukasiewicz_chain(n)) named `lukasiewicz_<n>`.
MvmAlgebra lukasiewicz_mvm(std::size_t n);

/// Carrier {0, a, 1} as the chain 0 < 1 < 2 with a (+) a = a, a (.) a = 0;
/// the other entries are forced by units, absorption and the chain order.
FiniteAlgebra remark_three_element();

/// Bounded distributive lattice read as an MVM (oplus = join, odot = meet).
/// The order is given by `leq` on {0..n-1}; 0 must be bottom, n-1 top.
FiniteAlgebra lattice_as_mvm(std::string name, std::size_t n,
                             const std::vector<std::vector<bool>>& leq);

/// Sequence {oplus, odot, join, meet} and {zero, one}, in that order.
const std::vector<std::string>& mvm_operation_names();
const std::vector<std::string>& mvm_constant_names();

}  // namespace mvmlab

#endif  // MVMLAB_MVM_HPP
