#ifndef MVMLAB_SEARCH_HPP
#define MVMLAB_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvmlab/algebra.hpp"
#include "mvmlab/mvm.hpp"
#include "mvmlab/report.hpp"
#include "mvmlab/term.hpp"

namespace mvmlab {

/// Models are built over {oplus, odot, join, meet, zero, one}. Constants
/// other than 0 and 1 named in `satisfy` become fresh constants of the model;
/// the variables of `violate` become Skolem constants that are not kept.
struct SearchProblem {
  std::vector<Equation> satisfy;
  std::optional<Equation> violate;
  std::size_t min_size = 1;
  std::size_t max_size = 1;
  bool symmetry_breaking = true;
  /// Decision nodes per size before giving up; 0 means no limit.
  std::uint64_t node_limit = 0;
};

enum class SearchStatus {
  Witness,
  /// Every size in range searched completely without a model.
  BoundHit,
  /// The node limit stopped the search before it was complete.
  Exhausted,
};

std::string_view status_name(SearchStatus s);

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::BoundHit;
  std::optional<FiniteAlgebra> model;
  /// Result of the exhaustive re-check of `model`.
  bool verified = false;
  std::string verification;
  SearchStats stats;
};

/// Throws AlgebraError for operations outside the signature or an empty size
/// range. Every witness is re-verified with `holds` before it is returned.
SearchOutcome find_model(const SearchProblem& problem);

/// Every model of one size the search visits. With symmetry breaking at
/// least one model per isomorphism class; without it, every model.
/// Returns false from `visit` to stop early.
SearchStats for_each_model(const std::vector<Equation>& satisfy,
                           std::size_t size, bool symmetry_breaking,
                           const std::function<bool(const FiniteAlgebra&)>& visit);

/// Exhaustive evaluation: all of `satisfy` hold and `violate` fails. On
/// failure `why` names the first discrepancy.
bool verify_model(const SearchProblem& problem, const FiniteAlgebra& model,
                  std::string* why = nullptr);

/// Default 4; MVMLAB_SIZE_GUARD overrides.
std::size_t enumeration_size_guard();

/// One MVM per isomorphism class of size n, re-verified, in a fixed order.
/// Throws AlgebraError when n exceeds the guard.
std::vector<MvmAlgebra> enumerate_mvms(
    std::size_t n, std::optional<std::size_t> guard = std::nullopt);

/// The fifteen properties shown mutually independent once one of the two
/// equivalent axioms is dropped, each as a named group of equations.
const std::vector<AxiomGroup>& independence_items();

struct IndependenceItem {
  std::string name;
  SearchStatus status = SearchStatus::BoundHit;
  /// Label of the violated equation when a witness was found.
  std::string violated;
  std::optional<FiniteAlgebra> witness;
  /// Exhaustive re-verification of the witness.
  bool reverified = false;
  SearchStats stats;
};

struct IndependenceResult {
  std::vector<IndependenceItem> items;
  std::size_t witnesses = 0;
  std::size_t bound_hits = 0;
  std::size_t exhausted = 0;
  std::size_t discrepancies = 0;

  /// One line per item: PASS with a witness, INCONCLUSIVE otherwise, FAIL
  /// on a verification discrepancy.
  Report report() const;
};

/// For each item, searches for a model of every other item that violates
/// one of its equations. Sizes go outermost: every equation is tried at
/// size n before any at n+1, and the first witness ends the item.
IndependenceResult independence_suite(std::size_t min_size,
                                      std::size_t max_size,
                                      std::uint64_t node_limit = 0);

}  // namespace mvmlab

#endif  // MVMLAB_SEARCH_HPP
