#ifndef MVMLAB_CONGRUENCE_HPP
#define MVMLAB_CONGRUENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvmlab/algebra.hpp"

namespace mvmlab {

using ElementPair = std::pair<Element, Element>;

/// An equivalence relation on {0..n-1} stored canonically: each element maps
/// to the smallest member of its block, so equal relations compare equal.
class Congruence {
 public:
  static Congruence identity(std::size_t n);
  static Congruence full(std::size_t n);
  /// Any labelling with equal labels meaning same block.
  static Congruence from_labels(std::span<const Element> labels);
  static Congruence from_blocks(std::size_t n,
                                const std::vector<std::vector<Element>>& blocks);

  std::size_t size() const { return rep_.size(); }
  Element representative(Element a) const { return rep_[a]; }
  bool related(Element a, Element b) const { return rep_[a] == rep_[b]; }
  std::size_t block_count() const;
  std::vector<std::vector<Element>> blocks() const;
  const std::vector<Element>& labels() const { return rep_; }

  bool is_identity() const;
  bool is_full() const;
  /// this ⊆ other as sets of pairs.
  bool refines(const Congruence& other) const;

  Congruence meet(const Congruence& other) const;
  /// Equivalence join (transitive closure of the union).
  Congruence join(const Congruence& other) const;

  /// Blocks as `{0,1}{2}`.
  std::string to_string() const;

  bool operator==(const Congruence&) const = default;
  auto operator<=>(const Congruence&) const = default;

 private:
  std::vector<Element> rep_;
};

/// Each operation maps related argument tuples to related results.
/// Throws AlgebraError on a size mismatch.
bool is_congruence(const FiniteAlgebra& algebra, const Congruence& c);

/// Least congruence containing every pair.
Congruence generated_congruence(const FiniteAlgebra& algebra,
                                std::span<const ElementPair> pairs);

/// Default 12; MVMLAB_SIZE_GUARD overrides.
std::size_t congruence_size_guard();

/// All congruences, sorted, as joins of principal congruences.
/// Throws AlgebraError when the carrier exceeds the guard.
std::vector<Congruence> all_congruences(
    const FiniteAlgebra& algebra,
    std::optional<std::size_t> guard = std::nullopt);

}  // namespace mvmlab

#endif  // MVMLAB_CONGRUENCE_HPP
