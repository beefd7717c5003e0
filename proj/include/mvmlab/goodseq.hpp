#ifndef MVMLAB_GOODSEQ_HPP
#define MVMLAB_GOODSEQ_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvmlab/mvm.hpp"

namespace mvmlab {

using MvmRef = std::shared_ptr<const MvmAlgebra>;

/// Shares a verified algebra among the good sequences built over it.
MvmRef share(MvmAlgebra algebra);

class GoodSequenceError : public std::runtime_error {
 public:
  GoodSequenceError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  /// First n such that (x_n, x_{n+1}) is not a good pair.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// An eventually-zero sequence over an MVM whose adjacent pairs are good,
/// stored without trailing zeros. The empty sequence is the zero sequence.
class GoodSequence {
 public:
  /// Strips trailing zeros and validates every adjacent pair.
  /// Throws GoodSequenceError at the first bad pair.
  static GoodSequence make(MvmRef algebra, std::vector<Element> raw);
  static GoodSequence zero(MvmRef algebra);
  /// (1, 0, 0, ...)
  static GoodSequence one(MvmRef algebra);
  /// (x, 0, 0, ...), always good.
  static GoodSequence single(MvmRef algebra, Element x);
  /// n copies of 1.
  static GoodSequence multiple_of_one(MvmRef algebra, std::size_t n);

  const MvmAlgebra& algebra() const { return *algebra_; }
  const MvmRef& algebra_ref() const { return algebra_; }
  const std::vector<Element>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  /// x_n, reading 0 past the stored entries.
  Element at(std::size_t n) const;

  std::string to_string() const;

  /// Same algebra object and same entries.
  bool operator==(const GoodSequence& other) const {
    return algebra_ == other.algebra_ && entries_ == other.entries_;
  }
  /// Lexicographic on padded entries; for deterministic ordering only.
  bool operator<(const GoodSequence& other) const;

 private:
  GoodSequence(MvmRef algebra, std::vector<Element> entries)
      : algebra_(std::move(algebra)), entries_(std::move(entries)) {}

  MvmRef algebra_;
  std::vector<Element> entries_;
};

GoodSequence gs_make(MvmRef algebra, std::vector<Element> raw);
GoodSequence gs_join(const GoodSequence& a, const GoodSequence& b);
GoodSequence gs_meet(const GoodSequence& a, const GoodSequence& b);

/// Both sum formulas: c_n = (a0 (+) bn) (.) ... (.) (an (+) b0) and
/// c_n = bn (+) (a0 (.) b(n-1)) (+) ... (+) (a(n-1) (.) b0) (+) an.
/// Throws AlgebraError if they disagree anywhere.
GoodSequence gs_sum(const GoodSequence& a, const GoodSequence& b);

/// The two formulas separately, up to index len(a) + len(b), unstripped.
std::vector<Element> gs_sum_product_form(const GoodSequence& a,
                                         const GoodSequence& b);
std::vector<Element> gs_sum_sum_form(const GoodSequence& a,
                                     const GoodSequence& b);

/// Shift left: (a1, a2, ...).
GoodSequence gs_ominus1(const GoodSequence& a);

/// Pointwise order.
bool gs_leq(const GoodSequence& a, const GoodSequence& b);

/// Componentwise image under f: A -> B. Throws AlgebraError unless f is an
/// MVM homomorphism.
GoodSequence gs_map(const MvmRef& target, std::span<const Element> f,
                    const GoodSequence& a);

/// ((a0..a(n-1)), (an)); throws AlgebraError if the pieces do not sum back
/// to a, GoodSequenceError(index 0) if a is zero.
std::pair<GoodSequence, GoodSequence> gs_decompose_split(const GoodSequence& a);

/// Directed graph x -> y iff (x, y) is a good pair.
std::vector<std::vector<Element>> good_pair_graph(const MvmAlgebra& a);

/// All good sequences of length <= max_len, lexicographically ordered by
/// padded entries.
std::vector<GoodSequence> gs_enumerate(const MvmRef& algebra,
                                       std::size_t max_len);

/// Equal algebras required; throws AlgebraError otherwise.
void require_same_algebra(const GoodSequence& a, const GoodSequence& b);

}  // namespace mvmlab

#endif  // MVMLAB_GOODSEQ_HPP
