#ifndef MVMLAB_ALGEBRA_HPP
#define MVMLAB_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mvmlab {

/// Carrier elements are dense indices 0..size-1.
using Element = std::uint32_t;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Operation {
  std::string name;
  std::size_t arity = 0;
  /// Row-major over argument tuples: the first argument is most significant.
  std::vector<Element> table;

  bool operator==(const Operation&) const = default;
};

struct Constant {
  std::string name;
  Element value = 0;

  bool operator==(const Constant&) const = default;
};

/// A finite algebra: carrier {0..size-1} with total operation tables and
/// named constants. Operations and constants keep insertion order, which is
/// also the serialization order.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(std::string name, std::size_t size);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t size() const { return size_; }

  /// Free-form comment lines carried through serialization.
  const std::vector<std::string>& notes() const { return notes_; }
  void add_note(std::string line) { notes_.push_back(std::move(line)); }

  void add_operation(std::string name, std::size_t arity,
                     std::vector<Element> table);
  void add_constant(std::string name, Element value);

  const std::vector<Operation>& operations() const { return ops_; }
  const std::vector<Constant>& constants() const { return consts_; }

  std::optional<std::size_t> find_operation(std::string_view name) const;
  std::optional<std::size_t> find_constant(std::string_view name) const;

  /// Throws AlgebraError when the name is unbound.
  const Operation& operation(std::string_view name) const;
  Element constant(std::string_view name) const;

  Element apply(std::size_t op, std::span<const Element> args) const;
  Element apply(std::size_t op, Element a, Element b) const {
    return ops_[op].table[a * size_ + b];
  }

  /// Same carrier size, operations and constants; names and notes ignored.
  bool same_structure(const FiniteAlgebra& other) const;

 private:
  std::string name_;
  std::size_t size_ = 0;
  std::vector<Operation> ops_;
  std::vector<Constant> consts_;
  std::vector<std::string> notes_;
};

/// size^arity, throwing on overflow past a sane table limit.
std::size_t table_size(std::size_t size, std::size_t arity);

/// Index of an argument tuple in a row-major table.
std::size_t tuple_index(std::span<const Element> args, std::size_t size);

/// Advances an odometer over {0..size-1}^k; the last position moves fastest.
/// Returns false after the final tuple.
bool next_tuple(std::span<Element> tuple, std::size_t size);

/// Direct product with element (a, b) encoded as a * |B| + b. Both factors
/// must carry the same operation and constant names.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b,
                      std::string name = {});

/// Image of the algebra under the bijection old -> perm[old].
FiniteAlgebra relabel(const FiniteAlgebra& a, std::span<const Element> perm);

/// Keeps only the named operations and constants (in the given order).
FiniteAlgebra reduct(const FiniteAlgebra& a,
                     std::span<const std::string> operations,
                     std::span<const std::string> constants);

/// True iff map: A -> B preserves every operation and constant of A, matched
/// by name in B.
bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     std::span<const Element> map);

/// Every homomorphism A -> B, by brute force over |B|^|A| maps.
std::vector<std::vector<Element>> all_homomorphisms(const FiniteAlgebra& a,
                                                    const FiniteAlgebra& b);

/// Returns an isomorphism A -> B when one exists. Backtracking over
/// bijections with constant positions and per-element invariants as filters.
std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b);

}  // namespace mvmlab

#endif  // MVMLAB_ALGEBRA_HPP
