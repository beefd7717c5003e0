#ifndef MVMLAB_TERM_HPP
#define MVMLAB_TERM_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvmlab/algebra.hpp"

namespace mvmlab {

/// Standard names for the MVM signature and its MV extension.
namespace sig {
inline constexpr std::string_view kOplus = "oplus";
inline constexpr std::string_view kOdot = "odot";
inline constexpr std::string_view kJoin = "join";
inline constexpr std::string_view kMeet = "meet";
inline constexpr std::string_view kNeg = "neg";
inline constexpr std::string_view kZero = "zero";
inline constexpr std::string_view kOne = "one";
}  // namespace sig

class Term {
 public:
  enum class Kind { Variable, Constant, Operation };

  static Term variable(std::size_t index);
  static Term constant(std::string name);
  static Term apply(std::string op, std::vector<Term> args);

  Kind kind() const { return kind_; }
  std::size_t index() const { return index_; }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  /// One past the largest variable index, 0 for ground terms.
  std::size_t variable_count() const;

  /// Renders in the equation syntax; variables use `names` when provided.
  std::string to_string(std::span<const std::string> names = {}) const;

  bool operator==(const Term&) const = default;

 private:
  Kind kind_ = Kind::Variable;
  std::size_t index_ = 0;
  std::string name_;
  std::vector<Term> args_;
};

struct Equation {
  Term lhs;
  Term rhs;
  std::size_t var_count = 0;
  std::vector<std::string> var_names;
  std::string label;

  Equation() = default;
  Equation(Term l, Term r, std::vector<std::string> names = {},
           std::string label = {});

  std::string to_string() const;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `lhs = rhs` in the equation syntax:
///   binary infix `(+)` `(.)` `\/` `/\`, prefix `~`, constants `0` `1`,
///   applications `name(t, ...)`, and lowercase identifiers.
/// Identifiers listed in `constants` denote named constants; all others are
/// variables, numbered in alphabetical order of their names. Chains of one
/// operator associate to the left; mixing operators needs parentheses.
Equation parse_equation(std::string_view text,
                        const std::set<std::string>& constants = {},
                        std::string label = {});

/// Bottom-up evaluation. Throws AlgebraError on unbound names, arity
/// mismatch, or a short environment.
Element eval_term(const FiniteAlgebra& algebra, const Term& term,
                  std::span<const Element> env);

/// A term flattened to postfix against a fixed algebra, for tight loops.
class CompiledTerm {
 public:
  CompiledTerm(const FiniteAlgebra& algebra, const Term& term);
  Element eval(std::span<const Element> env) const;

 private:
  enum class Code { Var, Value, Unary, Binary, General };
  struct Instr {
    Code code;
    std::size_t arg;  // variable index, constant value, or operation index
    std::size_t arity;
  };
  const FiniteAlgebra* algebra_;
  std::vector<Instr> program_;
  std::size_t depth_ = 0;
};

struct HoldsResult {
  bool holds = true;
  /// Lexicographically first failing assignment when `holds` is false.
  std::vector<Element> witness;

  explicit operator bool() const { return holds; }
};

/// Exhaustive check of lhs = rhs over all size^var_count assignments.
HoldsResult holds(const FiniteAlgebra& algebra, const Equation& equation);

}  // namespace mvmlab

#endif  // MVMLAB_TERM_HPP
