#ifndef MVMLAB_ALGEBRA_IO_HPP
#define MVMLAB_ALGEBRA_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "mvmlab/algebra.hpp"
#include "mvmlab/term.hpp"

namespace mvmlab {

/// Text format:
///
///   # leading comment lines are kept as notes
///   algebra <name> size <n>
///   op <name> arity <k>
///   <n^k entries, n per line, argument tuples in row-major order>
///   const <name> <element>
///
/// `#` starts a comment anywhere; only full-line comments before the header
/// survive a round trip. serialize_algebra emits the canonical layout, so
/// serialize(parse(s)) == s for canonical text.
FiniteAlgebra parse_algebra(std::string_view text);
std::string serialize_algebra(const FiniteAlgebra& algebra);

/// Throws ParseError (with the path) when the file is missing or malformed.
FiniteAlgebra load_algebra(const std::filesystem::path& path);
void save_algebra(const FiniteAlgebra& algebra,
                  const std::filesystem::path& path);

}  // namespace mvmlab

#endif  // MVMLAB_ALGEBRA_IO_HPP
