#ifndef MVMLAB_MAGMA_HPP
#define MVMLAB_MAGMA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mvmlab/algebra.hpp"

namespace mvmlab {

/// Raised when a generator set does not generate the whole magma.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary table over {0..size-1}, row-major.
struct MagmaView {
  std::size_t size = 0;
  std::span<const Element> table;

  Element operator()(Element a, Element b) const { return table[a * size + b]; }
};

/// Smallest subset containing the generators and closed under multiplying by
/// a generator on either side.
std::vector<Element> generated_submagma(MagmaView magma,
                                        std::span<const Element> generators);

/// First triple (x, y, z) with (xy)z != x(yz), if any.
std::optional<std::array<Element, 3>> associativity_counterexample(
    MagmaView magma);

/// Light's test: once the generators generate the magma, associativity
/// reduces to (xt)z = x(tz) for generators t. Throws GenerationError when
/// the generators fall short.
bool light_associativity(MagmaView magma, std::span<const Element> generators);

}  // namespace mvmlab

#endif  // MVMLAB_MAGMA_HPP
