#include "mvmlab/magma.hpp"

#include <algorithm>

namespace mvmlab {

std::vector<Element> generated_submagma(MagmaView magma,
                                        std::span<const Element> generators) {
  std::vector<bool> in(magma.size, false);
  std::vector<Element> members;
  for (Element t : generators) {
    if (t >= magma.size) throw AlgebraError("generator outside the carrier");
    if (!in[t]) {
      in[t] = true;
      members.push_back(t);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element z = members[i];
    for (Element t : generators) {
      for (Element p : {magma(t, z), magma(z, t)}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::optional<std::array<Element, 3>> associativity_counterexample(
    MagmaView magma) {
  const auto n = static_cast<Element>(magma.size);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = magma(x, y);
      for (Element z = 0; z < n; ++z) {
        if (magma(xy, z) != magma(x, magma(y, z))) {
          return std::array<Element, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

bool light_associativity(MagmaView magma, std::span<const Element> generators) {
  if (generated_submagma(magma, generators).size() != magma.size) {
    throw GenerationError("generators do not generate the magma");
  }
  const auto n = static_cast<Element>(magma.size);
  for (Element t : generators) {
    for (Element x = 0; x < n; ++x) {
      const Element xt = magma(x, t);
      for (Element z = 0; z < n; ++z) {
        if (magma(xt, z) != magma(x, magma(t, z))) return false;
      }
    }
  }
  return true;
}

}  // namespace mvmlab
