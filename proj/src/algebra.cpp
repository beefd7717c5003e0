#include "mvmlab/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mvmlab {

namespace {

constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

}  // namespace

std::size_t table_size(std::size_t size, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (size != 0 && n > kMaxTableEntries / size) {
      throw AlgebraError("operation table too large");
    }
    n *= size;
  }
  return n;
}

std::size_t tuple_index(std::span<const Element> args, std::size_t size) {
  std::size_t idx = 0;
  for (Element a : args) idx = idx * size + a;
  return idx;
}

bool next_tuple(std::span<Element> tuple, std::size_t size) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < size) return true;
    tuple[i] = 0;
  }
  return false;
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::size_t size)
    : name_(std::move(name)), size_(size) {
  if (size == 0) throw AlgebraError("carrier must be nonempty");
}

void FiniteAlgebra::add_operation(std::string name, std::size_t arity,
                                  std::vector<Element> table) {
  if (name.empty()) throw AlgebraError("operation name must be nonempty");
  if (find_operation(name) || find_constant(name)) {
    throw AlgebraError("duplicate name '" + name + "'");
  }
  if (table.size() != table_size(size_, arity)) {
    throw AlgebraError("operation '" + name + "' table has " +
                       std::to_string(table.size()) + " entries, expected " +
                       std::to_string(table_size(size_, arity)));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= size_) {
      throw AlgebraError("operation '" + name + "' entry " +
                         std::to_string(i) + " out of range");
    }
  }
  ops_.push_back(Operation{std::move(name), arity, std::move(table)});
}

void FiniteAlgebra::add_constant(std::string name, Element value) {
  if (name.empty()) throw AlgebraError("constant name must be nonempty");
  if (find_operation(name) || find_constant(name)) {
    throw AlgebraError("duplicate name '" + name + "'");
  }
  if (value >= size_) {
    throw AlgebraError("constant '" + name + "' out of range");
  }
  consts_.push_back(Constant{std::move(name), value});
}

std::optional<std::size_t> FiniteAlgebra::find_operation(
    std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteAlgebra::find_constant(
    std::string_view name) const {
  for (std::size_t i = 0; i < consts_.size(); ++i) {
    if (consts_[i].name == name) return i;
  }
  return std::nullopt;
}

const Operation& FiniteAlgebra::operation(std::string_view name) const {
  auto idx = find_operation(name);
  if (!idx) throw AlgebraError("unbound operation '" + std::string(name) + "'");
  return ops_[*idx];
}

Element FiniteAlgebra::constant(std::string_view name) const {
  auto idx = find_constant(name);
  if (!idx) throw AlgebraError("unbound constant '" + std::string(name) + "'");
  return consts_[*idx].value;
}

Element FiniteAlgebra::apply(std::size_t op,
                             std::span<const Element> args) const {
  const Operation& o = ops_.at(op);
  if (args.size() != o.arity) {
    throw AlgebraError("arity mismatch for '" + o.name + "'");
  }
  return o.table[tuple_index(args, size_)];
}

bool FiniteAlgebra::same_structure(const FiniteAlgebra& other) const {
  return size_ == other.size_ && ops_ == other.ops_ &&
         consts_ == other.consts_;
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b,
                      std::string name) {
  if (name.empty()) name = a.name() + "_x_" + b.name();
  const std::size_t nb = b.size();
  FiniteAlgebra out(std::move(name), a.size() * nb);
  for (const Operation& op : a.operations()) {
    const Operation& other = b.operation(op.name);
    if (other.arity != op.arity) {
      throw AlgebraError("arity mismatch for '" + op.name + "' in product");
    }
    std::vector<Element> table(table_size(out.size(), op.arity));
    std::vector<Element> args(op.arity, 0), left(op.arity), right(op.arity);
    std::size_t i = 0;
    do {
      for (std::size_t k = 0; k < op.arity; ++k) {
        left[k] = static_cast<Element>(args[k] / nb);
        right[k] = static_cast<Element>(args[k] % nb);
      }
      Element l = op.table[tuple_index(left, a.size())];
      Element r = other.table[tuple_index(right, nb)];
      table[i++] = static_cast<Element>(l * nb + r);
    } while (next_tuple(args, out.size()));
    out.add_operation(op.name, op.arity, std::move(table));
  }
  for (const Constant& c : a.constants()) {
    out.add_constant(c.name,
                     static_cast<Element>(c.value * nb + b.constant(c.name)));
  }
  return out;
}

FiniteAlgebra relabel(const FiniteAlgebra& a, std::span<const Element> perm) {
  const std::size_t n = a.size();
  if (perm.size() != n) throw AlgebraError("relabel: permutation size mismatch");
  FiniteAlgebra out(a.name(), n);
  for (const std::string& note : a.notes()) out.add_note(note);
  for (const Operation& op : a.operations()) {
    std::vector<Element> table(op.table.size());
    std::vector<Element> args(op.arity, 0), image(op.arity);
    std::size_t i = 0;
    do {
      for (std::size_t k = 0; k < op.arity; ++k) image[k] = perm[args[k]];
      table[tuple_index(image, n)] = perm[op.table[i++]];
    } while (next_tuple(args, n));
    out.add_operation(op.name, op.arity, std::move(table));
  }
  for (const Constant& c : a.constants()) {
    out.add_constant(c.name, perm[c.value]);
  }
  return out;
}

FiniteAlgebra reduct(const FiniteAlgebra& a,
                     std::span<const std::string> operations,
                     std::span<const std::string> constants) {
  FiniteAlgebra out(a.name(), a.size());
  for (const std::string& name : operations) {
    const Operation& op = a.operation(name);
    out.add_operation(op.name, op.arity, op.table);
  }
  for (const std::string& name : constants) {
    out.add_constant(name, a.constant(name));
  }
  return out;
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     std::span<const Element> map) {
  if (map.size() != a.size()) return false;
  for (Element v : map) {
    if (v >= b.size()) return false;
  }
  for (const Constant& c : a.constants()) {
    if (map[c.value] != b.constant(c.name)) return false;
  }
  for (const Operation& op : a.operations()) {
    const Operation& target = b.operation(op.name);
    if (target.arity != op.arity) return false;
    std::vector<Element> args(op.arity, 0), image(op.arity);
    std::size_t i = 0;
    do {
      for (std::size_t k = 0; k < op.arity; ++k) image[k] = map[args[k]];
      if (map[op.table[i++]] != target.table[tuple_index(image, b.size())]) {
        return false;
      }
    } while (next_tuple(args, a.size()));
  }
  return true;
}

std::vector<std::vector<Element>> all_homomorphisms(const FiniteAlgebra& a,
                                                    const FiniteAlgebra& b) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> map(a.size(), 0);
  table_size(b.size(), a.size());  // guards against absurd enumeration
  do {
    if (is_homomorphism(a, b, map)) out.push_back(map);
  } while (next_tuple(map, b.size()));
  return out;
}

namespace {

/// Per-element invariant preserved by isomorphisms: constant membership and,
/// for every binary operation, idempotence plus row/column fixpoint counts.
std::vector<std::vector<std::size_t>> element_invariants(
    const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> inv(n);
  for (Element x = 0; x < n; ++x) {
    for (const Constant& c : a.constants()) inv[x].push_back(c.value == x);
    for (std::size_t o = 0; o < a.operations().size(); ++o) {
      const Operation& op = a.operations()[o];
      if (op.arity == 1) {
        inv[x].push_back(op.table[x] == x);
      } else if (op.arity == 2) {
        std::size_t left_fixed = 0, right_fixed = 0;
        for (Element y = 0; y < n; ++y) {
          left_fixed += a.apply(o, x, y) == x;
          right_fixed += a.apply(o, y, x) == x;
        }
        inv[x].push_back(a.apply(o, x, x) == x);
        inv[x].push_back(left_fixed);
        inv[x].push_back(right_fixed);
      }
    }
  }
  return inv;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.operations().size() != b.operations().size() ||
      a.constants().size() != b.constants().size()) {
    return std::nullopt;
  }
  for (const Operation& op : a.operations()) {
    auto idx = b.find_operation(op.name);
    if (!idx || b.operations()[*idx].arity != op.arity) return std::nullopt;
  }
  for (const Constant& c : a.constants()) {
    if (!b.find_constant(c.name)) return std::nullopt;
  }
  const auto inv_a = element_invariants(a);
  const auto inv_b = element_invariants(b);
  {
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  constexpr Element kUnset = std::numeric_limits<Element>::max();
  std::vector<Element> map(n, kUnset);
  std::vector<bool> used(n, false);
  for (const Constant& c : a.constants()) {
    Element target = b.constant(c.name);
    if (map[c.value] != kUnset && map[c.value] != target) return std::nullopt;
    map[c.value] = target;
  }
  for (Element x = 0; x < n; ++x) {
    if (map[x] == kUnset) continue;
    if (used[map[x]] || inv_a[x] != inv_b[map[x]]) return std::nullopt;
    used[map[x]] = true;
  }

  // Checks every table entry whose arguments and result are all mapped.
  auto consistent = [&]() {
    for (const Operation& op : a.operations()) {
      const Operation& target = b.operation(op.name);
      std::vector<Element> args(op.arity, 0), image(op.arity);
      std::size_t i = 0;
      do {
        bool mapped = true;
        for (std::size_t k = 0; k < op.arity && mapped; ++k) {
          image[k] = map[args[k]];
          mapped = image[k] != kUnset;
        }
        Element r = op.table[i++];
        if (mapped && map[r] != kUnset &&
            target.table[tuple_index(image, n)] != map[r]) {
          return false;
        }
      } while (next_tuple(args, n));
    }
    return true;
  };
  if (!consistent()) return std::nullopt;

  auto search = [&](auto& self, Element x) -> bool {
    while (x < n && map[x] != kUnset) ++x;
    if (x == n) return is_homomorphism(a, b, map);
    for (Element y = 0; y < n; ++y) {
      if (used[y] || inv_a[x] != inv_b[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent() && self(self, x + 1)) return true;
      used[y] = false;
      map[x] = kUnset;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

}  // namespace mvmlab
