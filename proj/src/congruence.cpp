#include "mvmlab/congruence.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

namespace mvmlab {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Element{0});
  }
  Element find(Element a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<Element> parent;
};

std::vector<Element> canonical(std::span<const Element> labels) {
  std::vector<Element> rep(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rep[i] = static_cast<Element>(i);
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[j] == labels[i]) {
        rep[i] = static_cast<Element>(j);
        break;
      }
    }
  }
  return rep;
}

Congruence from_union_find(UnionFind& uf) {
  std::vector<Element> labels(uf.parent.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    labels[i] = uf.find(static_cast<Element>(i));
  }
  return Congruence::from_labels(labels);
}

}  // namespace

Congruence Congruence::identity(std::size_t n) {
  Congruence c;
  c.rep_.resize(n);
  std::iota(c.rep_.begin(), c.rep_.end(), Element{0});
  return c;
}

Congruence Congruence::full(std::size_t n) {
  Congruence c;
  c.rep_.assign(n, 0);
  return c;
}

Congruence Congruence::from_labels(std::span<const Element> labels) {
  Congruence c;
  c.rep_ = canonical(labels);
  return c;
}

Congruence Congruence::from_blocks(
    std::size_t n, const std::vector<std::vector<Element>>& blocks) {
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> labels(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Element e : blocks[b]) {
      if (e >= n || labels[e] != kUnset) {
        throw AlgebraError("blocks do not form a partition");
      }
      labels[e] = static_cast<Element>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), kUnset) != labels.end()) {
    throw AlgebraError("blocks do not cover the carrier");
  }
  return from_labels(labels);
}

std::size_t Congruence::block_count() const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < rep_.size(); ++i) k += rep_[i] == i;
  return k;
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> slot(rep_.size());
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    if (rep_[i] == i) {
      slot[i] = out.size();
      out.emplace_back();
    }
    out[slot[rep_[i]]].push_back(static_cast<Element>(i));
  }
  return out;
}

bool Congruence::is_identity() const { return block_count() == rep_.size(); }

bool Congruence::is_full() const { return block_count() <= 1; }

bool Congruence::refines(const Congruence& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    if (!other.related(static_cast<Element>(i), rep_[i])) return false;
  }
  return true;
}

Congruence Congruence::meet(const Congruence& other) const {
  if (other.size() != size()) throw AlgebraError("congruence size mismatch");
  std::vector<Element> labels(size());
  for (std::size_t i = 0; i < size(); ++i) {
    labels[i] = static_cast<Element>(rep_[i] * size() + other.rep_[i]);
  }
  return from_labels(labels);
}

Congruence Congruence::join(const Congruence& other) const {
  if (other.size() != size()) throw AlgebraError("congruence size mismatch");
  UnionFind uf(size());
  for (std::size_t i = 0; i < size(); ++i) {
    uf.unite(static_cast<Element>(i), rep_[i]);
    uf.unite(static_cast<Element>(i), other.rep_[i]);
  }
  return from_union_find(uf);
}

std::string Congruence::to_string() const {
  std::string out;
  for (const auto& block : blocks()) {
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out;
}

bool is_congruence(const FiniteAlgebra& algebra, const Congruence& c) {
  const std::size_t n = algebra.size();
  if (c.size() != n) throw AlgebraError("congruence/algebra size mismatch");
  // Compatibility one argument position at a time suffices, by transitivity.
  for (const Operation& op : algebra.operations()) {
    std::vector<Element> args(op.arity, 0), moved(op.arity);
    do {
      const Element base = op.table[tuple_index(args, n)];
      for (std::size_t pos = 0; pos < op.arity; ++pos) {
        moved = args;
        for (Element b = 0; b < n; ++b) {
          if (b == args[pos] || !c.related(b, args[pos])) continue;
          moved[pos] = b;
          if (!c.related(base, op.table[tuple_index(moved, n)])) return false;
        }
      }
    } while (next_tuple(args, n));
  }
  return true;
}

Congruence generated_congruence(const FiniteAlgebra& algebra,
                                std::span<const ElementPair> pairs) {
  const std::size_t n = algebra.size();
  UnionFind uf(n);
  std::deque<ElementPair> pending;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw AlgebraError("pair outside the carrier");
    if (uf.unite(a, b)) pending.emplace_back(a, b);
  }
  // Every merged pair is pushed through all unary polynomial translations
  // f(.., x, ..) with the remaining arguments fixed.
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    for (const Operation& op : algebra.operations()) {
      if (op.arity == 0) continue;
      std::vector<Element> rest(op.arity - 1, 0), args(op.arity);
      do {
        for (std::size_t pos = 0; pos < op.arity; ++pos) {
          for (std::size_t k = 0, r = 0; k < op.arity; ++k) {
            args[k] = k == pos ? a : rest[r++];
          }
          Element fa = op.table[tuple_index(args, n)];
          args[pos] = b;
          Element fb = op.table[tuple_index(args, n)];
          if (uf.unite(fa, fb)) pending.emplace_back(fa, fb);
        }
      } while (!rest.empty() && next_tuple(rest, n));
    }
  }
  return from_union_find(uf);
}

std::size_t congruence_size_guard() {
  if (const char* env = std::getenv("MVMLAB_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 12;
}

std::vector<Congruence> all_congruences(const FiniteAlgebra& algebra,
                                        std::optional<std::size_t> guard) {
  const std::size_t n = algebra.size();
  const std::size_t limit = guard.value_or(congruence_size_guard());
  if (n > limit) {
    throw AlgebraError("all_congruences: size " + std::to_string(n) +
                       " exceeds guard " + std::to_string(limit));
  }
  std::set<Congruence> principal;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      ElementPair p{a, b};
      principal.insert(generated_congruence(algebra, std::span(&p, 1)));
    }
  }
  // Close {Δ} ∪ principals under joins with principals; every compact
  // congruence of a finite algebra is such a finite join.
  std::set<Congruence> all(principal);
  all.insert(Congruence::identity(n));
  std::vector<Congruence> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const Congruence& c : frontier) {
      for (const Congruence& p : principal) {
        Congruence j = c.join(p);
        if (all.insert(j).second) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

}  // namespace mvmlab
