#ifndef MVMLAB_TESTS_SUPPORT_HPP
#define MVMLAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <filesystem>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "mvmlab/algebra.hpp"
#include "mvmlab/algebra_io.hpp"
#include "mvmlab/congruence.hpp"
#include "mvmlab/mvm.hpp"
#include "mvmlab/term.hpp"

namespace testing_support {

inline std::filesystem::path corpus_dir() { return MVMLAB_CORPUS_DIR; }

inline mvmlab::FiniteAlgebra corpus(const std::string& name) {
  return mvmlab::load_algebra(corpus_dir() / (name + ".alg"));
}

/// Every corpus file, sorted by name.
inline std::vector<mvmlab::FiniteAlgebra> corpus_all(std::size_t max_size = 99) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir())) {
    if (entry.path().extension() == ".alg") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<mvmlab::FiniteAlgebra> out;
  for (const auto& p : paths) {
    auto a = mvmlab::load_algebra(p);
    if (a.size() <= max_size) out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<mvmlab::MvmAlgebra> corpus_mvms(std::size_t max_size = 99) {
  std::vector<mvmlab::MvmAlgebra> out;
  for (const auto& a : corpus_all(max_size)) {
    auto c = mvmlab::check_mvm(a);
    if (c.passed()) out.push_back(*c.algebra);
  }
  return out;
}

/// Plain table lookup, independent of the library's apply().
inline mvmlab::Element op(const mvmlab::FiniteAlgebra& a, const char* name,
                          mvmlab::Element x, mvmlab::Element y) {
  return a.operation(name).table[x * a.size() + y];
}

// All set partitions of {0..n-1} as restricted growth strings.
inline void partitions(std::size_t n, const std::function<void(const std::vector<mvmlab::Element>&)>& f) {
  std::vector<mvmlab::Element> rgs(n, 0);
  std::function<void(std::size_t, mvmlab::Element)> rec = [&](std::size_t i, mvmlab::Element mx) {
    if (i == n) {
      f(rgs);
      return;
    }
    for (mvmlab::Element b = 0; b <= mx + 1 && b <= i; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(mx, b));
    }
  };
  if (n == 0) return;
  rgs[0] = 0;
  rec(1, 0);
}

// Compatibility checked straight from the tables.
inline bool naive_congruence(const mvmlab::FiniteAlgebra& a, const std::vector<mvmlab::Element>& label) {
  const std::size_t n = a.size();
  for (const auto& o : a.operations()) {
    if (o.arity != 2) continue;
    for (mvmlab::Element x = 0; x < n; ++x)
      for (mvmlab::Element x2 = 0; x2 < n; ++x2) {
        if (label[x] != label[x2]) continue;
        for (mvmlab::Element y = 0; y < n; ++y)
          for (mvmlab::Element y2 = 0; y2 < n; ++y2) {
            if (label[y] != label[y2]) continue;
            if (label[o.table[x * n + y]] != label[o.table[x2 * n + y2]]) return false;
          }
      }
  }
  return true;
}

inline std::vector<mvmlab::Congruence> brute_congruences(const mvmlab::FiniteAlgebra& a) {
  std::vector<mvmlab::Congruence> out;
  partitions(a.size(), [&](const std::vector<mvmlab::Element>& rgs) {
    if (naive_congruence(a, rgs)) out.push_back(mvmlab::Congruence::from_labels(rgs));
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<mvmlab::Equation> mvm_equations() {
  std::vector<mvmlab::Equation> out;
  for (const auto& g : mvmlab::mvm_axioms())
    out.insert(out.end(), g.equations.begin(), g.equations.end());
  return out;
}

using mvmlab::Element;
using mvmlab::FiniteAlgebra;

// Isomorphism by trying every permutation, from the raw tables.
inline bool naive_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& o : a.operations()) {
      const auto& t = b.operation(o.name).table;
      for (Element x = 0; x < n && ok; ++x)
        for (Element y = 0; y < n && ok; ++y)
          ok = p[o.table[x * n + y]] == t[p[x] * n + p[y]];
    }
    for (const auto& c : a.constants()) ok = ok && p[c.value] == b.constant(c.name);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Every 2-element structure over the MVM signature that satisfies A1..A7,
// up to isomorphism.
inline std::vector<FiniteAlgebra> naive_mvms_of_size_two() {
  const auto eqs = mvm_equations();
  std::vector<FiniteAlgebra> classes;
  for (unsigned bits = 0; bits < (1u << 18); ++bits) {
    auto table = [&](int k) {
      std::vector<Element> t(4);
      for (int i = 0; i < 4; ++i) t[i] = (bits >> (4 * k + i)) & 1;
      return t;
    };
    FiniteAlgebra a("naive", 2);
    a.add_operation("oplus", 2, table(0));
    a.add_operation("odot", 2, table(1));
    a.add_operation("join", 2, table(2));
    a.add_operation("meet", 2, table(3));
    a.add_constant("zero", (bits >> 16) & 1);
    a.add_constant("one", (bits >> 17) & 1);
    bool ok = true;
    for (const auto& e : eqs) {
      std::vector<Element> env(e.var_count, 0);
      do {
        ok = mvmlab::eval_term(a, e.lhs, env) == mvmlab::eval_term(a, e.rhs, env);
      } while (ok && mvmlab::next_tuple(env, 2));
      if (!ok) break;
    }
    if (!ok) continue;
    bool seen = false;
    for (const auto& c : classes) seen = seen || naive_isomorphic(a, c);
    if (!seen) classes.push_back(a);
  }
  return classes;
}

}  // namespace testing_support

#endif
