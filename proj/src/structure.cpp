#include "mvmlab/structure.hpp"

#include <algorithm>
#include <map>

namespace mvmlab {

std::vector<Element> TwoQuotient::upper_elements() const {
  std::vector<Element> out;
  for (Element i = 0; i < upper.size(); ++i) {
    if (upper[i]) out.push_back(i);
  }
  return out;
}

std::vector<Element> TwoQuotient::lower_elements() const {
  std::vector<Element> out;
  for (Element i = 0; i < upper.size(); ++i) {
    if (!upper[i]) out.push_back(i);
  }
  return out;
}

Congruence TwoQuotient::as_congruence() const {
  std::vector<Element> labels(upper.size());
  for (std::size_t i = 0; i < upper.size(); ++i) labels[i] = upper[i] ? 1 : 0;
  return Congruence::from_labels(labels);
}

namespace {

bool is_prime_filter(const MvmAlgebra& a, const std::vector<bool>& f) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (f[x] && a.leq(x, y) && !f[y]) return false;
      if (f[x] && f[y] && !f[a.meet(x, y)]) return false;
      if (f[a.join(x, y)] && !f[x] && !f[y]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<TwoQuotient> two_quotients(const MvmAlgebra& a) {
  const std::size_t n = a.size();
  if (n > congruence_size_guard()) {
    throw AlgebraError("two_quotients: carrier of size " + std::to_string(n) +
                       " exceeds the size guard");
  }
  std::vector<TwoQuotient> out;
  if (n < 2) return out;
  // Nonempty proper subsets; a filter always contains the top.
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = (mask >> i) & 1;
    if (!f[a.one()] || f[a.zero()]) continue;
    if (is_prime_filter(a, f)) out.push_back(TwoQuotient{std::move(f)});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.upper_elements() < y.upper_elements();
  });
  return out;
}

Congruence theta_star(const MvmAlgebra& a, const TwoQuotient& theta) {
  const auto n = static_cast<Element>(a.size());
  const Congruence c = theta.as_congruence();
  // a θ* b iff both have the same class pattern under every translation.
  std::map<std::vector<Element>, Element> signatures;
  std::vector<Element> labels(n);
  for (Element x = 0; x < n; ++x) {
    std::vector<Element> sig;
    sig.reserve(2 * n);
    for (Element y = 0; y < n; ++y) {
      sig.push_back(c.representative(a.oplus(x, y)));
      sig.push_back(c.representative(a.odot(x, y)));
    }
    auto [it, fresh] =
        signatures.emplace(std::move(sig), static_cast<Element>(signatures.size()));
    labels[x] = it->second;
  }
  Congruence star = Congruence::from_labels(labels);
  if (!star.refines(c) || !is_congruence(a.base(), star)) {
    throw AlgebraError("theta_star: result is not a congruence inside theta");
  }
  return star;
}

namespace {

template <class Op, class Cmp>
Congruence iterate_relation(const MvmAlgebra& a, Element x, Element start,
                            Op op, Cmp reaches) {
  const auto n = static_cast<Element>(a.size());
  std::vector<Element> powers{start};
  for (std::size_t k = 1; k <= a.size(); ++k) {
    powers.push_back(op(powers.back(), x));
  }
  auto one_way = [&](Element p, Element q) {
    return std::any_of(powers.begin(), powers.end(),
                       [&](Element pw) { return reaches(op(p, pw), q); });
  };
  std::vector<Element> labels(n);
  for (Element p = 0; p < n; ++p) {
    labels[p] = p;
    for (Element q = 0; q < p; ++q) {
      if (one_way(p, q) && one_way(q, p)) {
        labels[p] = labels[q];
        break;
      }
    }
  }
  Congruence c = Congruence::from_labels(labels);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (c.related(p, q) != (one_way(p, q) && one_way(q, p))) {
        throw AlgebraError("iterated relation is not transitive");
      }
    }
  }
  return c;
}

}  // namespace

Congruence sim_bot(const MvmAlgebra& a, Element x) {
  return iterate_relation(
      a, x, a.zero(), [&](Element p, Element q) { return a.oplus(p, q); },
      [&](Element v, Element target) { return a.leq(target, v); });
}

Congruence sim_top(const MvmAlgebra& a, Element x) {
  return iterate_relation(
      a, x, a.one(), [&](Element p, Element q) { return a.odot(p, q); },
      [&](Element v, Element target) { return a.leq(v, target); });
}

SiResult is_subdirectly_irreducible(const MvmAlgebra& a) {
  SiResult out;
  std::optional<Congruence> meet;
  for (const Congruence& c : all_congruences(a.base())) {
    if (c.is_identity()) continue;
    meet = meet ? meet->meet(c) : c;
  }
  if (meet && !meet->is_identity()) {
    out.irreducible = true;
    out.monolith = meet;
  }
  return out;
}

bool is_totally_ordered(const MvmAlgebra& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
    }
  }
  return true;
}

Report si_theorem_suite(const MvmRef& ref, std::size_t max_len) {
  const MvmAlgebra& a = *ref;
  Report r;
  const SiResult si = is_subdirectly_irreducible(a);
  if (!si.irreducible) {
    r.add(Check{"subdirectly irreducible", Verdict::NotApplicable,
                "not irreducible; theorems skipped"});
    return r;
  }
  r.add("subdirectly irreducible", true, "monolith " + si.monolith->to_string());
  r.add("totally ordered", is_totally_ordered(a));

  const auto n = static_cast<Element>(a.size());
  std::string bad;
  for (Element x = 0; x < n && bad.empty(); ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.oplus(x, y) != a.one() && a.odot(x, y) != a.zero()) {
        bad = "x=" + std::to_string(x) + " y=" + std::to_string(y);
        break;
      }
    }
  }
  r.add("good-pair law", bad.empty(), bad);

  std::size_t checked = 0;
  bad.clear();
  for (const GoodSequence& s : gs_enumerate(ref, max_len)) {
    ++checked;
    for (std::size_t i = 0; i + 1 < s.length(); ++i) {
      if (s.at(i) != a.one()) {
        bad = s.to_string();
        break;
      }
    }
    if (!bad.empty()) break;
  }
  r.add("good-sequence shape", bad.empty(),
        bad.empty() ? std::to_string(checked) + " sequences" : bad);

  bool found = false;
  for (const TwoQuotient& q : two_quotients(a)) {
    if (theta_star(a, q).is_identity()) {
      found = true;
      break;
    }
  }
  r.add("theta-star identity", found, "some two-class quotient has theta* = identity");
  return r;
}

}  // namespace mvmlab
