#ifndef MVMLAB_EQUIVALENCE_HPP
#define MVMLAB_EQUIVALENCE_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvmlab/goodseq.hpp"
#include "mvmlab/mvm.hpp"
#include "mvmlab/report.hpp"

namespace mvmlab {

// Infinite structures are never materialized. A realization exposes its
// operations on canonical element values plus two finite views: a bounded
// `sample()` for instance checks and the `unit_interval()` used to build the
// finite MVMs.

template <class P>
concept PositiveUlm =
    std::equality_comparable<typename P::Element> &&
    requires(const P& p, const typename P::Element& x) {
      { p.add(x, x) } -> std::same_as<typename P::Element>;
      { p.join(x, x) } -> std::same_as<typename P::Element>;
      { p.meet(x, x) } -> std::same_as<typename P::Element>;
      { p.ominus1(x) } -> std::same_as<typename P::Element>;
      { p.zero() } -> std::same_as<typename P::Element>;
      { p.one() } -> std::same_as<typename P::Element>;
      { p.sample() } -> std::same_as<std::vector<typename P::Element>>;
      { p.unit_interval() } -> std::same_as<std::vector<typename P::Element>>;
      { p.describe(x) } -> std::same_as<std::string>;
    };

template <class U>
concept UnitalUlm =
    std::equality_comparable<typename U::Element> &&
    requires(const U& u, const typename U::Element& x) {
      { u.add(x, x) } -> std::same_as<typename U::Element>;
      { u.join(x, x) } -> std::same_as<typename U::Element>;
      { u.meet(x, x) } -> std::same_as<typename U::Element>;
      { u.zero() } -> std::same_as<typename U::Element>;
      { u.one() } -> std::same_as<typename U::Element>;
      { u.neg_one() } -> std::same_as<typename U::Element>;
      { u.sample() } -> std::same_as<std::vector<typename U::Element>>;
      { u.unit_interval() } -> std::same_as<std::vector<typename U::Element>>;
      { u.describe(x) } -> std::same_as<std::string>;
    };

template <class S>
bool leq(const S& s, const typename S::Element& x,
         const typename S::Element& y) {
  return s.join(x, y) == y;
}

/// x + n, i.e. x plus n copies of 1.
template <class S>
typename S::Element add_units(const S& s, typename S::Element x,
                              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x = s.add(x, s.one());
  return x;
}

/// n as 1 + ... + 1.
template <class S>
typename S::Element units(const S& s, std::size_t n) {
  return add_units(s, s.zero(), n);
}

/// x ⊖ n by n-fold ⊖ 1.
template <PositiveUlm P>
typename P::Element ominus(const P& p, typename P::Element x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x = p.ominus1(x);
  return x;
}

/// Naturals k read as k/m.
class ScaledNatPUlm {
 public:
  using Element = std::int64_t;

  explicit ScaledNatPUlm(std::int64_t denominator, std::int64_t bound = -1);

  std::int64_t denominator() const { return m_; }
  Element add(Element x, Element y) const { return x + y; }
  Element join(Element x, Element y) const { return std::max(x, y); }
  Element meet(Element x, Element y) const { return std::min(x, y); }
  Element ominus1(Element x) const { return std::max<Element>(x - m_, 0); }
  Element zero() const { return 0; }
  Element one() const { return m_; }
  /// 0..bound, bound defaulting to 4m.
  std::vector<Element> sample() const;
  std::vector<Element> unit_interval() const;
  std::string describe(Element x) const;

 private:
  std::int64_t m_;
  std::int64_t bound_;
};

/// Integers k read as k/m: a desk-scale fragment of the reals.
class ScaledIntUlm {
 public:
  using Element = std::int64_t;

  explicit ScaledIntUlm(std::int64_t denominator, std::int64_t bound = -1);

  std::int64_t denominator() const { return m_; }
  Element add(Element x, Element y) const { return x + y; }
  Element join(Element x, Element y) const { return std::max(x, y); }
  Element meet(Element x, Element y) const { return std::min(x, y); }
  Element zero() const { return 0; }
  Element one() const { return m_; }
  Element neg_one() const { return -m_; }
  /// -bound..bound, bound defaulting to 4m.
  std::vector<Element> sample() const;
  std::vector<Element> unit_interval() const;
  std::string describe(Element x) const;

 private:
  std::int64_t m_;
  std::int64_t bound_;
};

/// GS(A): good sequences with sum, pointwise lattice operations and shift.
class GoodSeqPUlm {
 public:
  using Element = GoodSequence;

  explicit GoodSeqPUlm(MvmRef algebra, std::size_t max_len = 4);

  const MvmRef& algebra() const { return algebra_; }
  Element add(const Element& x, const Element& y) const { return gs_sum(x, y); }
  Element join(const Element& x, const Element& y) const {
    return gs_join(x, y);
  }
  Element meet(const Element& x, const Element& y) const {
    return gs_meet(x, y);
  }
  Element ominus1(const Element& x) const { return gs_ominus1(x); }
  Element zero() const { return GoodSequence::zero(algebra_); }
  Element one() const { return GoodSequence::one(algebra_); }
  /// Every good sequence of length <= max_len.
  std::vector<Element> sample() const;
  /// (x) for each carrier element x, in carrier order.
  std::vector<Element> unit_interval() const;
  std::string describe(const Element& x) const { return x.to_string(); }

 private:
  MvmRef algebra_;
  std::size_t max_len_;
};

/// Class [x, n] of T(P), held canonically.
template <class X>
struct Translated {
  X base;
  std::size_t offset = 0;

  bool operator==(const Translated&) const = default;
};

/// T(P) = (P x N)/~ with (x, n) ~ (y, m) iff x + m = y + n. Elements are
/// kept with offset 0 or a base that is not >= 1, which makes the
/// representation unique.
template <PositiveUlm P>
class TranslationUlm {
 public:
  using Base = typename P::Element;
  using Element = Translated<Base>;

  explicit TranslationUlm(P inner, std::size_t offset_bound = 4)
      : inner_(std::move(inner)), offset_bound_(offset_bound) {}

  const P& inner() const { return inner_; }

  Element canonical(Element e) const {
    while (e.offset > 0 && leq(inner_, inner_.one(), e.base)) {
      e.base = inner_.ominus1(e.base);
      --e.offset;
    }
    return e;
  }
  Element make(Base x, std::size_t n) const {
    return canonical(Element{std::move(x), n});
  }

  Element add(const Element& a, const Element& b) const {
    return make(inner_.add(a.base, b.base), a.offset + b.offset);
  }
  Element join(const Element& a, const Element& b) const {
    return make(inner_.join(add_units(inner_, a.base, b.offset),
                            add_units(inner_, b.base, a.offset)),
                a.offset + b.offset);
  }
  Element meet(const Element& a, const Element& b) const {
    return make(inner_.meet(add_units(inner_, a.base, b.offset),
                            add_units(inner_, b.base, a.offset)),
                a.offset + b.offset);
  }
  Element zero() const { return make(inner_.zero(), 0); }
  Element one() const { return make(inner_.one(), 0); }
  Element neg_one() const { return make(inner_.zero(), 1); }

  /// Canonical classes [x, n] for sampled x and n <= offset bound.
  std::vector<Element> sample() const {
    std::vector<Element> out;
    for (const Base& x : inner_.sample()) {
      for (std::size_t n = 0; n <= offset_bound_; ++n) {
        Element e = make(x, n);
        if (std::find(out.begin(), out.end(), e) == out.end()) {
          out.push_back(std::move(e));
        }
      }
    }
    return out;
  }
  /// Positive canonical elements have offset 0, so this is [x, 0] for x in
  /// the unit interval of P.
  std::vector<Element> unit_interval() const {
    std::vector<Element> out;
    for (const Base& x : inner_.unit_interval()) out.push_back(make(x, 0));
    return out;
  }
  std::string describe(const Element& e) const {
    return "[" + inner_.describe(e.base) + ", " + std::to_string(e.offset) +
           "]";
  }

 private:
  P inner_;
  std::size_t offset_bound_;
};

template <PositiveUlm P>
TranslationUlm<P> t_build(P p, std::size_t offset_bound = 4) {
  return TranslationUlm<P>(std::move(p), offset_bound);
}

/// M+ = {x >= 0} with x ⊖ 1 = (x - 1) ∨ 0.
template <UnitalUlm U>
class PositiveCone {
 public:
  using Element = typename U::Element;

  explicit PositiveCone(U outer) : outer_(std::move(outer)) {}

  const U& outer() const { return outer_; }
  bool contains(const Element& x) const {
    return leq(outer_, outer_.zero(), x);
  }
  Element add(const Element& x, const Element& y) const {
    return outer_.add(x, y);
  }
  Element join(const Element& x, const Element& y) const {
    return outer_.join(x, y);
  }
  Element meet(const Element& x, const Element& y) const {
    return outer_.meet(x, y);
  }
  Element ominus1(const Element& x) const {
    return outer_.join(outer_.add(x, outer_.neg_one()), outer_.zero());
  }
  Element zero() const { return outer_.zero(); }
  Element one() const { return outer_.one(); }
  std::vector<Element> sample() const {
    std::vector<Element> out;
    for (const Element& x : outer_.sample()) {
      if (contains(x)) out.push_back(x);
    }
    return out;
  }
  std::vector<Element> unit_interval() const { return outer_.unit_interval(); }
  std::string describe(const Element& x) const { return outer_.describe(x); }

 private:
  U outer_;
};

template <UnitalUlm U>
PositiveCone<U> positive_cone(U u) {
  return PositiveCone<U>(std::move(u));
}

/// A materialized unit interval: the finite MVM plus the element each
/// carrier index stands for.
template <class X>
struct UnitInterval {
  MvmRef algebra;
  std::vector<X> elements;

  std::optional<Element> index_of(const X& x) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] == x) return static_cast<Element>(i);
    }
    return std::nullopt;
  }
};

namespace detail {

template <class X, class Oplus, class Odot, class Join, class Meet>
UnitInterval<X> materialize(std::string name, std::vector<X> elements,
                            const X& zero, const X& one, Oplus oplus,
                            Odot odot, Join join, Meet meet) {
  const std::size_t n = elements.size();
  if (n == 0) throw AlgebraError(name + ": empty unit interval");
  UnitInterval<X> ui{nullptr, std::move(elements)};
  auto index = [&](const X& x) {
    auto i = ui.index_of(x);
    if (!i) throw AlgebraError(name + ": unit interval not closed");
    return *i;
  };
  std::vector<Element> t_oplus(n * n), t_odot(n * n), t_join(n * n),
      t_meet(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const X& x = ui.elements[i];
      const X& y = ui.elements[j];
      t_oplus[i * n + j] = index(oplus(x, y));
      t_odot[i * n + j] = index(odot(x, y));
      t_join[i * n + j] = index(join(x, y));
      t_meet[i * n + j] = index(meet(x, y));
    }
  }
  FiniteAlgebra a(std::move(name), n);
  a.add_operation(std::string(sig::kOplus), 2, std::move(t_oplus));
  a.add_operation(std::string(sig::kOdot), 2, std::move(t_odot));
  a.add_operation(std::string(sig::kJoin), 2, std::move(t_join));
  a.add_operation(std::string(sig::kMeet), 2, std::move(t_meet));
  a.add_constant(std::string(sig::kZero), index(zero));
  a.add_constant(std::string(sig::kOne), index(one));
  ui.algebra = share(require_mvm(a));
  return ui;
}

}  // namespace detail

/// Γ(U) = [0, 1] with x ⊕ y = (x + y) ∧ 1 and x ⊙ y = (x + y - 1) ∨ 0.
/// Throws AlgebraError if the result fails the MVM axioms.
template <UnitalUlm U>
UnitInterval<typename U::Element> gamma(const U& u) {
  using X = typename U::Element;
  return detail::materialize<X>(
      "gamma", u.unit_interval(), u.zero(), u.one(),
      [&](const X& x, const X& y) { return u.meet(u.add(x, y), u.one()); },
      [&](const X& x, const X& y) {
        return u.join(u.add(u.add(x, y), u.neg_one()), u.zero());
      },
      [&](const X& x, const X& y) { return u.join(x, y); },
      [&](const X& x, const X& y) { return u.meet(x, y); });
}

/// U(P) = {x <= 1} with x ⊕ y = (x + y) ∧ 1 and x ⊙ y = (x + y) ⊖ 1.
template <PositiveUlm P>
UnitInterval<typename P::Element> u_interval(const P& p) {
  using X = typename P::Element;
  return detail::materialize<X>(
      "unit_interval", p.unit_interval(), p.zero(), p.one(),
      [&](const X& x, const X& y) { return p.meet(p.add(x, y), p.one()); },
      [&](const X& x, const X& y) { return p.ominus1(p.add(x, y)); },
      [&](const X& x, const X& y) { return p.join(x, y); },
      [&](const X& x, const X& y) { return p.meet(x, y); });
}

/// x0 + ... + xn for a good sequence over U(P).
template <PositiveUlm P>
typename P::Element eps1(const P& p,
                         const UnitInterval<typename P::Element>& ui,
                         const GoodSequence& s) {
  if (s.algebra_ref() != ui.algebra) {
    throw AlgebraError("eps1: sequence is not over U(P)");
  }
  typename P::Element acc = p.zero();
  for (Element i : s.entries()) acc = p.add(acc, ui.elements[i]);
  return acc;
}

/// The good sequence x_n = (x ⊖ n) ∧ 1 over U(P).
template <PositiveUlm P>
GoodSequence eps1_inverse(const P& p,
                          const UnitInterval<typename P::Element>& ui,
                          const typename P::Element& x,
                          std::size_t max_terms = 1 << 16) {
  std::vector<Element> entries;
  typename P::Element rest = x;
  const typename P::Element zero = p.zero();
  while (!(rest == zero)) {
    if (entries.size() == max_terms) {
      throw AlgebraError("eps1_inverse: no bound n with x <= n found");
    }
    auto idx = ui.index_of(p.meet(rest, p.one()));
    if (!idx) throw AlgebraError("eps1_inverse: component outside U(P)");
    entries.push_back(*idx);
    rest = p.ominus1(rest);
  }
  return GoodSequence::make(ui.algebra, std::move(entries));
}

/// ε⁰([x, n]) = x - n.
template <UnitalUlm U>
typename U::Element eps0(const U& u,
                         const Translated<typename U::Element>& e) {
  typename U::Element out = e.base;
  for (std::size_t i = 0; i < e.offset; ++i) out = u.add(out, u.neg_one());
  return out;
}

/// η⁰(x) = [x, 0].
template <PositiveUlm P>
Translated<typename P::Element> eta0(const TranslationUlm<P>& t,
                                     const typename P::Element& x) {
  return t.make(x, 0);
}

/// Ξ(A) = T(GS(A)).
TranslationUlm<GoodSeqPUlm> xi(MvmRef algebra, std::size_t max_len = 4,
                               std::size_t offset_bound = 4);

/// η¹: A -> U(GS(A)), x -> (x), verified as an MVM isomorphism.
struct Eta1 {
  UnitInterval<GoodSequence> target;
  std::vector<Element> map;
};

/// Throws AlgebraError if the map is not a bijective homomorphism.
Eta1 eta1(const MvmRef& algebra);

/// A -> Γ(Ξ(A)), a -> [(a), 0]; verified as an MVM isomorphism.
struct GammaXi {
  UnitInterval<Translated<GoodSequence>> target;
  std::vector<Element> map;
};
GammaXi gamma_xi_iso(const MvmRef& algebra);

/// True iff map is a bijective MVM homomorphism.
bool is_mvm_isomorphism(const MvmAlgebra& a, const MvmAlgebra& b,
                        const std::vector<Element>& map);

}  // namespace mvmlab

#endif  // MVMLAB_EQUIVALENCE_HPP
