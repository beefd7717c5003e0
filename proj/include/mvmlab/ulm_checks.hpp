#ifndef MVMLAB_ULM_CHECKS_HPP
#define MVMLAB_ULM_CHECKS_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "mvmlab/equivalence.hpp"
#include "mvmlab/report.hpp"

namespace mvmlab {

/// Counts instances of one identity and keeps the first counterexample.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::function<std::string()>& witness) {
    ++instances_;
    if (ok) return;
    if (failures_++ == 0) first_ = witness();
  }
  /// Records an exception thrown while building an instance.
  void error(const std::string& what) {
    ++instances_;
    if (failures_++ == 0) first_ = "error: " + what;
  }
  void into(Report& r) const {
    if (failures_ == 0) {
      r.add(name_, true, std::to_string(instances_) + " instances");
    } else {
      r.add(name_, false,
            std::to_string(failures_) + "/" + std::to_string(instances_) +
                " failed; first: " + first_);
    }
  }

 private:
  std::string name_;
  std::size_t instances_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

namespace detail {

template <class S>
using Elem = typename S::Element;

template <class S>
std::string show(const S& s, std::initializer_list<Elem<S>> xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += s.describe(x);
  }
  return out;
}

/// Distributive lattice, commutative monoid, + over ∨ and ∧.
template <class S>
void lattice_monoid(const S& s, const std::vector<Elem<S>>& xs,
                    const std::string& name, Report& r) {
  Tally lattice(name + " lattice"), distributive(name + " distributive"),
      monoid(name + " monoid"), plus_dist(name + " plus-distributes");
  const auto zero = s.zero();
  for (const auto& x : xs) {
    monoid.check(s.add(x, zero) == x, [&] { return show(s, {x}); });
    lattice.check(s.join(x, x) == x && s.meet(x, x) == x,
                  [&] { return show(s, {x}); });
    for (const auto& y : xs) {
      lattice.check(s.join(x, y) == s.join(y, x) &&
                        s.meet(x, y) == s.meet(y, x) &&
                        s.join(x, s.meet(x, y)) == x &&
                        s.meet(x, s.join(x, y)) == x,
                    [&] { return show(s, {x, y}); });
      monoid.check(s.add(x, y) == s.add(y, x), [&] { return show(s, {x, y}); });
      for (const auto& z : xs) {
        lattice.check(s.join(s.join(x, y), z) == s.join(x, s.join(y, z)) &&
                          s.meet(s.meet(x, y), z) == s.meet(x, s.meet(y, z)),
                      [&] { return show(s, {x, y, z}); });
        distributive.check(
            s.meet(x, s.join(y, z)) == s.join(s.meet(x, y), s.meet(x, z)),
            [&] { return show(s, {x, y, z}); });
        monoid.check(s.add(s.add(x, y), z) == s.add(x, s.add(y, z)),
                     [&] { return show(s, {x, y, z}); });
        plus_dist.check(
            s.add(x, s.join(y, z)) == s.join(s.add(x, y), s.add(x, z)) &&
                s.add(x, s.meet(y, z)) == s.meet(s.add(x, y), s.add(x, z)),
            [&] { return show(s, {x, y, z}); });
      }
    }
  }
  lattice.into(r);
  distributive.into(r);
  monoid.into(r);
  plus_dist.into(r);
}

}  // namespace detail

/// P0..P4 on the sample; P4 searches n up to max_units.
template <PositiveUlm P>
Report check_pulm_axioms(const P& p, std::size_t max_units = 256) {
  Report r;
  const auto xs = p.sample();
  detail::lattice_monoid(p, xs, "P0", r);
  Tally p1("P1"), p2("P2"), p3("P3"), p4("P4");
  const auto one = p.one();
  for (const auto& x : xs) {
    p1.check(leq(p, p.zero(), x), [&] { return p.describe(x); });
    p2.check(p.ominus1(p.add(x, one)) == x, [&] { return p.describe(x); });
    p3.check(p.add(p.ominus1(x), one) == p.join(x, one),
             [&] { return p.describe(x); });
    bool bounded = false;
    auto n = p.zero();
    for (std::size_t k = 0; k <= max_units && !bounded; ++k) {
      bounded = leq(p, x, n);
      n = p.add(n, one);
    }
    p4.check(bounded, [&] { return p.describe(x); });
  }
  p1.into(r);
  p2.into(r);
  p3.into(r);
  p4.into(r);
  return r;
}

namespace detail {

template <UnitalUlm U>
bool bounded_by_units(const U& u, const Elem<U>& x, std::size_t max_units,
                      bool dot_form) {
  // Lower bound -n, or the n-fold product 0 · ... · 0 = -(n-1) for n >= 1.
  auto up = u.zero();
  auto low = u.zero();
  for (std::size_t n = 0; n <= max_units; ++n) {
    if (!(dot_form && n == 0) && leq(u, low, x) && leq(u, x, up)) return true;
    up = u.add(up, u.one());
    if (!dot_form || n >= 1) low = u.add(low, u.neg_one());
  }
  return false;
}

}  // namespace detail

/// U0..U3 on the sample.
template <UnitalUlm U>
Report check_ulm_axioms(const U& u, std::size_t max_units = 256) {
  Report r;
  const auto xs = u.sample();
  detail::lattice_monoid(u, xs, "U0", r);
  r.add("U1", u.add(u.neg_one(), u.one()) == u.zero(),
        u.describe(u.add(u.neg_one(), u.one())));
  r.add("U2", leq(u, u.zero(), u.one()));
  Tally u3("U3");
  for (const auto& x : xs) {
    u3.check(detail::bounded_by_units(u, x, max_units, false),
             [&] { return u.describe(x); });
  }
  u3.into(r);
  return r;
}

/// E1..E7 with x · y = x - 1 + y, on the sample.
template <UnitalUlm U>
Report check_term_equivalent_axioms(const U& u, std::size_t max_units = 256) {
  using X = typename U::Element;
  auto dot = [&](const X& x, const X& y) {
    return u.add(u.add(x, u.neg_one()), y);
  };
  Report r;
  const auto xs = u.sample();
  Tally e1("E1"), e2("E2"), e3("E3"), e4("E4"), e5("E5"), e7("E7");
  const X one = u.one();
  for (const auto& x : xs) {
    e2.check(u.add(x, u.zero()) == x && dot(x, one) == x,
             [&] { return u.describe(x); });
    e7.check(detail::bounded_by_units(u, x, max_units, true),
             [&] { return u.describe(x); });
    for (const auto& y : xs) {
      e1.check(u.join(x, y) == u.join(y, x) && u.meet(x, y) == u.meet(y, x) &&
                   u.join(x, u.meet(x, y)) == x && u.meet(x, u.join(x, y)) == x,
               [&] { return detail::show(u, {x, y}); });
      e2.check(u.add(x, y) == u.add(y, x) && dot(x, y) == dot(y, x),
               [&] { return detail::show(u, {x, y}); });
      for (const auto& z : xs) {
        auto w = [&] { return detail::show(u, {x, y, z}); };
        e1.check(u.meet(x, u.join(y, z)) ==
                         u.join(u.meet(x, y), u.meet(x, z)) &&
                     u.join(u.join(x, y), z) == u.join(x, u.join(y, z)) &&
                     u.meet(u.meet(x, y), z) == u.meet(x, u.meet(y, z)),
                 w);
        e2.check(u.add(u.add(x, y), z) == u.add(x, u.add(y, z)) &&
                     dot(dot(x, y), z) == dot(x, dot(y, z)),
                 w);
        e3.check(u.add(x, u.join(y, z)) == u.join(u.add(x, y), u.add(x, z)) &&
                     u.add(x, u.meet(y, z)) ==
                         u.meet(u.add(x, y), u.add(x, z)) &&
                     dot(x, u.join(y, z)) == u.join(dot(x, y), dot(x, z)) &&
                     dot(x, u.meet(y, z)) == u.meet(dot(x, y), dot(x, z)),
                 w);
        e4.check(u.add(dot(x, y), z) == dot(x, u.add(y, z)), w);
        e5.check(dot(u.add(x, y), z) == u.add(x, dot(y, z)), w);
      }
    }
  }
  e1.into(r);
  e2.into(r);
  e3.into(r);
  e4.into(r);
  e5.into(r);
  r.add("E6", leq(u, u.zero(), u.one()));
  e7.into(r);
  return r;
}

/// The P-ULM lemma list, instance-checked for sampled x, y, for n, k up to
/// max_n, and for good sequences over U(P) of length <= seq_len.
template <PositiveUlm P>
Report pulm_lemma_suite(const P& p, std::size_t max_n = 4,
                        std::size_t seq_len = 4) {
  using X = typename P::Element;
  Report r;
  const auto xs = p.sample();
  const auto ui = u_interval(p);
  const MvmAlgebra& ua = *ui.algebra;
  std::vector<X> nat;
  for (std::size_t n = 0; n <= 2 * max_n; ++n) nat.push_back(units(p, n));
  auto d = [&](std::initializer_list<X> v) { return detail::show(p, v); };
  auto trunc1 = [&](const X& x) { return p.meet(x, p.one()); };
  auto idx = [&](const X& x) {
    auto i = ui.index_of(x);
    if (!i) throw AlgebraError(p.describe(x) + " is not in U(P)");
    return *i;
  };

  Tally cancel("cancellative"), fixed("fixed"), trunc("trunc"),
      less("x-less-than-n"), transpose("transpose"),
      truncation_good("truncation-is-good"), trunc_good("trunc-is-good"),
      sums_up("trunc-sums-up"), base("base-case"), base_lor("base-case-lor"),
      duo("duo"), split("ominus-n-split"), duo_trans("duo-trans");

  for (const auto& x : xs) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      const X& nn = nat[n];
      const X xn = ominus(p, x, n);
      fixed.check(p.add(xn, nn) == p.join(x, nn), [&] { return d({x, nn}); });
      trunc.check(p.add(p.meet(x, nn), xn) == x, [&] { return d({x, nn}); });
      if (leq(p, x, nn)) {
        less.check(xn == p.zero(), [&] { return d({x, nn}); });
      }
      for (std::size_t k = 0; k <= max_n; ++k) {
        transpose.check(
            p.meet(xn, nat[k]) == ominus(p, p.meet(x, nat[n + k]), n),
            [&] { return d({x, nn, nat[k]}); });
      }
      for (const auto& y : xs) {
        if (p.add(x, nn) == p.add(y, nn)) {
          cancel.check(x == y, [&] { return d({x, y, nn}); });
        }
      }
    }
    truncation_good.check(
        p.add(trunc1(x), trunc1(p.ominus1(x))) == p.meet(x, nat[2]),
        [&] { return d({x}); });
    try {
      GoodSequence s = eps1_inverse(p, ui, x);
      trunc_good.check(true, [] { return std::string(); });
      std::size_t m = 0;
      while (!leq(p, x, units(p, m))) ++m;
      X acc = p.zero();
      for (std::size_t n = 0; n < m; ++n) {
        acc = p.add(acc, trunc1(ominus(p, x, n)));
      }
      sums_up.check(acc == x, [&] { return d({x}); });
    } catch (const std::exception& e) {
      trunc_good.error(p.describe(x) + ": " + e.what());
    }
    for (const X& y : ui.elements) {
      const Element x0 = idx(trunc1(x));
      const Element x1 = idx(trunc1(p.ominus1(x)));
      const Element yi = idx(y);
      duo.check(trunc1(p.ominus1(p.add(x, y))) ==
                    ui.elements[ua.odot(x0, ua.oplus(x1, yi))],
                [&] { return d({x, y}); });
      for (std::size_t n = 1; n <= max_n; ++n) {
        split.check(ominus(p, p.add(x, y), n) ==
                        p.ominus1(p.add(ominus(p, x, n - 1), y)),
                    [&] { return d({x, y, nat[n]}); });
        const Element a = idx(trunc1(ominus(p, x, n - 1)));
        const Element b = idx(trunc1(ominus(p, x, n)));
        duo_trans.check(trunc1(ominus(p, p.add(x, y), n)) ==
                            ui.elements[ua.odot(a, ua.oplus(b, yi))],
                        [&] { return d({x, y, nat[n]}); });
      }
    }
  }

  for (const GoodSequence& s : gs_enumerate(ui.algebra, seq_len)) {
    if (s.is_zero()) continue;
    const X sum = eps1(p, ui, s);
    base.check(trunc1(sum) == ui.elements[s.at(0)],
               [&] { return s.to_string(); });
    X tail = p.zero();
    for (std::size_t i = 1; i < s.length(); ++i) {
      tail = p.add(tail, ui.elements[s.at(i)]);
    }
    base_lor.check(p.ominus1(sum) == tail, [&] { return s.to_string(); });
  }

  for (const Tally* t : {&cancel, &fixed, &trunc, &less, &transpose,
                         &truncation_good, &trunc_good, &sums_up, &base,
                         &base_lor, &duo, &split, &duo_trans}) {
    t->into(r);
  }
  return r;
}

/// ε⁰: T(U⁺) -> U is a homomorphism, injective on the sample of T(U⁺), and
/// every sampled u has a preimage.
template <UnitalUlm U>
Report eps0_checks(const U& u, std::size_t offset_bound = 4,
                   std::size_t max_units = 256) {
  using X = typename U::Element;
  auto t = t_build(positive_cone(u), offset_bound);
  using T = typename decltype(t)::Element;
  Report r;
  const auto ts = t.sample();
  auto e = [&](const T& x) { return eps0(u, x); };
  auto d = [&](std::initializer_list<T> v) { return detail::show(t, v); };
  Tally hom("eps0 homomorphism"), inj("eps0 injective"),
      surj("eps0 surjective");
  hom.check(e(t.zero()) == u.zero() && e(t.one()) == u.one() &&
                e(t.neg_one()) == u.neg_one(),
            [] { return std::string("constants"); });
  for (const T& a : ts) {
    for (const T& b : ts) {
      hom.check(e(t.add(a, b)) == u.add(e(a), e(b)) &&
                    e(t.join(a, b)) == u.join(e(a), e(b)) &&
                    e(t.meet(a, b)) == u.meet(e(a), e(b)),
                [&] { return d({a, b}); });
      inj.check(!(e(a) == e(b)) || a == b, [&] { return d({a, b}); });
    }
  }
  for (const X& x : u.sample()) {
    // x + n >= 0 for the n bounding x from below.
    std::size_t n = 0;
    X shifted = x;
    while (n <= max_units && !leq(u, u.zero(), shifted)) {
      shifted = u.add(shifted, u.one());
      ++n;
    }
    T pre = t.make(shifted, n);
    surj.check(e(pre) == x, [&] { return u.describe(x); });
  }
  hom.into(r);
  inj.into(r);
  surj.into(r);
  return r;
}

/// η⁰: P -> T(P)⁺ is a P-ULM homomorphism, injective on the sample, and
/// every sampled positive element of T(P) is hit.
template <PositiveUlm P>
Report eta0_checks(const P& p, std::size_t offset_bound = 4) {
  using X = typename P::Element;
  auto t = t_build(p, offset_bound);
  auto cone = positive_cone(t);
  Report r;
  const auto xs = p.sample();
  auto h = [&](const X& x) { return eta0(t, x); };
  Tally hom("eta0 homomorphism"), inj("eta0 injective"),
      surj("eta0 surjective");
  hom.check(h(p.zero()) == t.zero() && h(p.one()) == t.one(),
            [] { return std::string("constants"); });
  for (const X& x : xs) {
    hom.check(h(p.ominus1(x)) == cone.ominus1(h(x)),
              [&] { return p.describe(x); });
    for (const X& y : xs) {
      auto w = [&] { return detail::show(p, {x, y}); };
      hom.check(h(p.add(x, y)) == t.add(h(x), h(y)) &&
                    h(p.join(x, y)) == t.join(h(x), h(y)) &&
                    h(p.meet(x, y)) == t.meet(h(x), h(y)),
                w);
      inj.check(!(h(x) == h(y)) || x == y, w);
    }
  }
  for (const auto& e : t.sample()) {
    if (!cone.contains(e)) continue;
    surj.check(e.offset == 0 && h(e.base) == e, [&] { return t.describe(e); });
  }
  hom.into(r);
  inj.into(r);
  surj.into(r);
  return r;
}

/// eps1_inverse ∘ eps1 on good sequences over U(P) of length <= max_len,
/// eps1 ∘ eps1_inverse on the sample, and eps1 as a P-ULM homomorphism.
template <PositiveUlm P>
Report eps1_checks(const P& p, std::size_t max_len = 4) {
  using X = typename P::Element;
  Report r;
  const auto ui = u_interval(p);
  const auto seqs = gs_enumerate(ui.algebra, max_len);
  auto e = [&](const GoodSequence& s) { return eps1(p, ui, s); };
  Tally left("eps1_inverse after eps1"), right("eps1 after eps1_inverse"),
      hom("eps1 homomorphism");
  for (const GoodSequence& s : seqs) {
    try {
      left.check(eps1_inverse(p, ui, e(s)) == s, [&] { return s.to_string(); });
    } catch (const std::exception& ex) {
      left.error(s.to_string() + ": " + ex.what());
    }
    hom.check(e(gs_ominus1(s)) == p.ominus1(e(s)),
              [&] { return s.to_string(); });
    for (const GoodSequence& t : seqs) {
      hom.check(e(gs_sum(s, t)) == p.add(e(s), e(t)) &&
                    e(gs_join(s, t)) == p.join(e(s), e(t)) &&
                    e(gs_meet(s, t)) == p.meet(e(s), e(t)),
                [&] { return s.to_string() + ", " + t.to_string(); });
    }
  }
  hom.check(e(GoodSequence::zero(ui.algebra)) == p.zero() &&
                e(GoodSequence::one(ui.algebra)) == p.one(),
            [] { return std::string("constants"); });
  for (const X& x : p.sample()) {
    try {
      right.check(e(eps1_inverse(p, ui, x)) == x,
                  [&] { return p.describe(x); });
    } catch (const std::exception& ex) {
      right.error(p.describe(x) + ": " + ex.what());
    }
  }
  left.into(r);
  right.into(r);
  hom.into(r);
  return r;
}

/// U(GS(f)) ∘ η¹_A = η¹_B ∘ f for an MVM homomorphism f: A -> B.
inline Report eta1_naturality(const MvmRef& a, const MvmRef& b,
                              const std::vector<Element>& f) {
  Report r;
  const Eta1 ea = eta1(a);
  const Eta1 eb = eta1(b);
  Tally sq("eta1 natural");
  for (Element x = 0; x < a->size(); ++x) {
    GoodSequence image = gs_map(b, f, ea.target.elements[ea.map[x]]);
    auto i = eb.target.index_of(image);
    sq.check(i && *i == eb.map[f[x]], [&] { return std::to_string(x); });
  }
  sq.into(r);
  return r;
}

/// f ∘ ε¹_P = ε¹_Q ∘ GS(U(f)) for a P-ULM homomorphism f: P -> Q given
/// elementwise.
template <PositiveUlm P, PositiveUlm Q, class F>
Report eps1_naturality(const P& p, const Q& q, F f, std::size_t max_len = 4) {
  Report r;
  const auto up = u_interval(p);
  const auto uq = u_interval(q);
  std::vector<Element> uf;
  for (const auto& x : up.elements) {
    auto i = uq.index_of(f(x));
    if (!i) throw AlgebraError("eps1_naturality: f does not preserve [0, 1]");
    uf.push_back(*i);
  }
  Tally sq("eps1 natural");
  for (const GoodSequence& s : gs_enumerate(up.algebra, max_len)) {
    GoodSequence image = gs_map(uq.algebra, uf, s);
    sq.check(f(eps1(p, up, s)) == eps1(q, uq, image),
             [&] { return s.to_string(); });
  }
  sq.into(r);
  return r;
}

/// T(f) ∘ η⁰_P = η⁰_Q ∘ f.
template <PositiveUlm P, PositiveUlm Q, class F>
Report eta0_naturality(const P& p, const Q& q, F f,
                       std::size_t offset_bound = 4) {
  Report r;
  auto tp = t_build(p, offset_bound);
  auto tq = t_build(q, offset_bound);
  Tally sq("eta0 natural");
  for (const auto& x : p.sample()) {
    const auto e = eta0(tp, x);
    sq.check(tq.make(f(e.base), e.offset) == eta0(tq, f(x)),
             [&] { return p.describe(x); });
  }
  sq.into(r);
  return r;
}

/// f ∘ ε⁰_U = ε⁰_V ∘ T(f⁺).
template <UnitalUlm U, UnitalUlm V, class F>
Report eps0_naturality(const U& u, const V& v, F f,
                       std::size_t offset_bound = 4) {
  Report r;
  auto tu = t_build(positive_cone(u), offset_bound);
  auto tv = t_build(positive_cone(v), offset_bound);
  Tally sq("eps0 natural");
  for (const auto& e : tu.sample()) {
    sq.check(f(eps0(u, e)) == eps0(v, tv.make(f(e.base), e.offset)),
             [&] { return tu.describe(e); });
  }
  sq.into(r);
  return r;
}

/// GS(f) as an elementwise map between good-sequence P-ULMs.
inline auto gs_functor(MvmRef target, std::vector<Element> f) {
  return [target = std::move(target), f = std::move(f)](const GoodSequence& s) {
    return gs_map(target, f, s);
  };
}

/// T(g) for an elementwise map g between P-ULMs.
template <PositiveUlm Q, class G>
auto t_functor(TranslationUlm<Q> tq, G g) {
  return [tq = std::move(tq), g = std::move(g)](const auto& e) {
    return tq.make(g(e.base), e.offset);
  };
}

/// All four naturality squares along the MVM homomorphism f: A -> B, with
/// the good-sequence realizations bounded by max_len and offset_bound.
Report naturality_suite(const MvmRef& a, const MvmRef& b,
                        const std::vector<Element>& f, std::size_t max_len = 3,
                        std::size_t offset_bound = 2);

/// η¹, ε¹ round trips, Γ(Ξ(A)) ≅ A and the lemma suite of GS(A).
Report roundtrip_suite(const MvmRef& a, std::size_t max_len = 4);

/// Axioms, lemmas, Γ and the translation checks on ScaledIntUlm(m).
Report ulm_demo(std::int64_t denominator);

}  // namespace mvmlab

#endif  // MVMLAB_ULM_CHECKS_HPP
