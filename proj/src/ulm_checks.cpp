#include "mvmlab/ulm_checks.hpp"

#include <exception>

namespace mvmlab {

namespace {

/// Runs one sub-check, turning an exception into a failed line.
template <class F>
void guarded(Report& r, const std::string& name, F f) {
  try {
    f();
  } catch (const std::exception& e) {
    r.add(name, false, std::string("error: ") + e.what());
  }
}

}  // namespace

Report naturality_suite(const MvmRef& a, const MvmRef& b,
                        const std::vector<Element>& f, std::size_t max_len,
                        std::size_t offset_bound) {
  Report r;
  guarded(r, "eta1 natural", [&] { r.merge(eta1_naturality(a, b, f)); });
  GoodSeqPUlm ga(a, max_len);
  GoodSeqPUlm gb(b, max_len);
  auto gf = gs_functor(b, f);
  guarded(r, "eps1 natural",
          [&] { r.merge(eps1_naturality(ga, gb, gf, max_len)); });
  guarded(r, "eta0 natural",
          [&] { r.merge(eta0_naturality(ga, gb, gf, offset_bound)); });
  guarded(r, "eps0 natural", [&] {
    auto xa = t_build(ga, offset_bound);
    auto xb = t_build(gb, offset_bound);
    r.merge(eps0_naturality(xa, xb, t_functor(xb, gf), 1));
  });
  return r;
}

Report roundtrip_suite(const MvmRef& a, std::size_t max_len) {
  Report r;
  guarded(r, "eta1 isomorphism", [&] {
    eta1(a);
    r.add("eta1 isomorphism", true, "x -> (x) onto U(GS(A))");
  });
  GoodSeqPUlm gs(a, max_len);
  guarded(r, "eps1", [&] { r.merge(eps1_checks(gs, max_len)); });
  guarded(r, "gamma xi isomorphism", [&] {
    gamma_xi_iso(a);
    r.add("gamma xi isomorphism", true, "a -> [(a), 0]");
  });
  guarded(r, "GS axioms", [&] { r.merge(check_pulm_axioms(gs)); });
  guarded(r, "GS lemmas", [&] { r.merge(pulm_lemma_suite(gs, 4, max_len)); });
  return r;
}

Report ulm_demo(std::int64_t denominator) {
  Report r;
  ScaledIntUlm u(denominator);
  r.merge(check_ulm_axioms(u));
  r.merge(check_term_equivalent_axioms(u));
  guarded(r, "gamma", [&] {
    auto g = gamma(u);
    auto luk = lukasiewicz_mvm(static_cast<std::size_t>(denominator) + 1);
    r.add("gamma", find_isomorphism(g.algebra->base(), luk.base()).has_value(),
          "gamma(U) is an MVM isomorphic to lukasiewicz_" +
              std::to_string(denominator + 1));
  });
  auto cone = positive_cone(u);
  r.merge(check_pulm_axioms(cone), "cone ");
  r.merge(pulm_lemma_suite(cone), "cone ");
  r.merge(eps0_checks(u));
  ScaledNatPUlm nat(denominator);
  r.merge(eta0_checks(nat));
  r.merge(eps1_checks(nat));
  return r;
}

}  // namespace mvmlab
