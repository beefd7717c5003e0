// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// time budget. Exit status is the number of failed criteria. Criterion
// numbers on the command line restrict the run.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mvmlab/congruence.hpp"
#include "mvmlab/equivalence.hpp"
#include "mvmlab/goodseq.hpp"
#include "mvmlab/search.hpp"
#include "mvmlab/structure.hpp"
#include "mvmlab/ulm_checks.hpp"
#include "support.hpp"

using namespace mvmlab;
using testing_support::corpus_all;
using testing_support::corpus_mvms;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failures with the first few messages.
class Failures {
 public:
  void operator()(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) +
                       " checks failed: " + first_};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

void report_into(Failures& f, const Report& r, const std::string& where) {
  for (const auto& c : r.checks())
    f(c.verdict == Verdict::Pass, where + ": " + c.name + " " + c.detail);
}

Outcome axiom_soundness() {
  Failures f;
  for (std::int64_t m = 1; m <= 4; ++m) {
    auto g = gamma(ScaledIntUlm(m));
    auto c = check_mvm(g.algebra->base());
    f(c.passed(), "gamma(k/" + std::to_string(m) + ")" +
                      (c.failure ? " " + c.failure->describe() : ""));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    auto c = check_mvm(mv_to_mvm(lukasiewicz_chain(n)).base());
    f(c.passed(), "chain " + std::to_string(n));
  }
  return f.outcome("gamma m=1..4 and MV chains n=1..6");
}

Outcome good_sequence_arithmetic() {
  Failures f;
  std::size_t algebras = 0;
  for (const auto& m : corpus_mvms(3)) {
    ++algebras;
    auto a = share(m);
    const auto all = gs_enumerate(a, 4);
    const auto zero = GoodSequence::zero(a);
    const std::string name = m.base().name();
    for (const auto& x : all) {
      f(gs_sum(x, zero) == x, name + " zero " + x.to_string());
      for (const auto& y : all) {
        f(gs_sum_product_form(x, y) == gs_sum_sum_form(x, y),
          name + " forms " + x.to_string() + " " + y.to_string());
        const auto xy = gs_sum(x, y);
        f(xy == gs_sum(y, x), name + " commutative " + x.to_string() + " " + y.to_string());
        for (const auto& z : all) {
          f(gs_sum(xy, z) == gs_sum(x, gs_sum(y, z)), name + " associative");
          f(gs_sum(x, gs_join(y, z)) == gs_join(xy, gs_sum(x, z)), name + " over join");
          f(gs_sum(x, gs_meet(y, z)) == gs_meet(xy, gs_sum(x, z)), name + " over meet");
        }
      }
    }
  }
  return f.outcome(std::to_string(algebras) + " algebras of size <= 3, length <= 4");
}

Outcome round_trips() {
  Failures f;
  std::size_t algebras = 0;
  for (const auto& m : corpus_mvms()) {
    ++algebras;
    auto a = share(m);
    const std::string name = m.base().name();
    try {
      auto e = eta1(a);
      f(is_mvm_isomorphism(*a, *e.target.algebra, e.map), name + " eta1");
      GoodSeqPUlm p(a, 4);
      auto ui = u_interval(p);
      for (const auto& s : gs_enumerate(ui.algebra, 4))
        f(eps1_inverse(p, ui, eps1(p, ui, s)) == s, name + " eps1 " + s.to_string());
      auto g = gamma_xi_iso(a);
      f(is_mvm_isomorphism(*a, *g.target.algebra, g.map), name + " gamma xi");
    } catch (const std::exception& ex) {
      f(false, name + ": " + ex.what());
    }
  }
  for (std::int64_t m = 1; m <= 3; ++m) {
    ScaledNatPUlm p(m);
    auto ui = u_interval(p);
    for (const auto& s : gs_enumerate(ui.algebra, 4))
      f(eps1_inverse(p, ui, eps1(p, ui, s)) == s, "k/" + std::to_string(m) + " " + s.to_string());
  }
  return f.outcome(std::to_string(algebras) + " corpus algebras, k/m for m <= 3");
}

Outcome translation_layer() {
  Failures f;
  for (std::int64_t m = 1; m <= 4; ++m) {
    ScaledIntUlm u(m);
    report_into(f, eps0_checks(u), "eps0 m=" + std::to_string(m));
    report_into(f, eta0_checks(ScaledNatPUlm(m)), "eta0 m=" + std::to_string(m));
    // Every integer |k| <= 4m is hit by some [x, n], and x - n m is exact.
    auto t = t_build(positive_cone(u), 4);
    std::vector<bool> hit(8 * m + 1);
    for (const auto& e : t.sample()) {
      auto v = eps0(u, e);
      f(v == e.base - static_cast<std::int64_t>(e.offset) * m, "eps0 value");
      if (v >= -4 * m && v <= 4 * m) hit[v + 4 * m] = true;
    }
    for (bool h : hit) f(h, "eps0 surjective on |k| <= 4m, m=" + std::to_string(m));
  }
  auto ms = corpus_mvms();
  std::size_t homs = 0;
  for (const auto& a : ms)
    for (const auto& b : ms)
      for (const auto& h : all_homomorphisms(a.base(), b.base())) {
        ++homs;
        report_into(f, naturality_suite(share(a), share(b), h),
                    a.base().name() + "->" + b.base().name());
      }
  return f.outcome("m <= 4, " + std::to_string(homs) + " corpus homomorphisms");
}

Outcome structure_theorems() {
  Failures f;
  std::size_t si = 0, total = 0;
  const std::size_t top = enumeration_size_guard() >= 4 ? 4 : 3;
  for (std::size_t n = 1; n <= top; ++n) {
    for (const auto& a : enumerate_mvms(n)) {
      ++total;
      if (!is_subdirectly_irreducible(a).irreducible) continue;
      ++si;
      const std::string name = a.base().name();
      const Element size = static_cast<Element>(a.size());
      for (Element x = 0; x < size; ++x)
        for (Element y = 0; y < size; ++y) {
          f(a.leq(x, y) || a.leq(y, x), name + " total order");
          f(a.oplus(x, y) == a.one() || a.odot(x, y) == a.zero(), name + " good pairs");
        }
      for (const auto& s : gs_enumerate(share(a), 4))
        for (std::size_t i = 0; i + 1 < s.length(); ++i)
          f(s.at(i) == a.one(), name + " shape " + s.to_string());
      report_into(f, si_theorem_suite(share(a)), name);
    }
  }
  return f.outcome(std::to_string(si) + " irreducible of " + std::to_string(total) +
                   " MVMs, sizes 1.." + std::to_string(top));
}

Outcome theta_star_characterization() {
  Failures f;
  std::size_t quotients = 0;
  for (const auto& a : corpus_mvms(4)) {
    auto cs = all_congruences(a.base());
    for (const auto& q : two_quotients(a)) {
      ++quotients;
      auto theta = q.as_congruence();
      std::optional<Congruence> best;
      for (const auto& c : cs)
        if (c.refines(theta) && (!best || best->refines(c))) best = c;
      bool is_max = best.has_value();
      for (const auto& c : cs)
        if (c.refines(theta) && best) is_max = is_max && c.refines(*best);
      f(is_max && theta_star(a, q) == *best, a.base().name() + " " + theta.to_string());
    }
  }
  return f.outcome(std::to_string(quotients) + " two-class quotients");
}

Outcome independence() {
  auto t0 = std::chrono::steady_clock::now();
  auto res = independence_suite(2, 4);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Failures f;
  const auto& items = independence_items();
  for (std::size_t i = 0; i < res.items.size(); ++i) {
    const auto& it = res.items[i];
    std::cout << "  " << it.name << ": " << status_name(it.status);
    if (it.witness) std::cout << " (size " << it.witness->size() << ", violates " << it.violated << ")";
    std::cout << ", " << it.stats.nodes << " nodes, " << it.stats.seconds << " s\n";
    f(it.status != SearchStatus::Exhausted, it.name + " stopped early");
    if (!it.witness) continue;
    // Re-check here: every other group holds and the named equation fails.
    bool ok = it.reverified;
    for (std::size_t j = 0; j < items.size(); ++j)
      for (const auto& e : items[j].equations) {
        const bool h = holds(*it.witness, e).holds;
        if (j != i) ok = ok && h;
        if (e.label == it.violated) ok = ok && !h;
      }
    f(ok, it.name + " witness re-verification");
  }
  f(res.discrepancies == 0, "discrepancies reported");
  f(secs < 30 * 60, "took " + std::to_string(secs) + " s");
  return f.outcome("witnesses " + std::to_string(res.witnesses) + ", bound_hit " +
                   std::to_string(res.bound_hits) + ", exhausted " +
                   std::to_string(res.exhausted));
}

Outcome oracle_equivalence() {
  Failures f;
  auto naive = testing_support::naive_mvms_of_size_two();
  auto got = enumerate_mvms(2);
  f(naive.size() == got.size(), "size-2 class count " + std::to_string(got.size()) +
                                    " vs " + std::to_string(naive.size()));
  for (const auto& m : got) {
    std::size_t matches = 0;
    for (const auto& c : naive) matches += testing_support::naive_isomorphic(m.base(), c);
    f(matches == 1, m.base().name() + " matched " + std::to_string(matches) + " naive classes");
  }
  std::size_t pairs = 0;
  for (const auto& a : corpus_all(4)) {
    auto cs = all_congruences(a);
    const Element n = static_cast<Element>(a.size());
    for (Element x = 0; x < n; ++x)
      for (Element y = x; y < n; ++y) {
        ++pairs;
        Congruence expect = Congruence::full(n);
        for (const auto& c : cs)
          if (c.related(x, y)) expect = expect.meet(c);
        std::vector<ElementPair> p{{x, y}};
        f(generated_congruence(a, p) == expect, a.name() + " generated");
      }
  }
  return f.outcome(std::to_string(got.size()) + " classes of size 2, " +
                   std::to_string(pairs) + " generating pairs");
}

Outcome mv_bridge() {
  Failures f;
  for (std::size_t n = 1; n <= 8; ++n)
    f(has_mv_negation(mv_to_mvm(lukasiewicz_chain(n))), "chain " + std::to_string(n));
  f(!has_mv_negation(require_mvm(remark_three_element())), "remark algebra");
  return f.outcome("chains n=1..8 and the remark algebra");
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const Criterion criteria[] = {
      {1, "axiom soundness", 5, axiom_soundness},
      {2, "good-sequence arithmetic", 60, good_sequence_arithmetic},
      {3, "equivalence round trips", 60, round_trips},
      {4, "translation layer", 10, translation_layer},
      {5, "structure theorems", 300, structure_theorems},
      {6, "theta-star characterization", 30, theta_star_characterization},
      {7, "independence suite", 1800, independence},
      {8, "oracle equivalence", 60, oracle_equivalence},
      {9, "MV bridge", 1, mv_bridge},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end())
      continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) +
                  " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name
              << "): " << o.detail << " [" << timing << "]" << std::endl;
    failed += !o.ok;
  }
  return failed;
}
