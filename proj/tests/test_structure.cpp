#include <gtest/gtest.h>

#include "mvmlab/goodseq.hpp"
#include "mvmlab/search.hpp"
#include "mvmlab/structure.hpp"
#include "support.hpp"

using namespace mvmlab;
using testing_support::brute_congruences;
using testing_support::corpus;
using testing_support::corpus_mvms;

namespace {

// Upper classes U for which {U, complement} is compatible with join and meet.
std::vector<std::vector<Element>> naive_two_quotients(const MvmAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Element>> out;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    auto up = [&](Element x) { return ((mask >> x) & 1) != 0; };
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y)
        for (Element x2 = 0; x2 < n && ok; ++x2)
          for (Element y2 = 0; y2 < n && ok; ++y2) {
            if (up(x) != up(x2) || up(y) != up(y2)) continue;
            ok = up(a.join(x, y)) == up(a.join(x2, y2)) &&
                 up(a.meet(x, y)) == up(a.meet(x2, y2));
          }
    // The upper class holds the top.
    if (ok && up(a.one())) {
      std::vector<Element> u;
      for (Element x = 0; x < n; ++x)
        if (up(x)) u.push_back(x);
      out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Element>> uppers(const std::vector<TwoQuotient>& qs) {
  std::vector<std::vector<Element>> out;
  for (const auto& q : qs) out.push_back(q.upper_elements());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MvmAlgebra> test_algebras() {
  auto all = corpus_mvms(6);
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& m : enumerate_mvms(n)) all.push_back(m);
  return all;
}

TwoQuotient quotient_with_upper(const MvmAlgebra& a, std::vector<Element> u) {
  for (const auto& q : two_quotients(a))
    if (q.upper_elements() == u) return q;
  throw std::runtime_error("no such quotient");
}

}  // namespace

TEST(Structure, TwoQuotientExamples) {
  auto l3 = lukasiewicz_mvm(3);
  EXPECT_EQ(uppers(two_quotients(l3)),
            (std::vector<std::vector<Element>>{{1, 2}, {2}}));
  EXPECT_EQ(two_quotients(lukasiewicz_mvm(2)).size(), 1u);
  EXPECT_TRUE(two_quotients(lukasiewicz_mvm(1)).empty());
}

TEST(Structure, ThetaStarExamples) {
  auto l3 = lukasiewicz_mvm(3);
  EXPECT_TRUE(theta_star(l3, quotient_with_upper(l3, {1, 2})).is_identity());
  auto sq = require_mvm(corpus("l2_x_l2"));
  // Element (a, b) is a * 2 + b; the first-coordinate split has upper {2, 3}.
  auto t = theta_star(sq, quotient_with_upper(sq, {2, 3}));
  EXPECT_EQ(t, Congruence::from_labels(std::vector<Element>{0, 0, 1, 1}));
  for (const auto& a : corpus_mvms(6))
    for (const auto& q : two_quotients(a))
      EXPECT_TRUE(theta_star(a, q).refines(q.as_congruence()));
}

TEST(Structure, SimExamples) {
  auto l3 = lukasiewicz_mvm(3);
  EXPECT_TRUE(sim_bot(l3, 0).is_identity());
  EXPECT_TRUE(sim_top(l3, 2).is_identity());
  EXPECT_TRUE(sim_bot(l3, 1).is_full());
  std::vector<ElementPair> p{{1, 0}};
  EXPECT_EQ(sim_bot(l3, 1), generated_congruence(l3.base(), p));
}

TEST(Structure, SubdirectIrreducibilityExamples) {
  auto l3 = is_subdirectly_irreducible(lukasiewicz_mvm(3));
  EXPECT_TRUE(l3.irreducible);
  ASSERT_TRUE(l3.monolith.has_value());
  EXPECT_TRUE(l3.monolith->is_full());
  EXPECT_FALSE(is_subdirectly_irreducible(require_mvm(corpus("l2_x_l2"))).irreducible);
  EXPECT_FALSE(is_subdirectly_irreducible(lukasiewicz_mvm(1)).irreducible);
}

TEST(Structure, TheoremSuite) {
  auto r = si_theorem_suite(share(lukasiewicz_mvm(3)));
  EXPECT_TRUE(r.passed()) << r.render();
  for (const char* name : {"totally ordered", "good-pair law", "good-sequence shape"}) {
    ASSERT_NE(r.find(name), nullptr) << name;
    EXPECT_EQ(r.find(name)->verdict, Verdict::Pass);
  }
  auto skip = si_theorem_suite(share(require_mvm(corpus("l2_x_l2"))));
  ASSERT_EQ(skip.checks().size(), 1u);
  EXPECT_EQ(skip.checks()[0].verdict, Verdict::NotApplicable);
}

TEST(StructureProperty, TwoQuotientsMatchSubsetFilter) {
  for (const auto& a : test_algebras())
    EXPECT_EQ(uppers(two_quotients(a)), naive_two_quotients(a)) << a.base().name();
}

TEST(StructureProperty, ThetaStarIsLargestCongruenceInside) {
  for (const auto& a : test_algebras()) {
    auto cs = brute_congruences(a.base());
    for (const auto& q : two_quotients(a)) {
      auto theta = q.as_congruence();
      std::optional<Congruence> best;
      for (const auto& c : cs) {
        if (!c.refines(theta)) continue;
        if (!best || best->refines(c)) best = c;
      }
      ASSERT_TRUE(best.has_value());
      // Maximum, not merely maximal.
      for (const auto& c : cs) {
        if (c.refines(theta)) {
          EXPECT_TRUE(c.refines(*best));
        }
      }
      EXPECT_EQ(theta_star(a, q), *best) << a.base().name();
    }
  }
}

TEST(StructureProperty, SimRelationsAreGeneratedCongruences) {
  for (const auto& a : test_algebras()) {
    for (Element x = 0; x < a.size(); ++x) {
      std::vector<ElementPair> bot{{x, a.zero()}}, top{{x, a.one()}};
      EXPECT_EQ(sim_bot(a, x), generated_congruence(a.base(), bot)) << a.base().name();
      EXPECT_EQ(sim_top(a, x), generated_congruence(a.base(), top)) << a.base().name();
    }
  }
}

TEST(StructureProperty, IrreducibilityMatchesCongruenceMeet) {
  for (const auto& a : test_algebras()) {
    auto cs = brute_congruences(a.base());
    Congruence meet = Congruence::full(a.size());
    std::size_t nontrivial = 0;
    for (const auto& c : cs) {
      if (c.is_identity()) continue;
      meet = meet.meet(c);
      ++nontrivial;
    }
    const bool expect = nontrivial > 0 && !meet.is_identity();
    auto r = is_subdirectly_irreducible(a);
    EXPECT_EQ(r.irreducible, expect) << a.base().name();
    if (expect) {
      EXPECT_EQ(*r.monolith, meet);
    }
  }
}

TEST(StructureProperty, IrreducibleAlgebrasObeyTheTheorems) {
  std::size_t si = 0;
  for (const auto& a : test_algebras()) {
    if (!is_subdirectly_irreducible(a).irreducible) continue;
    ++si;
    const Element n = static_cast<Element>(a.size());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        EXPECT_TRUE(a.leq(x, y) || a.leq(y, x)) << a.base().name();
        EXPECT_TRUE(a.oplus(x, y) == a.one() || a.odot(x, y) == a.zero())
            << a.base().name();
      }
    for (const auto& s : gs_enumerate(share(a), 4)) {
      for (std::size_t i = 0; i + 1 < s.length(); ++i)
        EXPECT_EQ(s.at(i), a.one()) << a.base().name() << " " << s.to_string();
    }
    bool some_identity = false;
    for (const auto& q : two_quotients(a))
      some_identity = some_identity || theta_star(a, q).is_identity();
    EXPECT_TRUE(some_identity) << a.base().name();
    EXPECT_TRUE(si_theorem_suite(share(a)).passed()) << a.base().name();
  }
  EXPECT_GT(si, 5u);
}
