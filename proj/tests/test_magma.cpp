#include <gtest/gtest.h>

#include <random>

#include "mvmlab/magma.hpp"
#include "support.hpp"

using namespace mvmlab;
using testing_support::corpus;

namespace {

bool naive_associative(const std::vector<Element>& t, std::size_t n) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
  return true;
}

}  // namespace

TEST(Magma, LukasiewiczSumFromOneAndZero) {
  auto l3 = corpus("lukasiewicz_3");
  const auto& t = l3.operation("oplus").table;
  MagmaView m{3, t};
  std::vector<Element> gens{1, 0};
  EXPECT_TRUE(light_associativity(m, gens));
  EXPECT_TRUE(naive_associative(t, 3));
}

TEST(Magma, ChainJoinIsAssociative) {
  const std::size_t n = 5;
  std::vector<Element> t(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[x * n + y] = std::max(x, y);
  std::vector<Element> gens{0, 1, 2, 3, 4};
  EXPECT_TRUE(light_associativity(MagmaView{n, t}, gens));
}

TEST(Magma, SubtractThenClampFails) {
  const std::size_t n = 3;
  std::vector<Element> t(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[x * n + y] = x > y ? x - y : 0;
  std::vector<Element> gens{0, 1, 2};
  EXPECT_FALSE(light_associativity(MagmaView{n, t}, gens));
  auto w = associativity_counterexample(MagmaView{n, t});
  ASSERT_TRUE(w.has_value());
  auto [x, y, z] = *w;
  EXPECT_NE(t[t[x * n + y] * n + z], t[x * n + t[y * n + z]]);
}

TEST(Magma, NonGeneratingSetIsRejected) {
  std::vector<Element> t{0, 0, 0, 0};  // constant 0
  std::vector<Element> gens{0};
  EXPECT_THROW(light_associativity(MagmaView{2, t}, gens), GenerationError);
  auto sub = generated_submagma(MagmaView{2, t}, gens);
  EXPECT_EQ(sub, (std::vector<Element>{0}));
}

TEST(MagmaProperty, LightAgreesWithTripleLoop) {
  std::mt19937 rng(3);
  int nonassoc = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::uniform_int_distribution<Element> d(0, static_cast<Element>(n - 1));
    std::vector<Element> t(n * n);
    for (auto& e : t) e = d(rng);
    std::vector<Element> gens(n);
    for (Element i = 0; i < n; ++i) gens[i] = i;
    bool expect = naive_associative(t, n);
    nonassoc += !expect;
    EXPECT_EQ(light_associativity(MagmaView{n, t}, gens), expect);
    EXPECT_EQ(!associativity_counterexample(MagmaView{n, t}).has_value(), expect);
  }
  EXPECT_GT(nonassoc, 0);
}
