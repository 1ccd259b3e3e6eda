#include <gtest/gtest.h>

#include "bidixgen/otic.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

namespace bidixgen {
namespace {

LexicalEntry E(std::string rep, std::string lang, std::string pos = "n") {
  return LexicalEntry{std::move(rep), std::move(lang), std::move(pos)};
}

const LexicalEntry a = E("a", "aa"), b = E("b", "ab"), b1 = E("b1", "ab"), b2 = E("b2", "ab"), c1 = E("c1", "ac"),
                   c2 = E("c2", "ac");

TEST(OticTypeA, TwoSharedPivots) {
  PivotTable t;
  t.forward[a] = {c1, c2};
  t.onward[c1] = {b};
  t.onward[c2] = {b};
  EXPECT_EQ(otic_type_a(t), (PairSet{{a, b}}));
}

TEST(OticTypeA, OneSharedPivotIsNotEnough) {
  PivotTable t;
  t.forward[a] = {c1, c2};
  t.onward[c1] = {b};
  t.onward[c2] = {b1};
  EXPECT_TRUE(otic_type_a(t).empty());
}

TEST(OticTypeB, UniqueImage) {
  PivotTable t;
  t.forward[a] = {c1};
  t.onward[c1] = {b};
  EXPECT_EQ(otic_type_b(t), (PairSet{{a, b}}));
}

TEST(OticTypeB, TwoImagesYieldNothing) {
  PivotTable t;
  t.forward[a] = {c1, c2};
  t.onward[c1] = {b1};
  t.onward[c2] = {b2};
  EXPECT_TRUE(otic_type_b(t).empty());
}

TEST(OticTypeB, FunnelThroughTwoPivots) {
  PivotTable t;
  t.forward[a] = {c1, c2};
  t.onward[c1] = {b};
  t.onward[c2] = {b};
  EXPECT_EQ(otic_type_b(t), (PairSet{{a, b}}));
  EXPECT_EQ(oracle::otic_type_b(t), (PairSet{{a, b}}));
}

TEST(OticTypeB, UniquenessIsPerPos) {
  PivotTable t;
  t.forward[a] = {c1};
  t.onward[c1] = {b, E("b", "ab", "vblex")};
  EXPECT_EQ(otic_type_b(t), (PairSet{{a, b}}));
}

TEST(OticPredict, PairOfBothTypesAppearsOnce) {
  PivotTable t;
  t.forward[a] = {c1, c2};
  t.onward[c1] = {b};
  t.onward[c2] = {b};
  EXPECT_EQ(otic_predict(t).size(), 1u);
}

TEST(OticPredict, EmptyTable) { EXPECT_TRUE(otic_predict(PivotTable{}).empty()); }

TEST(OticPredict, FromGraphUsesOnlyPivotDictionaries) {
  const LexicalEntry d = E("d", "ad");
  const std::vector<EntryPair> pairs{{a, c1}, {c1, b}, {a, d}, {d, b1}};
  const auto t = PivotTable::from_graph(build_graph(pairs), "aa", "ac", "ab");
  EXPECT_EQ(otic_predict(t), (PairSet{{a, b}}));
}

TEST(Otic, MatchesBruteForceOnRandomTables) {
  PortableRng rng(5150);
  for (int iter = 0; iter < 300; ++iter) {
    testgen::PivotSpec spec;
    spec.source_words = 1 + static_cast<int>(rng.below(8));
    spec.pivot_words = 1 + static_cast<int>(rng.below(6));
    spec.target_words = 1 + static_cast<int>(rng.below(8));
    spec.edge_prob = 0.15 + 0.5 * rng.unit();
    const auto t = testgen::pivot_table_of(testgen::random_pivot_pairs(rng, spec));
    const auto ta = otic_type_a(t);
    const auto tb = otic_type_b(t);
    ASSERT_EQ(ta, oracle::otic_type_a(t));
    ASSERT_EQ(tb, oracle::otic_type_b(t));
    PairSet both = oracle::otic_type_a(t);
    both.insert(tb.begin(), tb.end());
    ASSERT_EQ(otic_predict(t), both);
  }
}

PivotTable reversed(const PivotTable& t) {
  PivotTable r;
  for (const auto& [c, bs] : t.onward) {
    for (const auto& x : bs) r.forward[x].insert(c);
  }
  for (const auto& [x, cs] : t.forward) {
    for (const auto& c : cs) r.onward[c].insert(x);
  }
  return r;
}

TEST(Otic, TypeAIsSymmetric) {
  PortableRng rng(8);
  for (int iter = 0; iter < 200; ++iter) {
    const auto t = testgen::pivot_table_of(testgen::random_pivot_pairs(rng, {}));
    PairSet flipped;
    for (const auto& [x, y] : otic_type_a(reversed(t))) flipped.emplace(y, x);
    ASSERT_EQ(otic_type_a(t), flipped);
  }
}

TEST(Otic, TypeBIsNotSymmetric) {
  // a -> c1 -> b is unique from a, but b reaches a and a2 going back.
  const LexicalEntry a2 = E("a2", "aa");
  PivotTable t;
  t.forward[a] = {c1};
  t.forward[a2] = {c1};
  t.onward[c1] = {b};
  EXPECT_TRUE(otic_type_b(t).count({a, b}));
  EXPECT_TRUE(otic_type_b(reversed(t)).empty());
}

}  // namespace
}  // namespace bidixgen
