#include <gtest/gtest.h>

#include "bidixgen/acd.hpp"
#include "support/random_graphs.hpp"

namespace bidixgen {
namespace {

LexicalEntry E(std::string rep, std::string lang, std::string pos = "n") {
  return LexicalEntry{std::move(rep), std::move(lang), std::move(pos)};
}

const LexicalEntry a = E("a", "aa"), b = E("b", "ab"), c1 = E("c1", "ac"), c2 = E("c2", "ac");

AcdConfig config(double threshold, std::string pivot = "ac") {
  AcdConfig cfg;
  cfg.pivot = std::move(pivot);
  cfg.threshold = threshold;
  return cfg;
}

ScoredPair S(const LexicalEntry& s, const LexicalEntry& t, double conf, Provenance p = Provenance::cycle) {
  return ScoredPair{s, t, conf, p};
}

TEST(ThresholdFilter, Boundaries) {
  const LexicalEntry x = E("x", "ab"), y = E("y", "ab");
  const std::vector<ScoredPair> pairs{S(a, b, 0.4), S(a, x, 2.0 / 3.0), S(a, y, 1.0, Provenance::type_b)};
  EXPECT_EQ(threshold_filter(pairs, 0.0).size(), 3u);
  const auto at_one = threshold_filter(pairs, 1.0);
  ASSERT_EQ(at_one.size(), 1u);
  EXPECT_EQ(at_one[0].target, y);
  const auto mid = threshold_filter(pairs, 0.6);
  ASSERT_EQ(mid.size(), 2u);
  EXPECT_EQ(mid[0].target, x);
  EXPECT_EQ(mid[1].target, y);
}

TEST(MergeMax, KeepsMaximumAndPrefersTypeBOnTies) {
  const std::vector<ScoredPair> cd{S(a, b, 2.0 / 3.0)};
  const std::vector<ScoredPair> tb{S(a, b, 1.0, Provenance::type_b)};
  const auto merged = merge_max({cd, tb});
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].confidence, 1.0);
  EXPECT_EQ(merged[0].provenance, Provenance::type_b);

  const std::vector<ScoredPair> clique{S(a, b, 1.0)};
  const std::vector<ScoredPair> tr{S(a, b, 1.0, Provenance::transitive)};
  EXPECT_EQ(merge_max({clique, tb, tr})[0].provenance, Provenance::type_b);
  EXPECT_EQ(merge_max({clique, tr})[0].provenance, Provenance::transitive);
}

TEST(AcdPredict, TypeBOnlyPairSurvivesAnyThreshold) {
  const std::vector<EntryPair> pairs{{a, c1}, {c1, b}};
  const auto g = build_graph(pairs);
  for (double tau : {0.0, 0.6, 1.0}) {
    const auto out = acd_predict(g, "aa", "ab", config(tau));
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].confidence, 1.0);
    EXPECT_EQ(out[0].provenance, Provenance::type_b);
  }
}

TEST(AcdPredict, CdAndTypeBMergeToOne) {
  const std::vector<EntryPair> pairs{{a, c1}, {c1, b}, {a, c2}, {c2, b}};
  const auto out = acd_predict(build_graph(pairs), "aa", "ab", config(0.6));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].confidence, 1.0);
  EXPECT_EQ(out[0].provenance, Provenance::type_b);
}

TEST(AcdPredict, NeverEmitsExistingEdges) {
  const std::vector<EntryPair> pairs{{a, c1}, {c1, b}, {a, b}};
  EXPECT_TRUE(acd_predict(build_graph(pairs), "aa", "ab", config(0.0)).empty());
}

TEST(AcdPredict, Errors) {
  const LexicalEntry d = E("d", "ad");
  const std::vector<EntryPair> pairs{{a, c1}, {c1, d}, {d, b}};
  const auto g = build_graph(pairs);
  auto kind_of = [&](const AcdConfig& cfg, std::string_view src = "aa", std::string_view tgt = "ab") {
    try {
      acd_predict(g, src, tgt, cfg);
    } catch (const Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::NotACycle;
  };
  EXPECT_EQ(kind_of(config(0.6)), ErrorKind::MissingPivotDictionaries);
  EXPECT_EQ(kind_of(config(0.6, "zz")), ErrorKind::UnknownLanguage);
  EXPECT_EQ(kind_of(config(0.6), "aa", "zz"), ErrorKind::UnknownLanguage);
  EXPECT_EQ(kind_of(config(0.6, "aa")), ErrorKind::InvalidSpec);
}

std::set<EntryPair> pair_set(const std::vector<ScoredPair>& pairs) {
  std::set<EntryPair> out;
  for (const auto& p : pairs) out.emplace(p.source, p.target);
  return out;
}

TEST(AcdPredict, ReducesToOticWithOnePivot) {
  PortableRng rng(1);
  AcdConfig cfg = config(0.5);
  cfg.params.constraints = {4, 4, 2};
  int checked = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const auto pairs = testgen::random_pivot_pairs(rng, {});
    const auto g = build_graph(pairs);
    if (g.language_pair_edges("aa", "ac").empty() || g.language_pair_edges("ac", "ab").empty()) continue;
    for (double tau : {0.1, 0.5, 2.0 / 3.0}) {
      cfg.threshold = tau;
      ASSERT_EQ(pair_set(acd_predict(g, "aa", "ab", cfg)),
                otic_predict(PivotTable::from_graph(g, "aa", "ac", "ab")));
    }
    ++checked;
  }
  EXPECT_GT(checked, 40);
}

TEST(AcdPredict, NestedAcrossThresholds) {
  PortableRng rng(12);
  for (int iter = 0; iter < 30; ++iter) {
    auto pairs = testgen::random_pairs(rng, {28, 4, 0.22, {"n"}});
    const auto g = build_graph(pairs);
    if (!g.has_language("aa") || !g.has_language("ab") || g.language_pair_edges("aa", "ac").empty() ||
        g.language_pair_edges("ac", "ab").empty()) {
      continue;
    }
    std::set<EntryPair> previous;
    std::set<EntryPair> type_b;
    for (const auto& p : type_b_pairs(g, "aa", "ac", "ab")) {
      if (!g.has_edge(*g.find(p.source), *g.find(p.target))) type_b.emplace(p.source, p.target);
    }
    for (int step = 10; step >= 0; --step) {
      const auto current = pair_set(acd_predict(g, "aa", "ab", config(step / 10.0)));
      ASSERT_TRUE(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
      ASSERT_TRUE(std::includes(current.begin(), current.end(), type_b.begin(), type_b.end()));
      previous = current;
    }
  }
}

}  // namespace
}  // namespace bidixgen
