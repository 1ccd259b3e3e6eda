#include <set>

#include <gtest/gtest.h>

#include "bidixgen/cycles.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

namespace bidixgen {
namespace {

LexicalEntry E(std::string rep, std::string lang) { return LexicalEntry{std::move(rep), std::move(lang), "n"}; }

// Ring of k vertices alternating between two languages (k even) or over three.
std::vector<EntryPair> ring(int k) {
  std::vector<LexicalEntry> vs;
  for (int i = 0; i < k; ++i) vs.push_back(E("r" + std::to_string(i), testgen::lang_code(k % 2 == 0 ? i % 2 : i % 3)));
  std::vector<EntryPair> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(vs[i], vs[(i + 1) % k]);
  return pairs;
}

std::vector<VertexId> ids_of(const TranslationGraph& g, const std::vector<EntryPair>& ring_pairs) {
  std::vector<VertexId> out;
  for (const auto& p : ring_pairs) out.push_back(*g.find(p.first));
  return out;
}

TEST(CycleDensity, ChordlessFourCycle) {
  const auto pairs = ring(4);
  const auto g = build_graph(pairs);
  EXPECT_DOUBLE_EQ(cycle_density(g, ids_of(g, pairs)), 2.0 / 3.0);
}

TEST(CycleDensity, ChordlessSixCycle) {
  const auto pairs = ring(6);
  const auto g = build_graph(pairs);
  EXPECT_NEAR(cycle_density(g, ids_of(g, pairs)), 0.4, 1e-15);
}

TEST(CycleDensity, FourClique) {
  std::vector<LexicalEntry> vs{E("a", "aa"), E("b", "ab"), E("c", "ac"), E("d", "ad")};
  std::vector<EntryPair> pairs;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) pairs.emplace_back(vs[i], vs[j]);
  }
  const auto g = build_graph(pairs);
  const std::vector<VertexId> cyc{*g.find(vs[0]), *g.find(vs[1]), *g.find(vs[2]), *g.find(vs[3])};
  EXPECT_EQ(cycle_density(g, cyc), 1.0);
}

TEST(CycleDensity, RejectsNonCycles) {
  const auto pairs = ring(4);
  const auto g = build_graph(pairs);
  const auto ids = ids_of(g, pairs);
  auto expect_not_cycle = [&](std::vector<VertexId> seq) {
    try {
      cycle_density(g, seq);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotACycle);
    }
  };
  expect_not_cycle({ids[0], ids[1]});
  expect_not_cycle({ids[0], ids[1], ids[0], ids[3]});
  expect_not_cycle({ids[0], ids[2], ids[1], ids[3]});
}

TEST(CycleConstraints, Validation) {
  EXPECT_NO_THROW((CycleConstraints{4, 6, 3}.validate()));
  EXPECT_THROW((CycleConstraints{2, 6, 3}.validate()), Error);
  EXPECT_THROW((CycleConstraints{5, 4, 3}.validate()), Error);
  EXPECT_THROW((CycleConstraints{4, 7, 3}.validate()), Error);
  EXPECT_THROW((CycleConstraints{3, 3, 0}.validate()), Error);
}

TEST(EnumerateCycles, TriangleReportedOnce) {
  const std::vector<EntryPair> pairs{
      {E("a", "aa"), E("b", "ab")}, {E("b", "ab"), E("c", "ac")}, {E("c", "ac"), E("a", "aa")}};
  const auto g = build_graph(pairs);
  const auto cycles = enumerate_cycles(g, E("a", "aa"), {3, 3, 2});
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].front(), *g.find(E("a", "aa")));
  EXPECT_LT(cycles[0][1], cycles[0][2]);
}

TEST(EnumerateCycles, LengthFilter) {
  const auto pairs = ring(4);
  const auto g = build_graph(pairs);
  EXPECT_TRUE(enumerate_cycles(g, pairs[0].first, {5, 6, 3}).empty());
  EXPECT_EQ(enumerate_cycles(g, pairs[0].first, {4, 4, 2}).size(), 1u);
}

TEST(EnumerateCycles, UnknownVertex) {
  const auto g = build_graph(ring(4));
  try {
    enumerate_cycles(g, E("zz", "aa"), {4, 6, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownVertex);
  }
}

// Every vertex of a k-cycle through the source is within k/2 hops of it, so
// the depth bound is implied once max_len <= 2 * context_depth holds.
TEST(EnumerateCycles, SixCycleNeedsDepthThree) {
  const auto pairs = ring(6);
  const auto g = build_graph(pairs);
  EXPECT_EQ(enumerate_cycles(g, pairs[0].first, {3, 6, 3}).size(), 1u);
  EXPECT_THROW(enumerate_cycles(g, pairs[0].first, {3, 6, 2}), Error);
}

oracle::EntryCycle to_entries(const TranslationGraph& g, const Cycle& c) {
  oracle::EntryCycle out;
  for (VertexId v : c) out.push_back(g.entry(v));
  return out;
}

// Independent oracle: unrestricted DFS over all simple paths, then filter.
TEST(EnumerateCycles, MatchesUnboundedBruteForceOnSmallGraphs) {
  PortableRng rng(2024);
  const CycleConstraints variants[] = {{3, 6, 3}, {4, 6, 3}, {4, 4, 2}, {3, 5, 3}, {5, 8, 4}, {3, 4, 3}};
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 4 + static_cast<int>(rng.below(9));  // 4..12 vertices
    const auto pairs = testgen::random_pairs(rng, {n, 2 + static_cast<int>(rng.below(3)), 0.45, {"n"}});
    if (pairs.empty()) continue;
    const auto g = build_graph(pairs);
    const auto adj = oracle::adjacency(pairs);
    const auto& c = variants[iter % std::size(variants)];
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      std::set<oracle::EntryCycle> got;
      for (const auto& cyc : enumerate_cycles(g, g.entry(s), c)) {
        ASSERT_TRUE(got.insert(to_entries(g, cyc)).second) << "cycle reported twice";
      }
      const auto expected =
          oracle::constrained_cycles(adj, g.entry(s), c.min_len, c.max_len, c.context_depth, /*bound_search=*/false);
      ASSERT_EQ(got, expected) << "iteration " << iter << " source " << g.entry(s);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(EnumerateCycles, EveryCyclePassesIndependentVerifier) {
  PortableRng rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    const auto pairs = testgen::random_pairs(rng, {26, 4, 0.2, {"n"}});
    if (pairs.empty()) continue;
    const auto g = build_graph(pairs);
    const auto adj = oracle::adjacency(pairs);
    const CycleConstraints c{4, 6, 3};
    const VertexId s = static_cast<VertexId>(rng.below(g.vertex_count()));
    const auto dist = oracle::bfs(adj, g.entry(s));
    for (const auto& cyc : enumerate_cycles(g, g.entry(s), c)) {
      const int k = static_cast<int>(cyc.size());
      ASSERT_GE(k, c.min_len);
      ASSERT_LE(k, c.max_len);
      ASSERT_EQ(cyc.front(), s);
      ASSERT_EQ(std::set<VertexId>(cyc.begin(), cyc.end()).size(), cyc.size());
      for (int i = 0; i < k; ++i) {
        ASSERT_TRUE(oracle::connected(adj, g.entry(cyc[i]), g.entry(cyc[(i + 1) % k])));
        ASSERT_LE(dist.at(g.entry(cyc[i])), c.context_depth);
      }
      const double d = cycle_density(g, cyc);
      ASSERT_GT(d, 0.0);
      ASSERT_LE(d, 1.0);
      ASSERT_GE(d, 2.0 / (k - 1) - 1e-15);
      ASSERT_EQ(d == 1.0, induced_edge_count(g, cyc) == k * (k - 1) / 2);
    }
  }
}

}  // namespace
}  // namespace bidixgen
