#ifndef BIDIXGEN_TESTS_RANDOM_GRAPHS_HPP
#define BIDIXGEN_TESTS_RANDOM_GRAPHS_HPP

#include <string>
#include <vector>

#include "bidixgen/lexical_entry.hpp"
#include "bidixgen/otic.hpp"
#include "bidixgen/synth.hpp"

namespace testgen {

using bidixgen::EntryPair;
using bidixgen::LexicalEntry;
using bidixgen::PortableRng;

inline std::string lang_code(int i) { return bidixgen::synth_language_code(i); }

struct RandomGraphSpec {
  int vertices = 20;
  int langs = 3;
  double edge_prob = 0.2;
  std::vector<std::string> pos_tags{"n"};
};

/// Random cross-language graph; vertex i gets a random language and POS.
inline std::vector<EntryPair> random_pairs(PortableRng& rng, const RandomGraphSpec& spec) {
  std::vector<LexicalEntry> vs;
  for (int i = 0; i < spec.vertices; ++i) {
    const int lang = i < spec.langs ? i : static_cast<int>(rng.below(spec.langs));
    const auto& pos = spec.pos_tags[rng.below(spec.pos_tags.size())];
    vs.push_back(LexicalEntry{"v" + std::to_string(i), lang_code(lang), pos});
  }
  std::vector<EntryPair> pairs;
  for (int i = 0; i < spec.vertices; ++i) {
    for (int j = i + 1; j < spec.vertices; ++j) {
      if (vs[i].lang != vs[j].lang && rng.bernoulli(spec.edge_prob)) pairs.emplace_back(vs[i], vs[j]);
    }
  }
  return pairs;
}

struct PivotSpec {
  int source_words = 6;
  int pivot_words = 5;
  int target_words = 6;
  double edge_prob = 0.35;
  std::vector<std::string> pos_tags{"n", "v"};
};

/// Random instance containing only (A, C) and (C, B) dictionaries:
/// A = "aa", C = "ac", B = "ab".
inline std::vector<EntryPair> random_pivot_pairs(PortableRng& rng, const PivotSpec& spec) {
  auto words = [&](int n, const std::string& lang, const char* prefix) {
    std::vector<LexicalEntry> out;
    for (int i = 0; i < n; ++i) {
      out.push_back(LexicalEntry{prefix + std::to_string(i), lang, spec.pos_tags[rng.below(spec.pos_tags.size())]});
    }
    return out;
  };
  const auto a = words(spec.source_words, "aa", "a");
  const auto c = words(spec.pivot_words, "ac", "c");
  const auto b = words(spec.target_words, "ab", "b");
  std::vector<EntryPair> pairs;
  for (const auto& x : a) {
    for (const auto& y : c) {
      if (rng.bernoulli(spec.edge_prob)) pairs.emplace_back(x, y);
    }
  }
  for (const auto& y : c) {
    for (const auto& z : b) {
      if (rng.bernoulli(spec.edge_prob)) pairs.emplace_back(y, z);
    }
  }
  return pairs;
}

inline bidixgen::PivotTable pivot_table_of(const std::vector<EntryPair>& pairs) {
  bidixgen::PivotTable t;
  for (const auto& [x, y] : pairs) {
    if (x.lang == "aa" && y.lang == "ac") t.forward[x].insert(y);
    if (x.lang == "ac" && y.lang == "ab") t.onward[x].insert(y);
  }
  return t;
}

}  // namespace testgen

#endif  // BIDIXGEN_TESTS_RANDOM_GRAPHS_HPP
