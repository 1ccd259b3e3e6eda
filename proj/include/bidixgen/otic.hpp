#ifndef BIDIXGEN_OTIC_HPP
#define BIDIXGEN_OTIC_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "bidixgen/lexical_entry.hpp"
#include "bidixgen/translation_graph.hpp"

namespace bidixgen {

using EntrySet = std::set<LexicalEntry>;
using PairSet = std::set<EntryPair>;

/// The two dictionaries (A, C) and (C, B) around one pivot language C.
struct PivotTable {
  std::map<LexicalEntry, EntrySet> forward;  // A entry -> C translations
  std::map<LexicalEntry, EntrySet> onward;   // C entry -> B translations

  /// Restricts a graph to its (source, pivot) and (pivot, target) edges.
  static PivotTable from_graph(const TranslationGraph& g, std::string_view source_lang, std::string_view pivot_lang,
                               std::string_view target_lang) {
    PivotTable t;
    for (const auto& [a, c] : g.translation_pairs(source_lang, pivot_lang)) t.forward[a].insert(c);
    for (const auto& [c, b] : g.translation_pairs(pivot_lang, target_lang)) t.onward[c].insert(b);
    return t;
  }

  bool empty() const { return forward.empty() && onward.empty(); }
};

/// Type A: a and b share at least two pivot translations (same POS).
inline PairSet otic_type_a(const PivotTable& t) {
  PairSet out;
  std::map<LexicalEntry, int> shared;
  for (const auto& [a, pivots] : t.forward) {
    shared.clear();
    for (const auto& c : pivots) {
      const auto it = t.onward.find(c);
      if (it == t.onward.end()) continue;
      for (const auto& b : it->second) {
        if (b.pos == a.pos) ++shared[b];
      }
    }
    for (const auto& [b, n] : shared) {
      if (n >= 2) out.emplace(a, b);
    }
  }
  return out;
}

/// Type B: consulting a through the pivot reaches exactly one entry with a's POS.
inline PairSet otic_type_b(const PivotTable& t) {
  PairSet out;
  for (const auto& [a, pivots] : t.forward) {
    const LexicalEntry* only = nullptr;
    bool unique = true;
    for (const auto& c : pivots) {
      const auto it = t.onward.find(c);
      if (it == t.onward.end()) continue;
      for (const auto& b : it->second) {
        if (b.pos != a.pos) continue;
        if (only == nullptr) {
          only = &b;
        } else if (*only != b) {
          unique = false;
          break;
        }
      }
      if (!unique) break;
    }
    if (only != nullptr && unique) out.emplace(a, *only);
  }
  return out;
}

inline PairSet otic_predict(const PivotTable& t) {
  PairSet out = otic_type_a(t);
  const PairSet b = otic_type_b(t);
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace bidixgen

#endif  // BIDIXGEN_OTIC_HPP
