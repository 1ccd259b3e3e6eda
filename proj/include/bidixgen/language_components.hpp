#ifndef BIDIXGEN_LANGUAGE_COMPONENTS_HPP
#define BIDIXGEN_LANGUAGE_COMPONENTS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bidixgen/dictionary_io.hpp"

namespace bidixgen {

/// Language metagraph: one node per language code, one edge per dictionary.
/// Parallel edges (two dictionaries for the same pair) are kept distinct.
class LanguageMetagraph {
 public:
  struct MetaEdge {
    int a;
    int b;
    std::size_t spec_index;
  };

  explicit LanguageMetagraph(std::span<const DictionarySpec> specs) {
    std::set<std::string> langs;
    for (const auto& s : specs) {
      langs.insert(s.lang_a);
      langs.insert(s.lang_b);
    }
    langs_.assign(langs.begin(), langs.end());
    adj_.resize(langs_.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const int a = index_of(specs[i].lang_a);
      const int b = index_of(specs[i].lang_b);
      edges_.push_back({a, b, i});
      adj_[a].push_back(static_cast<int>(i));
      adj_[b].push_back(static_cast<int>(i));
    }
  }

  const std::vector<std::string>& languages() const { return langs_; }
  const std::vector<MetaEdge>& edges() const { return edges_; }

  /// Biconnected components as lists of edge indices (Hopcroft-Tarjan with an edge stack).
  std::vector<std::vector<int>> biconnected_components() const {
    const int n = static_cast<int>(langs_.size());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> components;
    int timer = 0;

    auto other = [&](int e, int v) { return edges_[e].a == v ? edges_[e].b : edges_[e].a; };
    auto dfs = [&](auto& self, int v, int parent_edge) -> void {
      disc[v] = low[v] = timer++;
      for (int e : adj_[v]) {
        if (e == parent_edge) continue;
        const int w = other(e, v);
        if (disc[w] < 0) {
          edge_stack.push_back(e);
          self(self, w, e);
          low[v] = std::min(low[v], low[w]);
          if (low[w] >= disc[v]) {
            std::vector<int> comp;
            while (true) {
              const int top = edge_stack.back();
              edge_stack.pop_back();
              comp.push_back(top);
              if (top == e) break;
            }
            components.push_back(std::move(comp));
          }
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
      }
    };
    for (int v = 0; v < n; ++v) {
      if (disc[v] < 0) dfs(dfs, v, -1);
    }
    return components;
  }

 private:
  int index_of(const std::string& lang) const {
    return static_cast<int>(std::lower_bound(langs_.begin(), langs_.end(), lang) - langs_.begin());
  }

  std::vector<std::string> langs_;
  std::vector<MetaEdge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Dictionaries whose language edge lies in the largest biconnected component
/// of the language metagraph. Largest means most languages, then most
/// dictionaries, then the lexicographically smallest sorted language list.
/// The result is sorted, so it does not depend on input order.
inline std::vector<DictionarySpec> largest_biconnected_language_component(std::span<const DictionarySpec> raw_specs) {
  std::vector<DictionarySpec> specs;
  specs.reserve(raw_specs.size());
  for (const auto& s : raw_specs) specs.push_back(normalize_spec(s));
  std::sort(specs.begin(), specs.end());
  if (specs.empty()) return {};

  const LanguageMetagraph meta(specs);
  const auto& langs = meta.languages();

  struct Candidate {
    std::vector<std::string> nodes;
    std::vector<int> edges;
  };
  std::optional<Candidate> best;
  for (auto& comp : meta.biconnected_components()) {
    std::set<std::string> nodes;
    for (int e : comp) {
      nodes.insert(langs[meta.edges()[e].a]);
      nodes.insert(langs[meta.edges()[e].b]);
    }
    Candidate cand{{nodes.begin(), nodes.end()}, std::move(comp)};
    const bool better = !best || cand.nodes.size() > best->nodes.size() ||
                        (cand.nodes.size() == best->nodes.size() &&
                         (cand.edges.size() > best->edges.size() ||
                          (cand.edges.size() == best->edges.size() && cand.nodes < best->nodes)));
    if (better) best = std::move(cand);
  }

  std::vector<DictionarySpec> out;
  for (int e : best->edges) out.push_back(specs[meta.edges()[e].spec_index]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bidixgen

#endif  // BIDIXGEN_LANGUAGE_COMPONENTS_HPP
