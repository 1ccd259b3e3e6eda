#ifndef BIDIXGEN_TRANSLATION_GRAPH_HPP
#define BIDIXGEN_TRANSLATION_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bidixgen/error.hpp"
#include "bidixgen/lexical_entry.hpp"

namespace bidixgen {

using VertexId = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph of lexical entries.
///
/// Vertex ids are the ranks of the entries in sorted order, so two graphs
/// built from the same pair set are identical regardless of input order.
/// Adjacency is stored in CSR form with sorted neighbour lists.
class TranslationGraph {
 public:
  using LanguagePair = std::pair<std::string, std::string>;

  TranslationGraph() : offsets_(1, 0) {}

  std::size_t vertex_count() const noexcept { return entries_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const LexicalEntry& entry(VertexId v) const { return entries_.at(v); }
  std::span<const LexicalEntry> entries() const noexcept { return entries_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::optional<VertexId> find(const LexicalEntry& e) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), e);
    if (it == entries_.end() || *it != e) return std::nullopt;
    return static_cast<VertexId>(it - entries_.begin());
  }

  VertexId require(const LexicalEntry& e) const {
    if (auto id = find(e)) return *id;
    throw Error(ErrorKind::UnknownVertex, "entry not in graph: " + e.rep + "/" + e.lang + "/" + e.pos);
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(VertexId a, VertexId b) const {
    if (degree(a) > degree(b)) std::swap(a, b);
    const auto adj = neighbors(a);
    return std::binary_search(adj.begin(), adj.end(), b);
  }

  bool has_language(std::string_view lang) const { return lang_index_.find(lang) != lang_index_.end(); }

  /// Vertex ids of one language, ascending; empty for an unknown language.
  std::span<const VertexId> language_vertices(std::string_view lang) const {
    const auto it = lang_index_.find(lang);
    if (it == lang_index_.end()) return {};
    return it->second;
  }

  std::vector<std::string> languages() const {
    std::vector<std::string> out;
    out.reserve(lang_index_.size());
    for (const auto& [lang, _] : lang_index_) out.push_back(lang);
    return out;
  }

  /// Edges joining the two languages (either argument order).
  std::span<const Edge> language_pair_edges(std::string_view a, std::string_view b) const {
    LanguagePair key{std::string(std::min(a, b)), std::string(std::max(a, b))};
    const auto it = pair_index_.find(key);
    if (it == pair_index_.end()) return {};
    return it->second;
  }

  /// Translation pairs between two languages, oriented (lang_a entry, lang_b entry), sorted.
  std::vector<EntryPair> translation_pairs(std::string_view lang_a, std::string_view lang_b) const {
    std::vector<EntryPair> out;
    for (const Edge& e : language_pair_edges(lang_a, lang_b)) {
      const auto& x = entries_[e.u];
      const auto& y = entries_[e.v];
      if (x.lang == lang_a) {
        out.emplace_back(x, y);
      } else {
        out.emplace_back(y, x);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Breadth-first distances from source, -1 for vertices farther than
  /// max_depth or unreachable.
  std::vector<int> bfs_distances(VertexId source, int max_depth) const {
    std::vector<int> dist(vertex_count(), -1);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      if (dist[v] == max_depth) continue;
      for (VertexId w : neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  /// Induced subgraph on a vertex subset of this graph.
  TranslationGraph induced_subgraph(std::span<const VertexId> vertices) const {
    std::vector<char> keep(vertex_count(), 0);
    for (VertexId v : vertices) keep.at(v) = 1;
    std::vector<EntryPair> pairs;
    std::vector<LexicalEntry> isolated;
    for (VertexId v : vertices) {
      bool any = false;
      for (VertexId w : neighbors(v)) {
        if (!keep[w]) continue;
        any = true;
        if (v < w) pairs.emplace_back(entries_[v], entries_[w]);
      }
      if (!any) isolated.push_back(entries_[v]);
    }
    return from_pairs(pairs, isolated);
  }

  /// Assembles a graph from translation pairs plus optional isolated entries.
  /// Throws IntraLanguagePair if a pair joins two entries of the same language.
  static TranslationGraph from_pairs(std::span<const EntryPair> pairs,
                                     std::span<const LexicalEntry> isolated = {}) {
    TranslationGraph g;
    std::vector<LexicalEntry> all;
    all.reserve(pairs.size() * 2 + isolated.size());
    for (const auto& [a, b] : pairs) {
      if (a.lang == b.lang) {
        throw Error(ErrorKind::IntraLanguagePair,
                    "pair joins two '" + a.lang + "' entries: " + a.rep + " / " + b.rep);
      }
      all.push_back(a);
      all.push_back(b);
    }
    all.insert(all.end(), isolated.begin(), isolated.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    g.entries_ = std::move(all);

    const auto id_of = [&](const LexicalEntry& e) {
      return static_cast<VertexId>(std::lower_bound(g.entries_.begin(), g.entries_.end(), e) - g.entries_.begin());
    };
    g.edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      VertexId u = id_of(a), v = id_of(b);
      if (u > v) std::swap(u, v);
      g.edges_.push_back({u, v});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    const std::size_t n = g.entries_.size();
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
      g.targets_[fill[e.u]++] = e.v;
      g.targets_[fill[e.v]++] = e.u;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
    }

    for (VertexId v = 0; v < n; ++v) g.lang_index_[g.entries_[v].lang].push_back(v);
    for (const Edge& e : g.edges_) {
      const auto& la = g.entries_[e.u].lang;
      const auto& lb = g.entries_[e.v].lang;
      g.pair_index_[LanguagePair{std::min(la, lb), std::max(la, lb)}].push_back(e);
    }
    return g;
  }

 private:
  std::vector<LexicalEntry> entries_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::map<std::string, std::vector<VertexId>, std::less<>> lang_index_;
  std::map<LanguagePair, std::vector<Edge>> pair_index_;
};

inline TranslationGraph build_graph(std::span<const EntryPair> pairs) {
  return TranslationGraph::from_pairs(pairs);
}

/// Induced subgraph on every vertex within `depth` hops of `source`.
inline TranslationGraph context_subgraph(const TranslationGraph& g, const LexicalEntry& source, int depth) {
  if (depth < 1) throw Error(ErrorKind::InvalidConstraints, "context depth must be >= 1");
  const VertexId s = g.require(source);
  const auto dist = g.bfs_distances(s, depth);
  std::vector<VertexId> within;
  for (VertexId v = 0; v < dist.size(); ++v) {
    if (dist[v] >= 0) within.push_back(v);
  }
  return g.induced_subgraph(within);
}

}  // namespace bidixgen

#endif  // BIDIXGEN_TRANSLATION_GRAPH_HPP
