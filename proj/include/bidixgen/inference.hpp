#ifndef BIDIXGEN_INFERENCE_HPP
#define BIDIXGEN_INFERENCE_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bidixgen/cycles.hpp"
#include "bidixgen/error.hpp"
#include "bidixgen/parallel.hpp"
#include "bidixgen/translation_graph.hpp"

namespace bidixgen {

enum class Provenance { cycle, type_b, transitive };

constexpr std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::cycle: return "cycle";
    case Provenance::type_b: return "type_b";
    case Provenance::transitive: return "transitive";
  }
  return "cycle";
}

inline std::optional<Provenance> parse_provenance(std::string_view s) {
  if (s == "cycle") return Provenance::cycle;
  if (s == "type_b") return Provenance::type_b;
  if (s == "transitive") return Provenance::transitive;
  return std::nullopt;
}

/// A candidate translation with its confidence in [0, 1].
struct ScoredPair {
  LexicalEntry source;
  LexicalEntry target;
  double confidence = 0.0;
  Provenance provenance = Provenance::cycle;
};

inline bool same_pair(const ScoredPair& a, const ScoredPair& b) {
  return a.source == b.source && a.target == b.target;
}

inline bool pair_less(const ScoredPair& a, const ScoredPair& b) {
  if (a.source != b.source) return a.source < b.source;
  return a.target < b.target;
}

struct InferenceParams {
  CycleConstraints constraints{};
  double threshold = 0.6;
  std::set<std::string> transitive_pos{"np", "num"};
  int transitive_depth = 4;
};

namespace detail {

inline void require_language(const TranslationGraph& g, std::string_view lang) {
  if (!g.has_language(lang)) throw Error(ErrorKind::UnknownLanguage, "language not in graph: " + std::string(lang));
}

/// Dense small-integer ids for the POS tags of a graph.
inline std::vector<int> intern_pos(const TranslationGraph& g) {
  std::unordered_map<std::string_view, int> ids;
  std::vector<int> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto [it, _] = ids.emplace(g.entry(v).pos, static_cast<int>(ids.size()));
    out[v] = it->second;
  }
  return out;
}

}  // namespace detail

/// Cycle Density scoring of every (source_lang, target_lang) word pair.
///
/// A target b is scored for source a when b has a's POS, is not already a
/// neighbour of a, and lies on at least one constrained cycle through a. The
/// confidence is the highest induced density over those cycles. No threshold
/// is applied. Output is sorted by (source, target) and does not depend on
/// the thread count.
inline std::vector<ScoredPair> cd_predict(const TranslationGraph& g, std::string_view source_lang,
                                          std::string_view target_lang, const InferenceParams& params,
                                          unsigned threads = 1) {
  detail::require_language(g, source_lang);
  detail::require_language(g, target_lang);
  params.constraints.validate();

  const auto sources = g.language_vertices(source_lang);
  const auto pos_id = detail::intern_pos(g);
  std::vector<char> in_target(g.vertex_count(), 0);
  for (VertexId v : g.language_vertices(target_lang)) in_target[v] = 1;

  struct Worker {
    CycleEnumerator enumerator;
    std::vector<double> best;
    std::vector<VertexId> hits;
  };
  std::vector<std::vector<ScoredPair>> per_source(sources.size());

  parallel_for(
      sources.size(), threads,
      [&] { return Worker{CycleEnumerator(g), std::vector<double>(g.vertex_count(), -1.0), {}}; },
      [&](Worker& w, std::size_t i) {
        const VertexId a = sources[i];
        const int a_pos = pos_id[a];
        w.enumerator.for_each_cycle(a, params.constraints, [&](std::span<const VertexId> cyc) {
          bool any = false;
          for (std::size_t j = 1; j < cyc.size() && !any; ++j) any = in_target[cyc[j]] && pos_id[cyc[j]] == a_pos;
          if (!any) return;
          const double density = induced_density(induced_edge_count(g, cyc), static_cast<int>(cyc.size()));
          for (std::size_t j = 1; j < cyc.size(); ++j) {
            const VertexId b = cyc[j];
            if (!in_target[b] || pos_id[b] != a_pos) continue;
            if (w.best[b] < 0) w.hits.push_back(b);
            w.best[b] = std::max(w.best[b], density);
          }
        });
        std::sort(w.hits.begin(), w.hits.end());
        auto& out = per_source[i];
        for (VertexId b : w.hits) {
          if (!g.has_edge(a, b)) out.push_back({g.entry(a), g.entry(b), w.best[b], Provenance::cycle});
          w.best[b] = -1.0;
        }
        w.hits.clear();
      });

  std::vector<ScoredPair> result;
  for (auto& chunk : per_source) {
    result.insert(result.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  return result;
}

/// Transitive translation for non-polysemous POS: b is predicted for a when
/// both carry the same tag from pos_set and a path of at most `depth` edges
/// joins them through vertices whose tags are all in pos_set. Existing
/// edges are never re-emitted. Confidence is 1.
inline std::vector<ScoredPair> transitive_predict(const TranslationGraph& g, std::string_view source_lang,
                                                  std::string_view target_lang, const std::set<std::string>& pos_set,
                                                  int depth) {
  detail::require_language(g, source_lang);
  detail::require_language(g, target_lang);
  if (depth < 1) throw Error(ErrorKind::InvalidConstraints, "transitive depth must be >= 1");

  std::vector<char> allowed(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) allowed[v] = pos_set.count(g.entry(v).pos) > 0;

  std::vector<ScoredPair> out;
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<VertexId> seen;
  for (VertexId a : g.language_vertices(source_lang)) {
    if (!allowed[a]) continue;
    dist[a] = 0;
    seen.assign(1, a);
    for (std::size_t head = 0; head < seen.size(); ++head) {
      const VertexId v = seen[head];
      if (dist[v] == depth) continue;
      for (VertexId w : g.neighbors(v)) {
        if (allowed[w] && dist[w] < 0) {
          dist[w] = dist[v] + 1;
          seen.push_back(w);
        }
      }
    }
    std::vector<VertexId> hits;
    for (VertexId b : seen) {
      const auto& eb = g.entry(b);
      if (b != a && eb.lang == target_lang && eb.pos == g.entry(a).pos && !g.has_edge(a, b)) hits.push_back(b);
    }
    std::sort(hits.begin(), hits.end());
    for (VertexId b : hits) out.push_back({g.entry(a), g.entry(b), 1.0, Provenance::transitive});
    for (VertexId v : seen) dist[v] = -1;
  }
  return out;
}

}  // namespace bidixgen

#endif  // BIDIXGEN_INFERENCE_HPP
