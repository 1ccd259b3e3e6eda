#ifndef BIDIXGEN_ACD_HPP
#define BIDIXGEN_ACD_HPP

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bidixgen/error.hpp"
#include "bidixgen/inference.hpp"
#include "bidixgen/otic.hpp"
#include "bidixgen/translation_graph.hpp"

namespace bidixgen {

struct AcdConfig {
  InferenceParams params{};
  std::string pivot;
  double threshold = 0.6;
};

/// Keeps pairs with confidence >= tau.
inline std::vector<ScoredPair> threshold_filter(std::span<const ScoredPair> pairs, double tau) {
  std::vector<ScoredPair> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out),
               [tau](const ScoredPair& p) { return p.confidence >= tau; });
  return out;
}

namespace detail {

// On equal confidence: type_b, then transitive, then cycle.
constexpr int provenance_rank(Provenance p) {
  switch (p) {
    case Provenance::type_b: return 0;
    case Provenance::transitive: return 1;
    case Provenance::cycle: return 2;
  }
  return 3;
}

}  // namespace detail

/// Unions scored pair lists, keeping one record per (source, target) with the
/// maximum confidence. The result is sorted by (source, target).
inline std::vector<ScoredPair> merge_max(std::initializer_list<std::span<const ScoredPair>> parts) {
  std::vector<ScoredPair> all;
  for (auto part : parts) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end(), [](const ScoredPair& x, const ScoredPair& y) {
    if (!same_pair(x, y)) return pair_less(x, y);
    if (x.confidence != y.confidence) return x.confidence > y.confidence;
    return detail::provenance_rank(x.provenance) < detail::provenance_rank(y.provenance);
  });
  all.erase(std::unique(all.begin(), all.end(), same_pair), all.end());
  return all;
}

/// Cycle Density alone: cycle scores merged with transitive POS pairs, then
/// thresholded at params.threshold.
inline std::vector<ScoredPair> cd_generate(const TranslationGraph& g, std::string_view source_lang,
                                           std::string_view target_lang, const InferenceParams& params,
                                           unsigned threads = 1) {
  const auto cd = cd_predict(g, source_lang, target_lang, params, threads);
  const auto tr = transitive_predict(g, source_lang, target_lang, params.transitive_pos, params.transitive_depth);
  const auto merged = merge_max({cd, tr});
  return threshold_filter(merged, params.threshold);
}

/// OTIC Type-B pairs through the configured pivot, at confidence 1.
inline std::vector<ScoredPair> type_b_pairs(const TranslationGraph& g, std::string_view source_lang,
                                            std::string_view pivot, std::string_view target_lang) {
  std::vector<ScoredPair> out;
  for (const auto& [a, b] : otic_type_b(PivotTable::from_graph(g, source_lang, pivot, target_lang))) {
    out.push_back({a, b, 1.0, Provenance::type_b});
  }
  return out;
}

/// Augmented Cycle Density: cycle-density scores over the whole graph,
/// Type-B pairs through one pivot at confidence 1, and transitive POS pairs,
/// max-merged, stripped of existing edges and thresholded at cfg.threshold.
inline std::vector<ScoredPair> acd_predict(const TranslationGraph& g, std::string_view source_lang,
                                           std::string_view target_lang, const AcdConfig& cfg, unsigned threads = 1) {
  detail::require_language(g, source_lang);
  detail::require_language(g, target_lang);
  detail::require_language(g, cfg.pivot);
  if (cfg.pivot == source_lang || cfg.pivot == target_lang) {
    throw Error(ErrorKind::InvalidSpec, "pivot must differ from source and target languages");
  }
  if (g.language_pair_edges(source_lang, cfg.pivot).empty() || g.language_pair_edges(cfg.pivot, target_lang).empty()) {
    throw Error(ErrorKind::MissingPivotDictionaries,
                "no " + std::string(source_lang) + "-" + cfg.pivot + " or " + cfg.pivot + "-" +
                    std::string(target_lang) + " translations in the input");
  }

  const auto cd = cd_predict(g, source_lang, target_lang, cfg.params, threads);
  const auto tb = type_b_pairs(g, source_lang, cfg.pivot, target_lang);
  const auto tr =
      transitive_predict(g, source_lang, target_lang, cfg.params.transitive_pos, cfg.params.transitive_depth);

  auto merged = merge_max({cd, tb, tr});
  std::erase_if(merged, [&](const ScoredPair& p) {
    const auto a = g.find(p.source);
    const auto b = g.find(p.target);
    return a && b && g.has_edge(*a, *b);
  });
  return threshold_filter(merged, cfg.threshold);
}

}  // namespace bidixgen

#endif  // BIDIXGEN_ACD_HPP
