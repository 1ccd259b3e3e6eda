#ifndef BIDIXGEN_SYNTH_HPP
#define BIDIXGEN_SYNTH_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bidixgen/dictionary_io.hpp"
#include "bidixgen/error.hpp"
#include "bidixgen/eval.hpp"
#include "bidixgen/translation_graph.hpp"

namespace bidixgen {

/// Portable random source: the raw std::mt19937_64 stream (fully specified by
/// the standard) with integer and real draws derived by hand, because the
/// standard distributions differ between library implementations.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), unbiased by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

struct SynthParams {
  int n_langs = 3;
  int n_senses = 50;
  /// Words per (sense, language) before polysemy adds shared words.
  int words_per_sense_per_lang = 1;
  double polysemy_rate = 0.0;
  double edge_prob = 0.5;
  std::uint64_t seed = 1;

  void validate() const {
    if (n_langs < 2) throw Error(ErrorKind::InvalidSpec, "synthetic graphs need at least 2 languages");
    if (n_langs > 26 * 26) throw Error(ErrorKind::InvalidSpec, "too many synthetic languages");
    if (n_senses < 1) throw Error(ErrorKind::InvalidSpec, "synthetic graphs need at least 1 sense");
    if (words_per_sense_per_lang < 0) throw Error(ErrorKind::InvalidSpec, "words per sense must be >= 0");
    if (!(polysemy_rate >= 0 && polysemy_rate <= 1) || !(edge_prob >= 0 && edge_prob <= 1)) {
      throw Error(ErrorKind::InvalidSpec, "probabilities must lie in [0, 1]");
    }
  }
};

/// Two-letter code of the i-th synthetic language: aa, ab, ..., zz.
inline std::string synth_language_code(int i) {
  return {static_cast<char>('a' + i / 26), static_cast<char>('a' + i % 26)};
}

struct SynthWord {
  LexicalEntry entry;
  int lang = 0;
  std::vector<int> senses;
};

/// A generated instance: the words with their planted senses, the edge list
/// and the graph built from it.
struct SynthInstance {
  SynthParams params;
  std::vector<std::string> languages;
  std::vector<SynthWord> words;
  std::vector<EntryPair> edges;
  TranslationGraph graph;

  /// Every cross-language word pair sharing a sense, oriented source -> target.
  std::vector<EntryPair> gold_pairs(const std::string& source_lang, const std::string& target_lang) const {
    std::map<int, std::vector<const SynthWord*>> src_by_sense, tgt_by_sense;
    for (const auto& w : words) {
      for (int s : w.senses) {
        if (w.entry.lang == source_lang) src_by_sense[s].push_back(&w);
        if (w.entry.lang == target_lang) tgt_by_sense[s].push_back(&w);
      }
    }
    std::vector<EntryPair> out;
    for (const auto& [s, srcs] : src_by_sense) {
      const auto it = tgt_by_sense.find(s);
      if (it == tgt_by_sense.end()) continue;
      for (const auto* a : srcs) {
        for (const auto* b : it->second) out.emplace_back(a->entry, b->entry);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Lexicon gold(const std::string& source_lang, const std::string& target_lang) const {
    return to_lexicon(source_lang, target_lang, gold_pairs(source_lang, target_lang));
  }
};

/// Planted-sense generator. Each (sense, language) receives
/// words_per_sense_per_lang words; a word joins one extra sense with
/// probability polysemy_rate; every cross-language pair of words sharing a sense becomes an edge with
/// probability edge_prob. Edge draws happen after all sense assignment, and
/// one draw is consumed per candidate edge regardless of edge_prob, so two
/// instances that differ only in edge_prob share their senses and have nested
/// edge sets.
inline SynthInstance generate(const SynthParams& params) {
  params.validate();
  PortableRng rng(params.seed);
  SynthInstance inst;
  inst.params = params;
  for (int l = 0; l < params.n_langs; ++l) inst.languages.push_back(synth_language_code(l));

  // members[sense][lang] -> word indices
  std::vector<std::vector<std::vector<std::size_t>>> members(
      params.n_senses, std::vector<std::vector<std::size_t>>(params.n_langs));
  for (int s = 0; s < params.n_senses; ++s) {
    for (int l = 0; l < params.n_langs; ++l) {
      for (int i = 0; i < params.words_per_sense_per_lang; ++i) {
        SynthWord w;
        w.lang = l;
        w.senses = {s};
        w.entry = LexicalEntry{"w" + std::to_string(s) + "_" + inst.languages[l] + "_" + std::to_string(i),
                               inst.languages[l], "n"};
        members[s][l].push_back(inst.words.size());
        inst.words.push_back(std::move(w));
      }
    }
  }

  for (std::size_t i = 0; i < inst.words.size(); ++i) {
    auto& w = inst.words[i];
    if (!rng.bernoulli(params.polysemy_rate) || params.n_senses < 2) continue;
    int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(params.n_senses - 1)));
    if (extra >= w.senses.front()) ++extra;
    w.senses.push_back(extra);
    members[extra][w.lang].push_back(i);
    const auto underscore = w.entry.rep.find('_');
    w.entry.rep.insert(underscore, "+" + std::to_string(extra));
  }

  for (int s = 0; s < params.n_senses; ++s) {
    for (int la = 0; la < params.n_langs; ++la) {
      for (int lb = la + 1; lb < params.n_langs; ++lb) {
        for (std::size_t u : members[s][la]) {
          for (std::size_t v : members[s][lb]) {
            if (rng.bernoulli(params.edge_prob)) inst.edges.emplace_back(inst.words[u].entry, inst.words[v].entry);
          }
        }
      }
    }
  }
  std::sort(inst.edges.begin(), inst.edges.end());
  inst.edges.erase(std::unique(inst.edges.begin(), inst.edges.end()), inst.edges.end());
  inst.graph = build_graph(inst.edges);
  return inst;
}

/// Writes `manifest.tsv`, `dict/<a>-<b>.tsv` for every language pair and
/// `gold/<a>-<b>.tsv` under `dir`. Dictionaries without edges are header-only.
inline void write_synth(const SynthInstance& inst, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "dict");
  fs::create_directories(dir / "gold");
  std::vector<DictionarySpec> specs;
  for (std::size_t i = 0; i < inst.languages.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.languages.size(); ++j) {
      const auto& a = inst.languages[i];
      const auto& b = inst.languages[j];
      const std::string name = a + "-" + b + ".tsv";
      {
        std::ofstream out(dir / "dict" / name, std::ios::binary);
        write_dictionary(out, inst.graph.translation_pairs(a, b), "synthetic dictionary " + a + "-" + b);
        if (!out) throw Error(ErrorKind::MissingFile, "cannot write " + (dir / "dict" / name).string());
      }
      {
        std::ofstream out(dir / "gold" / name, std::ios::binary);
        write_dictionary(out, inst.gold_pairs(a, b), "gold src=" + a + " tgt=" + b);
        if (!out) throw Error(ErrorKind::MissingFile, "cannot write " + (dir / "gold" / name).string());
      }
      specs.push_back({fs::path("dict") / name, a, b});
    }
  }
  std::ofstream manifest(dir / "manifest.tsv", std::ios::binary);
  write_manifest(manifest, specs);
  if (!manifest) throw Error(ErrorKind::MissingFile, "cannot write " + (dir / "manifest.tsv").string());
}

}  // namespace bidixgen

#endif  // BIDIXGEN_SYNTH_HPP
