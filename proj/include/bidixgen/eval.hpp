#ifndef BIDIXGEN_EVAL_HPP
#define BIDIXGEN_EVAL_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bidixgen/error.hpp"
#include "bidixgen/inference.hpp"
#include "bidixgen/translation_graph.hpp"

namespace bidixgen {

/// A word inside one fixed language: written form plus POS.
struct Word {
  std::string rep;
  std::string pos;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

using WordPair = std::pair<Word, Word>;

/// A directed bilingual dictionary between two languages, confidence-free.
struct Lexicon {
  std::string source_lang;
  std::string target_lang;
  std::set<WordPair> pairs;

  std::set<Word> source_words() const {
    std::set<Word> out;
    for (const auto& p : pairs) out.insert(p.first);
    return out;
  }
  std::set<Word> target_words() const {
    std::set<Word> out;
    for (const auto& p : pairs) out.insert(p.second);
    return out;
  }
};

inline Lexicon to_lexicon(std::string source_lang, std::string target_lang, std::span<const ScoredPair> pairs) {
  Lexicon out{std::move(source_lang), std::move(target_lang), {}};
  for (const auto& p : pairs) {
    if (p.source.lang != out.source_lang || p.target.lang != out.target_lang) {
      throw Error(ErrorKind::LanguageMismatch, "scored pair " + p.source.lang + "-" + p.target.lang + " in a " +
                                                   out.source_lang + "-" + out.target_lang + " lexicon");
    }
    out.pairs.emplace(Word{p.source.rep, p.source.pos}, Word{p.target.rep, p.target.pos});
  }
  return out;
}

inline Lexicon to_lexicon(std::string source_lang, std::string target_lang, std::span<const EntryPair> pairs) {
  Lexicon out{std::move(source_lang), std::move(target_lang), {}};
  for (const auto& [a, b] : pairs) {
    if (a.lang != out.source_lang || b.lang != out.target_lang) {
      throw Error(ErrorKind::LanguageMismatch, "entry pair " + a.lang + "-" + b.lang + " in a " + out.source_lang +
                                                   "-" + out.target_lang + " lexicon");
    }
    out.pairs.emplace(Word{a.rep, a.pos}, Word{b.rep, b.pos});
  }
  return out;
}

/// Per-language word sets of an input graph.
using Vocabulary = std::map<std::string, std::set<Word>, std::less<>>;

inline Vocabulary vocabulary_of(const TranslationGraph& g) {
  Vocabulary v;
  for (const auto& e : g.entries()) v[e.lang].insert(Word{e.rep, e.pos});
  return v;
}

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double coverage = 0.0;
  double bwp = 0.0;
  double bwr = 0.0;

  std::size_t predicted = 0;
  std::size_t gold = 0;
  std::size_t correct = 0;
  std::size_t gold_sources = 0;
  std::size_t covered_sources = 0;
  std::size_t bwp_denominator = 0;
  std::size_t bwp_correct = 0;
  std::size_t bwr_denominator = 0;
  std::size_t bwr_correct = 0;

  /// Names of metrics whose denominator was empty and were reported as 0.
  std::vector<std::string> warnings;
};

namespace detail {

inline double ratio(std::size_t num, std::size_t den, const char* metric, std::vector<std::string>& warnings) {
  if (den == 0) {
    warnings.emplace_back(metric);
    return 0.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace detail

/// Scores a prediction lexicon against a gold lexicon.
///
/// BWP (both-word precision) only counts predicted pairs whose source word is
/// in the gold source vocabulary and whose target word is in the gold target
/// vocabulary. BWR (both-word recall) only counts gold pairs whose two words
/// both occur in the input graph vocabulary. Coverage is the fraction of
/// distinct gold source words (rep, pos) with at least one prediction.
inline EvalReport evaluate(const Lexicon& pred, const Lexicon& gold, const Vocabulary& input_vocab) {
  if (pred.source_lang != gold.source_lang || pred.target_lang != gold.target_lang) {
    throw Error(ErrorKind::LanguageMismatch, "prediction " + pred.source_lang + "-" + pred.target_lang +
                                                 " vs gold " + gold.source_lang + "-" + gold.target_lang);
  }
  EvalReport r;
  r.predicted = pred.pairs.size();
  r.gold = gold.pairs.size();
  for (const auto& p : pred.pairs) r.correct += gold.pairs.count(p);

  const auto gold_src = gold.source_words();
  const auto gold_tgt = gold.target_words();
  std::set<Word> predicted_src;
  for (const auto& p : pred.pairs) predicted_src.insert(p.first);
  r.gold_sources = gold_src.size();
  for (const auto& w : gold_src) r.covered_sources += predicted_src.count(w);

  for (const auto& p : pred.pairs) {
    if (gold_src.count(p.first) && gold_tgt.count(p.second)) {
      ++r.bwp_denominator;
      r.bwp_correct += gold.pairs.count(p);
    }
  }

  static const std::set<Word> kNone;
  const auto src_it = input_vocab.find(gold.source_lang);
  const auto tgt_it = input_vocab.find(gold.target_lang);
  const auto& in_src = src_it == input_vocab.end() ? kNone : src_it->second;
  const auto& in_tgt = tgt_it == input_vocab.end() ? kNone : tgt_it->second;
  for (const auto& p : gold.pairs) {
    if (in_src.count(p.first) && in_tgt.count(p.second)) {
      ++r.bwr_denominator;
      r.bwr_correct += pred.pairs.count(p);
    }
  }

  r.precision = detail::ratio(r.correct, r.predicted, "precision", r.warnings);
  r.recall = detail::ratio(r.correct, r.gold, "recall", r.warnings);
  r.coverage = detail::ratio(r.covered_sources, r.gold_sources, "coverage", r.warnings);
  r.bwp = detail::ratio(r.bwp_correct, r.bwp_denominator, "bwp", r.warnings);
  r.bwr = detail::ratio(r.bwr_correct, r.bwr_denominator, "bwr", r.warnings);
  r.f1 = (r.precision + r.recall) > 0 ? 2 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
  return r;
}

}  // namespace bidixgen

#endif  // BIDIXGEN_EVAL_HPP
