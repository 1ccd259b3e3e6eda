#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace bidixgen::cli {

namespace {

struct HeaderLanguages {
  std::optional<std::string> source;
  std::optional<std::string> target;
};

// Picks `src=xx` / `tgt=yy` tokens out of a leading comment line.
void scan_header(std::string_view line, HeaderLanguages& langs) {
  std::istringstream tokens{std::string(line.substr(1))};
  std::string tok;
  while (tokens >> tok) {
    if (tok.rfind("src=", 0) == 0) langs.source = tok.substr(4);
    if (tok.rfind("tgt=", 0) == 0) langs.target = tok.substr(4);
  }
}

HeaderLanguages read_header(const std::filesystem::path& path) {
  std::ifstream in(path);
  HeaderLanguages langs;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = text::trim(line);
    if (t.empty()) continue;
    if (t.front() != '#') break;
    scan_header(t, langs);
  }
  return langs;
}

std::optional<std::string> reconcile(const std::optional<std::string>& a, const std::optional<std::string>& b,
                                     const char* what) {
  if (a && b && *a != *b) {
    throw Error(ErrorKind::LanguageMismatch, std::string(what) + " language '" + *a + "' vs '" + *b + "'");
  }
  return a ? a : b;
}

std::string require_lang(const std::optional<std::string>& raw, const char* what) {
  if (!raw) throw UsageError(std::string("cannot determine ") + what + " language; pass it explicitly");
  auto norm = text::normalize_lang(*raw);
  if (!norm) throw UsageError(std::string("invalid ") + what + " language code '" + *raw + "'");
  return *norm;
}

double parse_double(std::string_view s, const char* what) {
  s = text::trim(s);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError(std::string("bad ") + what + ": '" + std::string(s) + "'");
  return v;
}

// 0.6000 -> 0.6, 1.0000 -> 1
std::string format_threshold(double tau) {
  std::string s = format_confidence(tau);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConstraints: return kUsage;
    case ErrorKind::MissingFile:
    case ErrorKind::MalformedLine:
    case ErrorKind::InvalidSpec:
    case ErrorKind::IntraLanguagePair:
    case ErrorKind::UnknownVertex:
    case ErrorKind::UnknownLanguage:
    case ErrorKind::MissingPivotDictionaries:
    case ErrorKind::LanguageMismatch: return kInput;
    case ErrorKind::NotACycle: return kInternal;
  }
  return kInternal;
}

std::string format_confidence(double c) {
  // printf rounds the exact binary value; exact ties follow the current
  // rounding mode, which is round-half-even by default.
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", c);
  return buf;
}

void sort_for_output(std::vector<ScoredPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const ScoredPair& x, const ScoredPair& y) {
    if (x.source.rep != y.source.rep) return x.source.rep < y.source.rep;
    if (x.source.pos != y.source.pos) return x.source.pos < y.source.pos;
    if (x.confidence != y.confidence) return x.confidence > y.confidence;
    if (x.target.rep != y.target.rep) return x.target.rep < y.target.rep;
    return x.target.pos < y.target.pos;
  });
}

void write_predictions(std::ostream& out, std::vector<ScoredPair> pairs, const std::string& source_lang,
                       const std::string& target_lang, const std::string& algorithm) {
  sort_for_output(pairs);
  out << "# bidixgen predictions src=" << source_lang << " tgt=" << target_lang << " algo=" << algorithm << '\n';
  for (const auto& p : pairs) {
    out << p.source.rep << '\t' << p.source.pos << '\t' << p.target.rep << '\t' << p.target.pos << '\t'
        << format_confidence(p.confidence) << '\t' << to_string(p.provenance) << '\n';
  }
}

std::vector<ScoredPair> run_algorithm(const RunConfig& cfg, std::ostream& log) {
  if (cfg.algorithm != "otic" && cfg.algorithm != "cd" && cfg.algorithm != "acd") {
    throw UsageError("unknown algorithm '" + cfg.algorithm + "' (expected otic, cd or acd)");
  }
  const std::string src = require_lang(cfg.source_lang, "source");
  const std::string tgt = require_lang(cfg.target_lang, "target");
  if (src == tgt) throw UsageError("source and target languages must differ");
  std::string pivot;
  if (cfg.algorithm != "cd") {
    if (cfg.pivot.empty()) throw UsageError("--pivot is required for --algo " + cfg.algorithm);
    pivot = require_lang(cfg.pivot, "pivot");
  }
  cfg.params.constraints.validate();
  if (cfg.params.threshold < 0 || cfg.params.threshold > 1) throw UsageError("threshold must lie in [0, 1]");

  auto specs = read_manifest(cfg.manifest);
  if (cfg.bcc_filter) {
    const auto before = specs.size();
    specs = largest_biconnected_language_component(specs);
    log << "bcc filter kept " << specs.size() << " of " << before << " dictionaries\n";
  }
  const TranslationGraph g = load_graph(specs);
  log << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, " << g.languages().size()
      << " languages\n";

  if (cfg.algorithm == "cd") return cd_generate(g, src, tgt, cfg.params, cfg.threads);
  if (cfg.algorithm == "acd") {
    return acd_predict(g, src, tgt, AcdConfig{cfg.params, pivot, cfg.params.threshold}, cfg.threads);
  }

  if (!g.has_language(src) || !g.has_language(tgt) || !g.has_language(pivot)) {
    throw Error(ErrorKind::UnknownLanguage, "source, target or pivot language missing from the input");
  }
  const auto table = PivotTable::from_graph(g, src, pivot, tgt);
  if (table.forward.empty() || table.onward.empty()) {
    throw Error(ErrorKind::MissingPivotDictionaries, "no translations through pivot " + pivot);
  }
  std::vector<ScoredPair> type_a;
  for (const auto& [a, b] : otic_type_a(table)) type_a.push_back({a, b, 1.0, Provenance::cycle});
  std::vector<ScoredPair> type_b;
  for (const auto& [a, b] : otic_type_b(table)) type_b.push_back({a, b, 1.0, Provenance::type_b});
  return merge_max({type_a, type_b});
}

GenerateSummary cmd_generate(const RunConfig& cfg, std::ostream& log) {
  if (cfg.output.empty()) throw UsageError("--out is required");
  auto pairs = run_algorithm(cfg, log);
  GenerateSummary summary;
  for (const auto& p : pairs) {
    switch (p.provenance) {
      case Provenance::cycle: ++summary.cycle; break;
      case Provenance::type_b: ++summary.type_b; break;
      case Provenance::transitive: ++summary.transitive; break;
    }
  }
  const std::string src = *text::normalize_lang(cfg.source_lang);
  const std::string tgt = *text::normalize_lang(cfg.target_lang);
  if (cfg.output == "-") {
    write_predictions(std::cout, std::move(pairs), src, tgt, cfg.algorithm);
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw Error(ErrorKind::MissingFile, "cannot write " + cfg.output.string());
    write_predictions(out, std::move(pairs), src, tgt, cfg.algorithm);
    if (!out) throw Error(ErrorKind::MissingFile, "write failed for " + cfg.output.string());
  }
  log << "predictions: " << summary.total() << " (cycle " << summary.cycle << ", type_b " << summary.type_b
      << ", transitive " << summary.transitive << ")\n";
  return summary;
}

PredictionFile read_predictions(const std::filesystem::path& path, std::optional<std::string> source_lang,
                                std::optional<std::string> target_lang) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MissingFile, "cannot open predictions " + path.string());
  const auto header = read_header(path);
  PredictionFile file;
  file.source_lang = reconcile(source_lang, header.source, "source");
  file.target_lang = reconcile(target_lang, header.target, "target");
  const std::string src = require_lang(file.source_lang, "source");
  const std::string tgt = require_lang(file.target_lang, "target");

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = detail::strip_cr(line);
    if (detail::is_skippable(view)) continue;
    const auto fields = detail::split_tabs(view);
    if (fields.size() != 6) {
      throw MalformedLineError(path.string(), line_no, "expected 6 columns, got " + std::to_string(fields.size()));
    }
    std::optional<std::string> norm[4];
    for (int i = 0; i < 4; ++i) {
      norm[i] = text::normalize_field(fields[i]);
      if (!norm[i]) throw MalformedLineError(path.string(), line_no, "empty or invalid field " + std::to_string(i + 1));
    }
    double conf = 0;
    const auto cs = text::trim(fields[4]);
    const auto [ptr, ec] = std::from_chars(cs.data(), cs.data() + cs.size(), conf);
    if (ec != std::errc() || ptr != cs.data() + cs.size() || conf < 0 || conf > 1) {
      throw MalformedLineError(path.string(), line_no, "confidence must be a number in [0, 1]");
    }
    const auto prov = parse_provenance(text::trim(fields[5]));
    if (!prov) throw MalformedLineError(path.string(), line_no, "unknown provenance '" + std::string(fields[5]) + "'");
    file.pairs.push_back({LexicalEntry{std::move(*norm[0]), src, std::move(*norm[1])},
                          LexicalEntry{std::move(*norm[2]), tgt, std::move(*norm[3])}, conf, *prov});
  }
  return file;
}

std::vector<double> parse_sweep(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
  if (second == std::string::npos) throw UsageError("sweep must be start:stop:step");
  const double start = parse_double(std::string_view(spec).substr(0, first), "sweep start");
  const double stop = parse_double(std::string_view(spec).substr(first + 1, second - first - 1), "sweep stop");
  const double step = parse_double(std::string_view(spec).substr(second + 1), "sweep step");
  if (!(step > 0) || stop < start || start < 0 || stop > 1) throw UsageError("sweep needs 0 <= start <= stop <= 1 and step > 0");
  const auto steps = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  std::vector<double> out;
  for (long i = 0; i <= steps; ++i) {
    // Snap to 10 decimals so 0.1 * 3 compares as 0.3.
    out.push_back(std::round((start + static_cast<double>(i) * step) * 1e10) / 1e10);
  }
  return out;
}

void print_report(std::ostream& out, const EvalReport& r) {
  out << "precision " << format_confidence(r.precision) << "  recall " << format_confidence(r.recall) << "  f1 "
      << format_confidence(r.f1) << "  coverage " << format_confidence(r.coverage) << "  bwp "
      << format_confidence(r.bwp) << "  bwr " << format_confidence(r.bwr) << "  (predicted " << r.predicted
      << ", gold " << r.gold << ", correct " << r.correct << ")\n";
}

void print_report_block(std::ostream& out, const EvalReport& r) {
  out << "precision=" << format_confidence(r.precision) << '\n'
      << "recall=" << format_confidence(r.recall) << '\n'
      << "f1=" << format_confidence(r.f1) << '\n'
      << "coverage=" << format_confidence(r.coverage) << '\n'
      << "bwp=" << format_confidence(r.bwp) << '\n'
      << "bwr=" << format_confidence(r.bwr) << '\n'
      << "predicted=" << r.predicted << '\n'
      << "gold=" << r.gold << '\n'
      << "correct=" << r.correct << '\n'
      << "bwp_denominator=" << r.bwp_denominator << '\n'
      << "bwr_denominator=" << r.bwr_denominator << '\n';
  out << "warnings=";
  for (std::size_t i = 0; i < r.warnings.size(); ++i) out << (i ? "," : "") << r.warnings[i];
  out << '\n';
}

int cmd_evaluate(const EvaluateOptions& opts, std::ostream& out, std::ostream& log) {
  const auto gold_header = read_header(opts.gold);
  const auto src_hint = reconcile(opts.source_lang, gold_header.source, "source");
  const auto tgt_hint = reconcile(opts.target_lang, gold_header.target, "target");
  const auto pred = read_predictions(opts.predictions, src_hint, tgt_hint);
  const std::string src = require_lang(pred.source_lang, "source");
  const std::string tgt = require_lang(pred.target_lang, "target");

  const auto gold_pairs = parse_dictionary(DictionarySpec{opts.gold, src, tgt});
  const Lexicon gold = to_lexicon(src, tgt, gold_pairs);

  Vocabulary vocab;
  if (opts.manifest) {
    const auto specs = read_manifest(*opts.manifest);
    vocab = vocabulary_of(load_graph(specs));
  } else {
    log << "warning: no --manifest given; bwr is computed against an empty input vocabulary\n";
  }

  if (opts.sweep) {
    out << "threshold\tprecision\trecall\tf1\tcoverage\tbwp\tbwr\tpredicted\n";
    for (double tau : parse_sweep(*opts.sweep)) {
      const auto kept = threshold_filter(pred.pairs, tau);
      const auto r = evaluate(to_lexicon(src, tgt, kept), gold, vocab);
      out << format_threshold(tau) << '\t'
          << format_confidence(r.precision) << '\t' << format_confidence(r.recall) << '\t'
          << format_confidence(r.f1) << '\t' << format_confidence(r.coverage) << '\t' << format_confidence(r.bwp)
          << '\t' << format_confidence(r.bwr) << '\t' << r.predicted << '\n';
    }
    return kSuccess;
  }

  const auto r = evaluate(to_lexicon(src, tgt, pred.pairs), gold, vocab);
  for (const auto& w : r.warnings) log << "warning: " << w << " has an empty denominator; reported as 0\n";
  print_report(out, r);
  out << "[report]\n";
  print_report_block(out, r);
  if (opts.report) {
    std::ofstream rep(*opts.report, std::ios::binary);
    if (!rep) throw Error(ErrorKind::MissingFile, "cannot write " + opts.report->string());
    print_report_block(rep, r);
  }
  return kSuccess;
}

void cmd_synth(const SynthOptions& opts, std::ostream& log) {
  if (opts.out_dir.empty()) throw UsageError("--out-dir is required");
  opts.params.validate();
  const auto inst = generate(opts.params);
  write_synth(inst, opts.out_dir);
  log << "synthetic graph: " << inst.languages.size() << " languages, " << inst.words.size() << " words, "
      << inst.graph.vertex_count() << " vertices, " << inst.graph.edge_count() << " edges -> "
      << opts.out_dir.string() << '\n';
}

}  // namespace bidixgen::cli
