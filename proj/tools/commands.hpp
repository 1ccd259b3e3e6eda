#ifndef BIDIXGEN_TOOLS_COMMANDS_HPP
#define BIDIXGEN_TOOLS_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidixgen/bidixgen.hpp"

namespace bidixgen::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kInput = 2, kInternal = 3 };

/// Invalid or missing command-line arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind);

struct RunConfig {
  std::filesystem::path manifest;
  std::string source_lang;
  std::string target_lang;
  std::string pivot;
  std::string algorithm = "acd";
  InferenceParams params{};
  std::filesystem::path output;
  bool bcc_filter = false;
  unsigned threads = 1;
};

struct GenerateSummary {
  std::size_t cycle = 0;
  std::size_t type_b = 0;
  std::size_t transitive = 0;
  std::size_t total() const { return cycle + type_b + transitive; }
};

/// Runs one induction and writes the prediction TSV; progress goes to `log`.
GenerateSummary cmd_generate(const RunConfig& cfg, std::ostream& log);

/// In-memory part of cmd_generate: load, optionally BCC-filter, predict.
std::vector<ScoredPair> run_algorithm(const RunConfig& cfg, std::ostream& log);

/// Canonical prediction order: source rep, source POS, confidence
/// descending, target rep, target POS.
void sort_for_output(std::vector<ScoredPair>& pairs);

/// Prediction TSV: rep_a, pos_a, rep_b, pos_b, confidence (4 decimals), provenance.
void write_predictions(std::ostream& out, std::vector<ScoredPair> pairs, const std::string& source_lang,
                       const std::string& target_lang, const std::string& algorithm);

std::string format_confidence(double c);

struct PredictionFile {
  std::optional<std::string> source_lang;
  std::optional<std::string> target_lang;
  std::vector<ScoredPair> pairs;
};

/// Reads a prediction file. Languages come from its header comment unless
/// given explicitly; a conflict raises LanguageMismatch.
PredictionFile read_predictions(const std::filesystem::path& path, std::optional<std::string> source_lang,
                                std::optional<std::string> target_lang);

struct EvaluateOptions {
  std::filesystem::path predictions;
  std::filesystem::path gold;
  std::optional<std::filesystem::path> manifest;
  std::optional<std::string> source_lang;
  std::optional<std::string> target_lang;
  std::optional<std::string> sweep;  // "start:stop:step"
  std::optional<std::filesystem::path> report;
};

/// Parses "start:stop:step" into the thresholds it names (inclusive of stop).
std::vector<double> parse_sweep(const std::string& spec);

void print_report(std::ostream& out, const EvalReport& r);
void print_report_block(std::ostream& out, const EvalReport& r);

int cmd_evaluate(const EvaluateOptions& opts, std::ostream& out, std::ostream& log);

struct SynthOptions {
  SynthParams params{};
  std::filesystem::path out_dir;
};

void cmd_synth(const SynthOptions& opts, std::ostream& log);

}  // namespace bidixgen::cli

#endif  // BIDIXGEN_TOOLS_COMMANDS_HPP
