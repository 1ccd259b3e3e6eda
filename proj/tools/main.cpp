// bidixgen: induce bilingual dictionaries from a multilingual translation graph.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace bidixgen;
using namespace bidixgen::cli;

void add_config_option(CLI::App& cmd) {
  // Consumed by expand_config before parsing; registered so it shows in --help.
  cmd.add_option("--config", "Flat key=value file with option defaults; flags override it");
}

std::string option_key(const std::string& token) {
  if (token.rfind("--", 0) != 0) return {};
  return token.substr(2, token.find('=') - 2);
}

// CLI11 only reads config files attached to the top-level app, so subcommand
// config files are expanded into arguments here. Keys also given on the
// command line are skipped, which makes flags take precedence.
std::vector<std::string> expand_config(const CLI::App& app, int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return args;
  const CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(args.front());
  } catch (const CLI::OptionNotFound&) {
    return args;
  }

  std::string config;
  std::vector<std::string> rest{args.front()};
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config.empty()) return args;

  std::set<std::string> given;
  for (const auto& token : rest) given.insert(option_key(token));

  std::vector<std::string> injected;
  for (const auto& item : CLI::ConfigINI().from_file(config)) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty() && item.parents != std::vector<std::string>{sub->get_name()}) {
      throw CLI::ConfigError("config key " + item.fullname() + " does not belong to " + sub->get_name());
    }
    const CLI::Option* op = sub->get_option_no_throw("--" + item.name);
    if (op == nullptr || item.name == "config") throw CLI::ConfigError("unknown config key: " + item.name);
    if (given.count(item.name) > 0) continue;
    if (op->get_expected_min() == 0) {
      const std::string value = item.inputs.empty() ? "true" : item.inputs.front();
      if (CLI::detail::to_flag_value(value) > 0) injected.push_back("--" + item.name);
      continue;
    }
    injected.push_back("--" + item.name);
    injected.insert(injected.end(), item.inputs.begin(), item.inputs.end());
  }
  rest.insert(rest.begin() + 1, injected.begin(), injected.end());
  return rest;
}

void add_generate(CLI::App& app, RunConfig& cfg, std::vector<std::string>& transitive_pos) {
  auto* cmd = app.add_subcommand("generate", "Predict translations for one language pair");
  add_config_option(*cmd);
  cmd->add_option("--manifest", cfg.manifest, "Manifest: lang_a<TAB>lang_b<TAB>path per line")->required();
  cmd->add_option("--src", cfg.source_lang, "Source language code")->required();
  cmd->add_option("--tgt", cfg.target_lang, "Target language code")->required();
  cmd->add_option("--pivot", cfg.pivot, "Pivot language (required for otic and acd)");
  cmd->add_option("--algo", cfg.algorithm, "Algorithm")
      ->check(CLI::IsMember({"otic", "cd", "acd"}))
      ->capture_default_str();
  cmd->add_option("--min-len", cfg.params.constraints.min_len, "Minimum cycle length (vertices)")
      ->capture_default_str();
  cmd->add_option("--max-len", cfg.params.constraints.max_len, "Maximum cycle length (vertices)")
      ->capture_default_str();
  cmd->add_option("--context-depth", cfg.params.constraints.context_depth, "Max BFS distance from the source word")
      ->capture_default_str();
  cmd->add_option("--threshold", cfg.params.threshold, "Confidence threshold (inclusive)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--transitive-pos", transitive_pos, "POS tags translated transitively")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--transitive-depth", cfg.params.transitive_depth, "Path bound for transitive POS")
      ->capture_default_str();
  cmd->add_option("--out", cfg.output, "Output TSV ('-' for stdout)")->required();
  cmd->add_flag("--bcc-filter", cfg.bcc_filter, "Keep only the largest biconnected language component");
  cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

void add_evaluate(CLI::App& app, EvaluateOptions& opts) {
  auto* cmd = app.add_subcommand("evaluate", "Score a prediction file against a gold dictionary");
  add_config_option(*cmd);
  cmd->add_option("--pred", opts.predictions, "Prediction TSV")->required();
  cmd->add_option("--gold", opts.gold, "Gold dictionary (4-column TSV)")->required();
  cmd->add_option("--manifest", opts.manifest, "Input manifest (vocabulary for BWR)");
  cmd->add_option("--src", opts.source_lang, "Source language (default: file headers)");
  cmd->add_option("--tgt", opts.target_lang, "Target language (default: file headers)");
  cmd->add_option("--sweep", opts.sweep, "Threshold sweep start:stop:step, one row per threshold");
  cmd->add_option("--report", opts.report, "Also write the key=value block to this file");
}

void add_synth(CLI::App& app, SynthOptions& opts) {
  auto* cmd = app.add_subcommand("synth", "Generate a planted-sense synthetic dataset");
  add_config_option(*cmd);
  auto& p = opts.params;
  cmd->add_option("--langs", p.n_langs, "Number of languages")->capture_default_str();
  cmd->add_option("--senses", p.n_senses, "Number of senses")->capture_default_str();
  cmd->add_option("--words-per-sense", p.words_per_sense_per_lang, "Words per sense and language")
      ->capture_default_str();
  cmd->add_option("--polysemy", p.polysemy_rate, "Probability a word joins a second sense")->capture_default_str();
  cmd->add_option("--edge-prob", p.edge_prob, "Probability of each same-sense edge")->capture_default_str();
  cmd->add_option("--seed", p.seed, "Random seed")->capture_default_str();
  cmd->add_option("--out-dir", opts.out_dir, "Output directory")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bidixgen: bilingual dictionary induction over translation graphs"};
  app.require_subcommand(1);

  RunConfig run;
  std::vector<std::string> transitive_pos(run.params.transitive_pos.begin(), run.params.transitive_pos.end());
  EvaluateOptions eval;
  SynthOptions synth;
  add_generate(app, run, transitive_pos);
  add_evaluate(app, eval);
  add_synth(app, synth);

  try {
    auto args = expand_config(app, argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (app.got_subcommand("generate")) {
      run.params.transitive_pos = {transitive_pos.begin(), transitive_pos.end()};
      cmd_generate(run, std::cerr);
    } else if (app.got_subcommand("evaluate")) {
      return cmd_evaluate(eval, std::cout, std::cerr);
    } else if (app.got_subcommand("synth")) {
      cmd_synth(synth, std::cerr);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kSuccess;
}
