// Copyright 2026 The detscore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "detscore/cli.h"

#include <fmt/format.h>

#include <filesystem>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "detscore/corpus.h"
#include "detscore/error.h"
#include "detscore/lexicon.h"
#include "detscore/normalize.h"
#include "detscore/report.h"
#include "detscore/scoring.h"
#include "detscore/tfidf.h"

namespace detscore {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string positive;
  std::string negative;
  std::string lexicon;
  std::string stopwords;  // empty: embedded list
  std::string lemmas;     // empty: embedded table
  std::string out;
  std::string format = "csv";
  FilterConfig filter;
  int threads = 0;
  int bins = kDefaultBins;
  bool no_suffix_rules = false;
  std::size_t min_token_length = 1;
  std::vector<std::string> terms;
  std::string doc_id;
};

void AddNormalizationFlags(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--stopwords", cfg.stopwords,
                 "Stopword file, one word per line (default: built-in English list)");
  cmd.add_option("--lemmas", cfg.lemmas,
                 "Lemma table, surface<TAB>lemma per line (default: built-in table)");
  cmd.add_flag("--no-suffix-rules", cfg.no_suffix_rules,
               "Lemmatize by table lookup only");
  cmd.add_option("--min-token-length", cfg.min_token_length,
                 "Drop tokens shorter than this many characters")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--threads", cfg.threads, "Worker threads, 0 = auto")
      ->check(CLI::NonNegativeNumber);
}

void AddScoringFlags(CLI::App& cmd, RunConfig& cfg, bool lexicon_required) {
  cmd.add_option("--positive", cfg.positive, "Manifest of the positive-outcome corpus")
      ->required();
  cmd.add_option("--negative", cfg.negative, "Manifest of the negative-outcome corpus")
      ->required();
  auto* lex = cmd.add_option("--lexicon", cfg.lexicon, "Candidate lexicon, one entry per line");
  if (lexicon_required) lex->required();
  cmd.add_option("--percentile", cfg.filter.percentile,
                 "Score percentile a term must exceed")
      ->capture_default_str();
  cmd.add_option("--b-min", cfg.filter.b_min,
                 "Proportional occurrence a term must exceed")
      ->capture_default_str();
  cmd.add_option("--out", cfg.out, "Output directory")->required();
  cmd.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"csv", "json", "both"}))
      ->capture_default_str();
  AddNormalizationFlags(cmd, cfg);
}

void RequireFile(const std::string& path, std::string_view what) {
  if (path.empty()) return;
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    ThrowIo(fmt::format("{} not found: {}", what, path));
  }
}

OutputFormat ParseFormat(const std::string& format) {
  if (format == "json") return OutputFormat::kJson;
  if (format == "both") return OutputFormat::kBoth;
  return OutputFormat::kCsv;
}

NormalizationConfig MakeNormalization(const RunConfig& cfg) {
  StopwordSet stopwords = cfg.stopwords.empty()
                              ? ParseStopwords(embedded_stopwords())
                              : LoadStopwords(cfg.stopwords);
  LemmaTable lemmas = cfg.lemmas.empty()
                          ? ParseLemmaTable(embedded_lemma_table(), "<built-in lemma table>")
                          : LoadLemmaTable(cfg.lemmas);
  return NormalizationConfig(std::move(stopwords), std::move(lemmas),
                             !cfg.no_suffix_rules, cfg.min_token_length);
}

CorpusPair LoadPair(const RunConfig& cfg, const NormalizationConfig& norm,
                    std::ostream& err) {
  Corpus positive = LoadCorpus(cfg.positive, CorpusLabel::kPositive, norm, cfg.threads);
  Corpus negative = LoadCorpus(cfg.negative, CorpusLabel::kNegative, norm, cfg.threads);
  CorpusPair pair = BuildPair(std::move(positive), std::move(negative));
  const double imbalance = CorpusLengthImbalance(pair);
  if (imbalance > kImbalanceWarningThreshold) {
    err << fmt::format(
        "warning: corpus lengths differ by {:.1f}% (positive {} tokens, "
        "negative {} tokens); counts are not length-normalized\n",
        imbalance * 100.0, pair.positive().total_tokens(),
        pair.negative().total_tokens());
  }
  return pair;
}

Lexicon LoadLexiconWithWarnings(const RunConfig& cfg, const NormalizationConfig& norm,
                                std::ostream& err) {
  Lexicon lexicon = LoadLexicon(cfg.lexicon, norm);
  for (const auto& token : lexicon.dropped()) {
    err << fmt::format("warning: lexicon token '{}' dropped by normalization\n", token);
  }
  return lexicon;
}

void ValidateScoringInputs(const RunConfig& cfg) {
  RequireFile(cfg.positive, "positive manifest");
  RequireFile(cfg.negative, "negative manifest");
  RequireFile(cfg.lexicon, "lexicon");
  RequireFile(cfg.stopwords, "stopword file");
  RequireFile(cfg.lemmas, "lemma table");
  cfg.filter.Validate();
  if (cfg.bins < 1) ThrowValidation("--bins must be >= 1");
}

int CmdAnalyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ValidateScoringInputs(cfg);
  const NormalizationConfig norm = MakeNormalization(cfg);
  const Lexicon lexicon = LoadLexiconWithWarnings(cfg, norm, err);
  const CorpusPair pair = LoadPair(cfg, norm, err);

  const ScoreTable table = ScoreAll(pair, cfg.threads);
  if (table.empty()) ThrowValidation("positive corpus has no terms after normalization");
  const DeterminantReport report = FilterCandidates(table, lexicon, cfg.filter);
  std::vector<double> percentiles(std::begin(kSummaryPercentiles),
                                  std::end(kSummaryPercentiles));
  percentiles.push_back(cfg.filter.percentile);
  const ScoreDistribution dist = DistributionSummary(table, cfg.bins, percentiles);

  ReportArtifacts artifacts;
  artifacts.report = &report;
  artifacts.scores = &table;
  artifacts.distribution = &dist;
  EmitReport(artifacts, ParseFormat(cfg.format), cfg.out);

  out << fmt::format("universe: {} terms\n", report.universe_size);
  out << fmt::format("threshold: {:.6f} (percentile {:g})\n", report.threshold_value,
                     cfg.filter.percentile);
  out << fmt::format("rows: {}\n", report.rows.size());
  return kExitOk;
}

int CmdTfidfBaseline(const RunConfig& cfg, bool terms_given, std::ostream& out,
                     std::ostream& err) {
  ValidateScoringInputs(cfg);
  if (!terms_given && cfg.lexicon.empty()) {
    ThrowValidation("tfidf-baseline needs --terms or --lexicon");
  }
  const NormalizationConfig norm = MakeNormalization(cfg);

  std::vector<std::string> terms;
  std::optional<Lexicon> lexicon;
  if (terms_given) {
    for (const auto& raw : cfg.terms) {
      if (raw.empty()) continue;
      const auto tokens = Tokenize(raw);
      std::optional<std::string> term;
      if (tokens.size() == 1) term = NormalizeToken(tokens.front(), norm);
      if (!term) {
        ThrowValidation(fmt::format("term '{}' does not normalize to a single term", raw));
      }
      terms.push_back(std::move(*term));
    }
  } else {
    lexicon = LoadLexiconWithWarnings(cfg, norm, err);
  }

  const CorpusPair pair = LoadPair(cfg, norm, err);
  if (lexicon) {
    const ScoreTable table = ScoreAll(pair, cfg.threads);
    if (table.empty()) ThrowValidation("positive corpus has no terms after normalization");
    for (const auto& row : FilterCandidates(table, *lexicon, cfg.filter).rows) {
      terms.push_back(row.term);
    }
  }

  const std::vector<TfidfComparisonRow> rows = CompareMeanRanks(terms, pair, cfg.threads);
  ReportArtifacts artifacts;
  artifacts.tfidf = &rows;
  EmitReport(artifacts, ParseFormat(cfg.format), cfg.out);
  out << fmt::format("terms: {}\n", rows.size());
  return kExitOk;
}

int CmdDumpNormalized(const RunConfig& cfg, std::ostream& out) {
  if (cfg.positive.empty() && cfg.negative.empty()) {
    ThrowValidation("dump-normalized needs --positive and/or --negative");
  }
  RequireFile(cfg.positive, "positive manifest");
  RequireFile(cfg.negative, "negative manifest");
  RequireFile(cfg.stopwords, "stopword file");
  RequireFile(cfg.lemmas, "lemma table");
  const NormalizationConfig norm = MakeNormalization(cfg);

  const std::pair<const std::string*, CorpusLabel> sources[] = {
      {&cfg.positive, CorpusLabel::kPositive},
      {&cfg.negative, CorpusLabel::kNegative},
  };
  for (const auto& [manifest, label] : sources) {
    if (manifest->empty()) continue;
    const Corpus corpus = LoadCorpus(*manifest, label, norm, cfg.threads);
    const std::size_t idx = corpus.IndexOf(cfg.doc_id);
    if (idx == corpus.size()) continue;
    for (const auto& [term, count] : corpus.documents()[idx].term_counts) {
      out << term << ':' << count << '\n';
    }
    return kExitOk;
  }
  ThrowValidation(fmt::format("unknown document id '{}'", cfg.doc_id));
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Comparative determinant scoring for a positive/negative corpus pair"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  RunConfig analyze_cfg;
  auto* analyze = app.add_subcommand(
      "analyze", "Score every positive-corpus term and write the determinant report");
  AddScoringFlags(*analyze, analyze_cfg, /*lexicon_required=*/true);
  analyze->add_option("--bins", analyze_cfg.bins, "Histogram bins over [0, 1]")
      ->capture_default_str();

  RunConfig tfidf_cfg;
  auto* tfidf = app.add_subcommand(
      "tfidf-baseline", "Mean TF-IDF rank of terms in each corpus");
  AddScoringFlags(*tfidf, tfidf_cfg, /*lexicon_required=*/false);
  auto* terms_opt = tfidf->add_option(
      "--terms", tfidf_cfg.terms,
      "Comma-separated terms (default: the determinant report's rows)")
      ->delimiter(',');

  RunConfig dump_cfg;
  auto* dump = app.add_subcommand(
      "dump-normalized", "Print a document's normalized term counts");
  dump->add_option("--positive", dump_cfg.positive, "Positive corpus manifest");
  dump->add_option("--negative", dump_cfg.negative, "Negative corpus manifest");
  dump->add_option("--id", dump_cfg.doc_id, "Document id")->required();
  AddNormalizationFlags(*dump, dump_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (analyze->parsed()) return CmdAnalyze(analyze_cfg, out, err);
    if (tfidf->parsed()) {
      return CmdTfidfBaseline(tfidf_cfg, terms_opt->count() > 0, out, err);
    }
    return CmdDumpNormalized(dump_cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kIo ? kExitIo : kExitValidation;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace detscore
