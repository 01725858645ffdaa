// Copyright 2026 The otsyl Authors
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

#include "otsyl/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "otsyl/analysis.h"
#include "otsyl/engine.h"
#include "otsyl/errors.h"
#include "otsyl/oracle.h"

namespace otsyl {

namespace {

Alphabet AlphabetFromFile(const std::string& path) {
  if (path.empty()) return DefaultAlphabet();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read alphabet file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadAlphabet(buf.str());
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int DoParse(const std::string& word, const std::string& ranking_text,
            const std::string& mode_name, bool pattern,
            const std::string& alphabet_path, const std::string& format_name,
            bool trace, std::ostream& out) {
  Ranking ranking = Ranking::FromString(ranking_text);
  EvalMode mode = EvalModeFromName(mode_name);
  ParseStyle style = ParseStyleFromName(format_name);
  Alphabet alphabet = AlphabetFromFile(alphabet_path);

  Word segments = Classify(word, alphabet, pattern);
  RunResult rr = Run(segments, ranking, mode);
  if (trace) out << FormatTrace(rr.trace);
  for (const ParseResult& r : rr.results) {
    out << FormatParse(r.labels, segments, style) << '\n';
  }
  return 0;
}

int DoOracle(const std::string& word, const std::string& ranking_text,
             bool pattern, std::ostream& out) {
  Ranking ranking = Ranking::FromString(ranking_text);
  Word segments = Classify(word, DefaultAlphabet(), pattern);
  for (const ParseResult& r : OracleParse(segments, ranking)) {
    out << LabelsToString(r.labels) << '\t';
    for (int k = 0; k < kConstraintCount; ++k) {
      if (k) out << ',';
      out << r.violations[k];
    }
    out << '\n';
  }
  return 0;
}

int DoCheck(int max_len, const std::string& mode_name, std::ostream& out,
            std::ostream& err) {
  EvalMode mode = EvalModeFromName(mode_name);
  SweepOptions options;
  options.mode = mode;
  options.log_divergences = true;
  SweepSummary summary = Sweep(max_len, options);
  for (const std::string& line : summary.divergence_log) err << line << '\n';
  out << summary.Summary() << '\n';
  if (mode == EvalMode::kRestart && summary.divergent > 0) return 1;
  return 0;
}

int DoCounts(int n, std::ostream& out) {
  out << Counts(n).ToString() << '\n';
  return 0;
}

int DoTypology(const std::string& inputs_text, bool oracle,
               std::ostream& out) {
  std::vector<TypologyInput> inputs;
  Alphabet alphabet = DefaultAlphabet();
  for (const std::string& w : SplitCommas(inputs_text)) {
    inputs.push_back(TypologyInput{w, Classify(w, alphabet, false)});
  }
  TypologyMode mode =
      oracle ? TypologyMode::kOracle : TypologyMode::kOneShot;
  out << Typology(inputs, AllRankings(), mode).ToString();
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Optimality-theoretic syllabification parser"};
  app.require_subcommand(1);

  std::string word, ranking_text, alphabet_path, inputs_text;
  std::string mode_name = "oneshot";
  std::string format_name = "parens";
  bool pattern = false;
  bool trace = false;
  bool oracle_mode = false;
  int max_len = 0;
  int counts_n = 0;

  CLI::App* parse = app.add_subcommand("parse", "syllabify one word");
  parse->add_option("word", word)->required();
  parse->add_option("--ranking", ranking_text, "all six constraint names")
      ->required();
  parse->add_option("--mode", mode_name, "oneshot|restart");
  parse->add_flag("--pattern", pattern, "treat the word as a C/V pattern");
  parse->add_option("--alphabet", alphabet_path, "alphabet config file");
  parse->add_option("--format", format_name, "parens|dots|labels");
  parse->add_flag("--trace", trace, "print the pruning trace first");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive evaluation with violation vectors");
  oracle->add_option("word", word)->required();
  oracle->add_option("--ranking", ranking_text)->required();
  oracle->add_flag("--pattern", pattern);

  CLI::App* check = app.add_subcommand(
      "check", "sweep all C/V patterns and rankings against the oracle");
  check->add_option("--max-len", max_len)->required();
  check->add_option("--mode", mode_name, "oneshot|restart");

  CLI::App* counts =
      app.add_subcommand("counts", "candidate-set sizes for n segments");
  counts->add_option("n", counts_n)->required();

  CLI::App* typology = app.add_subcommand(
      "typology", "group all 720 rankings by the outputs they produce");
  typology->add_option("--inputs", inputs_text, "comma-separated words")
      ->required();
  typology->add_flag("--oracle", oracle_mode, "evaluate with the oracle");

  std::vector<const char*> argv;
  argv.push_back("otsyl");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (parse->parsed()) {
      return DoParse(word, ranking_text, mode_name, pattern, alphabet_path,
                     format_name, trace, out);
    }
    if (oracle->parsed()) return DoOracle(word, ranking_text, pattern, out);
    if (check->parsed()) return DoCheck(max_len, mode_name, out, err);
    if (counts->parsed()) return DoCounts(counts_n, out);
    if (typology->parsed()) return DoTypology(inputs_text, oracle_mode, out);
    err << "no subcommand given\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace otsyl
