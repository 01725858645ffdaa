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

#ifndef OTSYL_ORACLE_H_
#define OTSYL_ORACLE_H_

#include <string>
#include <vector>

#include "otsyl/engine.h"

namespace otsyl {

inline constexpr int kDefaultOracleCap = 10;

// Global evaluation by sheer force: walks all 4^n labelings, keeps the
// well-formed ones, scores each on every constraint, and returns the
// lexicographic minima under the ranking. Deliberately does nothing
// clever; this is the ground truth the pruning engine is checked against.
//
// Throws InputTooLong when the word exceeds `cap` segments.
std::vector<ParseResult> OracleParse(const Word& segments,
                                     const Ranking& ranking,
                                     int cap = kDefaultOracleCap);

enum class Verdict { kEqual, kEngineSubset, kDivergent };

std::string VerdictName(Verdict v);

// Side-by-side result of one engine run and one oracle run.
struct EquivalenceReport {
  std::string input;  // display form of the word
  Ranking ranking;
  EvalMode mode;
  std::vector<ParseResult> engine;
  std::vector<ParseResult> oracle;
  Verdict verdict;
  // Engine parses the oracle does not rank optimal; empty unless divergent.
  std::vector<LabelString> witnesses;
};

// Runs both and classifies: kEqual when the result sets match, kEngineSubset
// when the engine found a strict subset of the optima, kDivergent otherwise.
EquivalenceReport Compare(const Word& segments, const std::string& display,
                          const Ranking& ranking, EvalMode mode,
                          int cap = kDefaultOracleCap);

struct SweepOptions {
  EvalMode mode = EvalMode::kOneShot;
  bool log_divergences = false;
  // Verify that no housekeeping removal was used by any well-formed
  // completion of the grid the pass started from.
  bool check_housekeeping = false;
};

struct SweepSummary {
  uint64_t equal = 0;
  uint64_t subset = 0;
  uint64_t divergent = 0;
  uint64_t runs = 0;
  uint64_t steps = 0;  // trace steps revalidated across all runs
  uint64_t housekeeping_removals = 0;
  uint64_t housekeeping_unsound = 0;
  std::vector<std::string> divergence_log;  // one line per divergent case

  std::string Summary() const;  // "equal=<a> subset=<b> divergent=<c>"
};

// Exhaustive engine-vs-oracle sweep: every C/V pattern of length 1..max_len
// against all 720 rankings. Patterns are evaluated on parallel workers;
// the summary and log are assembled in pattern order.
SweepSummary Sweep(int max_len, const SweepOptions& options);

}  // namespace otsyl

#endif  // OTSYL_ORACLE_H_
