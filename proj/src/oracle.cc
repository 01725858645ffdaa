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

#include "otsyl/oracle.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "otsyl/errors.h"

namespace otsyl {

std::vector<ParseResult> OracleParse(const Word& segments,
                                     const Ranking& ranking, int cap) {
  if (segments.empty()) throw EmptyInput("no segments");
  if (static_cast<int>(segments.size()) > cap) {
    throw InputTooLong("word has " + std::to_string(segments.size()) +
                       " segments, oracle cap is " + std::to_string(cap));
  }

  const size_t n = segments.size();
  LabelString labels(n, Label::kOnset);
  std::optional<ViolationVector> best;
  std::vector<ParseResult> out;

  // odometer over all 4^n labelings
  for (;;) {
    if (WellFormed(labels)) {
      ViolationVector v = ScoreVector(segments, labels, ranking);
      if (!best || v < *best) {
        best = v;
        out.clear();
      }
      if (v == *best) {
        out.push_back(ParseResult{
            labels, v, FormatParse(labels, segments, ParseStyle::kParens)});
      }
    }
    size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      uint8_t next = static_cast<uint8_t>(labels[i]) + 1;
      if (next < 4) {
        labels[i] = static_cast<Label>(next);
        done = false;
        break;
      }
      labels[i] = Label::kOnset;
    }
    if (done) break;
  }

  // The all-unparsed labeling is always well-formed, so optima exist.
  std::sort(out.begin(), out.end(),
            [](const ParseResult& a, const ParseResult& b) {
              return a.labels < b.labels;
            });
  return out;
}

std::string VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kEqual:
      return "equal";
    case Verdict::kEngineSubset:
      return "engine-subset";
    case Verdict::kDivergent:
      return "divergent";
  }
  return "?";
}

EquivalenceReport Compare(const Word& segments, const std::string& display,
                          const Ranking& ranking, EvalMode mode, int cap) {
  EquivalenceReport rep;
  rep.input = display;
  rep.ranking = ranking;
  rep.mode = mode;
  rep.engine = Run(segments, ranking, mode).results;
  rep.oracle = OracleParse(segments, ranking, cap);

  auto in_oracle = [&](const ParseResult& r) {
    return std::any_of(rep.oracle.begin(), rep.oracle.end(),
                       [&](const ParseResult& o) { return o.labels == r.labels; });
  };
  bool subset = true;
  for (const ParseResult& r : rep.engine) {
    if (!in_oracle(r)) {
      subset = false;
      rep.witnesses.push_back(r.labels);
    }
  }
  if (!subset) {
    rep.verdict = Verdict::kDivergent;
  } else if (rep.engine.size() == rep.oracle.size()) {
    rep.verdict = Verdict::kEqual;  // both sorted and duplicate-free
  } else {
    rep.verdict = Verdict::kEngineSubset;
  }
  return rep;
}

std::string SweepSummary::Summary() const {
  return "equal=" + std::to_string(equal) + " subset=" +
         std::to_string(subset) + " divergent=" + std::to_string(divergent);
}

namespace {

// A scored well-formed labeling with counts in canonical constraint order.
struct ScoredCandidate {
  LabelString labels;
  std::array<int, kConstraintCount> counts;
};

// All well-formed labelings of the word, scored once; rankings then only
// permute the count vectors.
std::vector<ScoredCandidate> ScoreAllCandidates(const Word& word) {
  std::vector<ScoredCandidate> out;
  const size_t n = word.size();
  LabelString labels(n, Label::kOnset);
  for (;;) {
    if (WellFormed(labels)) {
      ScoredCandidate c;
      c.labels = labels;
      for (int k = 0; k < kConstraintCount; ++k) {
        c.counts[k] = CountViolations(kAllConstraints[k], word, labels);
      }
      out.push_back(std::move(c));
    }
    size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      uint8_t next = static_cast<uint8_t>(labels[i]) + 1;
      if (next < 4) {
        labels[i] = static_cast<Label>(next);
        done = false;
        break;
      }
      labels[i] = Label::kOnset;
    }
    if (done) break;
  }
  return out;
}

struct PatternTally {
  uint64_t equal = 0;
  uint64_t subset = 0;
  uint64_t divergent = 0;
  uint64_t runs = 0;
  uint64_t steps = 0;
  uint64_t hk_removals = 0;
  uint64_t hk_unsound = 0;
  std::vector<std::string> log;
};

std::string JoinLabels(const std::vector<LabelString>& all) {
  std::string out;
  for (size_t i = 0; i < all.size(); ++i) {
    if (i) out += ',';
    out += LabelsToString(all[i]);
  }
  return out;
}

void SweepPattern(const std::string& pattern,
                  const std::vector<Ranking>& rankings,
                  const SweepOptions& options, PatternTally& tally) {
  Word word = Classify(pattern, Alphabet{}, /*pattern_mode=*/true);
  std::vector<ScoredCandidate> candidates = ScoreAllCandidates(word);

  for (const Ranking& ranking : rankings) {
    // oracle optima for this ranking
    std::array<int, kConstraintCount> perm{};
    for (int k = 0; k < kConstraintCount; ++k) {
      perm[k] = static_cast<int>(ranking.order[k]);
    }
    const ScoredCandidate* best = nullptr;
    std::vector<const ScoredCandidate*> optima;
    for (const ScoredCandidate& c : candidates) {
      if (!best) {
        best = &c;
        optima = {&c};
        continue;
      }
      int cmp = 0;
      for (int k = 0; k < kConstraintCount && cmp == 0; ++k) {
        cmp = c.counts[perm[k]] - best->counts[perm[k]];
      }
      if (cmp < 0) {
        best = &c;
        optima = {&c};
      } else if (cmp == 0) {
        optima.push_back(&c);
      }
    }

    RunResult run = Run(word, ranking, options.mode);
    tally.runs += 1;
    tally.steps += run.trace.size();

    if (options.check_housekeeping) {
      Grid work = GenGrid(word);
      for (const TraceStep& step : run.trace) {
        if (step.IsHousekeeping()) {
          for (const Removal& r : step.removals) {
            if (!r.applied) continue;
            tally.hk_removals += 1;
            if (HasWellFormedCompletionWith(work, r.cell, r.label)) {
              tally.hk_unsound += 1;
            }
          }
        }
        work = step.grid_after;
      }
    }

    bool is_subset = true;
    std::vector<LabelString> witnesses;
    for (const ParseResult& r : run.results) {
      bool found = std::any_of(
          optima.begin(), optima.end(),
          [&](const ScoredCandidate* c) { return c->labels == r.labels; });
      if (!found) {
        is_subset = false;
        witnesses.push_back(r.labels);
      }
    }
    if (!is_subset) {
      tally.divergent += 1;
      if (options.log_divergences) {
        std::vector<LabelString> engine_labels, oracle_labels;
        for (const ParseResult& r : run.results)
          engine_labels.push_back(r.labels);
        for (const ScoredCandidate* c : optima) oracle_labels.push_back(c->labels);
        tally.log.push_back(
            "divergent mode=" +
            std::string(options.mode == EvalMode::kOneShot ? "oneshot"
                                                           : "restart") +
            " pattern=" + pattern + " ranking=" + ranking.ToString() +
            " engine=" + JoinLabels(engine_labels) +
            " oracle=" + JoinLabels(oracle_labels));
      }
    } else if (run.results.size() == optima.size()) {
      tally.equal += 1;
    } else {
      tally.subset += 1;
    }
  }
}

}  // namespace

SweepSummary Sweep(int max_len, const SweepOptions& options) {
  if (max_len < 1) throw UsageError("max length must be at least 1");
  if (max_len > kDefaultOracleCap) {
    throw InputTooLong("sweep length exceeds the oracle cap");
  }

  std::vector<std::string> patterns;
  for (int len = 1; len <= max_len; ++len) {
    for (uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string p;
      for (int i = 0; i < len; ++i) p += (bits >> i) & 1 ? 'V' : 'C';
      patterns.push_back(p);
    }
  }

  const std::vector<Ranking> rankings = AllRankings();
  std::vector<PatternTally> tallies(patterns.size());

  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= patterns.size()) return;
        SweepPattern(patterns[i], rankings, options, tallies[i]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };
  unsigned hw = std::thread::hardware_concurrency();
  size_t workers =
      std::min<size_t>(std::max(1u, hw), std::max<size_t>(patterns.size(), 1));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SweepSummary summary;
  for (const PatternTally& t : tallies) {
    summary.equal += t.equal;
    summary.subset += t.subset;
    summary.divergent += t.divergent;
    summary.runs += t.runs;
    summary.steps += t.steps;
    summary.housekeeping_removals += t.hk_removals;
    summary.housekeeping_unsound += t.hk_unsound;
    summary.divergence_log.insert(summary.divergence_log.end(), t.log.begin(),
                                  t.log.end());
  }
  return summary;
}

}  // namespace otsyl
