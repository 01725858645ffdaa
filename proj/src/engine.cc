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

#include "otsyl/engine.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "otsyl/errors.h"

namespace otsyl {

EvalMode EvalModeFromName(const std::string& name) {
  if (name == "oneshot") return EvalMode::kOneShot;
  if (name == "restart") return EvalMode::kRestart;
  throw UsageError("unknown mode: " + name);
}

namespace {

// Replays one step's removals over `work` and checks it lands exactly on
// the recorded snapshot, with no cell ever emptied and options only
// shrinking.
void ReplayStep(Grid& work, const TraceStep& step) {
  if (step.grid_after.size() != work.size()) {
    throw std::logic_error("trace step changed the grid length");
  }
  for (const Removal& r : step.removals) {
    if (r.cell < 0 || r.cell >= static_cast<int>(work.size())) {
      throw std::logic_error("removal outside the grid");
    }
    Cell& c = work[r.cell];
    if (!c.options.Contains(r.label)) {
      throw std::logic_error("removal of an absent option");
    }
    if (!r.applied) continue;
    c.options.Remove(r.label);
    if (c.options.Empty()) {
      throw std::logic_error("a pruning step emptied a cell");
    }
  }
  for (size_t i = 0; i < work.size(); ++i) {
    if (!(work[i].options == step.grid_after[i].options)) {
      throw std::logic_error("trace snapshot disagrees with its removals");
    }
  }
}

bool AnyApplied(const std::vector<Removal>& removals) {
  return std::any_of(removals.begin(), removals.end(),
                     [](const Removal& r) { return r.applied; });
}

}  // namespace

std::vector<ParseResult> ResidualSelect(const Grid& grid, const Word& segments,
                                        const Ranking& ranking) {
  std::optional<ViolationVector> best;
  std::vector<ParseResult> out;
  for (const LabelString& labels : EnumerateParses(grid)) {
    if (!WellFormed(labels)) continue;
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
  if (out.empty()) {
    throw NoWellFormedCompletion(
        "residual grid admits no well-formed labeling");
  }
  std::sort(out.begin(), out.end(),
            [](const ParseResult& a, const ParseResult& b) {
              return a.labels < b.labels;
            });
  return out;
}

RunResult Run(const Word& segments, const Ranking& ranking, EvalMode mode) {
  Grid grid = GenGrid(segments);
  RunResult rr;
  Grid prev = grid;

  auto record = [&](std::optional<ConstraintId> id,
                    std::vector<Removal> removals) {
    TraceStep step{id, grid, std::move(removals)};
    ReplayStep(prev, step);  // step invariants stay on in every run
    prev = grid;
    rr.trace.push_back(std::move(step));
  };

  if (mode == EvalMode::kOneShot) {
    for (int k = 0; k < kConstraintCount; ++k) {
      if (k > 0) record(std::nullopt, Housekeep(grid));
      ConstraintId id = ranking.order[k];
      record(id, Prune(id, grid));
    }
  } else {
    // After a pass that shrank the grid, all higher-ranked constraints
    // are reconsidered from the top. Grids only shrink, so the number of
    // restarts is bounded by the number of removable options.
    int k = 0;
    bool first_pass = true;
    while (k < kConstraintCount) {
      if (!first_pass) record(std::nullopt, Housekeep(grid));
      first_pass = false;
      ConstraintId id = ranking.order[k];
      std::vector<Removal> removals = Prune(id, grid);
      bool changed = AnyApplied(removals);
      record(id, std::move(removals));
      k = (changed && k > 0) ? 0 : k + 1;
    }
  }

  rr.results = ResidualSelect(grid, segments, ranking);
  return rr;
}

std::string FormatTrace(const std::vector<TraceStep>& trace) {
  std::string out;
  for (const TraceStep& step : trace) {
    out += "== " + step.Name() + " ==\n";
    for (size_t i = 0; i < step.grid_after.size(); ++i) {
      const Cell& c = step.grid_after[i];
      out += std::to_string(i) + '\t' + SymbolText(c.segment) + '\t' +
             c.options.ToString() + '\n';
    }
    for (const Removal& r : step.removals) {
      out += "removed: (" + std::to_string(r.cell) + ',' +
             LabelChar(r.label) + ')';
      if (!r.applied) out += "[skipped]";
      out += '\n';
    }
  }
  return out;
}

int ValidateTrace(const Grid& initial, const std::vector<TraceStep>& trace) {
  Grid work = initial;
  for (const TraceStep& step : trace) ReplayStep(work, step);
  return static_cast<int>(trace.size());
}

}  // namespace otsyl
