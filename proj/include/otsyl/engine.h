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

#ifndef OTSYL_ENGINE_H_
#define OTSYL_ENGINE_H_

#include <optional>
#include <string>
#include <vector>

#include "otsyl/constraints.h"
#include "otsyl/grid.h"
#include "otsyl/segments.h"

namespace otsyl {

// How constraints are revisited. In one-shot mode every constraint prunes
// exactly once, in ranking order. In restart mode, any pass whose pruning
// changed the grid sends evaluation back to the top so higher-ranked
// constraints can act on the newly determined cells.
enum class EvalMode { kOneShot, kRestart };

EvalMode EvalModeFromName(const std::string& name);  // throws UsageError

// One step of a run: either a constraint's pruning pass or a housekeeping
// pass, with the grid as it stood afterwards and every attempted removal.
struct TraceStep {
  std::optional<ConstraintId> constraint;  // nullopt = housekeeping
  Grid grid_after;
  std::vector<Removal> removals;

  bool IsHousekeeping() const { return !constraint.has_value(); }
  std::string Name() const {
    return constraint ? ConstraintName(*constraint) : "housekeeping";
  }
};

// One optimal parse: its labels, its violation counts in ranking order,
// and the bracketed rendering.
struct ParseResult {
  LabelString labels;
  ViolationVector violations;
  std::string rendered;

  bool operator==(const ParseResult&) const = default;
};

struct RunResult {
  std::vector<ParseResult> results;
  std::vector<TraceStep> trace;
};

// Runs the ranked constraint cascade over the fresh grid for `segments`.
// Housekeeping precedes every pruning pass after the first. The residual
// grid is then expanded, filtered for well-formedness, and the
// lexicographic minima under the ranking are returned (all co-optimal
// parses; ties are never broken). Results are sorted by label string.
//
// Every step is checked as it is recorded: no cell may go empty and
// option sets may only shrink.
//
// Throws EmptyInput.
RunResult Run(const Word& segments, const Ranking& ranking, EvalMode mode);

// Expands a residual grid, keeps the well-formed completions, scores
// them, and returns the lexicographic minima under the ranking.
// Throws NoWellFormedCompletion if no completion is well-formed.
std::vector<ParseResult> ResidualSelect(const Grid& grid, const Word& segments,
                                        const Ranking& ranking);

// Renders a trace in the stable text format: one block per step with a
// `== name ==` header, one `index<TAB>symbol<TAB>{labels}` line per cell,
// then one `removed: (i,label)` line per attempt, suffixed `[skipped]`
// where the removal was blocked.
std::string FormatTrace(const std::vector<TraceStep>& trace);

// Re-checks a finished trace against the step invariants: cells non-empty
// everywhere, option sets shrinking monotonically from `initial`, and the
// removal log consistent with the grid snapshots. Throws std::logic_error
// on violation. Returns the number of steps checked.
int ValidateTrace(const Grid& initial, const std::vector<TraceStep>& trace);

}  // namespace otsyl

#endif  // OTSYL_ENGINE_H_
