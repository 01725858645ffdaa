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

#ifndef OTSYL_ANALYSIS_H_
#define OTSYL_ANALYSIS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "otsyl/engine.h"
#include "otsyl/oracle.h"

namespace otsyl {

// Candidate-set sizes for a word of n segments under different candidate
// generation regimes.
//
//   epenthesis: at most one inserted segment per slot        2^(n+1)
//   deletion:   any non-empty subset of segments kept        2^n - 1
//   both:       deletion plus per-slot epenthesis combined   2*3^n - 2
//   nonlocal:   one labeling per segment, spelled out        4^n
//   local:      the per-cell option encoding of the same     4n
struct CountRow {
  int n;
  uint64_t epenthesis;
  uint64_t deletion;
  uint64_t both;
  uint64_t nonlocal;
  uint64_t local;

  // Tab-separated: n, epenthesis, deletion, both, nonlocal, local.
  std::string ToString() const;
};

// Throws UsageError for n < 1 or n large enough to overflow.
CountRow Counts(int n);

// Cost models for evaluating m candidates against k ranked constraints,
// counted in constraint-candidate examinations.
//
//   kSequential:    every constraint examines every candidate, m*k
//   kCyclicEven:    each constraint eliminates about m/k of the
//                   candidates it examines (never going below one)
//   kCyclicHalving: each constraint eliminates half the survivors;
//                   the result is a floor/ceil range since an odd pool
//                   cannot split evenly
enum class CostStrategy { kSequential, kCyclicEven, kCyclicHalving };

CostStrategy CostStrategyFromName(const std::string& name);

struct CostRange {
  uint64_t lo;
  uint64_t hi;
  bool operator==(const CostRange&) const = default;
};

// Throws UsageError if either count is zero.
CostRange EvalCost(uint64_t candidates, uint64_t constraints,
                   CostStrategy strategy);

// What evaluates each (input, ranking) pair in a typology sweep.
enum class TypologyMode { kOneShot, kRestart, kOracle };

// One input word plus its display form.
struct TypologyInput {
  std::string display;
  Word segments;
};

// Rankings grouped by the outputs they produce. Two rankings land in the
// same group exactly when they yield identical optimal-parse sets on every
// input.
struct TypologyGroup {
  // rendered optima per input, aligned with TypologyReport::inputs
  std::vector<std::vector<std::string>> outputs;
  std::vector<Ranking> rankings;
};

struct TypologyReport {
  std::vector<std::string> inputs;
  std::vector<TypologyGroup> groups;  // largest first, then by output key

  std::string ToString() const;
};

// Evaluates every ranking on every input and partitions the rankings by
// output signature. Ranking evaluations run on parallel workers; assembly
// is deterministic regardless of completion order.
TypologyReport Typology(const std::vector<TypologyInput>& inputs,
                        const std::vector<Ranking>& rankings,
                        TypologyMode mode);

}  // namespace otsyl

#endif  // OTSYL_ANALYSIS_H_
