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

#ifndef OTSYL_CONSTRAINTS_H_
#define OTSYL_CONSTRAINTS_H_

#include <array>
#include <string>
#include <vector>

#include "otsyl/grid.h"
#include "otsyl/segments.h"

namespace otsyl {

// The six constraints.
//
//   kPeakC   (*PEAK/C)   a consonant cannot be a syllable peak
//   kMarginV (*MARGIN/V) a vowel cannot be an onset or a coda
//   kParse   (PARSE)     segments must be syllabified
//   kOnset   (ONSET)     syllables must have onsets
//   kNoCoda  (NOCODA)    syllables must not have codas
//   kComplex (*COMPLEX)  syllable margins have at most one segment
enum class ConstraintId : uint8_t {
  kPeakC = 0,
  kMarginV = 1,
  kParse = 2,
  kOnset = 3,
  kNoCoda = 4,
  kComplex = 5,
};

inline constexpr int kConstraintCount = 6;

inline constexpr std::array<ConstraintId, kConstraintCount> kAllConstraints = {
    ConstraintId::kPeakC,  ConstraintId::kMarginV, ConstraintId::kParse,
    ConstraintId::kOnset,  ConstraintId::kNoCoda,  ConstraintId::kComplex,
};

// Lowercase wire names: pkc, mgv, parse, onset, nocoda, cplx.
const std::string& ConstraintName(ConstraintId id);
ConstraintId ConstraintFromName(const std::string& name);  // throws UsageError

// A strict total order over all six constraints.
struct Ranking {
  std::array<ConstraintId, kConstraintCount> order;

  // Parses "pkc,mgv,parse,onset,nocoda,cplx"; all six names must appear
  // exactly once. Throws UsageError.
  static Ranking FromString(const std::string& text);
  std::string ToString() const;
  bool operator==(const Ranking&) const = default;
};

// All 720 rankings, in lexicographic order of the canonical constraint
// ordering above.
std::vector<Ranking> AllRankings();

// Violation counts aligned with a Ranking: counts[k] belongs to
// ranking.order[k]. Compared lexicographically.
using ViolationVector = std::array<int, kConstraintCount>;

// Counts the violations of one constraint on a well-formed labeling.
//
//   kPeakC:   consonant segments labeled n
//   kMarginV: vowel segments labeled o or c
//   kParse:   u labels
//   kNoCoda:  c labels
//   kComplex: adjacent index pairs labeled oo, plus pairs labeled cc
//   kOnset:   positions labeled n that are word-initial or whose
//             immediately preceding label is not o
//
// Throws IllFormedParse.
int CountViolations(ConstraintId id, const Word& segments,
                    const LabelString& labels);

// All six counts, in ranking order.
ViolationVector ScoreVector(const Word& segments, const LabelString& labels,
                            const Ranking& ranking);

// One attempted option removal. A removal is skipped when it would empty
// the cell or leave the grid without any well-formed completion; pruning
// may never reduce the encoded candidate set to null.
struct Removal {
  int cell;
  Label label;
  bool applied;
};

// Applies one constraint's pruning to the grid, sweeping cells left to
// right and repeating to a fixpoint within the call. Returns the attempted
// removals in order.
//
//   kPeakC:   remove n from every consonant cell
//   kMarginV: remove o and c from every vowel cell
//   kParse:   remove u from every cell
//   kNoCoda:  remove c from every cell
//   kOnset:   for every cell determined to exactly {n} at position i > 0,
//             remove n, c, u from cell i-1; a word-initial nucleus incurs
//             marks but licenses no removal
//   kComplex: for adjacent cells, if one is determined {o} remove o from
//             the other, and likewise for {c}
std::vector<Removal> Prune(ConstraintId id, Grid& grid);

// Inviolable structure, applied to a fixpoint: removes codas no ranking
// could license at the left edge (no earlier cell can be n or c), onsets
// with no reachable nucleus to the right, and the onset/coda halves of a
// determined onset-coda adjacency.
std::vector<Removal> Housekeep(Grid& grid);

}  // namespace otsyl

#endif  // OTSYL_CONSTRAINTS_H_
