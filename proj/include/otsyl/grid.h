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

#ifndef OTSYL_GRID_H_
#define OTSYL_GRID_H_

#include <cstdint>
#include <string>
#include <vector>

#include "otsyl/segments.h"

namespace otsyl {

// Structural positions a segment can occupy.
enum class Label : uint8_t {
  kOnset = 0,
  kNucleus = 1,
  kCoda = 2,
  kUnparsed = 3,
};

inline constexpr Label kAllLabels[] = {Label::kOnset, Label::kNucleus,
                                       Label::kCoda, Label::kUnparsed};

char LabelChar(Label l);  // 'o', 'n', 'c', 'u'

// A set of position labels, kept as a 4-bit mask.
class LabelSet {
 public:
  constexpr LabelSet() : bits_(0) {}
  static constexpr LabelSet All() { return LabelSet(0xF); }
  static LabelSet Of(std::initializer_list<Label> ls) {
    LabelSet s;
    for (Label l : ls) s.Add(l);
    return s;
  }

  bool Contains(Label l) const { return bits_ & Bit(l); }
  void Add(Label l) { bits_ |= Bit(l); }
  void Remove(Label l) { bits_ &= ~Bit(l); }
  bool Empty() const { return bits_ == 0; }
  int Size() const;
  bool IsSubsetOf(LabelSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool IsExactly(Label l) const { return bits_ == Bit(l); }
  bool operator==(const LabelSet&) const = default;

  // Renders as `{o,n,c,u}` in fixed label order.
  std::string ToString() const;

 private:
  explicit constexpr LabelSet(uint8_t bits) : bits_(bits) {}
  static constexpr uint8_t Bit(Label l) {
    return static_cast<uint8_t>(1u << static_cast<uint8_t>(l));
  }
  uint8_t bits_;
};

// A segment paired with its surviving label options. Options never go
// empty; that is the formal carrier of constraint violability.
struct Cell {
  Segment segment;
  LabelSet options;
};

// The locally-encoded candidate set: one cell per segment. The grid
// stands for the product of the per-cell option sets.
using Grid = std::vector<Cell>;

// One fully determined labeling, one label per segment.
using LabelString = std::vector<Label>;

// Builds the fresh grid in which every cell carries all four options.
// Throws EmptyInput.
Grid GenGrid(const Word& segments);

// Expands a grid into the Cartesian product of its option sets, cells
// left to right, options in fixed label order. No well-formedness filter.
std::vector<LabelString> EnumerateParses(const Grid& grid);

// Number of label strings the grid encodes.
uint64_t GridSize(const Grid& grid);

// True iff the labeling is a legal syllabification: ignoring unparsed
// segments, there is no word-initial coda, no word-final onset, and no
// onset immediately before a coda. Equivalently the unparsed-free
// projection matches (o* n c*)*.
bool WellFormed(const LabelString& labels);

// True iff at least one completion of the grid is well-formed.
bool HasWellFormedCompletion(const Grid& grid);

// As above but with cell `index` forced to `forced`.
bool HasWellFormedCompletionWith(const Grid& grid, int index, Label forced);

enum class ParseStyle { kParens, kDots, kLabels };

ParseStyle ParseStyleFromName(const std::string& name);  // throws UsageError

// Renders a well-formed labeling. Parens style wraps each syllable in
// round brackets; dots style joins adjacent syllables with periods; both
// mark unparsed segments as `<x>`. Labels style emits the raw oncu
// letters. Throws IllFormedParse if the labeling is not well-formed.
std::string FormatParse(const LabelString& labels, const Word& segments,
                        ParseStyle style);

// The raw oncu letters, e.g. "noncon".
std::string LabelsToString(const LabelString& labels);

}  // namespace otsyl

#endif  // OTSYL_GRID_H_
