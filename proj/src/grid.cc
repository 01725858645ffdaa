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

#include "otsyl/grid.h"

#include "otsyl/errors.h"

namespace otsyl {

char LabelChar(Label l) {
  switch (l) {
    case Label::kOnset:
      return 'o';
    case Label::kNucleus:
      return 'n';
    case Label::kCoda:
      return 'c';
    case Label::kUnparsed:
      return 'u';
  }
  return '?';
}

int LabelSet::Size() const {
  int n = 0;
  for (Label l : kAllLabels) n += Contains(l) ? 1 : 0;
  return n;
}

std::string LabelSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (Label l : kAllLabels) {
    if (!Contains(l)) continue;
    if (!first) out += ',';
    out += LabelChar(l);
    first = false;
  }
  out += '}';
  return out;
}

Grid GenGrid(const Word& segments) {
  if (segments.empty()) throw EmptyInput("no segments");
  Grid g;
  g.reserve(segments.size());
  for (const Segment& s : segments) g.push_back(Cell{s, LabelSet::All()});
  return g;
}

uint64_t GridSize(const Grid& grid) {
  uint64_t n = 1;
  for (const Cell& c : grid) n *= static_cast<uint64_t>(c.options.Size());
  return n;
}

std::vector<LabelString> EnumerateParses(const Grid& grid) {
  std::vector<std::vector<Label>> choices;
  choices.reserve(grid.size());
  for (const Cell& c : grid) {
    std::vector<Label> opts;
    for (Label l : kAllLabels) {
      if (c.options.Contains(l)) opts.push_back(l);
    }
    choices.push_back(std::move(opts));
  }

  std::vector<LabelString> out;
  out.reserve(GridSize(grid));
  LabelString cur(grid.size(), Label::kUnparsed);
  std::vector<size_t> idx(grid.size(), 0);
  // odometer over per-cell choices, rightmost cell fastest
  for (;;) {
    for (size_t i = 0; i < grid.size(); ++i) cur[i] = choices[i][idx[i]];
    out.push_back(cur);
    size_t i = grid.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool WellFormed(const LabelString& labels) {
  // Scan the unparsed-free projection for the three banned shapes:
  // a coda with no earlier non-unparsed label, an onset with no later
  // non-unparsed label, and an onset whose next non-unparsed label is a
  // coda. The first-coda case also covers a coda right after an onset
  // at the word edge.
  Label prev = Label::kUnparsed;  // stands for "nothing yet"
  bool have_prev = false;
  for (Label l : labels) {
    if (l == Label::kUnparsed) continue;
    if (l == Label::kCoda) {
      if (!have_prev) return false;                // word-initial coda
      if (prev == Label::kOnset) return false;     // onset before coda
    }
    prev = l;
    have_prev = true;
  }
  if (have_prev && prev == Label::kOnset) return false;  // word-final onset
  return true;
}

namespace {

// Reachability over the three live states of the syllable-shape
// automaton: kBoundary (start / between syllables), kInOnset, kAfterPeak.
enum : unsigned { kBoundary = 1, kInOnset = 2, kAfterPeak = 4 };

unsigned StepStates(unsigned states, Label l) {
  if (l == Label::kUnparsed) return states;
  unsigned next = 0;
  if (l == Label::kOnset) {
    if (states & (kBoundary | kInOnset | kAfterPeak)) next |= kInOnset;
  } else if (l == Label::kNucleus) {
    if (states & (kBoundary | kInOnset | kAfterPeak)) next |= kAfterPeak;
  } else {  // coda
    if (states & kAfterPeak) next |= kAfterPeak;
  }
  return next;
}

bool Accepting(unsigned states) { return states & (kBoundary | kAfterPeak); }

}  // namespace

bool HasWellFormedCompletion(const Grid& grid) {
  return HasWellFormedCompletionWith(grid, -1, Label::kUnparsed);
}

bool HasWellFormedCompletionWith(const Grid& grid, int index, Label forced) {
  unsigned states = kBoundary;
  for (size_t i = 0; i < grid.size(); ++i) {
    unsigned next = 0;
    if (static_cast<int>(i) == index) {
      next = StepStates(states, forced);
    } else {
      for (Label l : kAllLabels) {
        if (grid[i].options.Contains(l)) next |= StepStates(states, l);
      }
    }
    if (next == 0) return false;
    states = next;
  }
  return Accepting(states);
}

ParseStyle ParseStyleFromName(const std::string& name) {
  if (name == "parens") return ParseStyle::kParens;
  if (name == "dots") return ParseStyle::kDots;
  if (name == "labels") return ParseStyle::kLabels;
  throw UsageError("unknown format: " + name);
}

std::string LabelsToString(const LabelString& labels) {
  std::string out;
  out.reserve(labels.size());
  for (Label l : labels) out += LabelChar(l);
  return out;
}

std::string FormatParse(const LabelString& labels, const Word& segments,
                        ParseStyle style) {
  if (labels.size() != segments.size()) {
    throw IllFormedParse("label string length does not match the word");
  }
  if (!WellFormed(labels)) {
    throw IllFormedParse("label string is not a legal syllabification: " +
                         LabelsToString(labels));
  }
  if (style == ParseStyle::kLabels) return LabelsToString(labels);

  auto next_non_u = [&](size_t from) -> Label {
    for (size_t j = from; j < labels.size(); ++j) {
      if (labels[j] != Label::kUnparsed) return labels[j];
    }
    return Label::kUnparsed;
  };

  const bool parens = style == ParseStyle::kParens;
  std::string out;
  bool prev_was_syllable = false;
  size_t i = 0;
  while (i < labels.size()) {
    if (labels[i] == Label::kUnparsed) {
      out += '<';
      out += SymbolText(segments[i]);
      out += '>';
      prev_was_syllable = false;
      ++i;
      continue;
    }
    // one syllable: o* n c*, with unparsed segments rendered in place
    if (!parens && prev_was_syllable) out += '.';
    if (parens) out += '(';
    while (labels[i] == Label::kOnset || labels[i] == Label::kUnparsed) {
      if (labels[i] == Label::kUnparsed) {
        out += '<' + SymbolText(segments[i]) + '>';
      } else {
        out += SymbolText(segments[i]);
      }
      ++i;
    }
    out += SymbolText(segments[i]);  // the nucleus
    ++i;
    while (i < labels.size() &&
           (labels[i] == Label::kCoda ||
            (labels[i] == Label::kUnparsed &&
             next_non_u(i) == Label::kCoda))) {
      if (labels[i] == Label::kUnparsed) {
        out += '<' + SymbolText(segments[i]) + '>';
      } else {
        out += SymbolText(segments[i]);
      }
      ++i;
    }
    if (parens) out += ')';
    prev_was_syllable = true;
  }
  return out;
}

}  // namespace otsyl
