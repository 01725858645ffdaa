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

#include "otsyl/constraints.h"

#include <algorithm>
#include <utility>

#include "otsyl/errors.h"

namespace otsyl {

namespace {

const std::array<std::string, kConstraintCount> kNames = {
    "pkc", "mgv", "parse", "onset", "nocoda", "cplx"};

}  // namespace

const std::string& ConstraintName(ConstraintId id) {
  return kNames[static_cast<size_t>(id)];
}

ConstraintId ConstraintFromName(const std::string& name) {
  for (int i = 0; i < kConstraintCount; ++i) {
    if (kNames[i] == name) return static_cast<ConstraintId>(i);
  }
  throw UsageError("unknown constraint name: `" + name + "`");
}

Ranking Ranking::FromString(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  if (parts.size() != kConstraintCount) {
    throw UsageError("ranking must list all six constraints, got " +
                     std::to_string(parts.size()));
  }
  Ranking r{};
  std::array<bool, kConstraintCount> seen{};
  for (int i = 0; i < kConstraintCount; ++i) {
    ConstraintId id = ConstraintFromName(parts[i]);
    if (seen[static_cast<size_t>(id)]) {
      throw UsageError("constraint repeated in ranking: " + parts[i]);
    }
    seen[static_cast<size_t>(id)] = true;
    r.order[i] = id;
  }
  return r;
}

std::string Ranking::ToString() const {
  std::string out;
  for (int i = 0; i < kConstraintCount; ++i) {
    if (i) out += ',';
    out += ConstraintName(order[i]);
  }
  return out;
}

std::vector<Ranking> AllRankings() {
  std::array<ConstraintId, kConstraintCount> ids = kAllConstraints;
  std::vector<Ranking> out;
  out.reserve(720);
  do {
    out.push_back(Ranking{ids});
  } while (std::next_permutation(
      ids.begin(), ids.end(),
      [](ConstraintId a, ConstraintId b) { return a < b; }));
  return out;
}

int CountViolations(ConstraintId id, const Word& segments,
                    const LabelString& labels) {
  if (labels.size() != segments.size()) {
    throw IllFormedParse("label string length does not match the word");
  }
  if (!WellFormed(labels)) {
    throw IllFormedParse("label string is not a legal syllabification: " +
                         LabelsToString(labels));
  }
  const size_t n = labels.size();
  int count = 0;
  switch (id) {
    case ConstraintId::kPeakC:
      for (size_t i = 0; i < n; ++i) {
        if (segments[i].IsConsonant() && labels[i] == Label::kNucleus) ++count;
      }
      break;
    case ConstraintId::kMarginV:
      for (size_t i = 0; i < n; ++i) {
        if (segments[i].IsVowel() &&
            (labels[i] == Label::kOnset || labels[i] == Label::kCoda)) {
          ++count;
        }
      }
      break;
    case ConstraintId::kParse:
      for (Label l : labels) {
        if (l == Label::kUnparsed) ++count;
      }
      break;
    case ConstraintId::kNoCoda:
      for (Label l : labels) {
        if (l == Label::kCoda) ++count;
      }
      break;
    case ConstraintId::kComplex:
      for (size_t i = 0; i + 1 < n; ++i) {
        if (labels[i] == labels[i + 1] &&
            (labels[i] == Label::kOnset || labels[i] == Label::kCoda)) {
          ++count;
        }
      }
      break;
    case ConstraintId::kOnset:
      for (size_t i = 0; i < n; ++i) {
        if (labels[i] != Label::kNucleus) continue;
        if (i == 0 || labels[i - 1] != Label::kOnset) ++count;
      }
      break;
  }
  return count;
}

ViolationVector ScoreVector(const Word& segments, const LabelString& labels,
                            const Ranking& ranking) {
  ViolationVector v{};
  for (int k = 0; k < kConstraintCount; ++k) {
    v[k] = CountViolations(ranking.order[k], segments, labels);
  }
  return v;
}

namespace {

// Removal attempts funnel through here so every pruning step honors the
// same condition: a removal may not empty a cell and may not leave the
// grid without a single well-formed completion. Options only shrink, so
// a blocked removal stays blocked; it is recorded once per call.
class Pruner {
 public:
  Pruner(Grid& grid, std::vector<Removal>& log) : grid_(grid), log_(log) {}

  // Returns true if the option was present and actually removed.
  bool TryRemove(int cell, Label label) {
    Cell& c = grid_[cell];
    if (!c.options.Contains(label)) return false;
    if (c.options.IsExactly(label) || !SurvivesWithout(cell, label)) {
      if (!AlreadySkipped(cell, label)) {
        log_.push_back(Removal{cell, label, false});
        skipped_.push_back({cell, label});
      }
      return false;
    }
    c.options.Remove(label);
    log_.push_back(Removal{cell, label, true});
    return true;
  }

 private:
  bool SurvivesWithout(int cell, Label label) {
    Cell& c = grid_[cell];
    c.options.Remove(label);
    bool ok = HasWellFormedCompletion(grid_);
    c.options.Add(label);
    return ok;
  }

  bool AlreadySkipped(int cell, Label label) const {
    for (const auto& [c, l] : skipped_) {
      if (c == cell && l == label) return true;
    }
    return false;
  }

  Grid& grid_;
  std::vector<Removal>& log_;
  std::vector<std::pair<int, Label>> skipped_;
};

}  // namespace

std::vector<Removal> Prune(ConstraintId id, Grid& grid) {
  std::vector<Removal> log;
  Pruner p(grid, log);
  const int n = static_cast<int>(grid.size());
  bool changed = true;
  while (changed) {
    changed = false;
    switch (id) {
      case ConstraintId::kPeakC:
        for (int i = 0; i < n; ++i) {
          if (grid[i].segment.IsConsonant()) {
            changed |= p.TryRemove(i, Label::kNucleus);
          }
        }
        break;
      case ConstraintId::kMarginV:
        for (int i = 0; i < n; ++i) {
          if (grid[i].segment.IsVowel()) {
            changed |= p.TryRemove(i, Label::kOnset);
            changed |= p.TryRemove(i, Label::kCoda);
          }
        }
        break;
      case ConstraintId::kParse:
        for (int i = 0; i < n; ++i) {
          changed |= p.TryRemove(i, Label::kUnparsed);
        }
        break;
      case ConstraintId::kNoCoda:
        for (int i = 0; i < n; ++i) {
          changed |= p.TryRemove(i, Label::kCoda);
        }
        break;
      case ConstraintId::kOnset:
        // Only a determined nucleus licenses repair of the cell before
        // it. A word-initial nucleus cannot be repaired at all.
        for (int i = 1; i < n; ++i) {
          if (!grid[i].options.IsExactly(Label::kNucleus)) continue;
          changed |= p.TryRemove(i - 1, Label::kNucleus);
          changed |= p.TryRemove(i - 1, Label::kCoda);
          changed |= p.TryRemove(i - 1, Label::kUnparsed);
        }
        break;
      case ConstraintId::kComplex:
        // Fires only against a determined neighbor; an undetermined pair
        // is left alone.
        for (int i = 0; i + 1 < n; ++i) {
          if (grid[i].options.IsExactly(Label::kOnset)) {
            changed |= p.TryRemove(i + 1, Label::kOnset);
          }
          if (grid[i + 1].options.IsExactly(Label::kOnset)) {
            changed |= p.TryRemove(i, Label::kOnset);
          }
          if (grid[i].options.IsExactly(Label::kCoda)) {
            changed |= p.TryRemove(i + 1, Label::kCoda);
          }
          if (grid[i + 1].options.IsExactly(Label::kCoda)) {
            changed |= p.TryRemove(i, Label::kCoda);
          }
        }
        break;
    }
  }
  return log;
}

std::vector<Removal> Housekeep(Grid& grid) {
  std::vector<Removal> log;
  Pruner p(grid, log);
  const int n = static_cast<int>(grid.size());

  auto any_earlier_peak_or_coda = [&](int i) {
    for (int j = 0; j < i; ++j) {
      if (grid[j].options.Contains(Label::kNucleus) ||
          grid[j].options.Contains(Label::kCoda)) {
        return true;
      }
    }
    return false;
  };
  auto any_later_nucleus = [&](int i) {
    for (int j = i + 1; j < n; ++j) {
      if (grid[j].options.Contains(Label::kNucleus)) return true;
    }
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // a coda nothing to the left could close off
    for (int i = 0; i < n; ++i) {
      if (grid[i].options.Contains(Label::kCoda) &&
          !any_earlier_peak_or_coda(i)) {
        changed |= p.TryRemove(i, Label::kCoda);
      }
    }
    // an onset with no nucleus anywhere to the right
    for (int i = 0; i < n; ++i) {
      if (grid[i].options.Contains(Label::kOnset) && !any_later_nucleus(i)) {
        changed |= p.TryRemove(i, Label::kOnset);
      }
    }
    // a determined onset-coda adjacency
    for (int i = 0; i + 1 < n; ++i) {
      if (grid[i].options.IsExactly(Label::kOnset)) {
        changed |= p.TryRemove(i + 1, Label::kCoda);
      }
      if (grid[i + 1].options.IsExactly(Label::kCoda)) {
        changed |= p.TryRemove(i, Label::kOnset);
      }
    }
  }
  return log;
}

}  // namespace otsyl
