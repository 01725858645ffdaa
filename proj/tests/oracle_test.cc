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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "otsyl/errors.h"
#include "otsyl/oracle.h"
#include "testutil.h"

using namespace otsyl;
using otsyl_test::LabelStringsOf;

namespace {

Word W(const std::string& pattern) {
  return Classify(pattern, Alphabet{}, /*pattern_mode=*/true);
}

Word Default(const std::string& word) {
  return Classify(word, DefaultAlphabet());
}

Ranking R(const std::string& text) { return Ranking::FromString(text); }

}  // namespace

TEST_CASE("agenda's attested winner under a high margin cap") {
  auto optima = OracleParse(Default("agenda"),
                            R("pkc,mgv,parse,onset,cplx,nocoda"));
  REQUIRE(optima.size() == 1);
  CHECK(optima[0].rendered == "(a)(gen)(da)");
  CHECK(LabelsToString(optima[0].labels) == "noncon");
}

TEST_CASE("a bare vowel parses when u-removal outranks the onset demand") {
  auto optima = OracleParse(Default("a"), R("pkc,mgv,parse,onset,cplx,nocoda"));
  REQUIRE(optima.size() == 1);
  CHECK(optima[0].rendered == "(a)");
  // with the onset demand on top, stranding the vowel is cheaper: the
  // word-initial nucleus itself carries an onset mark
  auto stranded =
      OracleParse(Default("a"), R("onset,pkc,mgv,parse,cplx,nocoda"));
  REQUIRE(stranded.size() == 1);
  CHECK(stranded[0].rendered == "<a>");
}

TEST_CASE("pa is the perfect syllable under every ranking") {
  for (const Ranking& r : AllRankings()) {
    auto optima = OracleParse(Default("pa"), r);
    REQUIRE(optima.size() == 1);
    CHECK(LabelsToString(optima[0].labels) == "on");
    CHECK(optima[0].violations == ViolationVector{0, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("oracle matches the first-principles reference on a sweep") {
  std::mt19937 rng(43);
  auto rankings = AllRankings();
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::string pattern;
    for (int i = 0; i < n; ++i) pattern += (rng() & 1) ? 'V' : 'C';
    Word w = W(pattern);
    const Ranking& r = rankings[rng() % rankings.size()];
    auto got = OracleParse(w, r);
    auto want = otsyl_test::RefOptima(w, r);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].labels == want[i]);
  }
}

TEST_CASE("oracle optima are never empty") {
  std::mt19937 rng(47);
  auto rankings = AllRankings();
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::string pattern;
    for (int i = 0; i < n; ++i) pattern += (rng() & 1) ? 'V' : 'C';
    CHECK(!OracleParse(W(pattern), rankings[rng() % rankings.size()]).empty());
  }
}

TEST_CASE("the length cap is enforced") {
  CHECK_THROWS_AS(OracleParse(W("CVCVCVCVCVC"), AllRankings()[0]),
                  InputTooLong);
  CHECK_NOTHROW(OracleParse(W("CVCVC"), AllRankings()[0], 5));
  CHECK_THROWS_AS(OracleParse(W("CVCVCV"), AllRankings()[0], 5), InputTooLong);
}

TEST_CASE("a constraint with no violations anywhere can rank anywhere") {
  // on an all-vowel word the consonant-peak constraint never fires, so
  // sliding it from top to bottom cannot change the optima
  Word w = Default("ae");
  Ranking top = R("pkc,mgv,parse,onset,nocoda,cplx");
  Ranking bottom = R("mgv,parse,onset,nocoda,cplx,pkc");
  CHECK(LabelStringsOf(OracleParse(w, top)) ==
        LabelStringsOf(OracleParse(w, bottom)));
}

TEST_CASE("swapping adjacent constraints with identical columns is moot") {
  // on a bare vowel, every well-formed candidate scores zero on the coda
  // ban and the margin cap alike
  Word w = Default("a");
  Ranking a = R("pkc,mgv,parse,onset,nocoda,cplx");
  Ranking b = R("pkc,mgv,parse,onset,cplx,nocoda");
  CHECK(LabelStringsOf(OracleParse(w, a)) ==
        LabelStringsOf(OracleParse(w, b)));

  // general scan: wherever two adjacently ranked constraints assign the
  // same counts to every well-formed candidate of the input, transposing
  // them never moves the optima
  std::mt19937 rng(53);
  auto rankings = AllRankings();
  int swaps_checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::string pattern;
    for (int i = 0; i < n; ++i) pattern += (rng() & 1) ? 'V' : 'C';
    Word word = W(pattern);
    const Ranking& r = rankings[rng() % rankings.size()];
    for (int k = 0; k + 1 < kConstraintCount; ++k) {
      bool identical = true;
      for (const auto& ls : otsyl_test::AllLabelStrings(n)) {
        if (!WellFormed(ls)) continue;
        if (CountViolations(r.order[k], word, ls) !=
            CountViolations(r.order[k + 1], word, ls)) {
          identical = false;
          break;
        }
      }
      if (!identical) continue;
      Ranking swapped = r;
      std::swap(swapped.order[k], swapped.order[k + 1]);
      CHECK(LabelStringsOf(OracleParse(word, r)) ==
            LabelStringsOf(OracleParse(word, swapped)));
      ++swaps_checked;
    }
  }
  CHECK(swaps_checked > 10);
}

TEST_CASE("co-optimal sets carry every tie") {
  Word ccc = W("CCC");
  auto optima = OracleParse(ccc, R("cplx,nocoda,onset,parse,pkc,mgv"));
  CHECK(LabelStringsOf(optima) == std::vector<std::string>{"onu", "uon"});
}

TEST_CASE("comparison verdicts on the flagship cases") {
  EquivalenceReport r1 =
      Compare(Default("agenda"), "agenda", R("pkc,mgv,parse,onset,cplx,nocoda"),
              EvalMode::kRestart);
  CHECK(r1.verdict == Verdict::kEqual);
  CHECK(r1.witnesses.empty());

  // the one-shot cluster case: the engine strands the final consonants
  // while the oracle prefers stranding the first ones
  EquivalenceReport r2 =
      Compare(W("VCCVCC"), "VCCVCC", R("pkc,mgv,cplx,nocoda,onset,parse"),
              EvalMode::kOneShot);
  CHECK(r2.verdict == Verdict::kDivergent);
  REQUIRE(r2.witnesses.size() == 1);
  CHECK(LabelsToString(r2.witnesses[0]) == "noonuu");
  REQUIRE(r2.oracle.size() == 1);
  CHECK(LabelsToString(r2.oracle[0].labels) == "uuonuu");
}

TEST_CASE("single segments diverge exactly when the onset demand wins") {
  // an onset mark on a word-initial nucleus cannot be pruned away, so
  // whenever onset outranks parse the oracle strands the segment and the
  // engine does not: 360 rankings for V, 120 (onset > parse > pkc) for C
  int divergent_v = 0, divergent_c = 0;
  for (const Ranking& r : AllRankings()) {
    for (EvalMode mode : {EvalMode::kOneShot, EvalMode::kRestart}) {
      EquivalenceReport rv = Compare(W("V"), "V", r, mode);
      EquivalenceReport rc = Compare(W("C"), "C", r, mode);
      if (mode == EvalMode::kOneShot) {
        divergent_v += rv.verdict == Verdict::kDivergent;
        divergent_c += rc.verdict == Verdict::kDivergent;
      } else {
        // one pass cannot differ from two on one segment
        EquivalenceReport rv1 = Compare(W("V"), "V", r, EvalMode::kOneShot);
        CHECK(rv.verdict == rv1.verdict);
      }
    }
  }
  CHECK(divergent_v == 360);
  CHECK(divergent_c == 120);
}

TEST_CASE("sweep tallies agree with case-by-case comparison") {
  SweepOptions options;
  options.mode = EvalMode::kOneShot;
  SweepSummary s = Sweep(2, options);
  uint64_t equal = 0, subset = 0, divergent = 0;
  for (const char* pat : {"C", "V", "CC", "VC", "CV", "VV"}) {
    for (const Ranking& r : AllRankings()) {
      switch (Compare(W(pat), pat, r, EvalMode::kOneShot).verdict) {
        case Verdict::kEqual:
          ++equal;
          break;
        case Verdict::kEngineSubset:
          ++subset;
          break;
        case Verdict::kDivergent:
          ++divergent;
          break;
      }
    }
  }
  CHECK(s.equal == equal);
  CHECK(s.subset == subset);
  CHECK(s.divergent == divergent);
  CHECK(s.runs == 6 * 720);
}

TEST_CASE("sweep housekeeping audit finds nothing to flag") {
  SweepOptions options;
  options.mode = EvalMode::kRestart;
  options.check_housekeeping = true;
  SweepSummary s = Sweep(3, options);
  CHECK(s.housekeeping_removals > 0);
  CHECK(s.housekeeping_unsound == 0);
}
