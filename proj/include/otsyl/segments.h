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

#ifndef OTSYL_SEGMENTS_H_
#define OTSYL_SEGMENTS_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace otsyl {

enum class SegmentClass { kConsonant, kVowel };

// One classified input symbol. Symbols are Unicode code points so custom
// alphabets can carry non-ASCII inventories.
struct Segment {
  char32_t symbol;
  SegmentClass cls;
  int index;  // position in the word, >= 0

  bool IsVowel() const { return cls == SegmentClass::kVowel; }
  bool IsConsonant() const { return cls == SegmentClass::kConsonant; }
};

using Word = std::vector<Segment>;

// Disjoint, non-empty vowel and consonant inventories.
struct Alphabet {
  std::set<char32_t> vowels;
  std::set<char32_t> consonants;
};

// The built-in inventory: vowels a,e,i,o,u; consonants the remaining
// lowercase ASCII letters.
Alphabet DefaultAlphabet();

// Parses an alphabet from config text. Lines are `vowels: <chars>` or
// `consonants: <chars>`; `#` starts a comment line; blank lines are
// ignored. Empty (or comment-only) text yields DefaultAlphabet().
//
// Throws MalformedConfig, OverlappingClasses, EmptyClass.
Alphabet LoadAlphabet(std::string_view config_text);

// Converts UTF-8 `word` into classified segments. In pattern mode the only
// legal characters are `C` and `V`, mapped to placeholder segments.
//
// Throws EmptyWord, UnknownSymbol.
Word Classify(std::string_view word, const Alphabet& alphabet,
              bool pattern_mode = false);

// UTF-8 helpers shared by classification and rendering.
std::vector<char32_t> Utf8Decode(std::string_view text);
std::string Utf8Encode(char32_t cp);

// Renders a segment's symbol back to UTF-8.
std::string SymbolText(const Segment& seg);

}  // namespace otsyl

#endif  // OTSYL_SEGMENTS_H_
