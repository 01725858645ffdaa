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

#include "otsyl/segments.h"

#include <cstdint>

#include "otsyl/errors.h"

namespace otsyl {

namespace {

std::string_view Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<char32_t> Utf8Decode(std::string_view text) {
  std::vector<char32_t> out;
  size_t i = 0;
  while (i < text.size()) {
    uint8_t b0 = static_cast<uint8_t>(text[i]);
    int len;
    char32_t cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      throw MalformedConfig("invalid UTF-8 byte");
    }
    if (i + len > text.size()) throw MalformedConfig("truncated UTF-8 sequence");
    for (int k = 1; k < len; ++k) {
      uint8_t b = static_cast<uint8_t>(text[i + k]);
      if ((b & 0xC0) != 0x80) throw MalformedConfig("invalid UTF-8 continuation");
      cp = (cp << 6) | (b & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string Utf8Encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

std::string SymbolText(const Segment& seg) { return Utf8Encode(seg.symbol); }

Alphabet DefaultAlphabet() {
  Alphabet a;
  for (char c : {'a', 'e', 'i', 'o', 'u'}) a.vowels.insert(c);
  for (char c = 'a'; c <= 'z'; ++c) {
    if (!a.vowels.count(c)) a.consonants.insert(c);
  }
  return a;
}

Alphabet LoadAlphabet(std::string_view config_text) {
  bool saw_vowels = false;
  bool saw_consonants = false;
  Alphabet a;

  size_t pos = 0;
  while (pos <= config_text.size()) {
    size_t nl = config_text.find('\n', pos);
    std::string_view line = config_text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? config_text.size() + 1 : nl + 1;

    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;

    size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw MalformedConfig("expected `key: chars` line, got: " +
                            std::string(line));
    }
    std::string_view key = Trim(line.substr(0, colon));
    std::string_view value = Trim(line.substr(colon + 1));

    std::set<char32_t>* target = nullptr;
    if (key == "vowels") {
      if (saw_vowels) throw MalformedConfig("duplicate `vowels` line");
      saw_vowels = true;
      target = &a.vowels;
    } else if (key == "consonants") {
      if (saw_consonants) throw MalformedConfig("duplicate `consonants` line");
      saw_consonants = true;
      target = &a.consonants;
    } else {
      throw MalformedConfig("unknown key: " + std::string(key));
    }
    for (char32_t cp : Utf8Decode(value)) {
      if (cp == ' ' || cp == '\t') continue;
      target->insert(cp);
    }
  }

  if (!saw_vowels && !saw_consonants) return DefaultAlphabet();
  if (a.vowels.empty()) throw EmptyClass("vowel class is empty");
  if (a.consonants.empty()) throw EmptyClass("consonant class is empty");
  for (char32_t cp : a.vowels) {
    if (a.consonants.count(cp)) {
      throw OverlappingClasses("symbol in both classes: " + Utf8Encode(cp));
    }
  }
  return a;
}

Word Classify(std::string_view word, const Alphabet& alphabet,
              bool pattern_mode) {
  std::vector<char32_t> cps = Utf8Decode(word);
  if (cps.empty()) throw EmptyWord("empty word");

  Word out;
  out.reserve(cps.size());
  for (size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    SegmentClass cls;
    if (pattern_mode) {
      if (cp == U'C') {
        cls = SegmentClass::kConsonant;
      } else if (cp == U'V') {
        cls = SegmentClass::kVowel;
      } else {
        throw UnknownSymbol("pattern mode allows only C and V, got `" +
                                Utf8Encode(cp) + "` at index " +
                                std::to_string(i),
                            static_cast<int>(i));
      }
    } else if (alphabet.vowels.count(cp)) {
      cls = SegmentClass::kVowel;
    } else if (alphabet.consonants.count(cp)) {
      cls = SegmentClass::kConsonant;
    } else {
      throw UnknownSymbol("symbol `" + Utf8Encode(cp) +
                              "` at index " + std::to_string(i) +
                              " is in neither class",
                          static_cast<int>(i));
    }
    out.push_back(Segment{cp, cls, static_cast<int>(i)});
  }
  return out;
}

}  // namespace otsyl
