// Copyright 2026 The lexmark authors
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

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "diagnostics.hpp"
#include "entry_model.hpp"

namespace lexmark {

enum class Media { kPrint, kExpanded, kHtml };
enum class GenderStyle { kAbbreviated, kLong };

struct RenderOptions {
  Media media = Media::kPrint;
  GenderStyle gender_style = GenderStyle::kAbbreviated;
  bool include_citations = true;
  bool include_etym = true;
};

enum class GramCase { kNominative = 0, kGenitive, kDative, kAccusative };
enum class GramNumber { kSingular = 0, kPlural };

const char* to_string(GramCase c);
const char* to_string(GramNumber n);

// Full inflection paradigm: 4 cases x 2 numbers, every cell a complete
// surface form.  The nominative singular always equals the headword.
struct ParadigmTable {
  std::array<std::string, 8> cells;

  std::string& cell(GramCase c, GramNumber n) {
    return cells[static_cast<size_t>(c) * 2 + static_cast<size_t>(n)];
  }
  const std::string& cell(GramCase c, GramNumber n) const {
    return cells[static_cast<size_t>(c) * 2 + static_cast<size_t>(n)];
  }

  bool operator==(const ParadigmTable&) const = default;
};

// Expands an inflection hint against a headword.  "-es" style patterns are
// suffixes: the hint is de-umlauted (ä/ö/ü and capitals) and the largest k
// is found such that the de-umlauted last k characters of the headword
// equal its first k characters, case-folded; those characters are then
// replaced by the hint's (with the headword's casing) and the rest is
// appended.  k = 0 degrades to plain suffixation.  A pattern without a
// leading hyphen is a full form and is returned as given; an empty pattern
// yields the headword.  Characters are Unicode code points, not bytes.
std::string resolve_suffix(std::string_view headword, std::string_view pattern);

// Builds the eight-cell table from a genitive and a plural hint.  The
// genitive hint shapes only the genitive singular; the plural hint shapes
// all plural cells, with "n" appended in the dative plural unless the form
// already ends in "n" or "s".  The heuristic only applies to hyphen
// patterns: an explicit full form (or an empty pattern) is used verbatim.
ParadigmTable expand_paradigm(std::string_view headword,
                              std::string_view genitive_pattern,
                              std::string_view plural_pattern);

// One line per entry: headwords joined by ", " (the rend="sep:comma" hint;
// any other rend value is reported as a warning and rendered the same
// way), grammar as abbreviated surface text, each sense as def followed by
// ": " and its citations joined with "; ", paraphrases in "(...)", usage
// labels prefixed to their scope, etym prose with refs as "s. TEXT".
std::string render_print(const TeiEntry& entry, const RenderOptions& opts = {},
                         std::vector<Diagnostic>* diagnostics = nullptr);

// Like print, but gender follows opts.gender_style (long style renders the
// value attribute, e.g. "masculine"), and when the headword form carries
// both a genitive and a plural gram hint an eight-row paradigm grid is
// appended.
std::string render_expanded(const TeiEntry& entry,
                            const RenderOptions& opts = {},
                            std::vector<Diagnostic>* diagnostics = nullptr);

// One block element per entry, carrying the entry id as its anchor.
// Headwords and pos are bold elements, paraphrases italic, definitions
// plain, senses nested lists, refs hyperlinks to "#<id>".  The result is
// well-formed XML.
std::string render_html(const TeiEntry& entry, const RenderOptions& opts = {},
                        std::vector<Diagnostic>* diagnostics = nullptr);

// Dispatches on opts.media.
std::string render(const TeiEntry& entry, const RenderOptions& opts = {},
                   std::vector<Diagnostic>* diagnostics = nullptr);

}  // namespace lexmark
