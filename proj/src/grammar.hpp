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

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "diagnostics.hpp"
#include "xml_tree.hpp"

namespace lexmark {

// Content-model pattern algebra.  kAfter is internal to the matcher and
// never produced by the schema loader.
enum class PatternKind {
  kEmpty,
  kNotAllowed,
  kText,
  kValue,       // literal text, one of `values`
  kAttribute,   // `name`, content in `a` (kText or kValue)
  kElement,     // `name`, content in `a`
  kChoice,      // a | b
  kGroup,       // a , b
  kInterleave,  // a & b
  kOneOrMore,   // a +
  kZeroOrMore,  // a *
  kOptional,    // a ?
  kRef,         // `name`, resolved to `resolved`
  kPair,        // attribute/value pair: a = kAttribute, b = kValue
  kAfter,       // matcher-internal continuation
};

struct Pattern {
  PatternKind kind = PatternKind::kEmpty;
  const Pattern* a = nullptr;
  const Pattern* b = nullptr;
  std::string name;
  std::vector<std::string> values;  // sorted, unique
  const Pattern* resolved = nullptr;
  uint32_t id = 0;
  mutable std::atomic<int8_t> nullable_cache{-1};
};

// Hash-consing arena: structurally equal patterns share one node, so the
// matcher can deduplicate derivatives by pointer.  Interning is guarded by
// a mutex; validating one schema from several threads is safe.
class PatternArena {
 public:
  PatternArena();
  ~PatternArena();
  PatternArena(const PatternArena&) = delete;
  PatternArena& operator=(const PatternArena&) = delete;

  const Pattern* empty() const;
  const Pattern* not_allowed() const;
  const Pattern* text() const;
  const Pattern* make(PatternKind kind, const Pattern* a = nullptr,
                      const Pattern* b = nullptr, std::string name = {},
                      std::vector<std::string> values = {});
  Pattern* make_ref(std::string name);  // refs stay unique, resolved later

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct Schema {
  std::shared_ptr<PatternArena> arena;
  std::vector<std::pair<std::string, const Pattern*>> definitions;
  std::string start;  // definition name validation begins from

  const Pattern* find(std::string_view name) const;
  const Pattern* start_pattern() const;
};

// Parses the compact content-model notation:
//   name = pattern
//   element N { ... }   attribute N { 'v' | 'w' }   'literal'   text   empty
//   combinators  ,  &  |  and occurrence  ?  *  +  with parentheses;
//   '#' starts a comment.
// The definition named "start" is the start symbol; without one the first
// definition is used.  Throws SchemaSyntaxError / DanglingDefinitionError.
Schema load_schema(std::string_view text, std::string source_name = "<schema>");

// Validates `root` against the schema start symbol.  Returns one error per
// first failure point per element, in document order, each with an
// `expected` hint; empty means the tree matches exactly.
std::vector<Diagnostic> validate(const XmlElement& root, const Schema& schema,
                                 std::string_view source_name = "");

// True when the element matches `pattern` (a kElement pattern or a choice
// of such).  Used by validate and exposed for tests.
bool matches(const XmlElement& element, const Pattern* pattern,
             const Schema& schema);

struct RefAttr {
  std::string element;    // element local name
  std::string attribute;  // attribute local name
};

const std::vector<RefAttr>& default_ref_attrs();

// Duplicate-id errors and unresolved-reference warnings, intra-document
// only.  `id_attr` names the id attribute: with a prefix ("xml:id") it
// matches the full qualified name, otherwise only unprefixed attributes.
std::vector<Diagnostic> check_refs(
    const XmlDocument& doc, std::string_view id_attr = "xml:id",
    const std::vector<RefAttr>& ref_attrs = default_ref_attrs());

// Helpers for introspection in tests and tools.
std::vector<const Pattern*> flatten_choice(const Pattern* pattern);
const Pattern* deref(const Pattern* pattern);
bool nullable(const Pattern* pattern);

}  // namespace lexmark
