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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagnostics.hpp"
#include "entry_model.hpp"
#include "xml_tree.hpp"

namespace lexmark {

// Source-element pattern: local name, attribute equality predicates, an
// optional one-level parent context and an optional guard on the number of
// element children.
struct MatchPattern {
  std::string element;
  std::vector<std::pair<std::string, std::string>> attr_predicates;
  std::shared_ptr<MatchPattern> parent;
  std::optional<int> min_element_children;  // guard, n >= 1

  // attr predicates + 2 per parent level + 1 for a guard.
  int specificity() const;
  // `with_guard=false` ignores the child-count guard (used when the rule
  // carries an else branch: the guard then selects the branch instead of
  // deciding the match).
  bool matches(const XmlElement& element_node, const XmlElement* parent_node,
               bool with_guard) const;
};

// One step of a constructor.  kEmit wraps its body's output in a new
// element; kRecurse processes the source element's children in place;
// kChoose picks a branch from the rule's guard; kDrop produces nothing.
struct Action {
  enum class Kind { kEmit, kRecurse, kDrop, kChoose };

  struct Attr {
    std::string name;
    std::string value;  // literal text, or source attribute name if copy
    bool copy = false;
  };

  Kind kind = Kind::kRecurse;
  std::string name;           // kEmit: target element name
  std::vector<Attr> attrs;    // kEmit
  std::vector<Action> body;   // kEmit
  std::vector<Action> then_actions;  // kChoose
  std::vector<Action> else_actions;  // kChoose
};

struct TemplateRule {
  MatchPattern pattern;
  std::vector<Action> actions;
  int priority = 0;          // defaults to pattern specificity
  bool guard_filters = true; // false when the guard only selects a branch
};

// Unmatched elements contribute their processed children and text copies
// through, mirroring the built-in rules of template processors.
struct Ruleset {
  std::vector<TemplateRule> rules;
};

// Top-down single-visit application.  At each element the highest-priority
// matching rule fires; equal priority resolves to the later rule.  Output
// sibling order equals source document order; adjacent text output merges.
std::vector<XmlNode> apply(const Ruleset& ruleset, const XmlElement& source);

// Rule notation, one rule per line, `#` comments:
//   match NAME[attr=val]... => ACTIONS
//   match PARENT[...]/NAME[...] => ACTIONS
//   match NAME when children>=N => ACTIONS else ACTIONS
//   match NAME priority N => ACTIONS
//   ACTIONS := ACTION (; ACTION)*
//   ACTION  := recurse | drop | emit NAME(attr="lit", attr=@source) { ACTIONS }
// Every action path must recurse exactly once (a bare `drop` path is the
// exception).  Throws RuleSyntaxError.
Ruleset compile_ruleset(std::string_view text, std::string source_name = "<rules>");

// Model-level TEI -> LMF mapping: headword orths to FormRepresentations,
// level-0 defs to Equivalents, the etym prose decomposed into one etymon
// plus an etymological link (class "loan word" when the prose signals a
// borrowing, "unspecified" otherwise).  When the prose cannot be decomposed
// it is kept whole as the etymon note and a warning (code "lmf.mapping") is
// appended.
LmfEntry map_tei_to_lmf(const TeiEntry& entry, std::vector<Diagnostic>& diagnostics);

}  // namespace lexmark
