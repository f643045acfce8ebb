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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diagnostics.hpp"
#include "xml_tree.hpp"

namespace lexmark {

// --------------------------------------------------------------------------
// TEI view.  Every container keeps its children as one ordered item list so
// document order survives a bind/unbind round trip (e.g. a usg sitting
// between two orths); the named accessors are filtered views of that list.
// Opaque XmlElement items hold whatever permissive binding did not
// recognize; they are re-emitted verbatim.

enum class BindMode { kStrict, kPermissive };

struct TeiOrth {
  std::string text;
  std::optional<std::string> extent;
  std::optional<std::string> rend;
  bool operator==(const TeiOrth&) const = default;
};

struct TeiPron {
  std::string text;
  bool operator==(const TeiPron&) const = default;
};

struct TeiUsg {
  std::optional<std::string> type;
  std::string text;
  bool operator==(const TeiUsg&) const = default;
};

struct TeiPos {
  std::optional<std::string> value;  // <pos value="N"/>
  std::string text;                  // <pos>noun</pos>
  bool operator==(const TeiPos&) const = default;
};

struct TeiGen {
  std::optional<std::string> value;  // abstract label, e.g. "masculine"
  std::string surface;               // printed form, e.g. "m."
  bool operator==(const TeiGen&) const = default;
};

// Stored opaquely: no published surface-form inventory exists for it.
struct TeiNumber {
  std::optional<std::string> value;
  std::string surface;
  bool operator==(const TeiNumber&) const = default;
};

struct TeiGram {
  std::optional<std::string> type;
  std::string text;
  bool operator==(const TeiGram&) const = default;
};

struct TeiGramGrp {
  struct Item;
  std::vector<Item> items;

  std::vector<TeiPos> pos() const;
  std::vector<TeiGen> genders() const;
  std::vector<TeiNumber> numbers() const;
  std::vector<TeiGram> grams() const;
  std::vector<TeiUsg> usgs() const;
  std::vector<const TeiGramGrp*> nested() const;
  // First gram of the given type anywhere in this group or a nested one.
  const TeiGram* find_gram(std::string_view type) const;

  bool operator==(const TeiGramGrp&) const;
};

struct TeiGramGrp::Item {
  std::variant<TeiPos, TeiGen, TeiNumber, TeiGram, TeiUsg, TeiGramGrp,
               XmlElement>
      value;
  bool operator==(const Item&) const = default;
};

struct TeiForm {
  struct Item;
  std::optional<std::string> type;  // e.g. "headword"
  std::vector<Item> items;

  std::vector<TeiOrth> orths() const;
  std::vector<TeiUsg> usgs() const;
  std::vector<const TeiGramGrp*> gram_grps() const;
  bool is_headword() const { return type && *type == "headword"; }

  bool operator==(const TeiForm&) const;
};

struct TeiForm::Item {
  std::variant<TeiOrth, TeiPron, TeiUsg, TeiGramGrp, XmlElement, std::string>
      value;
  bool operator==(const Item&) const = default;
};

struct TeiDef {
  std::optional<std::string> id;
  std::string text;
  bool operator==(const TeiDef&) const = default;
};

struct TeiQuote {
  std::optional<std::string> type;  // e.g. "paraphrase"
  std::string text;
  bool operator==(const TeiQuote&) const = default;
};

struct TeiBibl {
  std::string text;
  bool operator==(const TeiBibl&) const = default;
};

struct TeiRef {
  std::optional<std::string> type;
  std::optional<std::string> target;  // raw id; resolution is elsewhere
  std::string text;
  bool operator==(const TeiRef&) const = default;
};

// Cross-reference phrase: mixed text and ref children.
struct TeiXr {
  struct Item;
  std::vector<Item> items;
  bool operator==(const TeiXr&) const;
};

struct TeiXr::Item {
  std::variant<std::string, TeiRef, XmlElement> value;
  bool operator==(const Item&) const = default;
};

struct TeiCit {
  struct Item;
  std::optional<std::string> type;  // e.g. "example"
  std::vector<Item> items;

  std::vector<TeiQuote> quotes() const;
  std::vector<TeiUsg> usgs() const;
  std::optional<TeiBibl> bibl() const;

  bool operator==(const TeiCit&) const;
};

struct TeiCit::Item {
  std::variant<TeiQuote, TeiUsg, TeiBibl, XmlElement> value;
  bool operator==(const Item&) const = default;
};

struct TeiSense {
  struct Item;
  std::optional<std::string> id;
  std::optional<std::string> n;
  std::optional<int> level;
  std::vector<Item> items;

  std::vector<TeiDef> defs() const;
  std::vector<TeiCit> cits() const;
  std::vector<const TeiSense*> subsenses() const;
  std::vector<TeiUsg> usgs() const;

  bool operator==(const TeiSense&) const;
};

struct TeiSense::Item {
  std::variant<TeiDef, TeiCit, TeiSense, TeiUsg, TeiXr, XmlElement> value;
  bool operator==(const Item&) const = default;
};

// Mixed prose with embedded definitions and cross-references.
struct TeiEtym {
  struct Item;
  std::optional<std::string> id;
  std::vector<Item> items;

  std::string text() const;  // concatenated prose, embedded elements skipped
  std::vector<TeiDef> defs() const;
  std::vector<TeiRef> refs() const;

  bool operator==(const TeiEtym&) const;
};

struct TeiEtym::Item {
  std::variant<std::string, TeiDef, TeiRef, TeiXr, XmlElement> value;
  bool operator==(const Item&) const = default;
};

struct TeiEntry {
  struct Item;
  std::string id;  // empty = none
  bool free = false;
  // Element this entry was bound from: "entry", "entryFree" or "hom".
  std::string element_name = "entry";
  // free=true keeps the original child nodes verbatim; `items` then holds a
  // structured view derived from the same flat sequence.
  std::vector<XmlNode> free_content;
  std::vector<Item> items;

  std::vector<const TeiForm*> forms() const;
  std::vector<const TeiSense*> senses() const;
  const TeiEtym* etym() const;  // first, or nullptr
  std::vector<const TeiEntry*> homographs() const;
  const TeiForm* headword_form() const;  // first form with type="headword"

  bool operator==(const TeiEntry&) const;
};

struct TeiEntry::Item {
  std::variant<TeiForm, TeiSense, TeiEtym, TeiEntry, XmlElement> value;
  bool operator==(const Item&) const = default;
};

// Binds entry / entryFree / hom trees.  Strict mode throws
// UnknownElementError on vocabulary outside the modeled subset (or known
// names in impossible contexts) and MissingHeadwordError when a headword
// form carries no orth; permissive mode keeps such nodes opaque and never
// fails on a well-formed tree.
TeiEntry bind_tei(const XmlElement& root, BindMode mode);

// Inverse of bind_tei up to markup normalization: q becomes quote, and
// formatting whitespace between structural children is not regenerated.
// bind_tei(unbind_tei(e)) == e holds for every bound entry.
XmlElement unbind_tei(const TeiEntry& entry);

// --------------------------------------------------------------------------
// ISO 1951 view: a tree of named nodes, each tagged with its compositional
// class.

enum class IsoClass { kContainer, kBlock, kGroup, kCategory };

// *Ctn -> Container, *Block -> Block, the two group spellings (SenseGrp /
// SenseGroup / HomographGrp / HomographGroup) -> Group, all else Category.
IsoClass classify_iso(std::string_view name);
const char* to_string(IsoClass cls);

struct IsoNode {
  struct Item;
  std::string kind;  // element name
  IsoClass cls = IsoClass::kCategory;
  std::vector<XmlAttribute> attrs;
  std::vector<Item> children;

  bool operator==(const IsoNode&) const;
};

struct IsoNode::Item {
  std::variant<IsoNode, std::string> value;
  bool operator==(const Item&) const = default;
};

struct IsoEntry {
  std::vector<IsoNode> headword_ctn;  // children of the HeadwordCtn
  std::vector<IsoNode> sense_grps;    // the SenseGrp nodes themselves
  std::optional<IsoNode> etymology;

  bool operator==(const IsoEntry&) const = default;
};

// Root must be DictionaryEntry.  Throws UnknownElementError on unexpected
// structure directly under the root or the HeadwordCtn.
IsoEntry bind_iso(const XmlElement& root);

// --------------------------------------------------------------------------
// LMF view (machine-readable-dictionary extension subset).

struct LmfFeat {
  std::string name;
  std::string value;
  bool operator==(const LmfFeat&) const = default;
};
using LmfFeatSet = std::vector<LmfFeat>;

struct LmfEtymon {
  std::string id;
  std::optional<std::string> orth;
  std::optional<std::string> orth_lang;
  std::optional<std::string> pos;
  std::optional<std::string> gloss;
  std::optional<std::string> note;
  bool operator==(const LmfEtymon&) const = default;
};

struct LmfLink {
  std::string source;
  std::string target;
  std::string link_class;  // e.g. "loan word"
  bool operator==(const LmfLink&) const = default;
};

struct LmfEtymology {
  std::vector<LmfEtymon> etymons;
  std::vector<LmfLink> links;
  bool operator==(const LmfEtymology&) const = default;
};

struct LmfEntry {
  std::string lemma_id;                   // id attribute of Lemma, may be empty
  std::vector<LmfFeatSet> lemma;          // one feat set per FormRepresentation
  std::vector<LmfFeatSet> equivalents;
  std::optional<LmfEtymology> etymology;

  bool operator==(const LmfEntry&) const = default;
};

// Root must be LexicalEntry.  feats encode name/value as attribute
// name/value.  Throws UnknownElementError on unexpected structure and
// DanglingLinkError when an etymologicalLink end is not an id defined
// within this entry.
LmfEntry bind_lmf(const XmlElement& root);

// Rebuilds the LexicalEntry tree shape.
XmlElement unbind_lmf(const LmfEntry& entry);

}  // namespace lexmark
