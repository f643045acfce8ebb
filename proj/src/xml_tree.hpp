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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace lexmark {

inline constexpr std::string_view kXmlNamespaceUri =
    "http://www.w3.org/XML/1998/namespace";

struct XmlName {
  std::string namespace_uri;
  std::string prefix;
  std::string local;

  std::string qname() const {
    return prefix.empty() ? local : prefix + ":" + local;
  }
  bool operator==(const XmlName&) const = default;
};

struct XmlAttribute {
  XmlName name;
  std::string value;
  bool operator==(const XmlAttribute&) const = default;
};

struct XmlNode;

struct XmlElement {
  XmlName name;
  std::vector<XmlAttribute> attributes;
  std::vector<XmlNode> children;  // adjacent text children are always merged
  // Source position; metadata only, excluded from equality.  0 = unknown.
  int line = 0;
  int column = 0;

  explicit XmlElement(std::string local = "");

  const std::string* attr_local(std::string_view local) const;
  const std::string* attr_qname(std::string_view qname) const;
  void set_attr(std::string local, std::string value);
  void set_attr_xml(std::string local, std::string value);  // xml: prefix

  // Appends a child; add_text merges into a trailing text node so the
  // merged-text invariant holds by construction.
  void add_child(XmlElement child);
  void add_text(std::string text);

  std::string text_content() const;  // concatenated descendant text
  std::vector<const XmlElement*> child_elements() const;
  size_t child_element_count() const;
  const XmlElement* first_child(std::string_view local) const;

  bool operator==(const XmlElement& other) const;  // ignores line/column
};

struct XmlNode {
  std::variant<XmlElement, std::string> value;

  XmlNode(XmlElement element) : value(std::move(element)) {}
  XmlNode(std::string text) : value(std::move(text)) {}

  bool is_element() const { return value.index() == 0; }
  bool is_text() const { return value.index() == 1; }
  const XmlElement& element() const { return std::get<XmlElement>(value); }
  XmlElement& element() { return std::get<XmlElement>(value); }
  const std::string& text() const { return std::get<std::string>(value); }

  bool operator==(const XmlNode&) const = default;
};

// Immutable after parse; safe to share across threads read-only.
class XmlDocument {
 public:
  XmlDocument();
  XmlDocument(XmlElement root, std::string source_name);
  XmlDocument(XmlDocument&&) noexcept;
  XmlDocument& operator=(XmlDocument&&) noexcept;
  XmlDocument(const XmlDocument&) = delete;
  XmlDocument& operator=(const XmlDocument&) = delete;
  ~XmlDocument();

  const XmlElement& root() const { return root_; }
  const std::string& source_name() const { return source_name_; }

  // Looks an element up by its xml:id.  The index is built on first use;
  // building throws DuplicateIdError when two elements share an id.
  // Returns nullptr when the id is absent.
  const XmlElement* find_by_id(std::string_view id) const;

 private:
  struct IdIndex;
  XmlElement root_;
  std::string source_name_;
  mutable std::unique_ptr<IdIndex> id_index_;
};

// Rejects DOCTYPE, resolves namespace declarations into XmlName, drops
// comments and processing instructions, folds CDATA into text, decodes the
// five named entities and numeric character references.  Throws
// WellFormednessError with a 1-based line/column on malformed input.
XmlDocument parse_xml(std::string_view input, std::string source_name);

enum class SerializeMode { kCompact, kPretty };

// Compact adds no whitespace; pretty indents element-only content two
// spaces per depth and leaves mixed content untouched.  Escaping is the
// minimum the syntax requires; namespace declarations are re-emitted where
// first needed (the root, for single-scope documents).
std::string serialize(const XmlElement& root, SerializeMode mode);
std::string serialize(const XmlDocument& doc, SerializeMode mode);
std::string serialize_forest(const std::vector<XmlNode>& nodes,
                             SerializeMode mode);

// Copy with every text node whitespace-collapsed and trimmed, empty text
// dropped.  Attribute values are untouched.  Used for comparisons that
// should ignore indentation.
XmlElement normalize_space(const XmlElement& element);

// Path of `target` inside `root` as /name[i]/... with 1-based ordinals
// among same-name siblings; empty when target is not in the tree.
std::string element_path(const XmlElement& root, const XmlElement& target);

std::string escape_text(std::string_view text);
std::string escape_attribute(std::string_view value);

}  // namespace lexmark
