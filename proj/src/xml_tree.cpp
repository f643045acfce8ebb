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

#include "xml_tree.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace lexmark {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool is_ws_only(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return is_ws(c); });
}

bool is_name_start(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' ||
         c >= 0x80;
}

bool is_name_char(unsigned char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.' ||
         c == ':';
}

void append_utf8(std::string& out, uint32_t cp) {
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
}

struct NsBinding {
  std::string prefix;
  std::string uri;
};

const std::string* lookup_ns(const std::vector<NsBinding>& scope,
                             std::string_view prefix) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    if (it->prefix == prefix) return &it->uri;
  }
  return nullptr;
}

class Parser {
 public:
  Parser(std::string_view src, std::string source_name)
      : src_(src), source_(std::move(source_name)) {}

  XmlElement run() {
    validate_utf8();
    skip_bom();
    skip_misc();
    if (eof()) fail("no root element");
    if (peek() != '<') fail("text outside the root element");
    XmlElement root = parse_element(0);
    skip_misc();
    if (!eof()) {
      if (peek() == '<') fail("more than one root element");
      fail("text outside the root element");
    }
    return root;
  }

 private:
  std::string_view src_;
  std::string source_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::vector<NsBinding> ns_{{std::string("xml"),
                              std::string(kXmlNamespaceUri)}};

  [[noreturn]] void fail(const std::string& message) const {
    fail_at(message, line_, column_);
  }
  [[noreturn]] void fail_at(const std::string& message, int line,
                            int column) const {
    throw WellFormednessError(message, source_, line, column);
  }

  bool eof() const { return pos_ >= src_.size(); }
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const {
    return src_.compare(pos_, s.size(), s) == 0;
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void advance_n(size_t n) {
    for (size_t i = 0; i < n; ++i) advance();
  }

  void skip_ws() {
    while (!eof() && is_ws(peek())) advance();
  }

  void skip_bom() {
    if (starts_with("\xEF\xBB\xBF")) pos_ += 3;
  }

  void validate_utf8() const {
    int line = 1;
    int column = 1;
    size_t i = 0;
    const auto bad = [&]() {
      throw WellFormednessError("input is not valid UTF-8", source_, line,
                                column);
    };
    while (i < src_.size()) {
      unsigned char c = src_[i];
      size_t len = 1;
      if (c < 0x80) {
        len = 1;
      } else if ((c & 0xE0) == 0xC0) {
        len = 2;
        if (c < 0xC2) bad();  // overlong
      } else if ((c & 0xF0) == 0xE0) {
        len = 3;
      } else if ((c & 0xF8) == 0xF0) {
        len = 4;
        if (c > 0xF4) bad();
      } else {
        bad();
      }
      if (i + len > src_.size()) bad();
      for (size_t k = 1; k < len; ++k) {
        if ((static_cast<unsigned char>(src_[i + k]) & 0xC0) != 0x80) bad();
      }
      if (c == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      i += len;
    }
  }

  // Whitespace, comments and processing instructions outside the root.
  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts_with("<!--")) {
        skip_comment();
      } else if (starts_with("<!DOCTYPE")) {
        fail("DOCTYPE declarations are not supported");
      } else if (starts_with("<?")) {
        skip_pi();
      } else {
        return;
      }
    }
  }

  void skip_comment() {
    int line = line_;
    int column = column_;
    advance_n(4);
    while (!starts_with("-->")) {
      if (eof()) fail_at("unterminated comment", line, column);
      advance();
    }
    advance_n(3);
  }

  void skip_pi() {
    int line = line_;
    int column = column_;
    advance_n(2);
    while (!starts_with("?>")) {
      if (eof()) fail_at("unterminated processing instruction", line, column);
      advance();
    }
    advance_n(2);
  }

  std::string parse_raw_name() {
    if (eof() || !is_name_start(static_cast<unsigned char>(peek()))) {
      fail("expected a name");
    }
    std::string name;
    while (!eof() && is_name_char(static_cast<unsigned char>(peek()))) {
      name += advance();
    }
    return name;
  }

  static std::pair<std::string, std::string> split_qname(
      const std::string& raw) {
    size_t colon = raw.find(':');
    if (colon == std::string::npos) return {"", raw};
    return {raw.substr(0, colon), raw.substr(colon + 1)};
  }

  void check_qname(const std::string& raw, int line, int column) {
    size_t first = raw.find(':');
    if (first == std::string::npos) return;
    if (first == 0 || first + 1 == raw.size() ||
        raw.find(':', first + 1) != std::string::npos) {
      fail_at("invalid name \"" + raw + "\"", line, column);
    }
  }

  uint32_t parse_char_ref(int line, int column) {
    // Caller consumed "&#".
    uint32_t cp = 0;
    bool hex = false;
    if (peek() == 'x' || peek() == 'X') {
      hex = true;
      advance();
    }
    bool any = false;
    while (!eof() && peek() != ';') {
      char c = advance();
      uint32_t digit;
      if (c >= '0' && c <= '9') {
        digit = c - '0';
      } else if (hex && c >= 'a' && c <= 'f') {
        digit = c - 'a' + 10;
      } else if (hex && c >= 'A' && c <= 'F') {
        digit = c - 'A' + 10;
      } else {
        fail_at("invalid character reference", line, column);
      }
      cp = cp * (hex ? 16 : 10) + digit;
      if (cp > 0x10FFFF) fail_at("character reference out of range", line,
                                 column);
      any = true;
    }
    if (!any || eof()) fail_at("invalid character reference", line, column);
    advance();  // ';'
    if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      fail_at("character reference out of range", line, column);
    }
    return cp;
  }

  void parse_entity(std::string& out) {
    int line = line_;
    int column = column_;
    advance();  // '&'
    if (peek() == '#') {
      advance();
      append_utf8(out, parse_char_ref(line, column));
      return;
    }
    std::string name;
    while (!eof() && peek() != ';' && name.size() <= 8) {
      if (!is_name_char(static_cast<unsigned char>(peek()))) break;
      name += advance();
    }
    if (eof() || peek() != ';') {
      fail_at("invalid entity reference", line, column);
    }
    advance();  // ';'
    if (name == "lt") {
      out += '<';
    } else if (name == "gt") {
      out += '>';
    } else if (name == "amp") {
      out += '&';
    } else if (name == "quot") {
      out += '"';
    } else if (name == "apos") {
      out += '\'';
    } else {
      fail_at("unknown entity \"&" + name + ";\"", line, column);
    }
  }

  std::string parse_attr_value() {
    char quote = peek();
    if (quote != '"' && quote != '\'') fail("expected a quoted value");
    advance();
    std::string value;
    for (;;) {
      if (eof()) fail("unterminated attribute value");
      char c = peek();
      if (c == quote) {
        advance();
        return value;
      }
      if (c == '<') fail("'<' is not allowed in attribute values");
      if (c == '&') {
        parse_entity(value);
      } else {
        value += advance();
      }
    }
  }

  XmlName resolve_element_name(const std::string& raw, int line, int column) {
    auto [prefix, local] = split_qname(raw);
    if (prefix == "xmlns") fail_at("\"xmlns\" is not a valid element prefix",
                                   line, column);
    const std::string* uri = lookup_ns(ns_, prefix);
    if (uri == nullptr) {
      if (prefix.empty()) return {"", "", local};
      fail_at("undeclared namespace prefix \"" + prefix + "\"", line, column);
    }
    return {*uri, prefix, local};
  }

  XmlName resolve_attribute_name(const std::string& raw, int line,
                                 int column) {
    auto [prefix, local] = split_qname(raw);
    if (prefix.empty()) return {"", "", local};  // attributes have no default
    const std::string* uri = lookup_ns(ns_, prefix);
    if (uri == nullptr) {
      fail_at("undeclared namespace prefix \"" + prefix + "\"", line, column);
    }
    return {*uri, prefix, local};
  }

  XmlElement parse_element(int depth) {
    if (depth > 512) fail("element nesting too deep");
    int start_line = line_;
    int start_column = column_;
    advance();  // '<'
    std::string raw_name = parse_raw_name();
    check_qname(raw_name, start_line, start_column);

    struct RawAttr {
      std::string raw;
      std::string value;
      int line;
      int column;
    };
    std::vector<RawAttr> raw_attrs;
    bool self_closing = false;
    for (;;) {
      bool had_ws = !eof() && is_ws(peek());
      skip_ws();
      if (eof()) fail_at("unclosed element <" + raw_name + ">", start_line,
                         start_column);
      if (peek() == '>') {
        advance();
        break;
      }
      if (peek() == '/') {
        advance();
        if (peek() != '>') fail("expected \">\"");
        advance();
        self_closing = true;
        break;
      }
      if (!had_ws) fail("expected whitespace before attribute");
      int attr_line = line_;
      int attr_column = column_;
      std::string attr_raw = parse_raw_name();
      check_qname(attr_raw, attr_line, attr_column);
      skip_ws();
      if (peek() != '=') fail("expected \"=\" after attribute name");
      advance();
      skip_ws();
      raw_attrs.push_back(
          {attr_raw, parse_attr_value(), attr_line, attr_column});
    }

    // Namespace declarations bind before any name on this element resolves.
    size_t ns_mark = ns_.size();
    std::vector<RawAttr> plain_attrs;
    for (auto& a : raw_attrs) {
      auto [prefix, local] = split_qname(a.raw);
      bool is_default_decl = prefix.empty() && local == "xmlns";
      bool is_prefix_decl = prefix == "xmlns";
      if (!is_default_decl && !is_prefix_decl) {
        plain_attrs.push_back(std::move(a));
        continue;
      }
      if (is_prefix_decl) {
        if (local == "xmlns") {
          fail_at("the \"xmlns\" prefix cannot be declared", a.line, a.column);
        }
        if (local == "xml" && a.value != kXmlNamespaceUri) {
          fail_at("the \"xml\" prefix is reserved", a.line, a.column);
        }
        if (a.value.empty()) {
          fail_at("namespace prefix \"" + local + "\" bound to an empty URI",
                  a.line, a.column);
        }
        ns_.push_back({local, a.value});
      } else {
        ns_.push_back({"", a.value});
      }
    }

    XmlElement element;
    element.name = resolve_element_name(raw_name, start_line, start_column);
    element.line = start_line;
    element.column = start_column;

    std::unordered_set<std::string> seen;
    for (const auto& a : plain_attrs) {
      XmlName name = resolve_attribute_name(a.raw, a.line, a.column);
      std::string key = name.namespace_uri + "\x1f" + name.local;
      if (!seen.insert(key).second) {
        fail_at("duplicate attribute \"" + a.raw + "\"", a.line, a.column);
      }
      element.attributes.push_back({std::move(name), a.value});
    }

    if (self_closing) {
      ns_.resize(ns_mark);
      return element;
    }

    // Content.
    for (;;) {
      if (eof()) {
        fail_at("unclosed element <" + raw_name + ">", start_line,
                start_column);
      }
      if (peek() != '<') {
        std::string text;
        while (!eof() && peek() != '<') {
          if (peek() == '&') {
            parse_entity(text);
          } else {
            char c = peek();
            if (static_cast<unsigned char>(c) < 0x20 && c != '\t' &&
                c != '\n' && c != '\r') {
              fail("control character is not allowed in content");
            }
            text += advance();
          }
        }
        element.add_text(std::move(text));
        continue;
      }
      if (starts_with("<!--")) {
        skip_comment();
        continue;
      }
      if (starts_with("<![CDATA[")) {
        int line = line_;
        int column = column_;
        advance_n(9);
        std::string text;
        while (!starts_with("]]>")) {
          if (eof()) fail_at("unterminated CDATA section", line, column);
          text += advance();
        }
        advance_n(3);
        element.add_text(std::move(text));
        continue;
      }
      if (starts_with("<!DOCTYPE")) {
        fail("DOCTYPE declarations are not supported");
      }
      if (starts_with("<?")) {
        skip_pi();
        continue;
      }
      if (starts_with("</")) {
        int end_line = line_;
        int end_column = column_;
        advance_n(2);
        std::string end_name = parse_raw_name();
        skip_ws();
        if (eof() || peek() != '>') fail("expected \">\"");
        advance();
        if (end_name != raw_name) {
          fail_at("mismatched end tag </" + end_name + ">, expected </" +
                      raw_name + ">",
                  end_line, end_column);
        }
        ns_.resize(ns_mark);
        return element;
      }
      element.children.emplace_back(parse_element(depth + 1));
    }
  }
};

// --- serialization ---------------------------------------------------------

void serialize_attrs(const XmlElement& e, std::string& out,
                     std::vector<NsBinding>& scope) {
  // Declarations the names on this element need but the scope lacks.
  auto ensure = [&](const std::string& prefix, const std::string& uri) {
    if (prefix == "xml") return;
    const std::string* bound = lookup_ns(scope, prefix);
    if (bound != nullptr && *bound == uri) return;
    if (bound == nullptr && uri.empty()) return;
    out += ' ';
    out += prefix.empty() ? "xmlns" : "xmlns:" + prefix;
    out += "=\"" + escape_attribute(uri) + "\"";
    scope.push_back({prefix, uri});
  };
  ensure(e.name.prefix, e.name.namespace_uri);
  for (const auto& a : e.attributes) {
    if (!a.name.prefix.empty()) ensure(a.name.prefix, a.name.namespace_uri);
  }
  for (const auto& a : e.attributes) {
    out += ' ';
    out += a.name.qname();
    out += "=\"" + escape_attribute(a.value) + "\"";
  }
}

bool element_only_content(const XmlElement& e) {
  bool any_element = false;
  for (const auto& child : e.children) {
    if (child.is_element()) {
      any_element = true;
    } else if (!is_ws_only(child.text())) {
      return false;
    }
  }
  return any_element;
}

void serialize_element(const XmlElement& e, std::string& out, int depth,
                       SerializeMode mode, std::vector<NsBinding>& scope);

void serialize_children_compact(const XmlElement& e, std::string& out,
                                std::vector<NsBinding>& scope) {
  for (const auto& child : e.children) {
    if (child.is_text()) {
      out += escape_text(child.text());
    } else {
      serialize_element(child.element(), out, 0, SerializeMode::kCompact,
                        scope);
    }
  }
}

void serialize_element(const XmlElement& e, std::string& out, int depth,
                       SerializeMode mode, std::vector<NsBinding>& scope) {
  size_t ns_mark = scope.size();
  out += '<';
  out += e.name.qname();
  serialize_attrs(e, out, scope);
  if (e.children.empty()) {
    out += "/>";
    scope.resize(ns_mark);
    return;
  }
  out += '>';
  if (mode == SerializeMode::kPretty && element_only_content(e)) {
    std::string indent((depth + 1) * 2, ' ');
    for (const auto& child : e.children) {
      if (!child.is_element()) continue;  // re-indented below
      out += '\n';
      out += indent;
      serialize_element(child.element(), out, depth + 1, mode, scope);
    }
    out += '\n';
    out += std::string(depth * 2, ' ');
  } else {
    serialize_children_compact(e, out, scope);
  }
  out += "</";
  out += e.name.qname();
  out += '>';
  scope.resize(ns_mark);
}

}  // namespace

// --- XmlElement -------------------------------------------------------------

XmlElement::XmlElement(std::string local) { name.local = std::move(local); }

const std::string* XmlElement::attr_local(std::string_view local) const {
  for (const auto& a : attributes) {
    if (a.name.local == local) return &a.value;
  }
  return nullptr;
}

const std::string* XmlElement::attr_qname(std::string_view qname) const {
  for (const auto& a : attributes) {
    if (a.name.qname() == qname) return &a.value;
  }
  return nullptr;
}

void XmlElement::set_attr(std::string local, std::string value) {
  XmlName name;
  name.local = std::move(local);
  attributes.push_back({std::move(name), std::move(value)});
}

void XmlElement::set_attr_xml(std::string local, std::string value) {
  XmlName name;
  name.namespace_uri = std::string(kXmlNamespaceUri);
  name.prefix = "xml";
  name.local = std::move(local);
  attributes.push_back({std::move(name), std::move(value)});
}

void XmlElement::add_child(XmlElement child) {
  children.emplace_back(std::move(child));
}

void XmlElement::add_text(std::string text) {
  if (text.empty()) return;
  if (!children.empty() && children.back().is_text()) {
    std::get<std::string>(children.back().value) += text;
    return;
  }
  children.emplace_back(std::move(text));
}

std::string XmlElement::text_content() const {
  std::string out;
  for (const auto& child : children) {
    if (child.is_text()) {
      out += child.text();
    } else {
      out += child.element().text_content();
    }
  }
  return out;
}

std::vector<const XmlElement*> XmlElement::child_elements() const {
  std::vector<const XmlElement*> out;
  for (const auto& child : children) {
    if (child.is_element()) out.push_back(&child.element());
  }
  return out;
}

size_t XmlElement::child_element_count() const {
  size_t n = 0;
  for (const auto& child : children) {
    if (child.is_element()) ++n;
  }
  return n;
}

const XmlElement* XmlElement::first_child(std::string_view local) const {
  for (const auto& child : children) {
    if (child.is_element() && child.element().name.local == local) {
      return &child.element();
    }
  }
  return nullptr;
}

bool XmlElement::operator==(const XmlElement& other) const {
  return name == other.name && attributes == other.attributes &&
         children == other.children;
}

// --- XmlDocument ------------------------------------------------------------

struct XmlDocument::IdIndex {
  std::mutex mutex;
  bool built = false;
  std::unordered_map<std::string, const XmlElement*> by_id;
};

XmlDocument::XmlDocument() : id_index_(std::make_unique<IdIndex>()) {}

XmlDocument::XmlDocument(XmlElement root, std::string source_name)
    : root_(std::move(root)),
      source_name_(std::move(source_name)),
      id_index_(std::make_unique<IdIndex>()) {}

XmlDocument::XmlDocument(XmlDocument&& other) noexcept
    : root_(std::move(other.root_)),
      source_name_(std::move(other.source_name_)),
      id_index_(std::make_unique<IdIndex>()) {}

XmlDocument& XmlDocument::operator=(XmlDocument&& other) noexcept {
  if (this != &other) {
    root_ = std::move(other.root_);
    source_name_ = std::move(other.source_name_);
    id_index_ = std::make_unique<IdIndex>();  // pointers would go stale
  }
  return *this;
}

XmlDocument::~XmlDocument() = default;

namespace {
void collect_ids(const XmlElement& e,
                 std::unordered_map<std::string, const XmlElement*>& by_id) {
  if (const std::string* id = e.attr_qname("xml:id")) {
    auto [it, inserted] = by_id.emplace(*id, &e);
    if (!inserted) throw DuplicateIdError(*id);
  }
  for (const auto& child : e.children) {
    if (child.is_element()) collect_ids(child.element(), by_id);
  }
}
}  // namespace

const XmlElement* XmlDocument::find_by_id(std::string_view id) const {
  std::lock_guard<std::mutex> lock(id_index_->mutex);
  if (!id_index_->built) {
    id_index_->by_id.clear();
    collect_ids(root_, id_index_->by_id);
    id_index_->built = true;
  }
  auto it = id_index_->by_id.find(std::string(id));
  return it == id_index_->by_id.end() ? nullptr : it->second;
}

// --- top-level operations ---------------------------------------------------

XmlDocument parse_xml(std::string_view input, std::string source_name) {
  Parser parser(input, source_name);
  return XmlDocument(parser.run(), std::move(source_name));
}

std::string serialize(const XmlElement& root, SerializeMode mode) {
  std::string out;
  std::vector<NsBinding> scope{{std::string("xml"),
                                std::string(kXmlNamespaceUri)}};
  serialize_element(root, out, 0, mode, scope);
  if (mode == SerializeMode::kPretty) out += '\n';
  return out;
}

std::string serialize(const XmlDocument& doc, SerializeMode mode) {
  return serialize(doc.root(), mode);
}

std::string serialize_forest(const std::vector<XmlNode>& nodes,
                             SerializeMode mode) {
  std::string out;
  std::vector<NsBinding> scope{{std::string("xml"),
                                std::string(kXmlNamespaceUri)}};
  for (const auto& node : nodes) {
    if (node.is_text()) {
      out += escape_text(node.text());
    } else {
      serialize_element(node.element(), out, 0, mode, scope);
      if (mode == SerializeMode::kPretty) out += '\n';
    }
  }
  return out;
}

namespace {
std::string collapse_ws(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (is_ws(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}
}  // namespace

XmlElement normalize_space(const XmlElement& element) {
  XmlElement out;
  out.name = element.name;
  out.attributes = element.attributes;
  for (const auto& child : element.children) {
    if (child.is_element()) {
      out.children.emplace_back(normalize_space(child.element()));
    } else {
      std::string text = collapse_ws(child.text());
      if (!text.empty()) out.add_text(std::move(text));
    }
  }
  return out;
}

namespace {
bool find_path(const XmlElement& current, const XmlElement& target,
               std::string& path) {
  if (&current == &target) return true;
  std::unordered_map<std::string, int> ordinals;
  for (const auto& child : current.children) {
    if (!child.is_element()) continue;
    const XmlElement& e = child.element();
    int ordinal = ++ordinals[e.name.local];
    size_t mark = path.size();
    path += "/" + e.name.local + "[" + std::to_string(ordinal) + "]";
    if (find_path(e, target, path)) return true;
    path.resize(mark);
  }
  return false;
}
}  // namespace

std::string element_path(const XmlElement& root, const XmlElement& target) {
  std::string path = "/" + root.name.local;
  if (&root == &target) return path;
  return find_path(root, target, path) ? path : std::string();
}

std::string escape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '&') {
      out += "&amp;";
    } else if (c == '<') {
      out += "&lt;";
    } else if (c == '>' && i >= 2 && text[i - 1] == ']' && text[i - 2] == ']') {
      out += "&gt;";  // "]]>" must not appear literally
    } else {
      out += c;
    }
  }
  return out;
}

std::string escape_attribute(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    if (c == '&') {
      out += "&amp;";
    } else if (c == '<') {
      out += "&lt;";
    } else if (c == '"') {
      out += "&quot;";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace lexmark
