// Copyright 2026 The lexmark authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "grammar.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"

namespace lexmark {

namespace {

std::string_view trim_ws(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\n' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\n' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

bool ws_only(std::string_view s) { return trim_ws(s).empty(); }

}  // namespace

// ---------------------------------------------------------------------------
// Pattern arena

namespace {

struct ArenaKey {
  PatternKind kind;
  const Pattern* a;
  const Pattern* b;
  std::string name;
  std::vector<std::string> values;

  bool operator==(const ArenaKey& o) const {
    return kind == o.kind && a == o.a && b == o.b && name == o.name && values == o.values;
  }
};

struct ArenaKeyHash {
  size_t operator()(const ArenaKey& k) const {
    size_t h = std::hash<int>()(static_cast<int>(k.kind));
    auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    mix(std::hash<const void*>()(k.a));
    mix(std::hash<const void*>()(k.b));
    mix(std::hash<std::string>()(k.name));
    for (const auto& v : k.values) mix(std::hash<std::string>()(v));
    return h;
  }
};

}  // namespace

struct PatternArena::Impl {
  std::mutex mutex;
  std::deque<Pattern> nodes;  // deque: stable addresses across growth
  std::unordered_map<ArenaKey, const Pattern*, ArenaKeyHash> interned;
  const Pattern* empty = nullptr;
  const Pattern* not_allowed = nullptr;
  const Pattern* text = nullptr;
  uint32_t next_id = 0;

  Pattern* append(PatternKind kind, const Pattern* a, const Pattern* b,
                  std::string name, std::vector<std::string> values) {
    Pattern& n = nodes.emplace_back();
    n.kind = kind;
    n.a = a;
    n.b = b;
    n.name = std::move(name);
    n.values = std::move(values);
    n.id = next_id++;
    return &n;
  }
};

PatternArena::PatternArena() : impl_(new Impl) {
  impl_->empty = impl_->append(PatternKind::kEmpty, nullptr, nullptr, {}, {});
  impl_->not_allowed = impl_->append(PatternKind::kNotAllowed, nullptr, nullptr, {}, {});
  impl_->text = impl_->append(PatternKind::kText, nullptr, nullptr, {}, {});
}

PatternArena::~PatternArena() = default;

const Pattern* PatternArena::empty() const { return impl_->empty; }
const Pattern* PatternArena::not_allowed() const { return impl_->not_allowed; }
const Pattern* PatternArena::text() const { return impl_->text; }

const Pattern* PatternArena::make(PatternKind kind, const Pattern* a, const Pattern* b,
                                  std::string name, std::vector<std::string> values) {
  if (kind == PatternKind::kEmpty) return impl_->empty;
  if (kind == PatternKind::kNotAllowed) return impl_->not_allowed;
  if (kind == PatternKind::kText) return impl_->text;
  if (kind == PatternKind::kValue) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }
  std::lock_guard<std::mutex> lock(impl_->mutex);
  ArenaKey key{kind, a, b, name, values};
  auto it = impl_->interned.find(key);
  if (it != impl_->interned.end()) return it->second;
  Pattern* n = impl_->append(kind, a, b, std::move(name), std::move(values));
  impl_->interned.emplace(std::move(key), n);
  return n;
}

Pattern* PatternArena::make_ref(std::string name) {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  // Not interned: each ref site is distinct so `resolved` can be patched.
  return impl_->append(PatternKind::kRef, nullptr, nullptr, std::move(name), {});
}

const Pattern* deref(const Pattern* p) {
  while (p && p->kind == PatternKind::kRef) p = p->resolved;
  return p;
}

// ---------------------------------------------------------------------------
// Smart constructors. These keep derivative states small: NotAllowed and
// Empty are algebraic zero/one, and Choice is flattened and deduplicated
// (choice is idempotent, so duplicates never change the language).

namespace {

struct Builder {
  PatternArena& ar;
  const Pattern* kEmptyP;
  const Pattern* kNotP;
  const Pattern* kTextP;

  explicit Builder(PatternArena& arena)
      : ar(arena), kEmptyP(arena.empty()), kNotP(arena.not_allowed()), kTextP(arena.text()) {}

  void collect_choice(const Pattern* p, std::vector<const Pattern*>& out) const {
    if (p->kind == PatternKind::kChoice) {
      collect_choice(p->a, out);
      collect_choice(p->b, out);
    } else if (p != kNotP) {
      out.push_back(p);
    }
  }

  const Pattern* choice(const Pattern* a, const Pattern* b) const {
    if (a == kNotP) return b;
    if (b == kNotP) return a;
    if (a == b) return a;
    std::vector<const Pattern*> leaves;
    collect_choice(a, leaves);
    collect_choice(b, leaves);
    std::sort(leaves.begin(), leaves.end(),
              [](const Pattern* x, const Pattern* y) { return x->id < y->id; });
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    if (leaves.empty()) return kNotP;
    const Pattern* acc = leaves.back();
    for (size_t i = leaves.size() - 1; i-- > 0;)
      acc = ar.make(PatternKind::kChoice, leaves[i], acc);
    return acc;
  }

  const Pattern* group(const Pattern* a, const Pattern* b) const {
    if (a == kNotP || b == kNotP) return kNotP;
    if (a == kEmptyP) return b;
    if (b == kEmptyP) return a;
    return ar.make(PatternKind::kGroup, a, b);
  }

  const Pattern* interleave(const Pattern* a, const Pattern* b) const {
    if (a == kNotP || b == kNotP) return kNotP;
    if (a == kEmptyP) return b;
    if (b == kEmptyP) return a;
    return ar.make(PatternKind::kInterleave, a, b);
  }

  const Pattern* after(const Pattern* a, const Pattern* b) const {
    if (a == kNotP || b == kNotP) return kNotP;
    return ar.make(PatternKind::kAfter, a, b);
  }

  const Pattern* one_or_more(const Pattern* a) const {
    if (a == kNotP) return kNotP;
    if (a == kEmptyP) return kEmptyP;
    return ar.make(PatternKind::kOneOrMore, a);
  }

  const Pattern* star(const Pattern* a) const {
    if (a == kNotP || a == kEmptyP) return kEmptyP;
    return ar.make(PatternKind::kZeroOrMore, a);
  }

  const Pattern* optional(const Pattern* a) const {
    if (a == kNotP || a == kEmptyP) return kEmptyP;
    return ar.make(PatternKind::kOptional, a);
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Nullability with a per-node lazy cache.

bool nullable(const Pattern* p) {
  p = deref(p);
  int8_t cached = p->nullable_cache.load(std::memory_order_relaxed);
  if (cached >= 0) return cached != 0;
  bool result = false;
  switch (p->kind) {
    case PatternKind::kEmpty:
    case PatternKind::kText:
    case PatternKind::kZeroOrMore:
    case PatternKind::kOptional:
      result = true;
      break;
    case PatternKind::kChoice:
      result = nullable(p->a) || nullable(p->b);
      break;
    case PatternKind::kGroup:
    case PatternKind::kInterleave:
    case PatternKind::kPair:
      result = nullable(p->a) && nullable(p->b);
      break;
    case PatternKind::kOneOrMore:
      result = nullable(p->a);
      break;
    default:  // NotAllowed, Value, Attribute, Element, After
      result = false;
      break;
  }
  // kZeroOrMore/kOptional short-circuit above; recursion through refs is
  // finite because every cycle crosses an element boundary (checked at load).
  p->nullable_cache.store(result ? 1 : 0, std::memory_order_relaxed);
  return result;
}

// ---------------------------------------------------------------------------
// Derivative-based matching. One event at a time: start tag open, attributes,
// start tag close, children (text/elements), end tag. `After(a, b)` means
// "finish a, then continue as b in the parent".

namespace {

class Matcher {
 public:
  explicit Matcher(PatternArena& arena) : b_(arena) {}

  const Pattern* child_deriv(const Pattern* p, const XmlElement& e) {
    const Pattern* p1 = start_tag_open(p, e.name.local);
    if (p1 == b_.kNotP) return p1;
    const Pattern* p2 = atts_deriv(p1, e);
    if (p2 == b_.kNotP) return p2;
    const Pattern* p3 = start_tag_close(p2);
    if (p3 == b_.kNotP) return p3;
    const Pattern* p4 = children_deriv(p3, e);
    if (p4 == b_.kNotP) return p4;
    return end_tag(p4);
  }

  const Pattern* start_tag_open(const Pattern* p, const std::string& name) {
    p = deref(p);
    switch (p->kind) {
      case PatternKind::kChoice:
        return b_.choice(start_tag_open(p->a, name), start_tag_open(p->b, name));
      case PatternKind::kElement:
        return p->name == name ? b_.after(p->a ? p->a : b_.kEmptyP, b_.kEmptyP) : b_.kNotP;
      case PatternKind::kInterleave:
        return b_.choice(
            apply_after([&](const Pattern* k) { return b_.interleave(k, p->b); },
                        start_tag_open(p->a, name)),
            apply_after([&](const Pattern* k) { return b_.interleave(p->a, k); },
                        start_tag_open(p->b, name)));
      case PatternKind::kGroup:
      case PatternKind::kPair: {
        const Pattern* x = apply_after(
            [&](const Pattern* k) { return b_.group(k, p->b); }, start_tag_open(p->a, name));
        return nullable(p->a) ? b_.choice(x, start_tag_open(p->b, name)) : x;
      }
      case PatternKind::kOneOrMore:
      case PatternKind::kZeroOrMore:
        return apply_after([&](const Pattern* k) { return b_.group(k, b_.star(p->a)); },
                           start_tag_open(p->a, name));
      case PatternKind::kOptional:
        return start_tag_open(p->a, name);
      case PatternKind::kAfter:
        return apply_after([&](const Pattern* k) { return b_.after(k, p->b); },
                           start_tag_open(p->a, name));
      default:
        return b_.kNotP;
    }
  }

  const Pattern* att_deriv(const Pattern* p, const std::string& name, const std::string& value) {
    p = deref(p);
    switch (p->kind) {
      case PatternKind::kAfter:
        return b_.after(att_deriv(p->a, name, value), p->b);
      case PatternKind::kChoice:
        return b_.choice(att_deriv(p->a, name, value), att_deriv(p->b, name, value));
      case PatternKind::kGroup:
      case PatternKind::kPair:
        return b_.choice(b_.group(att_deriv(p->a, name, value), p->b),
                         b_.group(p->a, att_deriv(p->b, name, value)));
      case PatternKind::kInterleave:
        return b_.choice(b_.interleave(att_deriv(p->a, name, value), p->b),
                         b_.interleave(p->a, att_deriv(p->b, name, value)));
      case PatternKind::kOneOrMore:
      case PatternKind::kZeroOrMore:
        return b_.group(att_deriv(p->a, name, value), b_.star(p->a));
      case PatternKind::kOptional:
        return att_deriv(p->a, name, value);
      case PatternKind::kAttribute:
        return (p->name == name && value_match(p->a, value)) ? b_.kEmptyP : b_.kNotP;
      default:
        return b_.kNotP;
    }
  }

  const Pattern* atts_deriv(const Pattern* p, const XmlElement& e) {
    for (const XmlAttribute& a : e.attributes) {
      p = att_deriv(p, a.name.local, a.value);
      if (p == b_.kNotP) return p;
    }
    return p;
  }

  // Drops pending attribute alternatives once the start tag closes.
  const Pattern* start_tag_close(const Pattern* p) {
    p = deref(p);
    switch (p->kind) {
      case PatternKind::kAfter:
        return b_.after(start_tag_close(p->a), p->b);
      case PatternKind::kChoice:
        return b_.choice(start_tag_close(p->a), start_tag_close(p->b));
      case PatternKind::kGroup:
      case PatternKind::kPair:
        return b_.group(start_tag_close(p->a), start_tag_close(p->b));
      case PatternKind::kInterleave:
        return b_.interleave(start_tag_close(p->a), start_tag_close(p->b));
      case PatternKind::kOneOrMore:
        return b_.one_or_more(start_tag_close(p->a));
      case PatternKind::kZeroOrMore:
        return b_.star(start_tag_close(p->a));
      case PatternKind::kOptional:
        return b_.optional(start_tag_close(p->a));
      case PatternKind::kAttribute:
        return b_.kNotP;
      default:
        return p;
    }
  }

  // Like start_tag_close but treats unsatisfied attributes as satisfied, so
  // diagnosis can continue past a missing-attribute failure.
  const Pattern* start_tag_close_force(const Pattern* p) {
    p = deref(p);
    switch (p->kind) {
      case PatternKind::kAfter:
        return b_.after(start_tag_close_force(p->a), p->b);
      case PatternKind::kChoice:
        return b_.choice(start_tag_close_force(p->a), start_tag_close_force(p->b));
      case PatternKind::kGroup:
      case PatternKind::kPair:
        return b_.group(start_tag_close_force(p->a), start_tag_close_force(p->b));
      case PatternKind::kInterleave:
        return b_.interleave(start_tag_close_force(p->a), start_tag_close_force(p->b));
      case PatternKind::kOneOrMore:
        return b_.one_or_more(start_tag_close_force(p->a));
      case PatternKind::kZeroOrMore:
        return b_.star(start_tag_close_force(p->a));
      case PatternKind::kOptional:
        return b_.optional(start_tag_close_force(p->a));
      case PatternKind::kAttribute:
        return b_.kEmptyP;
      default:
        return p;
    }
  }

  const Pattern* text_deriv(const Pattern* p, const std::string& s) {
    p = deref(p);
    switch (p->kind) {
      case PatternKind::kChoice:
        return b_.choice(text_deriv(p->a, s), text_deriv(p->b, s));
      case PatternKind::kInterleave:
        return b_.choice(b_.interleave(text_deriv(p->a, s), p->b),
                         b_.interleave(p->a, text_deriv(p->b, s)));
      case PatternKind::kGroup:
      case PatternKind::kPair: {
        const Pattern* g = b_.group(text_deriv(p->a, s), p->b);
        return nullable(p->a) ? b_.choice(g, text_deriv(p->b, s)) : g;
      }
      case PatternKind::kAfter:
        return b_.after(text_deriv(p->a, s), p->b);
      case PatternKind::kOneOrMore:
      case PatternKind::kZeroOrMore:
        return b_.group(text_deriv(p->a, s), b_.star(p->a));
      case PatternKind::kOptional:
        return text_deriv(p->a, s);
      case PatternKind::kText:
        return b_.kTextP;  // text absorbs any number of text events
      case PatternKind::kValue: {
        std::string t(trim_ws(s));
        return std::binary_search(p->values.begin(), p->values.end(), t) ? b_.kEmptyP : b_.kNotP;
      }
      default:
        return b_.kNotP;
    }
  }

  // Whitespace-only children may satisfy either "no text" or a text slot, so
  // a lone whitespace-ish text child keeps both alternatives alive.
  const Pattern* children_deriv(const Pattern* p, const XmlElement& e) {
    if (e.children.empty()) return p;
    if (e.children.size() == 1 && e.children[0].is_text()) {
      const std::string& s = e.children[0].text();
      const Pattern* p1 = text_deriv(p, s);
      return ws_only(s) ? b_.choice(p, p1) : p1;
    }
    for (const XmlNode& n : e.children) {
      if (n.is_text()) {
        if (ws_only(n.text())) continue;
        p = text_deriv(p, n.text());
      } else {
        p = child_deriv(p, n.element());
      }
      if (p == b_.kNotP) return p;
    }
    return p;
  }

  const Pattern* end_tag(const Pattern* p) {
    p = deref(p);
    switch (p->kind) {
      case PatternKind::kChoice:
        return b_.choice(end_tag(p->a), end_tag(p->b));
      case PatternKind::kAfter:
        return nullable(p->a) ? p->b : b_.kNotP;
      default:
        return b_.kNotP;
    }
  }

  // Continuation in the parent once a child subtree is (assumed) finished.
  const Pattern* end_tag_force(const Pattern* p) {
    p = deref(p);
    switch (p->kind) {
      case PatternKind::kChoice:
        return b_.choice(end_tag_force(p->a), end_tag_force(p->b));
      case PatternKind::kAfter:
        return p->b;
      default:
        return b_.kNotP;
    }
  }

  // Content obligations of the child just opened (heads of the After pairs).
  const Pattern* after_heads(const Pattern* p) {
    p = deref(p);
    switch (p->kind) {
      case PatternKind::kChoice:
        return b_.choice(after_heads(p->a), after_heads(p->b));
      case PatternKind::kAfter:
        return p->a;
      default:
        return b_.kNotP;
    }
  }

  const Builder& builder() const { return b_; }

 private:
  template <typename F>
  const Pattern* apply_after(F&& f, const Pattern* p) {
    p = deref(p);
    switch (p->kind) {
      case PatternKind::kAfter:
        return b_.after(p->a, f(p->b));
      case PatternKind::kChoice:
        return b_.choice(apply_after(f, p->a), apply_after(f, p->b));
      default:
        return b_.kNotP;
    }
  }

  bool value_match(const Pattern* content, const std::string& value) {
    if (content == nullptr) return true;
    return nullable(text_deriv(content, value)) || (nullable(content) && ws_only(value));
  }

  Builder b_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Schema text: lexer

namespace {

struct Token {
  enum Kind { kIdent, kString, kPunct, kEnd } kind = kEnd;
  std::string text;  // ident name or string body
  char punct = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw SchemaSyntaxError(message, source_, at.line, at.column);
  }

  const std::string& source() const { return source_; }

 private:
  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  }

  char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void bump() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void advance() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(cur()))) bump();
      if (cur() == '#') {
        while (pos_ < text_.size() && cur() != '\n') bump();
        continue;
      }
      break;
    }
    current_ = Token{};
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::kEnd;
      return;
    }
    char c = cur();
    if (ident_start(c)) {
      size_t start = pos_;
      while (pos_ < text_.size() && ident_part(cur())) bump();
      current_.kind = Token::kIdent;
      current_.text.assign(text_.substr(start, pos_ - start));
      return;
    }
    if (c == '"' || c == '\'') {
      char quote = c;
      bump();
      std::string body;
      while (pos_ < text_.size() && cur() != quote) {
        if (cur() == '\n') fail_here("unterminated string literal");
        body.push_back(cur());
        bump();
      }
      if (pos_ >= text_.size()) fail_here("unterminated string literal");
      bump();  // closing quote
      current_.kind = Token::kString;
      current_.text = std::move(body);
      return;
    }
    static const std::string kPunct = "={}(),&|?*+";
    if (kPunct.find(c) != std::string::npos) {
      current_.kind = Token::kPunct;
      current_.punct = c;
      bump();
      return;
    }
    fail_here(std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void fail_here(const std::string& message) const {
    throw SchemaSyntaxError(message, source_, line_, col_);
  }

  std::string_view text_;
  std::string source_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

// ---------------------------------------------------------------------------
// Schema text: parser

class SchemaParser {
 public:
  SchemaParser(std::string_view text, std::string source)
      : lex_(text, std::move(source)), arena_(std::make_shared<PatternArena>()), b_(*arena_) {}

  Schema parse() {
    Schema schema;
    schema.arena = arena_;
    while (lex_.peek().kind != Token::kEnd) {
      Token name = expect_ident("definition name");
      expect_punct('=');
      const Pattern* body = parse_pattern();
      for (const auto& d : schema.definitions)
        if (d.first == name.text) lex_.fail("duplicate definition \"" + name.text + "\"", name);
      schema.definitions.emplace_back(name.text, body);
    }
    if (schema.definitions.empty())
      lex_.fail("schema defines no patterns", lex_.peek());
    schema.start = "start";
    if (schema.find("start") == nullptr) schema.start = schema.definitions.front().first;

    resolve_refs(schema);
    check_cycles(schema);
    check_interleave_text(schema);
    return schema;
  }

 private:
  Token expect_ident(const std::string& what) {
    Token t = lex_.next();
    if (t.kind != Token::kIdent) lex_.fail("expected " + what, t);
    return t;
  }

  void expect_punct(char c) {
    Token t = lex_.next();
    if (t.kind != Token::kPunct || t.punct != c)
      lex_.fail(std::string("expected '") + c + "'", t);
  }

  bool peek_punct(char c) const {
    return lex_.peek().kind == Token::kPunct && lex_.peek().punct == c;
  }

  // pattern := particle (("," particle)* | ("&" particle)* | ("|" particle)*)
  // Mixing connectors at one level requires parentheses.
  const Pattern* parse_pattern() {
    std::vector<const Pattern*> items;
    items.push_back(parse_particle());
    char op = 0;
    if (peek_punct(',') || peek_punct('&') || peek_punct('|')) op = lex_.peek().punct;
    while (op != 0 && peek_punct(op)) {
      lex_.next();
      items.push_back(parse_particle());
    }
    if (peek_punct(',') || peek_punct('&') || peek_punct('|')) {
      Token t = lex_.peek();
      lex_.fail("cannot mix ',', '&' and '|' without parentheses", t);
    }
    if (items.size() == 1) return items[0];
    if (op == ',') {
      // A two-item sequence of an attribute and a value constrains the
      // attribute value and the element text jointly.
      if (items.size() == 2 && deref(items[0])->kind == PatternKind::kAttribute &&
          deref(items[1])->kind == PatternKind::kValue)
        return arena_->make(PatternKind::kPair, items[0], items[1]);
      const Pattern* acc = items.back();
      for (size_t i = items.size() - 1; i-- > 0;) acc = b_.group(items[i], acc);
      return acc;
    }
    if (op == '&') {
      const Pattern* acc = items.back();
      for (size_t i = items.size() - 1; i-- > 0;) acc = b_.interleave(items[i], acc);
      return acc;
    }
    const Pattern* acc = items.back();
    for (size_t i = items.size() - 1; i-- > 0;) acc = b_.choice(items[i], acc);
    return acc;
  }

  const Pattern* parse_particle() {
    const Pattern* p = parse_primary();
    if (lex_.peek().kind == Token::kPunct) {
      char c = lex_.peek().punct;
      if (c == '?') {
        lex_.next();
        return b_.optional(p);
      }
      if (c == '*') {
        lex_.next();
        return b_.star(p);
      }
      if (c == '+') {
        lex_.next();
        return b_.one_or_more(p);
      }
    }
    return p;
  }

  const Pattern* parse_primary() {
    Token t = lex_.next();
    if (t.kind == Token::kString)
      return arena_->make(PatternKind::kValue, nullptr, nullptr, {}, {t.text});
    if (t.kind == Token::kPunct && t.punct == '(') {
      const Pattern* p = parse_pattern();
      expect_punct(')');
      return p;
    }
    if (t.kind != Token::kIdent) lex_.fail("expected a pattern", t);
    if (t.text == "text") return arena_->text();
    if (t.text == "empty") return arena_->empty();
    if (t.text == "notAllowed") return arena_->not_allowed();
    if (t.text == "element") {
      Token name = expect_ident("element name");
      expect_punct('{');
      const Pattern* content = parse_pattern();
      expect_punct('}');
      return arena_->make(PatternKind::kElement, content, nullptr, name.text);
    }
    if (t.text == "attribute") {
      Token name = expect_ident("attribute name");
      expect_punct('{');
      const Pattern* content = parse_pattern();
      expect_punct('}');
      content = normalize_attr_content(content, name);
      return arena_->make(PatternKind::kAttribute, content, nullptr, name.text);
    }
    Pattern* ref = arena_->make_ref(t.text);
    refs_.push_back({ref, t});
    return ref;
  }

  // Attribute content is either `text` or a choice of literal values.
  const Pattern* normalize_attr_content(const Pattern* p, const Token& at) {
    if (p->kind == PatternKind::kText) return p;
    std::vector<std::string> values;
    std::function<bool(const Pattern*)> gather = [&](const Pattern* q) {
      if (q->kind == PatternKind::kValue) {
        values.insert(values.end(), q->values.begin(), q->values.end());
        return true;
      }
      if (q->kind == PatternKind::kChoice) return gather(q->a) && gather(q->b);
      return false;
    };
    if (!gather(p))
      lex_.fail("attribute \"" + at.text + "\" content must be text or literal values", at);
    return arena_->make(PatternKind::kValue, nullptr, nullptr, {}, std::move(values));
  }

  void resolve_refs(const Schema& schema) {
    for (auto& [ref, tok] : refs_) {
      const Pattern* def = schema.find(ref->name);
      if (def == nullptr) throw DanglingDefinitionError(ref->name);
      ref->resolved = def;
      (void)tok;
    }
  }

  // Recursion must cross an element boundary, otherwise nullability and
  // derivatives would not terminate.
  void check_cycles(const Schema& schema) {
    enum State { kUnseen, kActive, kDone };
    std::unordered_map<const Pattern*, State> state;
    std::function<void(const Pattern*)> visit = [&](const Pattern* p) {
      if (p == nullptr) return;
      if (p->kind == PatternKind::kElement || p->kind == PatternKind::kAttribute)
        return;  // guarded: content is only entered after a tag event
      State& s = state[p];
      if (s == kActive) {
        std::string name = p->kind == PatternKind::kRef ? p->name : std::string("<anonymous>");
        throw SchemaSyntaxError("unguarded recursive reference to \"" + name + "\"",
                                lex_.source(), 0, 0);
      }
      if (s == kDone) return;
      s = kActive;
      if (p->kind == PatternKind::kRef) {
        visit(p->resolved);
      } else {
        visit(p->a);
        visit(p->b);
      }
      state[p] = kDone;
    };
    // Element/attribute content is still checked, just from a fresh stack.
    std::function<void(const Pattern*)> walk_all = [&](const Pattern* p) {
      if (p == nullptr) return;
      auto it = walked_.find(p);
      if (it != walked_.end()) return;
      walked_.insert(p);
      if (p->kind == PatternKind::kElement || p->kind == PatternKind::kAttribute) {
        visit(p->a);
        walk_all(p->a);
        return;
      }
      if (p->kind == PatternKind::kRef) {
        walk_all(p->resolved);
        return;
      }
      walk_all(p->a);
      walk_all(p->b);
    };
    for (const auto& d : schema.definitions) {
      visit(d.second);
      walk_all(d.second);
    }
  }

  void check_interleave_text(const Schema& schema) {
    std::set<const Pattern*> seen;
    std::function<bool(const Pattern*)> textual = [&](const Pattern* p) -> bool {
      if (p == nullptr) return false;
      p = deref(p);
      switch (p->kind) {
        case PatternKind::kText:
        case PatternKind::kValue:
          return true;
        case PatternKind::kElement:
        case PatternKind::kAttribute:
          return false;
        case PatternKind::kPair:
          return true;  // carries a value constraint on the text
        default:
          return textual(p->a) || textual(p->b);
      }
    };
    std::function<void(const Pattern*)> walk = [&](const Pattern* p) {
      if (p == nullptr || seen.count(p)) return;
      seen.insert(p);
      if (p->kind == PatternKind::kRef) {
        walk(p->resolved);
        return;
      }
      if (p->kind == PatternKind::kInterleave) {
        if (textual(p->a) || textual(p->b))
          throw SchemaSyntaxError("text cannot appear inside an interleave",
                                  lex_.source(), 0, 0);
      }
      walk(p->a);
      walk(p->b);
    };
    for (const auto& d : schema.definitions) walk(d.second);
  }

  Lexer lex_;
  std::shared_ptr<PatternArena> arena_;
  Builder b_;
  std::vector<std::pair<Pattern*, Token>> refs_;
  std::set<const Pattern*> walked_;
};

}  // namespace

const Pattern* Schema::find(std::string_view name) const {
  for (const auto& d : definitions)
    if (d.first == name) return d.second;
  return nullptr;
}

const Pattern* Schema::start_pattern() const { return find(start); }

Schema load_schema(std::string_view text, std::string source) {
  SchemaParser parser(text, std::move(source));
  return parser.parse();
}

// ---------------------------------------------------------------------------
// Validation

bool matches(const XmlElement& element, const Pattern* pattern, const Schema& schema) {
  Matcher m(*schema.arena);
  return nullable(m.child_deriv(pattern, element));
}

namespace {

// Human-readable set of tokens acceptable at a derivative state.
void collect_tokens(const Pattern* p, std::set<std::string>& out) {
  p = deref(p);
  if (p == nullptr) return;
  switch (p->kind) {
    case PatternKind::kElement:
      out.insert("element <" + p->name + ">");
      break;
    case PatternKind::kText:
      out.insert("text");
      break;
    case PatternKind::kValue:
      for (const auto& v : p->values) out.insert("\"" + v + "\"");
      break;
    case PatternKind::kAttribute:
      out.insert("attribute \"" + p->name + "\"");
      break;
    case PatternKind::kChoice:
    case PatternKind::kInterleave:
      collect_tokens(p->a, out);
      collect_tokens(p->b, out);
      break;
    case PatternKind::kGroup:
    case PatternKind::kPair:
      collect_tokens(p->a, out);
      if (nullable(p->a)) collect_tokens(p->b, out);
      break;
    case PatternKind::kOneOrMore:
    case PatternKind::kZeroOrMore:
    case PatternKind::kOptional:
      collect_tokens(p->a, out);
      break;
    case PatternKind::kAfter:
      collect_tokens(p->a, out);
      break;
    default:
      break;
  }
}

std::string join_tokens(const std::set<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ", ";
    out += t;
  }
  return out;
}

std::string tokens_of(const Pattern* p) {
  std::set<std::string> set;
  collect_tokens(p, set);
  return join_tokens(set);
}

void collect_attr_names(const Pattern* p, std::set<std::string>& out) {
  p = deref(p);
  if (p == nullptr) return;
  switch (p->kind) {
    case PatternKind::kAttribute:
      out.insert(p->name);
      break;
    case PatternKind::kElement:
      break;
    default:
      collect_attr_names(p->a, out);
      collect_attr_names(p->b, out);
      break;
  }
}

void collect_attr_value_tokens(const Pattern* p, const std::string& name,
                               std::set<std::string>& out) {
  p = deref(p);
  if (p == nullptr) return;
  if (p->kind == PatternKind::kAttribute) {
    if (p->name != name) return;
    if (p->a == nullptr || deref(p->a)->kind == PatternKind::kText) {
      out.insert("text");
    } else {
      for (const auto& v : deref(p->a)->values) out.insert("\"" + v + "\"");
    }
    return;
  }
  if (p->kind == PatternKind::kElement) return;
  collect_attr_value_tokens(p->a, name, out);
  collect_attr_value_tokens(p->b, name, out);
}

class Diagnoser {
 public:
  Diagnoser(Matcher& m, std::string source, std::vector<Diagnostic>& out)
      : m_(m), not_(m.builder().kNotP), source_(std::move(source)), out_(out) {}

  // `content` is the element's attribute+children obligation (After heads).
  void element(const XmlElement& e, const Pattern* content, const std::string& path) {
    const Pattern* p = content;
    bool reported = false;

    for (const XmlAttribute& a : e.attributes) {
      const Pattern* p1 = m_.att_deriv(p, a.name.local, a.value);
      if (p1 == not_) {
        if (!reported) {
          std::set<std::string> names;
          collect_attr_names(p, names);
          if (names.count(a.name.local)) {
            std::set<std::string> vals;
            collect_attr_value_tokens(p, a.name.local, vals);
            push(e, path, "validate.attribute",
                 "value \"" + a.value + "\" not allowed for attribute \"" + a.name.qname() +
                     "\" on <" + e.name.qname() + ">",
                 join_tokens(vals));
          } else {
            push(e, path, "validate.attribute",
                 "attribute \"" + a.name.qname() + "\" not allowed on <" + e.name.qname() + ">",
                 tokens_of(p));
          }
          reported = true;
        }
        continue;  // recover: skip the attribute
      }
      p = p1;
    }

    const Pattern* closed = m_.start_tag_close(p);
    if (closed == not_) {
      if (!reported) {
        std::set<std::string> names;
        collect_attr_names(p, names);
        std::set<std::string> expected;
        for (const auto& n : names) expected.insert("attribute \"" + n + "\"");
        push(e, path, "validate.attribute",
             "element <" + e.name.qname() + "> is missing a required attribute",
             join_tokens(expected));
        reported = true;
      }
      p = m_.start_tag_close_force(p);
    } else {
      p = closed;
    }

    // Children, mirroring children_deriv but recovering per failure.
    if (e.children.size() == 1 && e.children[0].is_text()) {
      const std::string& s = e.children[0].text();
      const Pattern* p1 = m_.text_deriv(p, s);
      if (p1 == not_) {
        if (!ws_only(s) && !reported) {
          push(e, path, "validate.text",
               "text \"" + preview(s) + "\" not allowed in <" + e.name.qname() + ">",
               tokens_of(p));
          reported = true;
        }
      } else {
        p = ws_only(s) ? m_.builder().choice(p, p1) : p1;
      }
    } else {
      std::map<std::string, int> sibling_count;
      for (const XmlNode& n : e.children) {
        if (n.is_text()) {
          const std::string& s = n.text();
          if (ws_only(s)) continue;
          const Pattern* p1 = m_.text_deriv(p, s);
          if (p1 == not_) {
            if (!reported) {
              push(e, path, "validate.text",
                   "text \"" + preview(s) + "\" not allowed in <" + e.name.qname() + ">",
                   tokens_of(p));
              reported = true;
            }
            continue;
          }
          p = p1;
          continue;
        }
        const XmlElement& c = n.element();
        int index = ++sibling_count[c.name.local];
        std::string child_path = path + "/" + c.name.qname() + "[" + std::to_string(index) + "]";
        const Pattern* p1 = m_.start_tag_open(p, c.name.local);
        if (p1 == not_) {
          push(c, child_path, "validate.element",
               "element <" + c.name.qname() + "> not allowed in <" + e.name.qname() + ">",
               tokens_of(p));
          continue;  // recover: drop the child entirely
        }
        element(c, m_.after_heads(p1), child_path);
        p = m_.end_tag_force(p1);
      }
    }

    if (!nullable(p) && !reported) {
      push(e, path, "validate.incomplete",
           "element <" + e.name.qname() + "> is incomplete", tokens_of(p));
    }
  }

  void push(const XmlElement& e, const std::string& path, std::string code, std::string message,
            std::string expected = {}) {
    Diagnostic d;
    d.severity = Severity::kError;
    d.code = std::move(code);
    d.message = std::move(message);
    d.file = source_;
    d.line = e.line;
    d.column = e.column;
    d.path = path;
    d.expected = std::move(expected);
    out_.push_back(std::move(d));
  }

 private:
  static std::string preview(const std::string& s) {
    std::string t(trim_ws(s));
    if (t.size() > 24) t = t.substr(0, 24) + "...";
    return t;
  }

  Matcher& m_;
  const Pattern* not_;
  std::string source_;
  std::vector<Diagnostic>& out_;
};

}  // namespace

std::vector<Diagnostic> validate(const XmlElement& root, const Schema& schema,
                                 std::string_view source_name) {
  Matcher m(*schema.arena);
  const Pattern* start = schema.start_pattern();
  if (nullable(m.child_deriv(start, root))) return {};

  std::vector<Diagnostic> out;
  Diagnoser diag(m, std::string(source_name), out);
  const Pattern* p1 = m.start_tag_open(start, root.name.local);
  std::string root_path = "/" + root.name.qname() + "[1]";
  if (p1 == m.builder().kNotP) {
    diag.push(root, root_path, "validate.element",
              "element <" + root.name.qname() + "> is not an allowed root", tokens_of(start));
    return out;
  }
  diag.element(root, m.after_heads(p1), root_path);
  if (out.empty()) {
    // The exact decision rejected but recovery found no local failure (e.g.
    // ambiguity resolved differently); report at the root rather than pass.
    diag.push(root, root_path, "validate.element",
              "document does not match the schema");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cross-reference checks

const std::vector<RefAttr>& default_ref_attrs() {
  static const std::vector<RefAttr> kDefaults = {{"ref", "target"},
                                                 {"Ptr", "href"},
                                                 {"etymologicalLink", "source"},
                                                 {"etymologicalLink", "target"}};
  return kDefaults;
}

std::vector<Diagnostic> check_refs(const XmlDocument& doc, std::string_view id_attr,
                                   const std::vector<RefAttr>& ref_attrs) {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;
  std::unordered_set<std::string> ids;
  struct PendingRef {
    std::string target;
    int line, column;
    std::string path;
  };
  std::vector<PendingRef> refs;
  bool qualified = id_attr.find(':') != std::string::npos;

  std::function<void(const XmlElement&, const std::string&, int)> walk =
      [&](const XmlElement& e, const std::string& parent_path, int ordinal) {
        std::string path = parent_path + "/" + e.name.qname() + "[" + std::to_string(ordinal) + "]";
        for (const XmlAttribute& a : e.attributes) {
          bool is_id = qualified ? a.name.qname() == id_attr
                                 : (a.name.prefix.empty() && a.name.local == id_attr);
          if (is_id) {
            if (!ids.insert(a.value).second) {
              Diagnostic d;
              d.severity = Severity::kError;
              d.code = "id.duplicate";
              d.message = "duplicate id \"" + a.value + "\"";
              d.file = doc.source_name();
              d.line = e.line;
              d.column = e.column;
              d.path = path;
              errors.push_back(std::move(d));
            }
          }
          for (const RefAttr& r : ref_attrs) {
            if (e.name.local == r.element && a.name.prefix.empty() && a.name.local == r.attribute) {
              std::string target = a.value;
              if (!target.empty() && target[0] == '#') target.erase(0, 1);
              if (!target.empty()) refs.push_back({target, e.line, e.column, path});
            }
          }
        }
        std::map<std::string, int> sibling_count;
        for (const XmlNode& n : e.children)
          if (n.is_element())
            walk(n.element(), path, ++sibling_count[n.element().name.qname()]);
      };
  walk(doc.root(), "", 1);

  for (const PendingRef& r : refs) {
    if (ids.count(r.target)) continue;
    Diagnostic d;
    d.severity = Severity::kWarning;
    d.code = "ref.unresolved";
    d.message = "unresolved reference \"" + r.target + "\"";
    d.file = doc.source_name();
    d.line = r.line;
    d.column = r.column;
    d.path = r.path;
    warnings.push_back(std::move(d));
  }

  errors.insert(errors.end(), std::make_move_iterator(warnings.begin()),
                std::make_move_iterator(warnings.end()));
  return errors;
}

std::vector<const Pattern*> flatten_choice(const Pattern* p) {
  std::vector<const Pattern*> out;
  std::function<void(const Pattern*)> walk = [&](const Pattern* q) {
    q = deref(q);
    if (q == nullptr) return;
    if (q->kind == PatternKind::kChoice) {
      walk(q->a);
      walk(q->b);
    } else {
      out.push_back(q);
    }
  };
  walk(p);
  return out;
}

}  // namespace lexmark
