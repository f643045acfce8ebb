// Copyright 2026 The lexmark authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "transform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace lexmark {

namespace {

const std::string* attr_plain(const XmlElement& e, std::string_view local) {
  for (const auto& a : e.attributes)
    if (a.name.prefix.empty() && a.name.local == local) return &a.value;
  return nullptr;
}

std::string collapse_ws(std::string_view s) {
  std::string out;
  bool in_ws = true;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!in_ws) out.push_back(' ');
      in_ws = true;
    } else {
      out.push_back(c);
      in_ws = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace

// --------------------------------------------------------------------------
// Matching

int MatchPattern::specificity() const {
  int s = static_cast<int>(attr_predicates.size());
  if (parent) s += 2;
  if (min_element_children) s += 1;
  return s;
}

bool MatchPattern::matches(const XmlElement& element_node, const XmlElement* parent_node,
                           bool with_guard) const {
  if (element_node.name.local != element) return false;
  for (const auto& [name, value] : attr_predicates) {
    const std::string* v = attr_plain(element_node, name);
    if (v == nullptr || *v != value) return false;
  }
  if (parent) {
    if (parent_node == nullptr) return false;
    if (!parent->matches(*parent_node, nullptr, true)) return false;
  }
  if (with_guard && min_element_children &&
      static_cast<int>(element_node.child_element_count()) < *min_element_children)
    return false;
  return true;
}

// --------------------------------------------------------------------------
// Application

namespace {

// Output sink that merges adjacent text whether the target is the forest or
// an element under construction.
struct Sink {
  std::vector<XmlNode>* forest = nullptr;
  XmlElement* element = nullptr;

  void text(const std::string& s) {
    if (s.empty()) return;
    if (element) {
      element->add_text(s);
      return;
    }
    if (!forest->empty() && forest->back().is_text()) {
      std::get<std::string>(forest->back().value) += s;
    } else {
      forest->push_back(XmlNode(s));
    }
  }

  void child(XmlElement e) {
    if (element)
      element->add_child(std::move(e));
    else
      forest->push_back(XmlNode(std::move(e)));
  }
};

class Applier {
 public:
  explicit Applier(const Ruleset& rs) : rs_(rs) {}

  void element(const XmlElement& e, const XmlElement* parent, Sink& out) {
    const TemplateRule* rule = find_rule(e, parent);
    if (rule == nullptr) {
      children(e, out);  // built-in default: strip the element
      return;
    }
    run(rule->actions, *rule, e, out);
  }

  void children(const XmlElement& e, Sink& out) {
    for (const XmlNode& n : e.children) {
      if (n.is_text())
        out.text(n.text());  // built-in default: copy text
      else
        element(n.element(), &e, out);
    }
  }

 private:
  const TemplateRule* find_rule(const XmlElement& e, const XmlElement* parent) const {
    const TemplateRule* best = nullptr;
    for (const TemplateRule& r : rs_.rules) {
      if (!r.pattern.matches(e, parent, r.guard_filters)) continue;
      // later rule wins ties, so >= on priority
      if (best == nullptr || r.priority >= best->priority) best = &r;
    }
    return best;
  }

  void run(const std::vector<Action>& actions, const TemplateRule& rule, const XmlElement& e,
           Sink& out) {
    for (const Action& a : actions) {
      switch (a.kind) {
        case Action::Kind::kRecurse:
          children(e, out);
          break;
        case Action::Kind::kDrop:
          break;
        case Action::Kind::kEmit: {
          XmlElement t(a.name);
          for (const Action::Attr& at : a.attrs) {
            if (at.copy) {
              if (const std::string* v = attr_plain(e, at.value)) t.set_attr(at.name, *v);
            } else {
              t.set_attr(at.name, at.value);
            }
          }
          Sink inner;
          inner.element = &t;
          run(a.body, rule, e, inner);
          out.child(std::move(t));
          break;
        }
        case Action::Kind::kChoose: {
          int need = rule.pattern.min_element_children.value_or(1);
          bool taken = static_cast<int>(e.child_element_count()) >= need;
          run(taken ? a.then_actions : a.else_actions, rule, e, out);
          break;
        }
      }
    }
  }

  const Ruleset& rs_;
};

}  // namespace

std::vector<XmlNode> apply(const Ruleset& ruleset, const XmlElement& source) {
  std::vector<XmlNode> forest;
  Sink out;
  out.forest = &forest;
  Applier applier(ruleset);
  applier.element(source, nullptr, out);
  return forest;
}

// --------------------------------------------------------------------------
// Rule notation

namespace {

struct RuleToken {
  enum Kind { kIdent, kNumber, kString, kPunct, kEnd } kind = kEnd;
  std::string text;
  std::string punct;  // "[", "]", "(", ")", "{", "}", ";", ",", "/", "=", "@", "=>", ">="
};

class RuleLexer {
 public:
  RuleLexer(std::string_view line, const std::string& source, int line_no)
      : line_(line), source_(source), line_no_(line_no) {
    advance();
  }

  const RuleToken& peek() const { return cur_; }
  RuleToken next() {
    RuleToken t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw RuleSyntaxError(message, source_, line_no_);
  }

 private:
  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    cur_ = RuleToken{};
    if (pos_ >= line_.size()) return;
    char c = line_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_' ||
              line_[pos_] == '-' || line_[pos_] == '.' || line_[pos_] == ':'))
        ++pos_;
      cur_.kind = RuleToken::kIdent;
      cur_.text.assign(line_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      cur_.kind = RuleToken::kNumber;
      cur_.text.assign(line_.substr(start, pos_ - start));
      return;
    }
    if (c == '"') {
      ++pos_;
      size_t start = pos_;
      while (pos_ < line_.size() && line_[pos_] != '"') ++pos_;
      if (pos_ >= line_.size()) fail("unterminated string literal");
      cur_.kind = RuleToken::kString;
      cur_.text.assign(line_.substr(start, pos_ - start));
      ++pos_;
      return;
    }
    if (c == '=' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
      cur_.kind = RuleToken::kPunct;
      cur_.punct = "=>";
      pos_ += 2;
      return;
    }
    if (c == '>' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '=') {
      cur_.kind = RuleToken::kPunct;
      cur_.punct = ">=";
      pos_ += 2;
      return;
    }
    static const std::string kSingles = "[](){};,/=@";
    if (kSingles.find(c) != std::string::npos) {
      cur_.kind = RuleToken::kPunct;
      cur_.punct = std::string(1, c);
      ++pos_;
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view line_;
  const std::string& source_;
  int line_no_;
  size_t pos_ = 0;
  RuleToken cur_;
};

class RuleParser {
 public:
  RuleParser(RuleLexer& lex) : lex_(lex) {}

  TemplateRule parse_rule() {
    expect_ident("match");
    TemplateRule rule;
    MatchPattern first = parse_segment();
    if (peek_punct("/")) {
      lex_.next();
      MatchPattern child = parse_segment();
      child.parent = std::make_shared<MatchPattern>(std::move(first));
      rule.pattern = std::move(child);
    } else {
      rule.pattern = std::move(first);
    }
    std::optional<int> priority;
    while (lex_.peek().kind == RuleToken::kIdent) {
      if (lex_.peek().text == "when") {
        lex_.next();
        expect_ident("children");
        expect_punct(">=");
        RuleToken n = lex_.next();
        if (n.kind != RuleToken::kNumber) lex_.fail("expected a number after children>=");
        int v = std::stoi(n.text);
        if (v < 1) lex_.fail("child-count guard must be >= 1");
        rule.pattern.min_element_children = v;
      } else if (lex_.peek().text == "priority") {
        lex_.next();
        RuleToken n = lex_.next();
        if (n.kind != RuleToken::kNumber) lex_.fail("expected a number after priority");
        priority = std::stoi(n.text);
      } else {
        lex_.fail("expected 'when', 'priority' or '=>'");
      }
    }
    expect_punct("=>");
    std::vector<Action> then_actions = parse_actions();
    if (lex_.peek().kind == RuleToken::kIdent && lex_.peek().text == "else") {
      lex_.next();
      if (!rule.pattern.min_element_children)
        lex_.fail("'else' requires a 'when children>=N' guard");
      std::vector<Action> else_actions = parse_actions();
      Action choose;
      choose.kind = Action::Kind::kChoose;
      choose.then_actions = std::move(then_actions);
      choose.else_actions = std::move(else_actions);
      rule.actions.push_back(std::move(choose));
      rule.guard_filters = false;  // guard picks the branch
    } else {
      rule.actions = std::move(then_actions);
      rule.guard_filters = true;
    }
    if (lex_.peek().kind != RuleToken::kEnd) lex_.fail("trailing input after rule");
    rule.priority = priority.value_or(rule.pattern.specificity());
    validate_paths(rule.actions);
    return rule;
  }

 private:
  MatchPattern parse_segment() {
    RuleToken name = lex_.next();
    if (name.kind != RuleToken::kIdent) lex_.fail("expected an element name");
    MatchPattern p;
    p.element = name.text;
    while (peek_punct("[")) {
      lex_.next();
      RuleToken attr = lex_.next();
      if (attr.kind != RuleToken::kIdent) lex_.fail("expected an attribute name");
      expect_punct("=");
      RuleToken value = lex_.next();
      if (value.kind != RuleToken::kIdent && value.kind != RuleToken::kNumber &&
          value.kind != RuleToken::kString)
        lex_.fail("expected an attribute value");
      p.attr_predicates.emplace_back(attr.text, value.text);
      expect_punct("]");
    }
    return p;
  }

  std::vector<Action> parse_actions() {
    std::vector<Action> actions;
    actions.push_back(parse_action());
    while (peek_punct(";")) {
      lex_.next();
      if (peek_punct("}") || lex_.peek().kind == RuleToken::kEnd) break;  // trailing ;
      actions.push_back(parse_action());
    }
    return actions;
  }

  Action parse_action() {
    RuleToken t = lex_.next();
    if (t.kind != RuleToken::kIdent) lex_.fail("expected an action");
    Action a;
    if (t.text == "recurse") {
      a.kind = Action::Kind::kRecurse;
      return a;
    }
    if (t.text == "drop") {
      a.kind = Action::Kind::kDrop;
      return a;
    }
    if (t.text != "emit") lex_.fail("unknown action \"" + t.text + "\"");
    a.kind = Action::Kind::kEmit;
    RuleToken name = lex_.next();
    if (name.kind != RuleToken::kIdent) lex_.fail("expected a target element name");
    a.name = name.text;
    if (peek_punct("(")) {
      lex_.next();
      if (!peek_punct(")")) {
        for (;;) {
          RuleToken an = lex_.next();
          if (an.kind != RuleToken::kIdent) lex_.fail("expected an attribute name");
          expect_punct("=");
          Action::Attr attr;
          attr.name = an.text;
          if (peek_punct("@")) {
            lex_.next();
            RuleToken src = lex_.next();
            if (src.kind != RuleToken::kIdent) lex_.fail("expected a source attribute name");
            attr.value = src.text;
            attr.copy = true;
          } else {
            RuleToken v = lex_.next();
            if (v.kind != RuleToken::kString) lex_.fail("expected a quoted attribute value");
            attr.value = v.text;
          }
          a.attrs.push_back(std::move(attr));
          if (peek_punct(",")) {
            lex_.next();
            continue;
          }
          break;
        }
      }
      expect_punct(")");
    }
    expect_punct("{");
    if (!peek_punct("}")) a.body = parse_actions();
    expect_punct("}");
    return a;
  }

  // Every path through the constructor must recurse exactly once; paths
  // that only drop are exempt (they produce nothing).
  struct PathInfo {
    int recurse = 0;
    bool produces = false;
  };

  std::vector<PathInfo> paths_of(const std::vector<Action>& actions) {
    std::vector<PathInfo> acc{PathInfo{}};
    for (const Action& a : actions) {
      std::vector<PathInfo> step;
      switch (a.kind) {
        case Action::Kind::kRecurse:
          step = {PathInfo{1, true}};
          break;
        case Action::Kind::kDrop:
          step = {PathInfo{0, false}};
          break;
        case Action::Kind::kEmit: {
          step = paths_of(a.body);
          for (auto& p : step) p.produces = true;
          break;
        }
        case Action::Kind::kChoose: {
          step = paths_of(a.then_actions);
          auto alt = paths_of(a.else_actions);
          step.insert(step.end(), alt.begin(), alt.end());
          break;
        }
      }
      std::vector<PathInfo> next;
      for (const auto& p : acc)
        for (const auto& s : step)
          next.push_back(PathInfo{p.recurse + s.recurse, p.produces || s.produces});
      acc = std::move(next);
    }
    return acc;
  }

  void validate_paths(const std::vector<Action>& actions) {
    for (const PathInfo& p : paths_of(actions)) {
      if (p.recurse == 1) continue;
      if (p.recurse == 0 && !p.produces) continue;  // pure drop
      lex_.fail(p.recurse == 0 ? "constructor never recurses"
                               : "constructor recurses more than once on one path");
    }
  }

  bool peek_punct(const char* p) const {
    return lex_.peek().kind == RuleToken::kPunct && lex_.peek().punct == p;
  }

  void expect_punct(const char* p) {
    RuleToken t = lex_.next();
    if (t.kind != RuleToken::kPunct || t.punct != p)
      lex_.fail(std::string("expected '") + p + "'");
  }

  void expect_ident(const char* word) {
    RuleToken t = lex_.next();
    if (t.kind != RuleToken::kIdent || t.text != word)
      lex_.fail(std::string("expected '") + word + "'");
  }

  RuleLexer& lex_;
};

}  // namespace

Ruleset compile_ruleset(std::string_view text, std::string source_name) {
  Ruleset rs;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    // strip comments (quotes win over '#')
    bool in_string = false;
    size_t cut = line.size();
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_string = !in_string;
      if (line[i] == '#' && !in_string) {
        cut = i;
        break;
      }
    }
    line = line.substr(0, cut);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    RuleLexer lex(line, source_name, line_no);
    RuleParser parser(lex);
    rs.rules.push_back(parser.parse_rule());
  }
  return rs;
}

// --------------------------------------------------------------------------
// TEI -> LMF model mapping

namespace {

struct LangMarker {
  std::string_view marker;
  std::string_view language;
};

// Abbreviated source-language markers as used in German etymology prose.
constexpr LangMarker kLangMarkers[] = {
    {"norw.", "norwegian"}, {"anord.", "old norse"},        {"engl.", "english"},
    {"lat.", "latin"},      {"frz.", "french"},             {"griech.", "greek"},
    {"mhd.", "middle high german"}, {"ahd.", "old high german"},
};

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string join_words(const std::vector<std::string>& words, size_t from) {
  std::string out;
  for (size_t i = from; i < words.size(); ++i) {
    if (!out.empty()) out.push_back(' ');
    out += words[i];
  }
  return out;
}

// Running text of the etym content with embedded def/ref surfaces inlined
// in document order.
std::string etym_running_text(const TeiEtym& etym) {
  std::string flat;
  for (const auto& item : etym.items) {
    const auto& v = item.value;
    if (const auto* s = std::get_if<std::string>(&v)) {
      flat += *s;
    } else if (const auto* d = std::get_if<TeiDef>(&v)) {
      flat += d->text;
    } else if (const auto* r = std::get_if<TeiRef>(&v)) {
      flat += r->text;
    } else if (const auto* x = std::get_if<TeiXr>(&v)) {
      for (const auto& xi : x->items) {
        if (const auto* xs = std::get_if<std::string>(&xi.value))
          flat += *xs;
        else if (const auto* xr = std::get_if<TeiRef>(&xi.value))
          flat += xr->text;
      }
    } else if (const auto* e = std::get_if<XmlElement>(&v)) {
      flat += e->text_content();
    }
  }
  return collapse_ws(flat);
}

std::string strip_trailing_punct(std::string w) {
  while (!w.empty() && (w.back() == ',' || w.back() == ';' || w.back() == ':' ||
                        w.back() == '.' || w.back() == ')'))
    w.pop_back();
  return w;
}

}  // namespace

LmfEntry map_tei_to_lmf(const TeiEntry& entry, std::vector<Diagnostic>& diagnostics) {
  LmfEntry out;
  out.lemma_id = "l1";

  const TeiForm* head = entry.headword_form();
  if (head == nullptr) {
    auto forms = entry.forms();
    if (!forms.empty()) head = forms.front();
  }
  if (head != nullptr)
    for (const TeiOrth& orth : head->orths())
      out.lemma.push_back(LmfFeatSet{{"writtenForm", orth.text}});

  for (const TeiSense* sense : entry.senses()) {
    if (!sense->level || *sense->level != 0) continue;
    auto defs = sense->defs();
    if (!defs.empty())
      out.equivalents.push_back(LmfFeatSet{{"writtenForm", collapse_ws(defs.front().text)}});
  }

  const TeiEtym* etym = entry.etym();
  if (etym == nullptr) return out;

  LmfEtymology ety;
  LmfEtymon etymon;
  etymon.id = "l2";

  std::string flat = etym_running_text(*etym);
  std::vector<std::string> words = split_words(flat);
  size_t after = 0;  // index past the consumed marker + token run
  for (size_t i = 0; i + 1 < words.size() && after == 0; ++i) {
    for (const LangMarker& m : kLangMarkers) {
      if (words[i] != m.marker) continue;
      std::string orth = strip_trailing_punct(words[i + 1]);
      if (orth.empty()) break;
      etymon.orth = std::move(orth);
      etymon.orth_lang = std::string(m.language);
      after = i + 2;
      break;
    }
  }

  auto defs = etym->defs();
  if (!defs.empty()) etymon.gloss = collapse_ws(defs.front().text);

  for (const auto& item : etym->items) {
    const XmlElement* e = std::get_if<XmlElement>(&item.value);
    if (e == nullptr) continue;
    const XmlElement* pos = nullptr;
    if (e->name.local == "pos")
      pos = e;
    else if (e->name.local == "gramGrp")
      pos = e->first_child("pos");
    if (pos == nullptr) continue;
    if (const std::string* v = pos->attr_local("value"))
      etymon.pos = *v;
    else
      etymon.pos = collapse_ws(pos->text_content());
    break;
  }

  if (after == 0) {
    if (!flat.empty()) etymon.note = flat;  // kept whole
    Diagnostic d;
    d.severity = Severity::kWarning;
    d.code = "lmf.mapping";
    d.message =
        "etymology text names no source language; kept whole as a note";
    d.path = "/" + entry.element_name + "/etym";
    diagnostics.push_back(std::move(d));
  } else {
    std::string residual = join_words(words, after);
    if (!residual.empty()) etymon.note = std::move(residual);
  }

  ety.etymons.push_back(std::move(etymon));
  const char* link_class =
      flat.find("Übernahme") != std::string::npos ? "loan word" : "unspecified";
  ety.links.push_back(LmfLink{"l2", out.lemma_id, link_class});
  out.etymology = std::move(ety);
  return out;
}

}  // namespace lexmark
