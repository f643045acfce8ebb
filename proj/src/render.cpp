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

#include "render.hpp"

#include <algorithm>

#include "xml_tree.hpp"

namespace lexmark {

namespace {

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

// --------------------------------------------------------------------------
// Code-point helpers for suffix resolution.

std::vector<std::string_view> codepoints(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    size_t len = 1;
    if ((c & 0xE0) == 0xC0)
      len = 2;
    else if ((c & 0xF0) == 0xE0)
      len = 3;
    else if ((c & 0xF8) == 0xF0)
      len = 4;
    if (i + len > s.size()) len = 1;  // truncated sequence: treat as a byte
    out.push_back(s.substr(i, len));
    i += len;
  }
  return out;
}

std::string_view de_umlaut(std::string_view cp) {
  if (cp == "ä") return "a";
  if (cp == "ö") return "o";
  if (cp == "ü") return "u";
  if (cp == "Ä") return "A";
  if (cp == "Ö") return "O";
  if (cp == "Ü") return "U";
  return cp;
}

// Comparison key: de-umlauted, then ASCII-lowercased.
std::string fold(std::string_view cp) {
  std::string_view d = de_umlaut(cp);
  if (d.size() == 1 && d[0] >= 'A' && d[0] <= 'Z')
    return std::string(1, static_cast<char>(d[0] - 'A' + 'a'));
  return std::string(d);
}

bool is_upper_cp(std::string_view cp) {
  if (cp.size() == 1) return cp[0] >= 'A' && cp[0] <= 'Z';
  return cp == "Ä" || cp == "Ö" || cp == "Ü";
}

std::string upper_cp(std::string_view cp) {
  if (cp.size() == 1 && cp[0] >= 'a' && cp[0] <= 'z')
    return std::string(1, static_cast<char>(cp[0] - 'a' + 'A'));
  if (cp == "ä") return "Ä";
  if (cp == "ö") return "Ö";
  if (cp == "ü") return "Ü";
  return std::string(cp);
}

std::string lower_cp(std::string_view cp) {
  if (cp.size() == 1 && cp[0] >= 'A' && cp[0] <= 'Z')
    return std::string(1, static_cast<char>(cp[0] - 'A' + 'a'));
  if (cp == "Ä") return "ä";
  if (cp == "Ö") return "ö";
  if (cp == "Ü") return "ü";
  return std::string(cp);
}

}  // namespace

const char* to_string(GramCase c) {
  switch (c) {
    case GramCase::kNominative: return "nominative";
    case GramCase::kGenitive: return "genitive";
    case GramCase::kDative: return "dative";
    case GramCase::kAccusative: return "accusative";
  }
  return "?";
}

const char* to_string(GramNumber n) {
  return n == GramNumber::kSingular ? "singular" : "plural";
}

std::string resolve_suffix(std::string_view headword, std::string_view pattern) {
  if (pattern.empty()) return std::string(headword);
  if (pattern[0] != '-') return std::string(pattern);  // explicit full form
  std::string_view p = pattern.substr(1);
  std::vector<std::string_view> h_cps = codepoints(headword);
  std::vector<std::string_view> p_cps = codepoints(p);

  size_t k = 0;
  for (size_t cand = std::min(h_cps.size(), p_cps.size()); cand > 0; --cand) {
    bool match = true;
    for (size_t i = 0; i < cand && match; ++i)
      match = fold(h_cps[h_cps.size() - cand + i]) == fold(p_cps[i]);
    if (match) {
      k = cand;
      break;
    }
  }

  std::string out;
  for (size_t i = 0; i + k < h_cps.size(); ++i) out += h_cps[i];
  for (size_t i = 0; i < k; ++i) {
    // overlap takes the hint's letters in the headword's casing
    std::string_view original = h_cps[h_cps.size() - k + i];
    out += is_upper_cp(original) ? upper_cp(p_cps[i]) : lower_cp(p_cps[i]);
  }
  for (size_t i = k; i < p_cps.size(); ++i) out += p_cps[i];
  return out;
}

ParadigmTable expand_paradigm(std::string_view headword,
                              std::string_view genitive_pattern,
                              std::string_view plural_pattern) {
  ParadigmTable t;
  std::string head(headword);
  t.cell(GramCase::kNominative, GramNumber::kSingular) = head;
  t.cell(GramCase::kGenitive, GramNumber::kSingular) =
      resolve_suffix(headword, genitive_pattern);
  t.cell(GramCase::kDative, GramNumber::kSingular) = head;
  t.cell(GramCase::kAccusative, GramNumber::kSingular) = head;

  std::string plural = resolve_suffix(headword, plural_pattern);
  t.cell(GramCase::kNominative, GramNumber::kPlural) = plural;
  t.cell(GramCase::kGenitive, GramNumber::kPlural) = plural;
  std::string dative = plural;
  if (!plural_pattern.empty() && plural_pattern[0] == '-' && !plural.empty() &&
      plural.back() != 'n' && plural.back() != 's')
    dative += 'n';
  t.cell(GramCase::kDative, GramNumber::kPlural) = std::move(dative);
  t.cell(GramCase::kAccusative, GramNumber::kPlural) = std::move(plural);
  return t;
}

// --------------------------------------------------------------------------
// Linear text renderers (print and expanded share the layout).

namespace {

class TextRenderer {
 public:
  TextRenderer(GenderStyle gender_style, bool include_citations,
               bool include_etym, std::vector<Diagnostic>* diagnostics)
      : gender_style_(gender_style),
        include_citations_(include_citations),
        include_etym_(include_etym),
        diagnostics_(diagnostics) {}

  std::string entry(const TeiEntry& e) {
    std::vector<std::string> blocks;
    for (const auto& item : e.items) {
      const auto& v = item.value;
      if (const auto* f = std::get_if<TeiForm>(&v)) {
        form(*f, blocks);
      } else if (const auto* s = std::get_if<TeiSense>(&v)) {
        push(blocks, sense(*s));
      } else if (const auto* et = std::get_if<TeiEtym>(&v)) {
        if (include_etym_) push(blocks, etym(*et));
      } else if (const auto* h = std::get_if<TeiEntry>(&v)) {
        push(blocks, entry(*h));
      } else if (const auto* x = std::get_if<XmlElement>(&v)) {
        push(blocks, collapse_ws(x->text_content()));
      }
    }
    std::string out;
    for (const std::string& b : blocks) {
      if (!out.empty()) out += ", ";
      out += b;
    }
    return out;
  }

 private:
  static void push(std::vector<std::string>& blocks, std::string s) {
    if (!s.empty()) blocks.push_back(std::move(s));
  }

  // Usage labels glue to the piece they scope over.
  struct Glue {
    std::string pending;

    void usage(const std::string& text) {
      if (text.empty()) return;
      pending += text;
      pending += ' ';
    }
    std::string wrap(std::string s) {
      if (s.empty()) return pending.empty() ? s : std::string();
      s.insert(0, pending);
      pending.clear();
      return s;
    }
  };

  void form(const TeiForm& f, std::vector<std::string>& blocks) {
    Glue glue;
    for (const auto& item : f.items) {
      const auto& v = item.value;
      if (const auto* o = std::get_if<TeiOrth>(&v)) {
        check_rend(*o);
        push(blocks, glue.wrap(collapse_ws(o->text)));
      } else if (const auto* p = std::get_if<TeiPron>(&v)) {
        push(blocks, glue.wrap(collapse_ws(p->text)));
      } else if (const auto* u = std::get_if<TeiUsg>(&v)) {
        glue.usage(collapse_ws(u->text));
      } else if (const auto* g = std::get_if<TeiGramGrp>(&v)) {
        push(blocks, glue.wrap(gram_grp(*g)));
      } else if (const auto* x = std::get_if<XmlElement>(&v)) {
        push(blocks, glue.wrap(collapse_ws(x->text_content())));
      } else if (const auto* t = std::get_if<std::string>(&v)) {
        push(blocks, glue.wrap(collapse_ws(*t)));
      }
    }
    push(blocks, collapse_ws(glue.pending));
  }

  std::string gram_grp(const TeiGramGrp& g) {
    std::vector<std::string> pieces;
    Glue glue;
    for (const auto& item : g.items) {
      const auto& v = item.value;
      if (const auto* p = std::get_if<TeiPos>(&v)) {
        push(pieces, glue.wrap(collapse_ws(p->text)));
      } else if (const auto* gen = std::get_if<TeiGen>(&v)) {
        push(pieces, glue.wrap(gender_surface(*gen)));
      } else if (const auto* num = std::get_if<TeiNumber>(&v)) {
        push(pieces, glue.wrap(collapse_ws(num->surface)));
      } else if (const auto* gr = std::get_if<TeiGram>(&v)) {
        push(pieces, glue.wrap(collapse_ws(gr->text)));
      } else if (const auto* u = std::get_if<TeiUsg>(&v)) {
        glue.usage(collapse_ws(u->text));
      } else if (const auto* nested = std::get_if<TeiGramGrp>(&v)) {
        push(pieces, glue.wrap(gram_grp(*nested)));
      } else if (const auto* x = std::get_if<XmlElement>(&v)) {
        push(pieces, glue.wrap(collapse_ws(x->text_content())));
      }
    }
    push(pieces, collapse_ws(glue.pending));
    return join(pieces, ", ");
  }

  std::string sense(const TeiSense& s) {
    Glue glue;
    std::vector<std::string> defs;
    std::vector<std::string> cits;
    std::vector<std::string> tails;
    for (const auto& item : s.items) {
      const auto& v = item.value;
      if (const auto* u = std::get_if<TeiUsg>(&v)) {
        glue.usage(collapse_ws(u->text));
      } else if (const auto* d = std::get_if<TeiDef>(&v)) {
        push(defs, glue.wrap(collapse_ws(d->text)));
      } else if (const auto* c = std::get_if<TeiCit>(&v)) {
        if (include_citations_) push(cits, glue.wrap(cit(*c)));
      } else if (const auto* sub = std::get_if<TeiSense>(&v)) {
        push(tails, glue.wrap(sense(*sub)));
      } else if (const auto* x = std::get_if<TeiXr>(&v)) {
        push(tails, glue.wrap(xr(*x)));
      } else if (const auto* e = std::get_if<XmlElement>(&v)) {
        push(tails, glue.wrap(collapse_ws(e->text_content())));
      }
    }
    std::string out = join(defs, ", ");
    if (!cits.empty()) {
      if (!out.empty()) out += ": ";
      out += join(cits, "; ");
    }
    for (const std::string& t : tails) {
      if (!out.empty()) out += "; ";
      out += t;
    }
    std::string dangling = collapse_ws(glue.pending);
    if (!dangling.empty()) {
      if (!out.empty()) out += " ";
      out += dangling;
    }
    return out;
  }

  std::string cit(const TeiCit& c) {
    std::string out;
    Glue glue;
    for (const auto& item : c.items) {
      const auto& v = item.value;
      if (const auto* q = std::get_if<TeiQuote>(&v)) {
        std::string text = collapse_ws(q->text);
        if (text.empty()) continue;
        if (q->type && *q->type == "paraphrase") text = "(" + text + ")";
        text = glue.wrap(std::move(text));
        if (!out.empty()) out += ' ';
        out += text;
      } else if (const auto* u = std::get_if<TeiUsg>(&v)) {
        glue.usage(collapse_ws(u->text));
      } else if (const auto* b = std::get_if<TeiBibl>(&v)) {
        std::string text = collapse_ws(b->text);
        if (text.empty()) continue;
        if (!out.empty()) out += ' ';
        out += "[" + text + "]";
      }
    }
    return out;
  }

  std::string xr(const TeiXr& x) {
    std::string out;
    for (const auto& item : x.items) {
      const auto& v = item.value;
      std::string piece;
      if (const auto* t = std::get_if<std::string>(&v))
        piece = collapse_ws(*t);
      else if (const auto* r = std::get_if<TeiRef>(&v))
        piece = "s. " + collapse_ws(r->text);
      if (piece.empty()) continue;
      if (!out.empty()) out += ' ';
      out += piece;
    }
    return out;
  }

  std::string etym(const TeiEtym& e) {
    std::string out;
    for (const auto& item : e.items) {
      const auto& v = item.value;
      std::string piece;
      if (const auto* t = std::get_if<std::string>(&v))
        piece = collapse_ws(*t);
      else if (const auto* d = std::get_if<TeiDef>(&v))
        piece = collapse_ws(d->text);
      else if (const auto* r = std::get_if<TeiRef>(&v))
        piece = "s. " + collapse_ws(r->text);
      else if (const auto* x = std::get_if<TeiXr>(&v))
        piece = xr(*x);
      else if (const auto* el = std::get_if<XmlElement>(&v))
        piece = collapse_ws(el->text_content());
      if (piece.empty()) continue;
      if (!out.empty()) out += ' ';
      out += piece;
    }
    return out;
  }

  std::string gender_surface(const TeiGen& g) const {
    if (gender_style_ == GenderStyle::kLong && g.value)
      return *g.value;
    std::string s = collapse_ws(g.surface);
    if (s.empty() && g.value) s = *g.value;
    return s;
  }

  void check_rend(const TeiOrth& o) {
    if (!o.rend || *o.rend == "sep:comma" || diagnostics_ == nullptr) return;
    Diagnostic d;
    d.severity = Severity::kWarning;
    d.code = "render.rend";
    d.message = "unsupported rend value \"" + *o.rend + "\" ignored";
    diagnostics_->push_back(std::move(d));
  }

  static std::string join(const std::vector<std::string>& pieces,
                          const char* sep) {
    std::string out;
    for (const std::string& p : pieces) {
      if (!out.empty()) out += sep;
      out += p;
    }
    return out;
  }

  GenderStyle gender_style_;
  bool include_citations_;
  bool include_etym_;
  std::vector<Diagnostic>* diagnostics_;
};

std::string paradigm_grid(const ParadigmTable& t) {
  std::string out;
  for (GramNumber n : {GramNumber::kSingular, GramNumber::kPlural}) {
    for (GramCase c : {GramCase::kNominative, GramCase::kGenitive,
                       GramCase::kDative, GramCase::kAccusative}) {
      std::string label = std::string(to_string(c)) + ' ' + to_string(n);
      label.resize(21, ' ');
      out += label;
      out += t.cell(c, n);
      out += '\n';
    }
  }
  return out;
}

// First genitive/plural hint pair carried by the entry's headword form.
bool paradigm_hints(const TeiEntry& entry, std::string& headword,
                    std::string& genitive, std::string& plural) {
  const TeiForm* form = entry.headword_form();
  if (form == nullptr) {
    auto forms = entry.forms();
    if (forms.empty()) return false;
    form = forms.front();
  }
  auto orths = form->orths();
  if (orths.empty()) return false;
  for (const TeiGramGrp* g : form->gram_grps()) {
    const TeiGram* gen = g->find_gram("genitive");
    const TeiGram* pl = g->find_gram("plural");
    if (gen == nullptr || pl == nullptr) continue;
    headword = collapse_ws(orths.front().text);
    genitive = collapse_ws(gen->text);
    plural = collapse_ws(pl->text);
    return !headword.empty();
  }
  return false;
}

}  // namespace

std::string render_print(const TeiEntry& entry, const RenderOptions& opts,
                         std::vector<Diagnostic>* diagnostics) {
  // print always abbreviates, whatever the configured style
  TextRenderer r(GenderStyle::kAbbreviated, opts.include_citations,
                 opts.include_etym, diagnostics);
  return r.entry(entry);
}

std::string render_expanded(const TeiEntry& entry, const RenderOptions& opts,
                            std::vector<Diagnostic>* diagnostics) {
  TextRenderer r(opts.gender_style, opts.include_citations, opts.include_etym,
                 diagnostics);
  std::string out = r.entry(entry);
  std::string headword, genitive, plural;
  if (paradigm_hints(entry, headword, genitive, plural)) {
    out += '\n';
    out += paradigm_grid(expand_paradigm(headword, genitive, plural));
  }
  return out;
}

// --------------------------------------------------------------------------
// HTML renderer: builds an element tree, then serializes it, so the output
// re-parses by construction.

namespace {

class HtmlRenderer {
 public:
  HtmlRenderer(const RenderOptions& opts, std::vector<Diagnostic>* diagnostics)
      : opts_(opts), diagnostics_(diagnostics) {}

  XmlElement entry(const TeiEntry& e) {
    XmlElement div("div");
    div.set_attr("class", "entry");
    if (!e.id.empty()) div.set_attr("id", e.id);

    XmlElement senses("ol");
    senses.set_attr("class", "senses");
    bool any_sense = false;
    std::vector<XmlElement> tail;

    for (const auto& item : e.items) {
      const auto& v = item.value;
      if (const auto* f = std::get_if<TeiForm>(&v)) {
        div.add_child(form(*f));
      } else if (const auto* s = std::get_if<TeiSense>(&v)) {
        senses.add_child(sense(*s));
        any_sense = true;
      } else if (const auto* et = std::get_if<TeiEtym>(&v)) {
        if (opts_.include_etym) tail.push_back(etym(*et));
      } else if (const auto* h = std::get_if<TeiEntry>(&v)) {
        tail.push_back(entry(*h));
      }
    }
    if (any_sense) div.add_child(std::move(senses));
    for (XmlElement& t : tail) div.add_child(std::move(t));
    return div;
  }

 private:
  XmlElement span(const char* cls, std::string text) {
    XmlElement s("span");
    s.set_attr("class", cls);
    s.add_text(std::move(text));
    return s;
  }

  XmlElement form(const TeiForm& f) {
    XmlElement out("span");
    out.set_attr("class", "form");
    for (const auto& item : f.items) {
      const auto& v = item.value;
      if (const auto* o = std::get_if<TeiOrth>(&v)) {
        check_rend(*o);
        XmlElement b("b");
        b.set_attr("class", "headword");
        b.add_text(collapse_ws(o->text));
        out.add_child(std::move(b));
      } else if (const auto* p = std::get_if<TeiPron>(&v)) {
        out.add_child(span("pron", collapse_ws(p->text)));
      } else if (const auto* u = std::get_if<TeiUsg>(&v)) {
        out.add_child(span("usage", collapse_ws(u->text)));
      } else if (const auto* g = std::get_if<TeiGramGrp>(&v)) {
        out.add_child(gram_grp(*g));
      }
    }
    return out;
  }

  XmlElement gram_grp(const TeiGramGrp& g) {
    XmlElement out("span");
    out.set_attr("class", "gram");
    for (const auto& item : g.items) {
      const auto& v = item.value;
      if (const auto* p = std::get_if<TeiPos>(&v)) {
        XmlElement b("b");
        b.set_attr("class", "pos");
        std::string text = collapse_ws(p->text);
        if (text.empty() && p->value) text = *p->value;
        b.add_text(std::move(text));
        out.add_child(std::move(b));
      } else if (const auto* gen = std::get_if<TeiGen>(&v)) {
        out.add_child(span("gender", gender_surface(*gen)));
      } else if (const auto* num = std::get_if<TeiNumber>(&v)) {
        out.add_child(span("number", collapse_ws(num->surface)));
      } else if (const auto* gr = std::get_if<TeiGram>(&v)) {
        out.add_child(span("gram-note", collapse_ws(gr->text)));
      } else if (const auto* u = std::get_if<TeiUsg>(&v)) {
        out.add_child(span("usage", collapse_ws(u->text)));
      } else if (const auto* nested = std::get_if<TeiGramGrp>(&v)) {
        out.add_child(gram_grp(*nested));
      }
    }
    return out;
  }

  XmlElement sense(const TeiSense& s) {
    XmlElement li("li");
    li.set_attr("class", "sense");
    if (s.id) li.set_attr("id", *s.id);

    XmlElement cits("ul");
    cits.set_attr("class", "citations");
    bool any_cit = false;
    XmlElement subs("ol");
    subs.set_attr("class", "senses");
    bool any_sub = false;

    for (const auto& item : s.items) {
      const auto& v = item.value;
      if (const auto* u = std::get_if<TeiUsg>(&v)) {
        li.add_child(span("usage", collapse_ws(u->text)));
      } else if (const auto* d = std::get_if<TeiDef>(&v)) {
        li.add_child(span("definition", collapse_ws(d->text)));
      } else if (const auto* c = std::get_if<TeiCit>(&v)) {
        if (opts_.include_citations) {
          cits.add_child(cit(*c));
          any_cit = true;
        }
      } else if (const auto* sub = std::get_if<TeiSense>(&v)) {
        subs.add_child(sense(*sub));
        any_sub = true;
      } else if (const auto* x = std::get_if<TeiXr>(&v)) {
        li.add_child(xr(*x));
      }
    }
    if (any_cit) li.add_child(std::move(cits));
    if (any_sub) li.add_child(std::move(subs));
    return li;
  }

  XmlElement cit(const TeiCit& c) {
    XmlElement li("li");
    li.set_attr("class", "citation");
    bool first = true;
    for (const auto& item : c.items) {
      const auto& v = item.value;
      XmlElement piece("span");
      bool have = false;
      if (const auto* q = std::get_if<TeiQuote>(&v)) {
        if (q->type && *q->type == "paraphrase") {
          piece = XmlElement("i");
          piece.set_attr("class", "paraphrase");
        } else {
          piece = XmlElement("q");
        }
        piece.add_text(collapse_ws(q->text));
        have = true;
      } else if (const auto* u = std::get_if<TeiUsg>(&v)) {
        piece = span("usage", collapse_ws(u->text));
        have = true;
      } else if (const auto* b = std::get_if<TeiBibl>(&v)) {
        piece = span("bibl", collapse_ws(b->text));
        have = true;
      }
      if (!have) continue;
      if (!first) li.add_text(" ");
      li.add_child(std::move(piece));
      first = false;
    }
    return li;
  }

  XmlElement ref(const TeiRef& r) {
    if (r.target) {
      XmlElement a("a");
      a.set_attr("href", "#" + *r.target);
      a.add_text(collapse_ws(r.text));
      return a;
    }
    return span("ref", collapse_ws(r.text));
  }

  XmlElement xr(const TeiXr& x) {
    XmlElement out("span");
    out.set_attr("class", "xref");
    for (const auto& item : x.items) {
      const auto& v = item.value;
      if (const auto* t = std::get_if<std::string>(&v))
        out.add_text(*t);
      else if (const auto* r = std::get_if<TeiRef>(&v))
        out.add_child(ref(*r));
    }
    return out;
  }

  XmlElement etym(const TeiEtym& e) {
    XmlElement out("div");
    out.set_attr("class", "etymology");
    for (const auto& item : e.items) {
      const auto& v = item.value;
      if (const auto* t = std::get_if<std::string>(&v))
        out.add_text(*t);
      else if (const auto* d = std::get_if<TeiDef>(&v))
        out.add_child(span("definition", collapse_ws(d->text)));
      else if (const auto* r = std::get_if<TeiRef>(&v))
        out.add_child(ref(*r));
      else if (const auto* x = std::get_if<TeiXr>(&v))
        out.add_child(xr(*x));
    }
    return out;
  }

  std::string gender_surface(const TeiGen& g) const {
    if (opts_.gender_style == GenderStyle::kLong && g.value) return *g.value;
    std::string s = collapse_ws(g.surface);
    if (s.empty() && g.value) s = *g.value;
    return s;
  }

  void check_rend(const TeiOrth& o) {
    if (!o.rend || *o.rend == "sep:comma" || diagnostics_ == nullptr) return;
    Diagnostic d;
    d.severity = Severity::kWarning;
    d.code = "render.rend";
    d.message = "unsupported rend value \"" + *o.rend + "\" ignored";
    diagnostics_->push_back(std::move(d));
  }

  const RenderOptions& opts_;
  std::vector<Diagnostic>* diagnostics_;
};

}  // namespace

std::string render_html(const TeiEntry& entry, const RenderOptions& opts,
                        std::vector<Diagnostic>* diagnostics) {
  HtmlRenderer r(opts, diagnostics);
  return serialize(r.entry(entry), SerializeMode::kPretty);
}

std::string render(const TeiEntry& entry, const RenderOptions& opts,
                   std::vector<Diagnostic>* diagnostics) {
  switch (opts.media) {
    case Media::kPrint: return render_print(entry, opts, diagnostics);
    case Media::kExpanded: return render_expanded(entry, opts, diagnostics);
    case Media::kHtml: return render_html(entry, opts, diagnostics);
  }
  return {};
}

}  // namespace lexmark
