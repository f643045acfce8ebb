// Copyright 2026 The lexmark authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "entry_model.hpp"

#include <algorithm>
#include <charconv>

#include "errors.hpp"

namespace lexmark {

namespace {

bool ws_only(std::string_view s) {
  return s.find_first_not_of(" \t\n\r") == std::string_view::npos;
}

std::string collapse_ws(std::string_view s) {
  std::string out;
  bool in_ws = true;  // also trims leading
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

// Attribute with no prefix only; `attr_local` would also see xml:id.
const std::string* attr_plain(const XmlElement& e, std::string_view local) {
  for (const auto& a : e.attributes)
    if (a.name.prefix.empty() && a.name.local == local) return &a.value;
  return nullptr;
}

std::optional<std::string> opt_attr(const XmlElement& e, std::string_view local) {
  const std::string* v = attr_plain(e, local);
  return v ? std::optional<std::string>(*v) : std::nullopt;
}

std::string id_of(const XmlElement& e) {
  if (const std::string* v = e.attr_qname("xml:id")) return *v;
  return {};
}

std::optional<std::string> opt_id_of(const XmlElement& e) {
  if (const std::string* v = e.attr_qname("xml:id")) return *v;
  return std::nullopt;
}

template <typename T, typename Item>
std::vector<T> collect(const std::vector<Item>& items) {
  std::vector<T> out;
  for (const auto& it : items)
    if (const T* v = std::get_if<T>(&it.value)) out.push_back(*v);
  return out;
}

template <typename T, typename Item>
std::vector<const T*> collect_ptrs(const std::vector<Item>& items) {
  std::vector<const T*> out;
  for (const auto& it : items)
    if (const T* v = std::get_if<T>(&it.value)) out.push_back(v);
  return out;
}

}  // namespace

// --------------------------------------------------------------------------
// Accessors

std::vector<TeiPos> TeiGramGrp::pos() const { return collect<TeiPos>(items); }
std::vector<TeiGen> TeiGramGrp::genders() const { return collect<TeiGen>(items); }
std::vector<TeiNumber> TeiGramGrp::numbers() const { return collect<TeiNumber>(items); }
std::vector<TeiGram> TeiGramGrp::grams() const { return collect<TeiGram>(items); }
std::vector<TeiUsg> TeiGramGrp::usgs() const { return collect<TeiUsg>(items); }
std::vector<const TeiGramGrp*> TeiGramGrp::nested() const {
  return collect_ptrs<TeiGramGrp>(items);
}

const TeiGram* TeiGramGrp::find_gram(std::string_view type) const {
  for (const auto& it : items)
    if (const TeiGram* g = std::get_if<TeiGram>(&it.value))
      if (g->type && *g->type == type) return g;
  for (const auto& it : items)
    if (const TeiGramGrp* n = std::get_if<TeiGramGrp>(&it.value))
      if (const TeiGram* g = n->find_gram(type)) return g;
  return nullptr;
}

bool TeiGramGrp::operator==(const TeiGramGrp& o) const { return items == o.items; }

std::vector<TeiOrth> TeiForm::orths() const { return collect<TeiOrth>(items); }
std::vector<TeiUsg> TeiForm::usgs() const { return collect<TeiUsg>(items); }
std::vector<const TeiGramGrp*> TeiForm::gram_grps() const {
  return collect_ptrs<TeiGramGrp>(items);
}
bool TeiForm::operator==(const TeiForm& o) const {
  return type == o.type && items == o.items;
}

bool TeiXr::operator==(const TeiXr& o) const { return items == o.items; }

std::vector<TeiQuote> TeiCit::quotes() const { return collect<TeiQuote>(items); }
std::vector<TeiUsg> TeiCit::usgs() const { return collect<TeiUsg>(items); }
std::optional<TeiBibl> TeiCit::bibl() const {
  for (const auto& it : items)
    if (const TeiBibl* b = std::get_if<TeiBibl>(&it.value)) return *b;
  return std::nullopt;
}
bool TeiCit::operator==(const TeiCit& o) const {
  return type == o.type && items == o.items;
}

std::vector<TeiDef> TeiSense::defs() const { return collect<TeiDef>(items); }
std::vector<TeiCit> TeiSense::cits() const { return collect<TeiCit>(items); }
std::vector<const TeiSense*> TeiSense::subsenses() const {
  return collect_ptrs<TeiSense>(items);
}
std::vector<TeiUsg> TeiSense::usgs() const { return collect<TeiUsg>(items); }
bool TeiSense::operator==(const TeiSense& o) const {
  return id == o.id && n == o.n && level == o.level && items == o.items;
}

std::string TeiEtym::text() const {
  std::string out;
  for (const auto& it : items)
    if (const std::string* s = std::get_if<std::string>(&it.value)) out += *s;
  return out;
}
std::vector<TeiDef> TeiEtym::defs() const { return collect<TeiDef>(items); }
std::vector<TeiRef> TeiEtym::refs() const { return collect<TeiRef>(items); }
bool TeiEtym::operator==(const TeiEtym& o) const {
  return id == o.id && items == o.items;
}

std::vector<const TeiForm*> TeiEntry::forms() const {
  return collect_ptrs<TeiForm>(items);
}
std::vector<const TeiSense*> TeiEntry::senses() const {
  return collect_ptrs<TeiSense>(items);
}
const TeiEtym* TeiEntry::etym() const {
  for (const auto& it : items)
    if (const TeiEtym* e = std::get_if<TeiEtym>(&it.value)) return e;
  return nullptr;
}
std::vector<const TeiEntry*> TeiEntry::homographs() const {
  return collect_ptrs<TeiEntry>(items);
}
const TeiForm* TeiEntry::headword_form() const {
  for (const auto& it : items)
    if (const TeiForm* f = std::get_if<TeiForm>(&it.value))
      if (f->is_headword()) return f;
  return nullptr;
}
bool TeiEntry::operator==(const TeiEntry& o) const {
  return id == o.id && free == o.free && element_name == o.element_name &&
         free_content == o.free_content && items == o.items;
}

// --------------------------------------------------------------------------
// TEI binding

namespace {

class TeiBinder {
 public:
  explicit TeiBinder(BindMode mode) : strict_(mode == BindMode::kStrict) {}

  TeiEntry entry(const XmlElement& e) {
    TeiEntry out;
    out.element_name = e.name.local;
    out.id = id_of(e);
    if (e.name.local == "entryFree") return free_entry(e, std::move(out));
    for (const XmlNode& n : e.children) {
      if (n.is_text()) {
        stray_text(n.text(), e.name.local);
        continue;
      }
      const XmlElement& c = n.element();
      const std::string& name = c.name.local;
      if (name == "form") {
        out.items.push_back({form(c)});
      } else if (name == "sense") {
        out.items.push_back({sense(c)});
      } else if (name == "etym") {
        out.items.push_back({etym(c)});
      } else if (name == "hom") {
        out.items.push_back({entry(c)});
      } else {
        unknown(c, e.name.local, out.items);
      }
    }
    return out;
  }

 private:
  // entryFree: surface order is authoritative.  The original nodes are kept
  // verbatim; the structured view below is a derived convenience (one
  // headword form, one sense) and drops separator text.
  TeiEntry free_entry(const XmlElement& e, TeiEntry out) {
    out.free = true;
    out.free_content = e.children;
    TeiForm synth_form;
    synth_form.type = "headword";
    TeiGramGrp synth_grp;
    TeiSense synth_sense;
    for (const XmlNode& n : e.children) {
      if (n.is_text()) continue;
      const XmlElement& c = n.element();
      const std::string& name = c.name.local;
      if (name == "orth") {
        synth_form.items.push_back({orth(c)});
      } else if (name == "pron") {
        synth_form.items.push_back({TeiPron{c.text_content()}});
      } else if (name == "usg") {
        synth_form.items.push_back({usg(c)});
      } else if (name == "gramGrp") {
        synth_form.items.push_back({gram_grp(c)});
      } else if (name == "gen" || name == "pos" || name == "number" || name == "gram") {
        synth_grp.items.push_back(gram_atom(c));
      } else if (name == "def") {
        synth_sense.items.push_back({def(c)});
      } else if (name == "cit") {
        synth_sense.items.push_back({cit(c)});
      } else if (name == "q" || name == "quote") {
        TeiCit wrapped;
        wrapped.items.push_back({quote(c)});
        synth_sense.items.push_back({std::move(wrapped)});
      } else if (name == "sense") {
        out.items.push_back({sense(c)});
      } else if (name == "form") {
        out.items.push_back({form(c)});
      } else if (name == "etym") {
        out.items.push_back({etym(c)});
      } else {
        unknown(c, "entryFree", out.items);
      }
    }
    if (!synth_grp.items.empty()) synth_form.items.push_back({std::move(synth_grp)});
    if (!synth_form.items.empty())
      out.items.insert(out.items.begin(), {std::move(synth_form)});
    if (!synth_sense.items.empty()) out.items.push_back({std::move(synth_sense)});
    return out;
  }

  TeiForm form(const XmlElement& e) {
    TeiForm out;
    out.type = opt_attr(e, "type");
    for (const XmlNode& n : e.children) {
      if (n.is_text()) {
        if (ws_only(n.text())) continue;
        if (strict_) throw BindError("unexpected text in <form>: \"" + collapse_ws(n.text()) + "\"");
        out.items.push_back({n.text()});
        continue;
      }
      const XmlElement& c = n.element();
      const std::string& name = c.name.local;
      if (name == "orth") {
        out.items.push_back({orth(c)});
      } else if (name == "pron") {
        out.items.push_back({TeiPron{c.text_content()}});
      } else if (name == "usg") {
        out.items.push_back({usg(c)});
      } else if (name == "gramGrp") {
        out.items.push_back({gram_grp(c)});
      } else {
        unknown(c, "form", out.items);
      }
    }
    if (strict_ && out.is_headword() && out.orths().empty()) throw MissingHeadwordError();
    return out;
  }

  TeiOrth orth(const XmlElement& e) {
    return TeiOrth{e.text_content(), opt_attr(e, "extent"), opt_attr(e, "rend")};
  }

  TeiUsg usg(const XmlElement& e) { return TeiUsg{opt_attr(e, "type"), e.text_content()}; }

  TeiGramGrp::Item gram_atom(const XmlElement& c) {
    const std::string& name = c.name.local;
    if (name == "pos") return {TeiPos{opt_attr(c, "value"), c.text_content()}};
    if (name == "gen") return {TeiGen{opt_attr(c, "value"), c.text_content()}};
    if (name == "number") return {TeiNumber{opt_attr(c, "value"), c.text_content()}};
    return {TeiGram{opt_attr(c, "type"), c.text_content()}};
  }

  TeiGramGrp gram_grp(const XmlElement& e) {
    TeiGramGrp out;
    for (const XmlNode& n : e.children) {
      if (n.is_text()) {
        stray_text(n.text(), "gramGrp");
        continue;
      }
      const XmlElement& c = n.element();
      const std::string& name = c.name.local;
      if (name == "pos" || name == "gen" || name == "number" || name == "gram") {
        out.items.push_back(gram_atom(c));
      } else if (name == "usg") {
        out.items.push_back({usg(c)});
      } else if (name == "gramGrp") {
        out.items.push_back({gram_grp(c)});
      } else {
        unknown(c, "gramGrp", out.items);
      }
    }
    return out;
  }

  TeiDef def(const XmlElement& e) { return TeiDef{opt_id_of(e), e.text_content()}; }

  TeiQuote quote(const XmlElement& e) {
    return TeiQuote{opt_attr(e, "type"), e.text_content()};
  }

  TeiCit cit(const XmlElement& e) {
    TeiCit out;
    out.type = opt_attr(e, "type");
    for (const XmlNode& n : e.children) {
      if (n.is_text()) {
        stray_text(n.text(), "cit");
        continue;
      }
      const XmlElement& c = n.element();
      const std::string& name = c.name.local;
      if (name == "quote" || name == "q") {
        out.items.push_back({quote(c)});
      } else if (name == "usg") {
        out.items.push_back({usg(c)});
      } else if (name == "bibl") {
        out.items.push_back({TeiBibl{c.text_content()}});
      } else {
        unknown(c, "cit", out.items);
      }
    }
    return out;
  }

  TeiSense sense(const XmlElement& e) {
    TeiSense out;
    out.id = opt_id_of(e);
    out.n = opt_attr(e, "n");
    if (const std::string* lv = attr_plain(e, "level")) {
      int value = 0;
      auto [end, ec] = std::from_chars(lv->data(), lv->data() + lv->size(), value);
      if (ec == std::errc() && end == lv->data() + lv->size()) {
        out.level = value;
      } else if (strict_) {
        throw BindError("sense level \"" + *lv + "\" is not an integer");
      }
    }
    for (const XmlNode& n : e.children) {
      if (n.is_text()) {
        stray_text(n.text(), "sense");
        continue;
      }
      const XmlElement& c = n.element();
      const std::string& name = c.name.local;
      if (name == "def") {
        out.items.push_back({def(c)});
      } else if (name == "cit") {
        out.items.push_back({cit(c)});
      } else if (name == "sense") {
        out.items.push_back({sense(c)});
      } else if (name == "usg") {
        out.items.push_back({usg(c)});
      } else if (name == "xr") {
        out.items.push_back({xr(c)});
      } else {
        unknown(c, "sense", out.items);
      }
    }
    return out;
  }

  TeiRef ref(const XmlElement& e) {
    return TeiRef{opt_attr(e, "type"), opt_attr(e, "target"), e.text_content()};
  }

  TeiXr xr(const XmlElement& e) {
    TeiXr out;
    for (const XmlNode& n : e.children) {
      if (n.is_text()) {
        out.items.push_back({n.text()});
        continue;
      }
      const XmlElement& c = n.element();
      if (c.name.local == "ref") {
        out.items.push_back({ref(c)});
      } else {
        unknown(c, "xr", out.items);
      }
    }
    return out;
  }

  TeiEtym etym(const XmlElement& e) {
    TeiEtym out;
    out.id = opt_id_of(e);
    for (const XmlNode& n : e.children) {
      if (n.is_text()) {
        out.items.push_back({n.text()});  // prose, kept verbatim
        continue;
      }
      const XmlElement& c = n.element();
      const std::string& name = c.name.local;
      if (name == "def") {
        out.items.push_back({def(c)});
      } else if (name == "ref") {
        out.items.push_back({ref(c)});
      } else if (name == "xr") {
        out.items.push_back({xr(c)});
      } else {
        unknown(c, "etym", out.items);
      }
    }
    return out;
  }

  void stray_text(const std::string& text, const std::string& context) {
    if (ws_only(text)) return;
    if (strict_)
      throw BindError("unexpected text in <" + context + ">: \"" + collapse_ws(text) + "\"");
    // permissive: separator text in element-only content is dropped
  }

  template <typename ItemVec>
  void unknown(const XmlElement& c, const std::string& context, ItemVec& items) {
    if (strict_) throw UnknownElementError(c.name.local, "<" + context + ">");
    items.push_back({c});  // opaque, re-emitted verbatim
  }

  bool strict_;
};

}  // namespace

TeiEntry bind_tei(const XmlElement& root, BindMode mode) {
  const std::string& name = root.name.local;
  if (name != "entry" && name != "entryFree" && name != "hom")
    throw BindError("expected <entry>, <entryFree> or <hom>, got <" + name + ">");
  TeiBinder binder(mode);
  return binder.entry(root);
}

// --------------------------------------------------------------------------
// TEI unbinding

namespace {

void set_opt(XmlElement& e, const char* name, const std::optional<std::string>& v) {
  if (v) e.set_attr(name, *v);
}

struct TeiEmitter {
  XmlElement orth(const TeiOrth& v) const {
    XmlElement e("orth");
    set_opt(e, "extent", v.extent);
    set_opt(e, "rend", v.rend);
    e.add_text(v.text);
    return e;
  }

  XmlElement usg(const TeiUsg& v) const {
    XmlElement e("usg");
    set_opt(e, "type", v.type);
    e.add_text(v.text);
    return e;
  }

  XmlElement gram_grp(const TeiGramGrp& g) const {
    XmlElement e("gramGrp");
    for (const auto& it : g.items) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TeiPos>) {
              XmlElement c("pos");
              set_opt(c, "value", v.value);
              c.add_text(v.text);
              e.add_child(std::move(c));
            } else if constexpr (std::is_same_v<T, TeiGen>) {
              XmlElement c("gen");
              set_opt(c, "value", v.value);
              c.add_text(v.surface);
              e.add_child(std::move(c));
            } else if constexpr (std::is_same_v<T, TeiNumber>) {
              XmlElement c("number");
              set_opt(c, "value", v.value);
              c.add_text(v.surface);
              e.add_child(std::move(c));
            } else if constexpr (std::is_same_v<T, TeiGram>) {
              XmlElement c("gram");
              set_opt(c, "type", v.type);
              c.add_text(v.text);
              e.add_child(std::move(c));
            } else if constexpr (std::is_same_v<T, TeiUsg>) {
              e.add_child(usg(v));
            } else if constexpr (std::is_same_v<T, TeiGramGrp>) {
              e.add_child(gram_grp(v));
            } else {  // XmlElement
              e.add_child(v);
            }
          },
          it.value);
    }
    return e;
  }

  XmlElement form(const TeiForm& f) const {
    XmlElement e("form");
    set_opt(e, "type", f.type);
    for (const auto& it : f.items) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TeiOrth>) {
              e.add_child(orth(v));
            } else if constexpr (std::is_same_v<T, TeiPron>) {
              XmlElement c("pron");
              c.add_text(v.text);
              e.add_child(std::move(c));
            } else if constexpr (std::is_same_v<T, TeiUsg>) {
              e.add_child(usg(v));
            } else if constexpr (std::is_same_v<T, TeiGramGrp>) {
              e.add_child(gram_grp(v));
            } else if constexpr (std::is_same_v<T, XmlElement>) {
              e.add_child(v);
            } else {  // stray text kept by permissive binding
              e.add_text(v);
            }
          },
          it.value);
    }
    return e;
  }

  XmlElement def(const TeiDef& v) const {
    XmlElement e("def");
    if (v.id) e.set_attr_xml("id", *v.id);
    e.add_text(v.text);
    return e;
  }

  XmlElement ref(const TeiRef& v) const {
    XmlElement e("ref");
    set_opt(e, "type", v.type);
    set_opt(e, "target", v.target);
    e.add_text(v.text);
    return e;
  }

  XmlElement xr(const TeiXr& x) const {
    XmlElement e("xr");
    for (const auto& it : x.items) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
              e.add_text(v);
            } else if constexpr (std::is_same_v<T, TeiRef>) {
              e.add_child(ref(v));
            } else {
              e.add_child(v);
            }
          },
          it.value);
    }
    return e;
  }

  XmlElement cit(const TeiCit& c) const {
    XmlElement e("cit");
    set_opt(e, "type", c.type);
    for (const auto& it : c.items) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TeiQuote>) {
              XmlElement q("quote");  // q is normalized to quote here
              set_opt(q, "type", v.type);
              q.add_text(v.text);
              e.add_child(std::move(q));
            } else if constexpr (std::is_same_v<T, TeiUsg>) {
              e.add_child(usg(v));
            } else if constexpr (std::is_same_v<T, TeiBibl>) {
              XmlElement b("bibl");
              b.add_text(v.text);
              e.add_child(std::move(b));
            } else {
              e.add_child(v);
            }
          },
          it.value);
    }
    return e;
  }

  XmlElement sense(const TeiSense& s) const {
    XmlElement e("sense");
    if (s.id) e.set_attr_xml("id", *s.id);
    set_opt(e, "n", s.n);
    if (s.level) e.set_attr("level", std::to_string(*s.level));
    for (const auto& it : s.items) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TeiDef>) {
              e.add_child(def(v));
            } else if constexpr (std::is_same_v<T, TeiCit>) {
              e.add_child(cit(v));
            } else if constexpr (std::is_same_v<T, TeiSense>) {
              e.add_child(sense(v));
            } else if constexpr (std::is_same_v<T, TeiUsg>) {
              e.add_child(usg(v));
            } else if constexpr (std::is_same_v<T, TeiXr>) {
              e.add_child(xr(v));
            } else {
              e.add_child(v);
            }
          },
          it.value);
    }
    return e;
  }

  XmlElement etym(const TeiEtym& t) const {
    XmlElement e("etym");
    if (t.id) e.set_attr_xml("id", *t.id);
    for (const auto& it : t.items) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
              e.add_text(v);
            } else if constexpr (std::is_same_v<T, TeiDef>) {
              e.add_child(def(v));
            } else if constexpr (std::is_same_v<T, TeiRef>) {
              e.add_child(ref(v));
            } else if constexpr (std::is_same_v<T, TeiXr>) {
              e.add_child(xr(v));
            } else {
              e.add_child(v);
            }
          },
          it.value);
    }
    return e;
  }

  XmlElement entry(const TeiEntry& en) const {
    XmlElement e(en.element_name.empty() ? "entry" : en.element_name);
    if (!en.id.empty()) e.set_attr_xml("id", en.id);
    if (en.free) {
      // surface order is the authority; re-emit the original nodes
      for (const XmlNode& n : en.free_content) {
        if (n.is_text())
          e.add_text(n.text());
        else
          e.add_child(n.element());
      }
      return e;
    }
    for (const auto& it : en.items) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TeiForm>) {
              e.add_child(form(v));
            } else if constexpr (std::is_same_v<T, TeiSense>) {
              e.add_child(sense(v));
            } else if constexpr (std::is_same_v<T, TeiEtym>) {
              e.add_child(etym(v));
            } else if constexpr (std::is_same_v<T, TeiEntry>) {
              XmlElement h = entry(v);
              h.name = XmlName{"", "", "hom"};
              e.add_child(std::move(h));
            } else {
              e.add_child(v);
            }
          },
          it.value);
    }
    return e;
  }
};

}  // namespace

XmlElement unbind_tei(const TeiEntry& entry) { return TeiEmitter{}.entry(entry); }

// --------------------------------------------------------------------------
// ISO 1951

IsoClass classify_iso(std::string_view name) {
  if (name.size() > 3 && name.substr(name.size() - 3) == "Ctn") return IsoClass::kContainer;
  if (name.size() > 5 && name.substr(name.size() - 5) == "Block") return IsoClass::kBlock;
  if (name == "SenseGrp" || name == "SenseGroup" || name == "HomographGrp" ||
      name == "HomographGroup")
    return IsoClass::kGroup;
  return IsoClass::kCategory;
}

const char* to_string(IsoClass cls) {
  switch (cls) {
    case IsoClass::kContainer: return "container";
    case IsoClass::kBlock: return "block";
    case IsoClass::kGroup: return "group";
    default: return "category";
  }
}

bool IsoNode::operator==(const IsoNode& o) const {
  return kind == o.kind && cls == o.cls && attrs == o.attrs && children == o.children;
}

namespace {

IsoNode bind_iso_node(const XmlElement& e) {
  IsoNode out;
  out.kind = e.name.local;
  out.cls = classify_iso(e.name.local);
  out.attrs = e.attributes;
  for (const XmlNode& n : e.children) {
    if (n.is_text()) {
      if (!ws_only(n.text())) out.children.push_back({n.text()});
    } else {
      out.children.push_back({bind_iso_node(n.element())});
    }
  }
  return out;
}

}  // namespace

IsoEntry bind_iso(const XmlElement& root) {
  if (root.name.local != "DictionaryEntry")
    throw BindError("expected <DictionaryEntry>, got <" + root.name.local + ">");
  IsoEntry out;
  for (const XmlNode& n : root.children) {
    if (n.is_text()) {
      if (!ws_only(n.text()))
        throw BindError("unexpected text in <DictionaryEntry>: \"" +
                        collapse_ws(n.text()) + "\"");
      continue;
    }
    const XmlElement& c = n.element();
    const std::string& name = c.name.local;
    if (name == "HeadwordCtn") {
      for (const XmlNode& h : c.children)
        if (h.is_element()) out.headword_ctn.push_back(bind_iso_node(h.element()));
    } else if (classify_iso(name) == IsoClass::kGroup) {
      out.sense_grps.push_back(bind_iso_node(c));
    } else if (name == "Etymology") {
      out.etymology = bind_iso_node(c);
    } else {
      throw UnknownElementError(name, "<DictionaryEntry>");
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// LMF

namespace {

LmfFeatSet bind_feats(const XmlElement& e) {
  LmfFeatSet out;
  for (const XmlNode& n : e.children) {
    if (!n.is_element()) continue;
    const XmlElement& c = n.element();
    if (c.name.local != "feat")
      throw UnknownElementError(c.name.local, "<" + e.name.local + ">");
    for (const XmlAttribute& a : c.attributes) out.push_back({a.name.local, a.value});
  }
  return out;
}

LmfEtymon bind_etymon(const XmlElement& e) {
  LmfEtymon out;
  if (const std::string* v = attr_plain(e, "id")) out.id = *v;
  if (const XmlElement* form = e.first_child("form")) {
    if (const XmlElement* orth = form->first_child("orth")) {
      out.orth = orth->text_content();
      if (const std::string* lang = orth->attr_qname("xml:lang")) out.orth_lang = *lang;
    }
    if (const XmlElement* pos = form->first_child("pos")) out.pos = pos->text_content();
  }
  if (const XmlElement* sense = e.first_child("sense")) {
    if (const XmlElement* gloss = sense->first_child("gloss"))
      out.gloss = gloss->text_content();
    if (const XmlElement* note = sense->first_child("note")) out.note = note->text_content();
  }
  return out;
}

}  // namespace

LmfEntry bind_lmf(const XmlElement& root) {
  if (root.name.local != "LexicalEntry")
    throw BindError("expected <LexicalEntry>, got <" + root.name.local + ">");
  LmfEntry out;
  for (const XmlNode& n : root.children) {
    if (!n.is_element()) continue;
    const XmlElement& c = n.element();
    const std::string& name = c.name.local;
    if (name == "Lemma") {
      if (const std::string* v = attr_plain(c, "id")) out.lemma_id = *v;
      for (const XmlNode& f : c.children) {
        if (!f.is_element()) continue;
        if (f.element().name.local != "FormRepresentation")
          throw UnknownElementError(f.element().name.local, "<Lemma>");
        out.lemma.push_back(bind_feats(f.element()));
      }
    } else if (name == "Equivalent") {
      out.equivalents.push_back(bind_feats(c));
    } else if (name == "etymology") {
      LmfEtymology ety;
      for (const XmlNode& t : c.children) {
        if (!t.is_element()) continue;
        const XmlElement& tc = t.element();
        if (tc.name.local == "etymon") {
          ety.etymons.push_back(bind_etymon(tc));
        } else if (tc.name.local == "etymologicalLink") {
          LmfLink link;
          if (const std::string* v = attr_plain(tc, "source")) link.source = *v;
          if (const std::string* v = attr_plain(tc, "target")) link.target = *v;
          if (const XmlElement* cls = tc.first_child("etymologicalClass"))
            link.link_class = collapse_ws(cls->text_content());
          ety.links.push_back(std::move(link));
        } else {
          throw UnknownElementError(tc.name.local, "<etymology>");
        }
      }
      out.etymology = std::move(ety);
    } else {
      throw UnknownElementError(name, "<LexicalEntry>");
    }
  }
  if (out.etymology) {
    std::vector<std::string> ids;
    if (!out.lemma_id.empty()) ids.push_back(out.lemma_id);
    for (const auto& et : out.etymology->etymons)
      if (!et.id.empty()) ids.push_back(et.id);
    auto defined = [&](const std::string& id) {
      return std::find(ids.begin(), ids.end(), id) != ids.end();
    };
    for (const auto& link : out.etymology->links) {
      if (!link.source.empty() && !defined(link.source)) throw DanglingLinkError(link.source);
      if (!link.target.empty() && !defined(link.target)) throw DanglingLinkError(link.target);
    }
  }
  return out;
}

XmlElement unbind_lmf(const LmfEntry& entry) {
  XmlElement root("LexicalEntry");

  auto emit_feats = [](XmlElement& parent, const LmfFeatSet& feats) {
    for (const LmfFeat& f : feats) {
      XmlElement feat("feat");
      feat.set_attr(f.name, f.value);
      parent.add_child(std::move(feat));
    }
  };

  XmlElement lemma("Lemma");
  if (!entry.lemma_id.empty()) lemma.set_attr("id", entry.lemma_id);
  for (const LmfFeatSet& fr : entry.lemma) {
    XmlElement rep("FormRepresentation");
    emit_feats(rep, fr);
    lemma.add_child(std::move(rep));
  }
  root.add_child(std::move(lemma));

  for (const LmfFeatSet& eq : entry.equivalents) {
    XmlElement equivalent("Equivalent");
    emit_feats(equivalent, eq);
    root.add_child(std::move(equivalent));
  }

  if (entry.etymology) {
    XmlElement ety("etymology");
    for (const LmfEtymon& et : entry.etymology->etymons) {
      XmlElement etymon("etymon");
      if (!et.id.empty()) etymon.set_attr("id", et.id);
      if (et.orth || et.pos) {
        XmlElement form("form");
        if (et.orth) {
          XmlElement orth("orth");
          if (et.orth_lang) orth.set_attr_xml("lang", *et.orth_lang);
          orth.add_text(*et.orth);
          form.add_child(std::move(orth));
        }
        if (et.pos) {
          XmlElement pos("pos");
          pos.add_text(*et.pos);
          form.add_child(std::move(pos));
        }
        etymon.add_child(std::move(form));
      }
      if (et.gloss || et.note) {
        XmlElement sense("sense");
        if (et.gloss) {
          XmlElement gloss("gloss");
          gloss.add_text(*et.gloss);
          sense.add_child(std::move(gloss));
        }
        if (et.note) {
          XmlElement note("note");
          note.add_text(*et.note);
          sense.add_child(std::move(note));
        }
        etymon.add_child(std::move(sense));
      }
      ety.add_child(std::move(etymon));
    }
    for (const LmfLink& link : entry.etymology->links) {
      XmlElement le("etymologicalLink");
      if (!link.source.empty()) le.set_attr("source", link.source);
      if (!link.target.empty()) le.set_attr("target", link.target);
      XmlElement cls("etymologicalClass");
      cls.add_text(link.link_class);
      le.add_child(std::move(cls));
      ety.add_child(std::move(le));
    }
    root.add_child(std::move(ety));
  }

  return root;
}

}  // namespace lexmark
