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

#include "lexmark.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "builtin.hpp"
#include "diagnostics.hpp"
#include "entry_model.hpp"
#include "errors.hpp"
#include "grammar.hpp"
#include "inspect.hpp"
#include "render.hpp"
#include "transform.hpp"
#include "xml_tree.hpp"

struct lexmark_document {
  lexmark::XmlDocument doc;
};

struct lexmark_schema {
  lexmark::Schema schema;
};

struct lexmark_ruleset {
  enum class Kind { kNodeRules, kLmfMapping } kind = Kind::kNodeRules;
  lexmark::Ruleset rules;
};

struct lexmark_diagnostics {
  std::vector<lexmark::Diagnostic> items;
};

namespace {

using lexmark::Diagnostic;
using lexmark::Severity;

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void hand_out(lexmark_diagnostics** sink, std::vector<Diagnostic> items) {
  if (sink == nullptr) return;
  *sink = new lexmark_diagnostics{std::move(items)};
}

Diagnostic make_diag(Severity severity, std::string code, std::string message,
                     std::string file = {}, int line = 0, int column = 0) {
  Diagnostic d;
  d.severity = severity;
  d.code = std::move(code);
  d.message = std::move(message);
  d.file = std::move(file);
  d.line = line;
  d.column = column;
  return d;
}

// Runs the body, translating exceptions to status codes, the thread error
// slot, and (when a sink is given) one structured diagnostic.
template <typename F>
lexmark_status guarded(lexmark_diagnostics** diags, F&& body) noexcept {
  try {
    return body();
  } catch (const lexmark::WellFormednessError& e) {
    t_last_error = e.what();
    hand_out(diags, {make_diag(Severity::kError, "xml.well-formedness",
                               e.detail(), e.source(), e.line(), e.column())});
    return LEXMARK_ERROR_PARSE;
  } catch (const lexmark::SchemaSyntaxError& e) {
    t_last_error = e.what();
    hand_out(diags, {make_diag(Severity::kError, "schema.syntax", e.what(), {},
                               e.line(), e.column())});
    return LEXMARK_ERROR_SCHEMA;
  } catch (const lexmark::DanglingDefinitionError& e) {
    t_last_error = e.what();
    hand_out(diags,
             {make_diag(Severity::kError, "schema.dangling-ref", e.what())});
    return LEXMARK_ERROR_SCHEMA;
  } catch (const lexmark::RuleSyntaxError& e) {
    t_last_error = e.what();
    hand_out(diags, {make_diag(Severity::kError, "rules.syntax", e.what(), {},
                               e.line(), 0)});
    return LEXMARK_ERROR_RULESET;
  } catch (const lexmark::BindError& e) {
    t_last_error = e.what();
    hand_out(diags, {make_diag(Severity::kError, "bind.model", e.what())});
    return LEXMARK_ERROR_BIND;
  } catch (const lexmark::Error& e) {
    t_last_error = e.what();
    hand_out(diags, {make_diag(Severity::kError, "internal", e.what())});
    return LEXMARK_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return LEXMARK_ERROR_INTERNAL;
  }
}

lexmark_status invalid_argument(const std::string& message) {
  t_last_error = message;
  return LEXMARK_ERROR_INVALID_ARGUMENT;
}

bool read_file(const char* path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

// Topmost dictionary-entry elements; an entry nested below another entry
// belongs to its ancestor.
void collect_entries(const lexmark::XmlElement& e,
                     std::vector<const lexmark::XmlElement*>& out) {
  const std::string& name = e.name.local;
  if (name == "entry" || name == "entryFree" || name == "hom") {
    out.push_back(&e);
    return;
  }
  for (const lexmark::XmlNode& n : e.children)
    if (n.is_element()) collect_entries(n.element(), out);
}

const Diagnostic* diag_at(const lexmark_diagnostics* d, size_t index) {
  if (d == nullptr || index >= d->items.size()) return nullptr;
  return &d->items[index];
}

}  // namespace

extern "C" {

const char* lexmark_version(void) { return "0.1.0"; }

const char* lexmark_last_error(void) { return t_last_error.c_str(); }

void lexmark_string_free(char* s) { delete[] s; }

/* -- documents ---------------------------------------------------------- */

lexmark_status lexmark_document_parse(const char* xml_text,
                                      const char* source_name,
                                      lexmark_document** out,
                                      lexmark_diagnostics** diags) {
  if (xml_text == nullptr || out == nullptr)
    return invalid_argument("xml_text and out are required");
  return guarded(diags, [&] {
    auto doc = lexmark::parse_xml(
        xml_text, source_name == nullptr ? "<input>" : source_name);
    *out = new lexmark_document{std::move(doc)};
    return LEXMARK_OK;
  });
}

lexmark_status lexmark_document_parse_file(const char* path,
                                           lexmark_document** out,
                                           lexmark_diagnostics** diags) {
  if (path == nullptr || out == nullptr)
    return invalid_argument("path and out are required");
  std::string text;
  if (!read_file(path, text)) {
    t_last_error = std::string("cannot read ") + path;
    hand_out(diags, {make_diag(Severity::kError, "io.read", t_last_error,
                               path)});
    return LEXMARK_ERROR_IO;
  }
  return guarded(diags, [&] {
    auto doc = lexmark::parse_xml(text, path);
    *out = new lexmark_document{std::move(doc)};
    return LEXMARK_OK;
  });
}

void lexmark_document_free(lexmark_document* doc) { delete doc; }

lexmark_status lexmark_document_serialize(const lexmark_document* doc,
                                          int pretty, char** out) {
  if (doc == nullptr || out == nullptr)
    return invalid_argument("doc and out are required");
  return guarded(nullptr, [&] {
    *out = dup_string(lexmark::serialize(
        doc->doc, pretty ? lexmark::SerializeMode::kPretty
                         : lexmark::SerializeMode::kCompact));
    return LEXMARK_OK;
  });
}

/* -- schemas ------------------------------------------------------------ */

lexmark_status lexmark_schema_default(lexmark_schema** out) {
  if (out == nullptr) return invalid_argument("out is required");
  return guarded(nullptr, [&] {
    *out = new lexmark_schema{lexmark::default_schema()};
    return LEXMARK_OK;
  });
}

lexmark_status lexmark_schema_load(const char* text, const char* source_name,
                                   lexmark_schema** out,
                                   lexmark_diagnostics** diags) {
  if (text == nullptr || out == nullptr)
    return invalid_argument("text and out are required");
  return guarded(diags, [&] {
    auto schema = lexmark::load_schema(
        text, source_name == nullptr ? "<schema>" : source_name);
    *out = new lexmark_schema{std::move(schema)};
    return LEXMARK_OK;
  });
}

lexmark_status lexmark_schema_load_file(const char* path, lexmark_schema** out,
                                        lexmark_diagnostics** diags) {
  if (path == nullptr || out == nullptr)
    return invalid_argument("path and out are required");
  std::string text;
  if (!read_file(path, text)) {
    t_last_error = std::string("cannot read ") + path;
    hand_out(diags, {make_diag(Severity::kError, "io.read", t_last_error,
                               path)});
    return LEXMARK_ERROR_IO;
  }
  return guarded(diags, [&] {
    auto schema = lexmark::load_schema(text, path);
    *out = new lexmark_schema{std::move(schema)};
    return LEXMARK_OK;
  });
}

void lexmark_schema_free(lexmark_schema* schema) { delete schema; }

/* -- rulesets ----------------------------------------------------------- */

lexmark_status lexmark_ruleset_builtin(const char* name,
                                       lexmark_ruleset** out) {
  if (name == nullptr || out == nullptr)
    return invalid_argument("name and out are required");
  return guarded(nullptr, [&]() -> lexmark_status {
    std::string n = name;
    if (n == "tei-to-iso1951") {
      *out = new lexmark_ruleset{lexmark_ruleset::Kind::kNodeRules,
                                 lexmark::builtin_tei_to_iso1951()};
      return LEXMARK_OK;
    }
    if (n == "tei-to-lmf") {
      *out = new lexmark_ruleset{lexmark_ruleset::Kind::kLmfMapping, {}};
      return LEXMARK_OK;
    }
    return invalid_argument("unknown builtin ruleset \"" + n + "\"");
  });
}

lexmark_status lexmark_ruleset_compile(const char* text,
                                       const char* source_name,
                                       lexmark_ruleset** out,
                                       lexmark_diagnostics** diags) {
  if (text == nullptr || out == nullptr)
    return invalid_argument("text and out are required");
  return guarded(diags, [&] {
    auto rules = lexmark::compile_ruleset(
        text, source_name == nullptr ? "<rules>" : source_name);
    *out = new lexmark_ruleset{lexmark_ruleset::Kind::kNodeRules,
                               std::move(rules)};
    return LEXMARK_OK;
  });
}

lexmark_status lexmark_ruleset_compile_file(const char* path,
                                            lexmark_ruleset** out,
                                            lexmark_diagnostics** diags) {
  if (path == nullptr || out == nullptr)
    return invalid_argument("path and out are required");
  std::string text;
  if (!read_file(path, text)) {
    t_last_error = std::string("cannot read ") + path;
    hand_out(diags, {make_diag(Severity::kError, "io.read", t_last_error,
                               path)});
    return LEXMARK_ERROR_IO;
  }
  return guarded(diags, [&] {
    auto rules = lexmark::compile_ruleset(text, path);
    *out = new lexmark_ruleset{lexmark_ruleset::Kind::kNodeRules,
                               std::move(rules)};
    return LEXMARK_OK;
  });
}

void lexmark_ruleset_free(lexmark_ruleset* ruleset) { delete ruleset; }

/* -- diagnostics -------------------------------------------------------- */

size_t lexmark_diagnostics_count(const lexmark_diagnostics* d) {
  return d == nullptr ? 0 : d->items.size();
}

int lexmark_diagnostics_is_error(const lexmark_diagnostics* d, size_t index) {
  const Diagnostic* diag = diag_at(d, index);
  return diag != nullptr && diag->severity == Severity::kError ? 1 : 0;
}

const char* lexmark_diagnostics_code(const lexmark_diagnostics* d,
                                     size_t index) {
  const Diagnostic* diag = diag_at(d, index);
  return diag == nullptr ? "" : diag->code.c_str();
}

const char* lexmark_diagnostics_message(const lexmark_diagnostics* d,
                                        size_t index) {
  const Diagnostic* diag = diag_at(d, index);
  return diag == nullptr ? "" : diag->message.c_str();
}

const char* lexmark_diagnostics_file(const lexmark_diagnostics* d,
                                     size_t index) {
  const Diagnostic* diag = diag_at(d, index);
  return diag == nullptr ? "" : diag->file.c_str();
}

int lexmark_diagnostics_line(const lexmark_diagnostics* d, size_t index) {
  const Diagnostic* diag = diag_at(d, index);
  return diag == nullptr ? 0 : diag->line;
}

int lexmark_diagnostics_column(const lexmark_diagnostics* d, size_t index) {
  const Diagnostic* diag = diag_at(d, index);
  return diag == nullptr ? 0 : diag->column;
}

const char* lexmark_diagnostics_path(const lexmark_diagnostics* d,
                                     size_t index) {
  const Diagnostic* diag = diag_at(d, index);
  return diag == nullptr ? "" : diag->path.c_str();
}

const char* lexmark_diagnostics_expected(const lexmark_diagnostics* d,
                                         size_t index) {
  const Diagnostic* diag = diag_at(d, index);
  return diag == nullptr ? "" : diag->expected.c_str();
}

lexmark_status lexmark_diagnostics_format(const lexmark_diagnostics* d,
                                          size_t index, char** out) {
  const Diagnostic* diag = diag_at(d, index);
  if (diag == nullptr || out == nullptr)
    return invalid_argument("index out of range");
  *out = dup_string(lexmark::format_diagnostic(*diag));
  return LEXMARK_OK;
}

void lexmark_diagnostics_free(lexmark_diagnostics* d) { delete d; }

/* -- operations ---------------------------------------------------------- */

lexmark_status lexmark_validate(const lexmark_document* doc,
                                const lexmark_schema* schema,
                                lexmark_diagnostics** diags) {
  if (doc == nullptr || diags == nullptr)
    return invalid_argument("doc and diags are required");
  return guarded(diags, [&] {
    const lexmark::Schema& s =
        schema == nullptr ? lexmark::default_schema() : schema->schema;
    auto items =
        lexmark::validate(doc->doc.root(), s, doc->doc.source_name());
    hand_out(diags, std::move(items));
    return LEXMARK_OK;
  });
}

lexmark_status lexmark_check_refs(const lexmark_document* doc,
                                  int upgrade_warnings,
                                  lexmark_diagnostics** diags) {
  if (doc == nullptr || diags == nullptr)
    return invalid_argument("doc and diags are required");
  return guarded(diags, [&] {
    auto items = lexmark::check_refs(doc->doc);
    if (upgrade_warnings)
      for (Diagnostic& d : items) d.severity = Severity::kError;
    hand_out(diags, std::move(items));
    return LEXMARK_OK;
  });
}

lexmark_status lexmark_convert(const lexmark_document* doc, const char* to,
                               const lexmark_ruleset* ruleset, int pretty,
                               char** out_xml, lexmark_diagnostics** diags) {
  if (doc == nullptr || to == nullptr || out_xml == nullptr)
    return invalid_argument("doc, to and out_xml are required");
  const std::string target = to;
  const auto mode = pretty ? lexmark::SerializeMode::kPretty
                           : lexmark::SerializeMode::kCompact;
  if (ruleset != nullptr) {
    bool lmf_rules = ruleset->kind == lexmark_ruleset::Kind::kLmfMapping;
    if (target == "lmf" && !lmf_rules)
      return invalid_argument(
          "lmf conversion is a model-level mapping; node rulesets apply to "
          "iso1951 only");
    if (target != "lmf" && lmf_rules)
      return invalid_argument(
          "the tei-to-lmf mapping applies to the lmf target only");
  }
  return guarded(diags, [&]() -> lexmark_status {
    std::vector<Diagnostic> found;
    std::string payload;

    if (target == "iso1951") {
      const lexmark::Ruleset& rules = ruleset == nullptr
                                          ? lexmark::builtin_tei_to_iso1951()
                                          : ruleset->rules;
      auto forest = lexmark::apply(rules, doc->doc.root());
      payload = lexmark::serialize_forest(forest, mode);
    } else if (target == "lmf") {
      std::vector<const lexmark::XmlElement*> entries;
      collect_entries(doc->doc.root(), entries);
      std::vector<lexmark::XmlNode> forest;
      for (const lexmark::XmlElement* e : entries) {
        auto entry = lexmark::bind_tei(*e, lexmark::BindMode::kPermissive);
        auto lmf = lexmark::map_tei_to_lmf(entry, found);
        forest.push_back(lexmark::XmlNode(lexmark::unbind_lmf(lmf)));
      }
      payload = lexmark::serialize_forest(forest, mode);
    } else if (target == "tei") {
      std::vector<const lexmark::XmlElement*> entries;
      collect_entries(doc->doc.root(), entries);
      if (entries.empty()) {
        payload = lexmark::serialize(doc->doc, mode);
      } else {
        std::vector<lexmark::XmlNode> forest;
        for (const lexmark::XmlElement* e : entries) {
          auto entry = lexmark::bind_tei(*e, lexmark::BindMode::kPermissive);
          forest.push_back(lexmark::XmlNode(lexmark::unbind_tei(entry)));
        }
        payload = lexmark::serialize_forest(forest, mode);
      }
    } else {
      return invalid_argument("unknown conversion target \"" + target + "\"");
    }

    *out_xml = dup_string(payload);
    hand_out(diags, std::move(found));
    return LEXMARK_OK;
  });
}

lexmark_status lexmark_render(const lexmark_document* doc, const char* media,
                              const char* gender_style, int include_citations,
                              int include_etym, char** out_text,
                              lexmark_diagnostics** diags) {
  if (doc == nullptr || media == nullptr || out_text == nullptr)
    return invalid_argument("doc, media and out_text are required");
  lexmark::RenderOptions opts;
  const std::string m = media;
  if (m == "print")
    opts.media = lexmark::Media::kPrint;
  else if (m == "expanded")
    opts.media = lexmark::Media::kExpanded;
  else if (m == "html")
    opts.media = lexmark::Media::kHtml;
  else
    return invalid_argument("unknown media \"" + m + "\"");
  if (gender_style != nullptr) {
    const std::string g = gender_style;
    if (g == "long")
      opts.gender_style = lexmark::GenderStyle::kLong;
    else if (g == "abbreviated")
      opts.gender_style = lexmark::GenderStyle::kAbbreviated;
    else
      return invalid_argument("unknown gender style \"" + g + "\"");
  }
  opts.include_citations = include_citations != 0;
  opts.include_etym = include_etym != 0;

  return guarded(diags, [&] {
    std::vector<Diagnostic> found;
    std::vector<const lexmark::XmlElement*> entries;
    collect_entries(doc->doc.root(), entries);
    std::string out;
    for (const lexmark::XmlElement* e : entries) {
      auto entry = lexmark::bind_tei(*e, lexmark::BindMode::kPermissive);
      std::string one = lexmark::render(entry, opts, &found);
      if (!out.empty()) out += '\n';
      out += one;
    }
    *out_text = dup_string(out);
    hand_out(diags, std::move(found));
    return LEXMARK_OK;
  });
}

lexmark_status lexmark_inspect(const lexmark_document* doc,
                               char** out_report) {
  if (doc == nullptr || out_report == nullptr)
    return invalid_argument("doc and out_report are required");
  return guarded(nullptr, [&] {
    auto report = lexmark::inspect_document(doc->doc);
    *out_report = dup_string(lexmark::format_report(report));
    return LEXMARK_OK;
  });
}

}  // extern "C"
