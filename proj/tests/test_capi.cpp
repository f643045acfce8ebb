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

// Exercises the shared library strictly through its C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "lexmark.h"
#include "test_util.hpp"

using testutil::contains;
using testutil::fixture_path;
using testutil::read_fixture;

namespace {

struct Doc {
  lexmark_document* handle = nullptr;
  explicit Doc(const std::string& fixture) {
    const std::string text = read_fixture(fixture);
    REQUIRE(lexmark_document_parse(text.c_str(), fixture.c_str(), &handle,
                                   nullptr) == LEXMARK_OK);
  }
  ~Doc() { lexmark_document_free(handle); }
};

}  // namespace

TEST_CASE("version and last error are always available") {
  REQUIRE(lexmark_version() != nullptr);
  CHECK(std::strlen(lexmark_version()) > 0);
  REQUIRE(lexmark_last_error() != nullptr);
}

TEST_CASE("documents parse from text and from files") {
  lexmark_document* doc = nullptr;
  CHECK(lexmark_document_parse("<a><b>x</b></a>", "t", &doc, nullptr) == LEXMARK_OK);
  REQUIRE(doc != nullptr);
  char* out = nullptr;
  CHECK(lexmark_document_serialize(doc, 0, &out) == LEXMARK_OK);
  CHECK(std::string(out) == "<a><b>x</b></a>");
  lexmark_string_free(out);
  lexmark_document_free(doc);

  lexmark_document* from_file = nullptr;
  CHECK(lexmark_document_parse_file(fixture_path("ski_tei.xml").c_str(),
                                    &from_file, nullptr) == LEXMARK_OK);
  REQUIRE(from_file != nullptr);
  lexmark_document_free(from_file);
}

TEST_CASE("parse failures report structured diagnostics") {
  lexmark_document* doc = nullptr;
  lexmark_diagnostics* diags = nullptr;
  CHECK(lexmark_document_parse("<a><b></a>", "bad.xml", &doc, &diags) ==
        LEXMARK_ERROR_PARSE);
  CHECK(doc == nullptr);
  REQUIRE(diags != nullptr);
  REQUIRE(lexmark_diagnostics_count(diags) == 1);
  CHECK(lexmark_diagnostics_is_error(diags, 0) == 1);
  CHECK(std::string(lexmark_diagnostics_code(diags, 0)) == "xml.well-formedness");
  CHECK(std::string(lexmark_diagnostics_file(diags, 0)) == "bad.xml");
  CHECK(lexmark_diagnostics_line(diags, 0) >= 1);
  char* line = nullptr;
  CHECK(lexmark_diagnostics_format(diags, 0, &line) == LEXMARK_OK);
  CHECK(contains(line, "bad.xml"));
  lexmark_string_free(line);
  lexmark_diagnostics_free(diags);
  CHECK(std::strlen(lexmark_last_error()) > 0);

  lexmark_status missing = lexmark_document_parse_file("/nonexistent.xml", &doc, nullptr);
  CHECK(missing == LEXMARK_ERROR_IO);
}

TEST_CASE("null arguments are rejected, not crashed on") {
  CHECK(lexmark_document_parse(nullptr, "t", nullptr, nullptr) ==
        LEXMARK_ERROR_INVALID_ARGUMENT);
  char* out = nullptr;
  CHECK(lexmark_document_serialize(nullptr, 0, &out) ==
        LEXMARK_ERROR_INVALID_ARGUMENT);
  lexmark_document_free(nullptr);
  lexmark_schema_free(nullptr);
  lexmark_ruleset_free(nullptr);
  lexmark_diagnostics_free(nullptr);
  lexmark_string_free(nullptr);
}

TEST_CASE("validation uses the bundled schema when none is given") {
  Doc valid("gramgrp_valid.xml");
  lexmark_diagnostics* diags = nullptr;
  CHECK(lexmark_validate(valid.handle, nullptr, &diags) == LEXMARK_OK);
  CHECK(lexmark_diagnostics_count(diags) == 0);
  lexmark_diagnostics_free(diags);

  Doc invalid("gramgrp_invalid.xml");
  diags = nullptr;
  CHECK(lexmark_validate(invalid.handle, nullptr, &diags) == LEXMARK_OK);
  REQUIRE(lexmark_diagnostics_count(diags) == 1);
  CHECK(lexmark_diagnostics_is_error(diags, 0) == 1);
  CHECK(std::string(lexmark_diagnostics_code(diags, 0)) == "validate.text");
  CHECK(contains(lexmark_diagnostics_expected(diags, 0), "m."));
  lexmark_diagnostics_free(diags);
}

TEST_CASE("schemas load from text and reject bad input") {
  lexmark_schema* schema = nullptr;
  CHECK(lexmark_schema_load("start = element a { empty }", "s", &schema,
                            nullptr) == LEXMARK_OK);
  REQUIRE(schema != nullptr);

  lexmark_document* doc = nullptr;
  REQUIRE(lexmark_document_parse("<a/>", "t", &doc, nullptr) == LEXMARK_OK);
  lexmark_diagnostics* diags = nullptr;
  CHECK(lexmark_validate(doc, schema, &diags) == LEXMARK_OK);
  CHECK(lexmark_diagnostics_count(diags) == 0);
  lexmark_diagnostics_free(diags);
  lexmark_document_free(doc);
  lexmark_schema_free(schema);

  lexmark_schema* bad = nullptr;
  diags = nullptr;
  CHECK(lexmark_schema_load("start = element {", "s", &bad, &diags) ==
        LEXMARK_ERROR_SCHEMA);
  CHECK(bad == nullptr);
  REQUIRE(diags != nullptr);
  REQUIRE(lexmark_diagnostics_count(diags) == 1);
  CHECK(std::string(lexmark_diagnostics_code(diags, 0)) == "schema.syntax");
  lexmark_diagnostics_free(diags);

  lexmark_schema* default_schema = nullptr;
  CHECK(lexmark_schema_default(&default_schema) == LEXMARK_OK);
  REQUIRE(default_schema != nullptr);
  lexmark_schema_free(default_schema);
}

TEST_CASE("rulesets come from names, text or files") {
  lexmark_ruleset* builtin = nullptr;
  CHECK(lexmark_ruleset_builtin("tei-to-iso1951", &builtin) == LEXMARK_OK);
  REQUIRE(builtin != nullptr);
  lexmark_ruleset_free(builtin);

  lexmark_ruleset* lmf = nullptr;
  CHECK(lexmark_ruleset_builtin("tei-to-lmf", &lmf) == LEXMARK_OK);
  REQUIRE(lmf != nullptr);
  lexmark_ruleset_free(lmf);

  lexmark_ruleset* unknown = nullptr;
  CHECK(lexmark_ruleset_builtin("nope", &unknown) == LEXMARK_ERROR_INVALID_ARGUMENT);
  CHECK(unknown == nullptr);

  lexmark_ruleset* compiled = nullptr;
  CHECK(lexmark_ruleset_compile("match a => emit B { recurse }", "r",
                                &compiled, nullptr) == LEXMARK_OK);
  REQUIRE(compiled != nullptr);
  lexmark_ruleset_free(compiled);

  lexmark_ruleset* bad = nullptr;
  lexmark_diagnostics* diags = nullptr;
  CHECK(lexmark_ruleset_compile("match a => emit B { recurse; recurse }", "r",
                                &bad, &diags) == LEXMARK_ERROR_RULESET);
  CHECK(bad == nullptr);
  REQUIRE(diags != nullptr);
  REQUIRE(lexmark_diagnostics_count(diags) == 1);
  CHECK(std::string(lexmark_diagnostics_code(diags, 0)) == "rules.syntax");
  lexmark_diagnostics_free(diags);
}

TEST_CASE("conversion targets tei, iso1951 and lmf") {
  Doc ski("ski_tei.xml");

  char* iso = nullptr;
  lexmark_diagnostics* diags = nullptr;
  CHECK(lexmark_convert(ski.handle, "iso1951", nullptr, 1, &iso, &diags) ==
        LEXMARK_OK);
  REQUIRE(iso != nullptr);
  CHECK(contains(iso, "<DictionaryEntry>"));
  CHECK(contains(iso, "<GrammaticalGender>m.</GrammaticalGender>"));
  CHECK(contains(iso, "<Ptr href=\"E_S_165\"/>"));
  lexmark_string_free(iso);
  lexmark_diagnostics_free(diags);

  char* lmf = nullptr;
  diags = nullptr;
  CHECK(lexmark_convert(ski.handle, "lmf", nullptr, 1, &lmf, &diags) ==
        LEXMARK_OK);
  REQUIRE(lmf != nullptr);
  CHECK(contains(lmf, "<LexicalEntry>"));
  CHECK(contains(lmf, "<feat writtenForm=\"Ski\"/>"));
  CHECK(contains(lmf, "<etymologicalClass>loan word</etymologicalClass>"));
  CHECK(lexmark_diagnostics_count(diags) == 0);
  lexmark_string_free(lmf);
  lexmark_diagnostics_free(diags);

  char* tei = nullptr;
  CHECK(lexmark_convert(ski.handle, "tei", nullptr, 1, &tei, nullptr) ==
        LEXMARK_OK);
  REQUIRE(tei != nullptr);
  CHECK(contains(tei, "<entry"));
  lexmark_string_free(tei);

  char* out = nullptr;
  CHECK(lexmark_convert(ski.handle, "pdf", nullptr, 1, &out, nullptr) ==
        LEXMARK_ERROR_INVALID_ARGUMENT);
  CHECK(contains(lexmark_last_error(), "pdf"));
}

TEST_CASE("custom node rulesets apply to the iso target only") {
  Doc ski("ski_tei.xml");
  lexmark_ruleset* rules = nullptr;
  REQUIRE(lexmark_ruleset_compile("match entry => emit E { recurse }", "r",
                                  &rules, nullptr) == LEXMARK_OK);
  char* out = nullptr;
  CHECK(lexmark_convert(ski.handle, "lmf", rules, 0, &out, nullptr) ==
        LEXMARK_ERROR_INVALID_ARGUMENT);
  CHECK(lexmark_convert(ski.handle, "iso1951", rules, 0, &out, nullptr) ==
        LEXMARK_OK);
  CHECK(contains(out, "<E>"));
  lexmark_string_free(out);
  lexmark_ruleset_free(rules);

  lexmark_ruleset* lmf_marker = nullptr;
  REQUIRE(lexmark_ruleset_builtin("tei-to-lmf", &lmf_marker) == LEXMARK_OK);
  char* iso = nullptr;
  CHECK(lexmark_convert(ski.handle, "iso1951", lmf_marker, 0, &iso, nullptr) ==
        LEXMARK_ERROR_INVALID_ARGUMENT);
  char* lmf = nullptr;
  CHECK(lexmark_convert(ski.handle, "lmf", lmf_marker, 0, &lmf, nullptr) ==
        LEXMARK_OK);
  CHECK(contains(lmf, "<LexicalEntry>"));
  lexmark_string_free(lmf);
  lexmark_ruleset_free(lmf_marker);
}

TEST_CASE("reference checks run through the C surface") {
  Doc ski("ski_tei.xml");
  lexmark_diagnostics* diags = nullptr;
  CHECK(lexmark_check_refs(ski.handle, 0, &diags) == LEXMARK_OK);
  REQUIRE(lexmark_diagnostics_count(diags) == 1);
  CHECK(lexmark_diagnostics_is_error(diags, 0) == 0);
  CHECK(std::string(lexmark_diagnostics_code(diags, 0)) == "ref.unresolved");
  lexmark_diagnostics_free(diags);

  diags = nullptr;
  CHECK(lexmark_check_refs(ski.handle, 1, &diags) == LEXMARK_OK);
  REQUIRE(lexmark_diagnostics_count(diags) == 1);
  CHECK(lexmark_diagnostics_is_error(diags, 0) == 1);
  lexmark_diagnostics_free(diags);

  Doc dict("ski_dict.xml");
  diags = nullptr;
  CHECK(lexmark_check_refs(dict.handle, 0, &diags) == LEXMARK_OK);
  CHECK(lexmark_diagnostics_count(diags) == 0);
  lexmark_diagnostics_free(diags);
}

TEST_CASE("rendering selects media and options") {
  Doc ski("ski_tei.xml");
  char* print = nullptr;
  lexmark_diagnostics* diags = nullptr;
  CHECK(lexmark_render(ski.handle, "print", nullptr, 1, 1, &print, &diags) ==
        LEXMARK_OK);
  REQUIRE(print != nullptr);
  CHECK(contains(print, "Ski, seit Anfang 20. Jh. meist Schi, m., Schneeschuh"));
  lexmark_string_free(print);
  lexmark_diagnostics_free(diags);

  char* expanded = nullptr;
  CHECK(lexmark_render(ski.handle, "expanded", "long", 1, 1, &expanded,
                       nullptr) == LEXMARK_OK);
  CHECK(contains(expanded, "masculine"));
  lexmark_string_free(expanded);

  char* html = nullptr;
  CHECK(lexmark_render(ski.handle, "html", nullptr, 1, 1, &html, nullptr) ==
        LEXMARK_OK);
  CHECK(contains(html, "<b class=\"pos\">N</b>"));
  lexmark_string_free(html);

  char* out = nullptr;
  CHECK(lexmark_render(ski.handle, "braille", nullptr, 1, 1, &out, nullptr) ==
        LEXMARK_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("inspection reports ids and references") {
  Doc ski("ski_tei.xml");
  char* report = nullptr;
  CHECK(lexmark_inspect(ski.handle, &report) == LEXMARK_OK);
  REQUIRE(report != nullptr);
  CHECK(contains(report, "E_S_646"));
  CHECK(contains(report, "unresolved"));
  lexmark_string_free(report);
}
