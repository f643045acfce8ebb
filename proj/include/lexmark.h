/* Copyright 2026 The lexmark authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the lexmark dictionary toolkit.
 *
 * Handles are opaque and freed with their matching *_free function.  Calls
 * return a status code; on failure lexmark_last_error() describes the
 * problem for the calling thread.  Functions with a lexmark_diagnostics**
 * parameter may also hand back structured findings; NULL is accepted there
 * when the caller does not want them.  Strings returned through char** are
 * owned by the caller and released with lexmark_string_free.
 */

#ifndef LEXMARK_H_
#define LEXMARK_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(LEXMARK_BUILD)
#define LEXMARK_API __declspec(dllexport)
#else
#define LEXMARK_API __declspec(dllimport)
#endif
#else
#define LEXMARK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lexmark_status {
  LEXMARK_OK = 0,
  LEXMARK_ERROR_INVALID_ARGUMENT = 1,
  LEXMARK_ERROR_PARSE = 2,    /* input is not well-formed XML */
  LEXMARK_ERROR_SCHEMA = 3,   /* schema text does not compile */
  LEXMARK_ERROR_RULESET = 4,  /* rule text does not compile */
  LEXMARK_ERROR_BIND = 5,     /* tree does not fit the typed model */
  LEXMARK_ERROR_IO = 6,
  LEXMARK_ERROR_INTERNAL = 7
} lexmark_status;

typedef struct lexmark_document lexmark_document;
typedef struct lexmark_schema lexmark_schema;
typedef struct lexmark_ruleset lexmark_ruleset;
typedef struct lexmark_diagnostics lexmark_diagnostics;

LEXMARK_API const char* lexmark_version(void);

/* Message of the most recent failure on this thread; never NULL. */
LEXMARK_API const char* lexmark_last_error(void);

LEXMARK_API void lexmark_string_free(char* s);

/* -- documents ---------------------------------------------------------- */

LEXMARK_API lexmark_status lexmark_document_parse(const char* xml_text,
                                                  const char* source_name,
                                                  lexmark_document** out,
                                                  lexmark_diagnostics** diags);
LEXMARK_API lexmark_status lexmark_document_parse_file(
    const char* path, lexmark_document** out, lexmark_diagnostics** diags);
LEXMARK_API void lexmark_document_free(lexmark_document* doc);
LEXMARK_API lexmark_status lexmark_document_serialize(
    const lexmark_document* doc, int pretty, char** out);

/* -- schemas ------------------------------------------------------------ */

/* The schema bundled with the library. */
LEXMARK_API lexmark_status lexmark_schema_default(lexmark_schema** out);
LEXMARK_API lexmark_status lexmark_schema_load(const char* text,
                                               const char* source_name,
                                               lexmark_schema** out,
                                               lexmark_diagnostics** diags);
LEXMARK_API lexmark_status lexmark_schema_load_file(
    const char* path, lexmark_schema** out, lexmark_diagnostics** diags);
LEXMARK_API void lexmark_schema_free(lexmark_schema* schema);

/* -- rulesets ----------------------------------------------------------- */

/* name: "tei-to-iso1951" or "tei-to-lmf" */
LEXMARK_API lexmark_status lexmark_ruleset_builtin(const char* name,
                                                   lexmark_ruleset** out);
LEXMARK_API lexmark_status lexmark_ruleset_compile(const char* text,
                                                   const char* source_name,
                                                   lexmark_ruleset** out,
                                                   lexmark_diagnostics** diags);
LEXMARK_API lexmark_status lexmark_ruleset_compile_file(
    const char* path, lexmark_ruleset** out, lexmark_diagnostics** diags);
LEXMARK_API void lexmark_ruleset_free(lexmark_ruleset* ruleset);

/* -- diagnostics -------------------------------------------------------- */

LEXMARK_API size_t lexmark_diagnostics_count(const lexmark_diagnostics* d);
/* 1 = error, 0 = warning */
LEXMARK_API int lexmark_diagnostics_is_error(const lexmark_diagnostics* d,
                                             size_t index);
/* Borrowed strings, valid while the handle lives. */
LEXMARK_API const char* lexmark_diagnostics_code(const lexmark_diagnostics* d,
                                                 size_t index);
LEXMARK_API const char* lexmark_diagnostics_message(
    const lexmark_diagnostics* d, size_t index);
LEXMARK_API const char* lexmark_diagnostics_file(const lexmark_diagnostics* d,
                                                 size_t index);
LEXMARK_API int lexmark_diagnostics_line(const lexmark_diagnostics* d,
                                         size_t index);
LEXMARK_API int lexmark_diagnostics_column(const lexmark_diagnostics* d,
                                           size_t index);
LEXMARK_API const char* lexmark_diagnostics_path(const lexmark_diagnostics* d,
                                                 size_t index);
LEXMARK_API const char* lexmark_diagnostics_expected(
    const lexmark_diagnostics* d, size_t index);
/* One human-readable line. */
LEXMARK_API lexmark_status lexmark_diagnostics_format(
    const lexmark_diagnostics* d, size_t index, char** out);
LEXMARK_API void lexmark_diagnostics_free(lexmark_diagnostics* d);

/* -- operations ---------------------------------------------------------- */

/* Validates the document root against the schema (NULL = bundled schema).
 * Findings land in *diags; the return code only reports hard failures. */
LEXMARK_API lexmark_status lexmark_validate(const lexmark_document* doc,
                                            const lexmark_schema* schema,
                                            lexmark_diagnostics** diags);

/* Checks id/reference integrity.  upgrade_warnings != 0 turns unresolved
 * reference warnings into errors. */
LEXMARK_API lexmark_status lexmark_check_refs(const lexmark_document* doc,
                                              int upgrade_warnings,
                                              lexmark_diagnostics** diags);

/* to: "tei", "iso1951" or "lmf".  ruleset: NULL picks the builtin for the
 * target; custom rulesets apply to iso1951 only.  The converted XML is
 * returned in *out_xml. */
LEXMARK_API lexmark_status lexmark_convert(const lexmark_document* doc,
                                           const char* to,
                                           const lexmark_ruleset* ruleset,
                                           int pretty, char** out_xml,
                                           lexmark_diagnostics** diags);

/* media: "print", "expanded" or "html".  gender_style: "abbreviated" or
 * "long" (NULL = abbreviated). */
LEXMARK_API lexmark_status lexmark_render(const lexmark_document* doc,
                                          const char* media,
                                          const char* gender_style,
                                          int include_citations,
                                          int include_etym, char** out_text,
                                          lexmark_diagnostics** diags);

/* Structural report: ids, references with resolution, entry count,
 * element histogram. */
LEXMARK_API lexmark_status lexmark_inspect(const lexmark_document* doc,
                                           char** out_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LEXMARK_H_ */
