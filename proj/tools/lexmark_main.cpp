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

// Command-line front end.  All dictionary work goes through the C API;
// this file only handles arguments, file discovery and stream plumbing.
// Exit codes: 0 clean, 1 error diagnostics, 2 usage / malformed input.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexmark.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitClean = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

struct DiagPrinter {
  bool json = false;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  bool saw_error = false;

  // Consumes the handle.  Returns true when an error-severity record came
  // through.
  bool drain(lexmark_diagnostics* d) {
    if (d == nullptr) return false;
    bool any_error = false;
    size_t n = lexmark_diagnostics_count(d);
    for (size_t i = 0; i < n; ++i) {
      bool is_error = lexmark_diagnostics_is_error(d, i) != 0;
      any_error |= is_error;
      if (json) {
        records.push_back({
            {"file", lexmark_diagnostics_file(d, i)},
            {"line", lexmark_diagnostics_line(d, i)},
            {"column", lexmark_diagnostics_column(d, i)},
            {"severity", is_error ? "error" : "warning"},
            {"code", lexmark_diagnostics_code(d, i)},
            {"message", lexmark_diagnostics_message(d, i)},
        });
      } else {
        char* line = nullptr;
        if (lexmark_diagnostics_format(d, i, &line) == LEXMARK_OK) {
          std::cerr << line << "\n";
          lexmark_string_free(line);
        }
      }
    }
    lexmark_diagnostics_free(d);
    saw_error |= any_error;
    return any_error;
  }

  void finish() {
    if (json) std::cerr << records.dump(2) << "\n";
  }
};

struct Options {
  std::vector<std::string> inputs;
  std::string schema_path;
  std::string ruleset;
  std::string to;
  std::string media = "print";
  std::string gender_style = "abbreviated";
  std::string output = "-";
  std::string diag_format = "human";
  bool whole_dictionary = false;
  bool no_citations = false;
  bool no_etym = false;
  bool compact = false;
};

// Directories expand to their *.xml files, recursively, in lexicographic
// path order.  "-" stands for stdin.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs,
                                       std::string& problem) {
  std::vector<std::string> out;
  for (const std::string& input : inputs) {
    if (input == "-") {
      out.push_back(input);
      continue;
    }
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      std::vector<std::string> found;
      for (auto it = fs::recursive_directory_iterator(input, ec);
           it != fs::recursive_directory_iterator(); ++it) {
        if (it->is_regular_file() && it->path().extension() == ".xml")
          found.push_back(it->path().string());
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
      continue;
    }
    if (!fs::exists(input, ec)) {
      problem = "no such input: " + input;
      return {};
    }
    out.push_back(input);
  }
  if (out.empty()) out.push_back("-");
  return out;
}

using DocumentPtr =
    std::unique_ptr<lexmark_document, decltype(&lexmark_document_free)>;

// nullptr on failure, with *exit_code raised and diagnostics drained.
DocumentPtr load_document(const std::string& input, DiagPrinter& printer,
                          int& exit_code) {
  lexmark_document* doc = nullptr;
  lexmark_diagnostics* diags = nullptr;
  lexmark_status status;
  if (input == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    status = lexmark_document_parse(text.c_str(), "<stdin>", &doc, &diags);
  } else {
    status = lexmark_document_parse_file(input.c_str(), &doc, &diags);
  }
  printer.drain(diags);
  if (status != LEXMARK_OK) {
    exit_code = std::max(exit_code, kExitUsage);
    return DocumentPtr(nullptr, &lexmark_document_free);
  }
  return DocumentPtr(doc, &lexmark_document_free);
}

class PayloadSink {
 public:
  explicit PayloadSink(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      to_file_ = true;
    }
  }

  bool ok() const { return !to_file_ || file_.good(); }

  void write(const char* payload) {
    std::ostream& out = to_file_ ? static_cast<std::ostream&>(file_)
                                 : static_cast<std::ostream&>(std::cout);
    out << payload;
    size_t len = std::char_traits<char>::length(payload);
    if (len > 0 && payload[len - 1] != '\n') out << '\n';
  }

 private:
  std::ofstream file_;
  bool to_file_ = false;
};

using SchemaPtr =
    std::unique_ptr<lexmark_schema, decltype(&lexmark_schema_free)>;
using RulesetPtr =
    std::unique_ptr<lexmark_ruleset, decltype(&lexmark_ruleset_free)>;

int run_validate(const Options& opts, const std::vector<std::string>& inputs,
                 DiagPrinter& printer) {
  SchemaPtr schema(nullptr, &lexmark_schema_free);
  std::string schema_path = opts.schema_path;
  if (schema_path.empty()) {
    if (const char* env = std::getenv("LEXMARK_SCHEMA")) schema_path = env;
  }
  if (!schema_path.empty()) {
    lexmark_schema* s = nullptr;
    lexmark_diagnostics* diags = nullptr;
    if (lexmark_schema_load_file(schema_path.c_str(), &s, &diags) !=
        LEXMARK_OK) {
      printer.drain(diags);
      return kExitUsage;
    }
    printer.drain(diags);
    schema.reset(s);
  }

  int exit_code = kExitClean;
  for (const std::string& input : inputs) {
    DocumentPtr doc = load_document(input, printer, exit_code);
    if (!doc) continue;
    lexmark_diagnostics* diags = nullptr;
    if (lexmark_validate(doc.get(), schema.get(), &diags) != LEXMARK_OK) {
      std::cerr << "lexmark: " << lexmark_last_error() << "\n";
      exit_code = std::max(exit_code, kExitUsage);
      continue;
    }
    bool errors = printer.drain(diags);
    diags = nullptr;
    if (lexmark_check_refs(doc.get(), opts.whole_dictionary ? 1 : 0, &diags) !=
        LEXMARK_OK) {
      std::cerr << "lexmark: " << lexmark_last_error() << "\n";
      exit_code = std::max(exit_code, kExitUsage);
      continue;
    }
    errors |= printer.drain(diags);
    if (errors) exit_code = std::max(exit_code, kExitDiagnostics);
  }
  return exit_code;
}

int run_convert(const Options& opts, const std::vector<std::string>& inputs,
                DiagPrinter& printer) {
  RulesetPtr ruleset(nullptr, &lexmark_ruleset_free);
  if (!opts.ruleset.empty()) {
    lexmark_ruleset* r = nullptr;
    if (opts.ruleset == "tei-to-iso1951" || opts.ruleset == "tei-to-lmf") {
      if (lexmark_ruleset_builtin(opts.ruleset.c_str(), &r) != LEXMARK_OK) {
        std::cerr << "lexmark: " << lexmark_last_error() << "\n";
        return kExitUsage;
      }
    } else {
      lexmark_diagnostics* diags = nullptr;
      if (lexmark_ruleset_compile_file(opts.ruleset.c_str(), &r, &diags) !=
          LEXMARK_OK) {
        printer.drain(diags);
        return kExitUsage;
      }
      printer.drain(diags);
    }
    ruleset.reset(r);
  }

  PayloadSink sink(opts.output);
  if (!sink.ok()) {
    std::cerr << "lexmark: cannot write " << opts.output << "\n";
    return kExitUsage;
  }

  int exit_code = kExitClean;
  for (const std::string& input : inputs) {
    DocumentPtr doc = load_document(input, printer, exit_code);
    if (!doc) continue;
    char* xml = nullptr;
    lexmark_diagnostics* diags = nullptr;
    lexmark_status status =
        lexmark_convert(doc.get(), opts.to.c_str(), ruleset.get(),
                        opts.compact ? 0 : 1, &xml, &diags);
    if (status != LEXMARK_OK) {
      printer.drain(diags);
      std::cerr << "lexmark: " << lexmark_last_error() << "\n";
      exit_code = std::max(exit_code, kExitUsage);
      continue;
    }
    if (printer.drain(diags)) exit_code = std::max(exit_code, kExitDiagnostics);
    sink.write(xml);
    lexmark_string_free(xml);
  }
  return exit_code;
}

int run_render(const Options& opts, const std::vector<std::string>& inputs,
               DiagPrinter& printer) {
  PayloadSink sink(opts.output);
  if (!sink.ok()) {
    std::cerr << "lexmark: cannot write " << opts.output << "\n";
    return kExitUsage;
  }

  int exit_code = kExitClean;
  for (const std::string& input : inputs) {
    DocumentPtr doc = load_document(input, printer, exit_code);
    if (!doc) continue;
    char* text = nullptr;
    lexmark_diagnostics* diags = nullptr;
    lexmark_status status = lexmark_render(
        doc.get(), opts.media.c_str(), opts.gender_style.c_str(),
        opts.no_citations ? 0 : 1, opts.no_etym ? 0 : 1, &text, &diags);
    if (status != LEXMARK_OK) {
      printer.drain(diags);
      std::cerr << "lexmark: " << lexmark_last_error() << "\n";
      exit_code = std::max(exit_code, kExitUsage);
      continue;
    }
    if (printer.drain(diags)) exit_code = std::max(exit_code, kExitDiagnostics);
    sink.write(text);
    lexmark_string_free(text);
  }
  return exit_code;
}

int run_inspect(const Options& opts, const std::vector<std::string>& inputs,
                DiagPrinter& printer) {
  PayloadSink sink(opts.output);
  if (!sink.ok()) {
    std::cerr << "lexmark: cannot write " << opts.output << "\n";
    return kExitUsage;
  }

  int exit_code = kExitClean;
  for (const std::string& input : inputs) {
    DocumentPtr doc = load_document(input, printer, exit_code);
    if (!doc) continue;
    char* report = nullptr;
    if (lexmark_inspect(doc.get(), &report) != LEXMARK_OK) {
      std::cerr << "lexmark: " << lexmark_last_error() << "\n";
      exit_code = std::max(exit_code, kExitUsage);
      continue;
    }
    sink.write(report);
    lexmark_string_free(report);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"dictionary-entry toolkit: validate, convert, render, inspect"};
  app.set_version_flag("--version", lexmark_version());
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool payload) {
    cmd->add_option("inputs", opts.inputs,
                    "XML files, directories (*.xml, recursive) or - for stdin");
    cmd->add_option("--diag-format", opts.diag_format, "human or json")
        ->check(CLI::IsMember({"human", "json"}));
    if (payload)
      cmd->add_option("-o,--output", opts.output,
                      "Output file (default: stdout)");
  };

  CLI::App* validate =
      app.add_subcommand("validate", "Check structure against a schema");
  add_common(validate, false);
  validate->add_option("--schema", opts.schema_path,
                       "Schema file (default: bundled; or $LEXMARK_SCHEMA)");
  validate->add_flag("--whole-dictionary", opts.whole_dictionary,
                     "Treat unresolved cross-references as errors");

  CLI::App* convert =
      app.add_subcommand("convert", "Transform entries to another encoding");
  add_common(convert, true);
  convert->add_option("--to", opts.to, "Target encoding")
      ->required()
      ->check(CLI::IsMember({"tei", "iso1951", "lmf"}));
  convert->add_option("--ruleset", opts.ruleset,
                      "Rule file, or builtin name "
                      "(tei-to-iso1951, tei-to-lmf)");
  convert->add_flag("--compact", opts.compact, "No pretty-printing");

  CLI::App* render =
      app.add_subcommand("render", "Produce a media-specific view");
  add_common(render, true);
  render->add_option("--media", opts.media, "View kind")
      ->required()
      ->check(CLI::IsMember({"print", "expanded", "html"}));
  render->add_option("--gender-style", opts.gender_style,
                     "abbreviated or long")
      ->check(CLI::IsMember({"abbreviated", "long"}));
  render->add_flag("--no-citations", opts.no_citations,
                   "Leave out citation text");
  render->add_flag("--no-etym", opts.no_etym, "Leave out etymology");

  CLI::App* inspect =
      app.add_subcommand("inspect", "Report ids, references and counts");
  add_common(inspect, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitClean : kExitUsage;
  }

  std::string problem;
  std::vector<std::string> inputs = expand_inputs(opts.inputs, problem);
  if (!problem.empty()) {
    std::cerr << "lexmark: " << problem << "\n";
    return kExitUsage;
  }

  DiagPrinter printer;
  printer.json = opts.diag_format == "json";

  int exit_code = kExitUsage;
  if (validate->parsed())
    exit_code = run_validate(opts, inputs, printer);
  else if (convert->parsed())
    exit_code = run_convert(opts, inputs, printer);
  else if (render->parsed())
    exit_code = run_render(opts, inputs, printer);
  else if (inspect->parsed())
    exit_code = run_inspect(opts, inputs, printer);

  printer.finish();
  return exit_code;
}
