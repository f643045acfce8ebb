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

#include <string>
#include <vector>

namespace lexmark {

enum class Severity { kWarning, kError };

// One finding.  Produced by validation, reference checking and the lossy
// converters; never thrown.
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;      // stable machine identifier, e.g. "validate.text"
  std::string message;   // human sentence
  std::string file;      // source name; may be empty
  int line = 0;          // 1-based; 0 = unknown
  int column = 0;
  std::string path;      // element path, e.g. /entry/sense[1]; may be empty
  std::string expected;  // nearest acceptable tokens at the failure point

  bool operator==(const Diagnostic&) const = default;
};

const char* to_string(Severity severity);

// "file:line:column: severity: message; expected ..." with the path used
// when no line is known.
std::string format_diagnostic(const Diagnostic& diagnostic);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace lexmark
