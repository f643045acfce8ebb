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

#include "builtin.hpp"

#include "lexmark/embedded_rules.hpp"
#include "lexmark/embedded_schema.hpp"

namespace lexmark {

const Schema& default_schema() {
  static const Schema schema =
      load_schema(embedded::kDefaultSchemaText, "wdg.rnc");
  return schema;
}

std::string_view default_schema_text() { return embedded::kDefaultSchemaText; }

const Ruleset& builtin_tei_to_iso1951() {
  static const Ruleset ruleset =
      compile_ruleset(embedded::kTeiToIso1951Rules, "tei_to_iso1951.rules");
  return ruleset;
}

std::string_view builtin_tei_to_iso1951_text() {
  return embedded::kTeiToIso1951Rules;
}

}  // namespace lexmark
