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

#include <string_view>

#include "grammar.hpp"
#include "transform.hpp"

namespace lexmark {

// Bundled dictionary grammar, compiled once on first use.
const Schema& default_schema();
std::string_view default_schema_text();

// Bundled TEI -> ISO 1951 ruleset, compiled once on first use.
const Ruleset& builtin_tei_to_iso1951();
std::string_view builtin_tei_to_iso1951_text();

}  // namespace lexmark
