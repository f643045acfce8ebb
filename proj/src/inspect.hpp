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
#include <utility>
#include <vector>

#include "xml_tree.hpp"

namespace lexmark {

// Structural summary of one document: identifiers, cross-references and
// their resolution, entry counts, element histogram.
struct InspectReport {
  struct Ref {
    std::string value;      // referenced id, "#" prefix stripped
    std::string element;    // carrying element
    std::string attribute;  // carrying attribute
    std::string path;       // element path of the carrier
    bool resolved = false;

    bool operator==(const Ref&) const = default;
  };

  std::vector<std::string> ids;  // document order
  std::vector<Ref> refs;         // document order
  size_t entries = 0;            // entry and entryFree elements
  std::vector<std::pair<std::string, size_t>> histogram;  // sorted by name

  bool operator==(const InspectReport&) const = default;
};

InspectReport inspect_document(const XmlDocument& doc);

// Plain-text rendering of the report.
std::string format_report(const InspectReport& report);

}  // namespace lexmark
