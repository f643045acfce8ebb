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

#include "inspect.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "grammar.hpp"

namespace lexmark {

namespace {

void walk(const XmlElement& e, const XmlElement& root, InspectReport& report,
          std::map<std::string, size_t>& histogram) {
  histogram[e.name.qname()] += 1;
  if (e.name.local == "entry" || e.name.local == "entryFree")
    report.entries += 1;

  if (const std::string* id = e.attr_qname("xml:id")) report.ids.push_back(*id);

  for (const RefAttr& ra : default_ref_attrs()) {
    if (e.name.local != ra.element) continue;
    const std::string* value = e.attr_local(ra.attribute);
    if (value == nullptr || value->empty()) continue;
    InspectReport::Ref ref;
    ref.value = (*value)[0] == '#' ? value->substr(1) : *value;
    ref.element = e.name.local;
    ref.attribute = ra.attribute;
    ref.path = element_path(root, e);
    report.refs.push_back(std::move(ref));
  }

  for (const XmlNode& n : e.children)
    if (n.is_element()) walk(n.element(), root, report, histogram);
}

}  // namespace

InspectReport inspect_document(const XmlDocument& doc) {
  InspectReport report;
  std::map<std::string, size_t> histogram;
  walk(doc.root(), doc.root(), report, histogram);

  std::set<std::string> known(report.ids.begin(), report.ids.end());
  for (InspectReport::Ref& ref : report.refs)
    ref.resolved = known.count(ref.value) > 0;

  report.histogram.assign(histogram.begin(), histogram.end());
  return report;
}

std::string format_report(const InspectReport& report) {
  std::string out;
  out += "ids (" + std::to_string(report.ids.size()) + ")";
  for (size_t i = 0; i < report.ids.size(); ++i)
    out += (i == 0 ? ": " : ", ") + report.ids[i];
  out += "\n";

  out += "refs (" + std::to_string(report.refs.size()) + ")";
  out += report.refs.empty() ? "\n" : ":\n";
  for (const InspectReport::Ref& ref : report.refs) {
    out += "  " + ref.value + " (" + ref.element + "@" + ref.attribute + ", " +
           ref.path + ") -> " + (ref.resolved ? "resolved" : "unresolved") +
           "\n";
  }

  out += "entries: " + std::to_string(report.entries) + "\n";
  out += "elements:\n";
  for (const auto& [name, count] : report.histogram)
    out += "  " + name + " " + std::to_string(count) + "\n";
  return out;
}

}  // namespace lexmark
