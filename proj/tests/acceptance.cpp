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

// Shipping gate: every release requirement checked end to end, one verdict
// line each.  Exit status is the number of failed requirements.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "builtin.hpp"
#include "entry_model.hpp"
#include "grammar.hpp"
#include "interleave_oracle.hpp"
#include "render.hpp"
#include "test_util.hpp"
#include "transform.hpp"
#include "xml_tree.hpp"

using namespace lexmark;
using testutil::contains;
using testutil::fixture_path;
using testutil::read_fixture;

namespace {

struct Gate {
  int failures = 0;

  void check(int number, const std::string& title,
             const std::function<void()>& body) {
    std::string problem;
    try {
      body();
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (problem.empty()) {
      std::cout << "criterion " << number << ": PASS - " << title << "\n";
    } else {
      ++failures;
      std::cout << "criterion " << number << ": FAIL - " << title << " ("
                << problem << ")\n";
    }
  }
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

XmlDocument load(const std::string& name) {
  return parse_xml(read_fixture(name), name);
}

std::string run_convert_cli(const std::string& fixture) {
  testutil::RunResult r = testutil::run(std::string(LEXMARK_CLI_PATH) +
                                        " convert --to iso1951 " +
                                        fixture_path(fixture) + " 2>/dev/null");
  expect(r.exit_code == 0, "converter exited " + std::to_string(r.exit_code) +
                               " on " + fixture);
  return r.output;
}

}  // namespace

int main() {
  Gate gate;

  gate.check(1, "bundled encodings survive a parse/serialize/parse round trip", [] {
    for (const char* name : {"ski_lmf.xml", "bahnhof_tei.xml", "ski_tei.xml",
                             "bahnhof_iso.xml", "ski_iso.xml"}) {
      XmlDocument first = load(name);
      for (SerializeMode mode :
           {SerializeMode::kCompact, SerializeMode::kPretty}) {
        XmlDocument second = parse_xml(serialize(first.root(), mode), name);
        expect(first.root() == second.root(),
               std::string(name) + " changed across a round trip");
      }
    }
  });

  gate.check(2, "the command line converter reproduces the published target encodings", [] {
    XmlDocument ski_got = parse_xml(run_convert_cli("ski_tei.xml"), "got");
    XmlDocument ski_want = load("ski_iso.xml");
    expect(normalize_space(ski_got.root()) == normalize_space(ski_want.root()),
           "variant-headword conversion differs beyond whitespace");

    XmlDocument bahnhof_got = parse_xml(run_convert_cli("bahnhof_tei.xml"), "got");
    XmlDocument bahnhof_want = load("bahnhof_iso.xml");
    XmlElement want = normalize_space(bahnhof_want.root());
    // the target carries a restored headword absent from the source
    XmlElement& ctn = want.children.at(0).element();
    expect(ctn.name.local == "HeadwordCtn", "unexpected target layout");
    expect(ctn.children.at(0).element().text_content() == "Bahn",
           "expected the restored headword first");
    ctn.children.erase(ctn.children.begin());
    expect(normalize_space(bahnhof_got.root()) == want,
           "suffix-headword conversion differs beyond whitespace");
  });

  gate.check(3, "the bundled schema gives the published verdicts with hints", [] {
    auto ok = validate(load("gramgrp_valid.xml").root(), default_schema());
    expect(ok.empty(), "reference fragment drew diagnostics");
    auto bad = validate(load("gramgrp_invalid.xml").root(), default_schema());
    expect(bad.size() == 1, "expected exactly one diagnostic, got " +
                                std::to_string(bad.size()));
    expect(bad[0].severity == Severity::kError, "expected an error");
    expect(contains(bad[0].expected, "m."),
           "hint \"" + bad[0].expected + "\" does not offer m.");
  });

  gate.check(4, "interleave validation agrees with a brute force permutation oracle", [] {
    std::mt19937 rng(97);
    int disagreements = 0;
    for (int m = 0; m < 200; ++m) {
      oracle::Model model = oracle::random_model(rng);
      Schema schema = load_schema(oracle::to_schema_text(model), "random.rnc");
      auto probe = [&](const std::vector<std::string>& children) {
        XmlElement root("root");
        for (const std::string& c : children) root.add_child(XmlElement(c));
        if (validate(root, schema).empty() != oracle::accepts(model, children))
          ++disagreements;
      };
      for (int d = 0; d < 12; ++d) probe(oracle::random_children(rng));
      for (int d = 0; d < 3; ++d) probe(oracle::sample_instance(model, rng));
    }
    expect(disagreements == 0,
           std::to_string(disagreements) + " accept/reject disagreements");
  });

  gate.check(5, "identifier and reference checks give the published counts", [] {
    auto alone = check_refs(load("ski_tei.xml"));
    expect(alone.size() == 1 && alone[0].severity == Severity::kWarning,
           "expected exactly one unresolved-reference warning");
    auto with_stub = check_refs(load("ski_dict.xml"));
    expect(with_stub.empty(), "stubbed dictionary still has findings");
    auto duplicated = check_refs(load("dup_ids.xml"));
    expect(duplicated.size() == 1 && duplicated[0].severity == Severity::kError,
           "expected exactly one duplicate-id error");
  });

  gate.check(6, "the guarded citation rule wraps only multi-child citations", [] {
    std::vector<XmlNode> forest =
        apply(builtin_tei_to_iso1951(), load("bahnhof_tei.xml").root());
    std::function<void(const std::vector<XmlNode>&, const std::string&,
                       std::vector<const XmlElement*>&)>
        collect = [&](const std::vector<XmlNode>& nodes, const std::string& name,
                      std::vector<const XmlElement*>& out) {
          for (const XmlNode& n : nodes) {
            if (!n.is_element()) continue;
            if (n.element().name.local == name) out.push_back(&n.element());
            collect(n.element().children, name, out);
          }
        };
    std::vector<const XmlElement*> containers, examples;
    collect(forest, "ExampleCtn", containers);
    collect(forest, "Example", examples);
    expect(containers.size() == 1, "expected exactly one ExampleCtn, got " +
                                       std::to_string(containers.size()));
    size_t bare = 0;
    for (const XmlElement* e : examples) {
      bool wrapped = false;
      for (const XmlNode& child : containers[0]->children)
        if (child.is_element() && &child.element() == e) wrapped = true;
      if (!wrapped) ++bare;
    }
    expect(examples.size() == 7 && bare == 6,
           "expected six bare examples and one wrapped, got " +
               std::to_string(bare) + " bare of " +
               std::to_string(examples.size()));
  });

  gate.check(7, "paradigm expansion fills the published cells maximally", [] {
    ParadigmTable t = expand_paradigm("Bahnhof", "-es", "-höfe");
    expect(t.cell(GramCase::kGenitive, GramNumber::kSingular) == "Bahnhofes",
           "genitive singular is " +
               t.cell(GramCase::kGenitive, GramNumber::kSingular));
    expect(t.cell(GramCase::kNominative, GramNumber::kPlural) == "Bahnhöfe",
           "nominative plural is " +
               t.cell(GramCase::kNominative, GramNumber::kPlural));
    expect(t.cell(GramCase::kDative, GramNumber::kPlural) == "Bahnhöfen",
           "dative plural is " + t.cell(GramCase::kDative, GramNumber::kPlural));

    // longest-overlap property, checked with an independent folding
    auto codepoints = [](const std::string& s) {
      std::vector<std::string> out;
      for (size_t i = 0; i < s.size();) {
        unsigned char b = static_cast<unsigned char>(s[i]);
        size_t len = b < 0x80 ? 1 : (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3 : 4;
        if (i + len > s.size()) len = 1;
        out.push_back(s.substr(i, len));
        i += len;
      }
      return out;
    };
    auto fold = [&](const std::string& s) {
      std::vector<std::string> out;
      for (std::string cp : codepoints(s)) {
        if (cp == "ä" || cp == "Ä") cp = "a";
        else if (cp == "ö" || cp == "Ö") cp = "o";
        else if (cp == "ü" || cp == "Ü") cp = "u";
        else if (cp.size() == 1 && cp[0] >= 'A' && cp[0] <= 'Z')
          cp = std::string(1, static_cast<char>(cp[0] - 'A' + 'a'));
        out.push_back(cp);
      }
      return out;
    };
    const std::pair<const char*, const char*> examples[] = {
        {"Bahnhof", "-es"}, {"Bahnhof", "-höfe"}, {"Haus", "-häuser"},
        {"Gischt", "-es"},  {"Gischt", "-e"},     {"Bild", "-er"},
        {"Mutter", "-ütter"},
    };
    for (auto [headword, pattern] : examples) {
      const std::string result = resolve_suffix(headword, pattern);
      const std::string suffix = std::string(pattern).substr(1);
      auto hw = fold(headword);
      auto sfx = fold(suffix);
      auto res = codepoints(result);
      expect(res.size() <= hw.size() + sfx.size(), "result too long");
      const size_t k = hw.size() + sfx.size() - res.size();
      expect(k <= hw.size() && k <= sfx.size(), "overlap out of range");
      for (size_t i = 0; i < k; ++i)
        expect(hw[hw.size() - k + i] == sfx[i],
               std::string(headword) + "+" + pattern + ": overlap mismatch");
      if (k < hw.size() && k < sfx.size()) {
        bool longer = true;
        for (size_t i = 0; i < k + 1 && longer; ++i)
          longer = hw[hw.size() - (k + 1) + i] == sfx[i];
        expect(!longer, std::string(headword) + "+" + pattern +
                            ": a longer overlap was available");
      }
    }
  });

  gate.check(8, "rendering honors media, gender style and citation filtering", [] {
    TeiEntry ski = bind_tei(load("ski_tei.xml").root(), BindMode::kStrict);
    RenderOptions long_style;
    long_style.media = Media::kExpanded;
    long_style.gender_style = GenderStyle::kLong;
    expect(contains(render_expanded(ski, long_style), "masculine"),
           "expanded long style lacks \"masculine\"");

    const std::string html = render_html(ski);
    parse_xml(html, "render.html");  // throws when not well-formed
    expect(contains(html, "<b class=\"pos\">N</b>"),
           "part of speech is not in a bold element");

    TeiEntry bahnhof = bind_tei(load("bahnhof_tei.xml").root(), BindMode::kStrict);
    RenderOptions no_cits;
    no_cits.include_citations = false;
    const std::string filtered = render_print(bahnhof, no_cits);
    for (const char* quote :
         {"am B. sein", "jmdn. am B. erwarten, vom B. abholen, zum B. bringen",
          "auf welchem B. kommt er an?", "wie weit ist es bis zum B.?",
          "der Zug rollte aus dem B.", "im Gedränge des Bahnhofes",
          "ich verstehe immer nur B.", "ich verstehe gar nichts"}) {
      expect(!contains(filtered, quote),
             std::string("quote survived the filter: ") + quote);
    }
  });

  gate.check(9, "an empty ruleset yields exactly the concatenated text content", [] {
    for (const char* name : {"ski_tei.xml", "bahnhof_tei.xml", "ski_iso.xml",
                             "bahnhof_iso.xml", "ski_lmf.xml",
                             "gischt_entry.xml", "bahnhof_free.xml",
                             "ski_dict.xml", "gramgrp_valid.xml"}) {
      XmlDocument doc = load(name);
      std::vector<XmlNode> forest = apply(Ruleset{}, doc.root());
      const std::string expected = doc.root().text_content();
      if (expected.empty()) {
        expect(forest.empty(), std::string(name) + ": expected no output");
      } else {
        expect(forest.size() == 1 && forest[0].is_text() &&
                   forest[0].text() == expected,
               std::string(name) + ": output is not the plain text content");
      }
    }
  });

  if (gate.failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << gate.failures << " criteria failed\n";
  }
  return gate.failures;
}
