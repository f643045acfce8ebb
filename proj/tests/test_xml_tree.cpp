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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "test_util.hpp"
#include "xml_tree.hpp"

using namespace lexmark;
using testutil::read_fixture;

TEST_CASE("parses elements, attributes and merged text") {
  XmlDocument doc = parse_xml("<a x=\"1\"><b/>t1<!--c-->t2</a>", "t");
  const XmlElement& root = doc.root();
  CHECK(root.name.local == "a");
  REQUIRE(root.attr_local("x") != nullptr);
  CHECK(*root.attr_local("x") == "1");
  REQUIRE(root.children.size() == 2);
  CHECK(root.children[0].is_element());
  CHECK(root.children[0].element().name.local == "b");
  // comment dropped, the text around it merged into one node
  CHECK(root.children[1].is_text());
  CHECK(root.children[1].text() == "t1t2");
  CHECK(root.child_element_count() == 1);
  CHECK(root.text_content() == "t1t2");
}

TEST_CASE("decodes entities and character references") {
  XmlDocument doc = parse_xml("<a>&amp;&lt;&gt;&quot;&apos;&#228;&#xE4;</a>", "t");
  CHECK(doc.root().text_content() == "&<>\"'ää");
}

TEST_CASE("folds cdata into text and drops processing instructions") {
  XmlDocument doc = parse_xml("<a><![CDATA[x<y&]]>z<?pi data?></a>", "t");
  REQUIRE(doc.root().children.size() == 1);
  CHECK(doc.root().children[0].text() == "x<y&z");
}

TEST_CASE("rejects doctype and malformed markup with positions") {
  CHECK_THROWS_AS(parse_xml("<!DOCTYPE a><a/>", "t"), WellFormednessError);
  try {
    parse_xml("<a>\n  <b></a>", "t");
    FAIL("mismatched close tag accepted");
  } catch (const WellFormednessError& e) {
    CHECK(e.line() == 2);
    CHECK(e.source() == "t");
  }
  CHECK_THROWS_AS(parse_xml("", "t"), WellFormednessError);
  CHECK_THROWS_AS(parse_xml("<a>", "t"), WellFormednessError);
  CHECK_THROWS_AS(parse_xml("<a/><b/>", "t"), WellFormednessError);
}

TEST_CASE("resolves namespace declarations and the xml prefix") {
  XmlDocument doc = parse_xml("<t:a xmlns:t=\"urn:x\"><t:b/></t:a>", "t");
  CHECK(doc.root().name.prefix == "t");
  CHECK(doc.root().name.local == "a");
  CHECK(doc.root().name.namespace_uri == "urn:x");
  CHECK(doc.root().name.qname() == "t:a");

  XmlDocument with_id = parse_xml("<a xml:id=\"i1\"/>", "t");
  REQUIRE(with_id.root().attr_qname("xml:id") != nullptr);
  CHECK(*with_id.root().attr_qname("xml:id") == "i1");
  CHECK(with_id.root().attributes[0].name.namespace_uri == kXmlNamespaceUri);
}

TEST_CASE("adjacent text stays merged when building trees directly") {
  XmlElement e("x");
  e.add_text("a");
  e.add_text("b");
  REQUIRE(e.children.size() == 1);
  CHECK(e.children[0].text() == "ab");
  e.add_child(XmlElement("y"));
  e.add_text("c");
  CHECK(e.children.size() == 3);
}

TEST_CASE("round trip is tree identical for the bundled encodings") {
  const char* fixtures[] = {"ski_tei.xml", "bahnhof_tei.xml", "ski_iso.xml",
                            "bahnhof_iso.xml", "ski_lmf.xml"};
  for (const char* name : fixtures) {
    CAPTURE(name);
    XmlDocument first = parse_xml(read_fixture(name), name);
    for (SerializeMode mode : {SerializeMode::kCompact, SerializeMode::kPretty}) {
      XmlDocument second = parse_xml(serialize(first.root(), mode), name);
      CHECK(first.root() == second.root());
    }
  }
}

TEST_CASE("pretty serialization indents element-only content") {
  XmlDocument doc = parse_xml("<a><b>x</b></a>", "t");
  CHECK(serialize(doc.root(), SerializeMode::kPretty) == "<a>\n  <b>x</b>\n</a>\n");
  CHECK(serialize(doc.root(), SerializeMode::kCompact) == "<a><b>x</b></a>");
  // mixed content is never reflowed
  XmlDocument mixed = parse_xml("<a>x<b>y</b></a>", "t");
  CHECK(serialize(mixed.root(), SerializeMode::kPretty) == "<a>x<b>y</b></a>\n");
}

TEST_CASE("serializer escapes the minimum the syntax requires") {
  CHECK(escape_text("a<b&c]]>d>") == "a&lt;b&amp;c]]&gt;d>");
  CHECK(escape_attribute("\"x\" <&") == "&quot;x&quot; &lt;&amp;");
  std::vector<XmlNode> forest;
  forest.emplace_back(std::string("a&"));
  forest.emplace_back(XmlElement("b"));
  CHECK(serialize_forest(forest, SerializeMode::kCompact) == "a&amp;<b/>");
}

TEST_CASE("normalize_space collapses insignificant whitespace") {
  XmlDocument doc = parse_xml("<a>\n  <b> x  y </b>\n</a>", "t");
  XmlElement norm = normalize_space(doc.root());
  REQUIRE(norm.children.size() == 1);
  const XmlElement& b = norm.children[0].element();
  REQUIRE(b.children.size() == 1);
  CHECK(b.children[0].text() == "x y");
}

TEST_CASE("find_by_id indexes documents and reports duplicates") {
  XmlDocument doc = parse_xml(read_fixture("ski_tei.xml"), "ski_tei.xml");
  const XmlElement* sense = doc.find_by_id("S_S_646");
  REQUIRE(sense != nullptr);
  CHECK(sense->name.local == "sense");
  CHECK(doc.find_by_id("nope") == nullptr);

  XmlDocument dup = parse_xml(read_fixture("dup_ids.xml"), "dup_ids.xml");
  CHECK_THROWS_AS(dup.find_by_id("E_1"), DuplicateIdError);
}

TEST_CASE("element_path uses ordinals among same-name siblings") {
  XmlDocument doc = parse_xml(read_fixture("ski_tei.xml"), "ski_tei.xml");
  const XmlElement* ref = nullptr;
  for (const XmlElement* child : doc.root().child_elements())
    if (child->name.local == "etym")
      for (const XmlElement* grand : child->child_elements())
        if (grand->name.local == "ref") ref = grand;
  REQUIRE(ref != nullptr);
  CHECK(element_path(doc.root(), *ref) == "/entry/etym[1]/ref[1]");
  XmlElement stranger("x");
  CHECK(element_path(doc.root(), stranger) == "");
}

TEST_CASE("documents carry their source name and positions") {
  XmlDocument doc = parse_xml("<a>\n<b/></a>", "src.xml");
  CHECK(doc.source_name() == "src.xml");
  const XmlElement& b = doc.root().children.back().element();
  CHECK(b.line == 2);
}
