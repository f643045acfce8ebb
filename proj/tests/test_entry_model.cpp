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

#include "doctest.h"
#include "entry_model.hpp"
#include "errors.hpp"
#include "test_util.hpp"
#include "xml_tree.hpp"

using namespace lexmark;
using testutil::read_fixture;

namespace {

TeiEntry bind_fixture(const std::string& name, BindMode mode = BindMode::kStrict) {
  XmlDocument doc = parse_xml(read_fixture(name), name);
  return bind_tei(doc.root(), mode);
}

}  // namespace

TEST_CASE("binds a structured headword entry") {
  TeiEntry entry = bind_fixture("ski_tei.xml");
  CHECK(entry.id == "E_S_646");
  CHECK(entry.element_name == "entry");
  CHECK_FALSE(entry.free);

  const TeiForm* headword = entry.headword_form();
  REQUIRE(headword != nullptr);
  CHECK(headword->is_headword());
  auto orths = headword->orths();
  REQUIRE(orths.size() == 2);
  CHECK(orths[0].text == "Ski");
  CHECK(orths[0].extent == "full");
  CHECK(orths[0].rend == "sep:comma");
  CHECK(orths[1].text == "Schi");
  CHECK_FALSE(orths[1].rend.has_value());
  auto usgs = headword->usgs();
  REQUIRE(usgs.size() == 1);
  CHECK(usgs[0].type == "time");
  CHECK(usgs[0].text == "seit Anfang 20. Jh. meist");

  auto grps = headword->gram_grps();
  REQUIRE(grps.size() == 1);
  auto pos = grps[0]->pos();
  REQUIRE(pos.size() == 1);
  CHECK(pos[0].value == "N");
  CHECK(pos[0].text.empty());
  auto genders = grps[0]->genders();
  REQUIRE(genders.size() == 1);
  CHECK(genders[0].value == "masculine");
  CHECK(genders[0].surface == "m.");

  auto senses = entry.senses();
  REQUIRE(senses.size() == 1);
  CHECK(senses[0]->id == "S_S_646");
  CHECK(senses[0]->level == 0);
  auto defs = senses[0]->defs();
  REQUIRE(defs.size() == 1);
  CHECK(defs[0].text == "Schneeschuh");

  const TeiEtym* etym = entry.etym();
  REQUIRE(etym != nullptr);
  CHECK(etym->id == "W_S_646");
  CHECK(testutil::contains(etym->text(), "Übernahme"));
  auto etym_defs = etym->defs();
  REQUIRE(etym_defs.size() == 1);
  CHECK(etym_defs[0].text == "Scheit, Schneeschuh");
  auto refs = etym->refs();
  REQUIRE(refs.size() == 1);
  CHECK(refs[0].type == "dict");
  CHECK(refs[0].target == "E_S_165");
  CHECK(refs[0].text == "Scheit");
}

TEST_CASE("binds nested citation structure") {
  TeiEntry entry = bind_fixture("bahnhof_tei.xml");
  auto senses = entry.senses();
  REQUIRE(senses.size() == 1);
  auto cits = senses[0]->cits();
  REQUIRE(cits.size() == 7);
  for (const TeiCit& cit : cits) CHECK(cit.type == "example");
  CHECK(cits[0].quotes().size() == 1);
  CHECK(cits[0].quotes()[0].text == "am B. sein");
  CHECK(cits[6].quotes().size() == 2);
  CHECK(cits[6].usgs().size() == 1);
  CHECK(cits[6].usgs()[0].text == "salopp");
  CHECK(cits[6].quotes()[1].type == "paraphrase");

  auto defs = senses[0]->defs();
  REQUIRE(defs.size() == 1);
  CHECK(defs[0].id == "N_b_140");
}

TEST_CASE("bind then unbind reproduces the bound view") {
  for (const char* name : {"ski_tei.xml", "bahnhof_tei.xml",
                           "gischt_entry.xml", "bahnhof_free.xml"}) {
    CAPTURE(name);
    TeiEntry once = bind_fixture(name);
    TeiEntry twice = bind_tei(unbind_tei(once), BindMode::kStrict);
    CHECK(once == twice);
  }
}

TEST_CASE("quote and q are synonyms normalized on unbind") {
  XmlDocument doc = parse_xml(
      "<entry><sense><cit type=\"example\"><q>x</q></cit></sense></entry>", "t");
  TeiEntry entry = bind_tei(doc.root(), BindMode::kStrict);
  auto quotes = entry.senses()[0]->cits()[0].quotes();
  REQUIRE(quotes.size() == 1);
  CHECK(quotes[0].text == "x");
  XmlElement out = unbind_tei(entry);
  CHECK(testutil::contains(serialize(out, SerializeMode::kCompact), "<quote>x</quote>"));
}

TEST_CASE("strict binding rejects unknown vocabulary, permissive keeps it") {
  XmlDocument doc = parse_xml("<entry><blob/></entry>", "t");
  CHECK_THROWS_AS(bind_tei(doc.root(), BindMode::kStrict), UnknownElementError);
  TeiEntry entry = bind_tei(doc.root(), BindMode::kPermissive);
  REQUIRE(entry.items.size() == 1);
  const auto* opaque = std::get_if<XmlElement>(&entry.items[0].value);
  REQUIRE(opaque != nullptr);
  CHECK(opaque->name.local == "blob");
  // opaque nodes survive the round trip verbatim
  CHECK(bind_tei(unbind_tei(entry), BindMode::kPermissive) == entry);
}

TEST_CASE("headword forms need an orth in strict mode") {
  XmlDocument doc =
      parse_xml("<entry><form type=\"headword\"><usg>x</usg></form></entry>", "t");
  CHECK_THROWS_AS(bind_tei(doc.root(), BindMode::kStrict), MissingHeadwordError);
  CHECK_NOTHROW(bind_tei(doc.root(), BindMode::kPermissive));
  // non-headword forms have no such constraint
  XmlDocument inflected =
      parse_xml("<entry><form type=\"inflected\"><usg>x</usg></form></entry>", "t");
  CHECK_NOTHROW(bind_tei(inflected.root(), BindMode::kStrict));
}

TEST_CASE("sense level parses as an integer and may be absent") {
  XmlDocument doc = parse_xml(
      "<entry><sense level=\"2\"/><sense/><sense n=\"3a\"/></entry>", "t");
  TeiEntry entry = bind_tei(doc.root(), BindMode::kStrict);
  auto senses = entry.senses();
  REQUIRE(senses.size() == 3);
  CHECK(senses[0]->level == 2);
  CHECK_FALSE(senses[1]->level.has_value());
  CHECK(senses[2]->n == "3a");
}

TEST_CASE("free entries keep their original node sequence") {
  TeiEntry entry = bind_fixture("bahnhof_free.xml");
  CHECK(entry.free);
  CHECK(entry.element_name == "entryFree");
  REQUIRE_FALSE(entry.free_content.empty());
  // the structured view sees the same flat content
  bool found_orth = false, found_def = false;
  int quotes = 0;
  for (const auto& item : entry.items) {
    if (const auto* form = std::get_if<TeiForm>(&item.value)) {
      for (const auto& fi : form->items)
        if (const auto* orth = std::get_if<TeiOrth>(&fi.value)) {
          CHECK(orth->text == "Bahn- ...- hof");
          found_orth = true;
        }
    }
    if (const auto* sense = std::get_if<TeiSense>(&item.value)) {
      if (!sense->defs().empty()) found_def = true;
      for (const auto& cit : sense->cits())
        quotes += static_cast<int>(cit.quotes().size());
    }
  }
  CHECK(found_orth);
  CHECK(found_def);
  CHECK(quotes == 2);
  // unbind re-emits the original free content, interleaved text included
  XmlElement out = unbind_tei(entry);
  CHECK(out.name.local == "entryFree");
  XmlDocument original = parse_xml(read_fixture("bahnhof_free.xml"), "f");
  CHECK(out == original.root());
}

TEST_CASE("homographs nest under entries") {
  XmlDocument doc = parse_xml(
      "<entry xml:id=\"e\"><hom><form type=\"headword\"><orth>Bank</orth></form>"
      "<sense><def>Sitzmöbel</def></sense></hom><hom><form type=\"headword\">"
      "<orth>Bank</orth></form><sense><def>Geldinstitut</def></sense></hom>"
      "</entry>", "t");
  TeiEntry entry = bind_tei(doc.root(), BindMode::kStrict);
  auto homs = entry.homographs();
  REQUIRE(homs.size() == 2);
  CHECK(homs[0]->element_name == "hom");
  CHECK(homs[0]->senses()[0]->defs()[0].text == "Sitzmöbel");
  CHECK(homs[1]->senses()[0]->defs()[0].text == "Geldinstitut");
  CHECK(bind_tei(unbind_tei(entry), BindMode::kStrict) == entry);
}

TEST_CASE("iso binding classifies compositional elements") {
  CHECK(classify_iso("ExampleCtn") == IsoClass::kContainer);
  CHECK(classify_iso("HeadwordCtn") == IsoClass::kContainer);
  CHECK(classify_iso("SenseGrp") == IsoClass::kGroup);
  CHECK(classify_iso("HomographGroup") == IsoClass::kGroup);
  CHECK(classify_iso("TranslationBlock") == IsoClass::kBlock);
  CHECK(classify_iso("Definition") == IsoClass::kCategory);
  CHECK(std::string(to_string(IsoClass::kContainer)) == "container");

  XmlDocument doc = parse_xml(read_fixture("ski_iso.xml"), "ski_iso.xml");
  IsoEntry entry = bind_iso(doc.root());
  REQUIRE(entry.headword_ctn.size() == 5);
  CHECK(entry.headword_ctn[0].kind == "Headword");
  CHECK(entry.headword_ctn[1].kind == "TemporalUsage");
  CHECK(entry.headword_ctn[3].kind == "PartOfSpeech");
  CHECK(entry.headword_ctn[3].attrs.size() == 1);
  REQUIRE(entry.sense_grps.size() == 1);
  CHECK(entry.sense_grps[0].cls == IsoClass::kGroup);
  REQUIRE(entry.etymology.has_value());
  CHECK(entry.etymology->kind == "Etymology");
}

TEST_CASE("lmf binding reads feats, etymons and links") {
  XmlDocument doc = parse_xml(read_fixture("ski_lmf.xml"), "ski_lmf.xml");
  LmfEntry entry = bind_lmf(doc.root());
  CHECK(entry.lemma_id == "l1");
  REQUIRE(entry.lemma.size() == 2);
  REQUIRE(entry.lemma[0].size() == 2);
  CHECK(entry.lemma[0][0] == LmfFeat{"orthographyName", "GermanVariantD"});
  CHECK(entry.lemma[0][1] == LmfFeat{"writtenForm", "Ski"});
  CHECK(entry.lemma[1][1] == LmfFeat{"writtenForm", "Schi"});
  REQUIRE(entry.equivalents.size() == 1);
  CHECK(entry.equivalents[0][0] == LmfFeat{"lang", "German"});
  CHECK(entry.equivalents[0][1] == LmfFeat{"writtenForm", "Schneeschuh"});

  REQUIRE(entry.etymology.has_value());
  REQUIRE(entry.etymology->etymons.size() == 1);
  const LmfEtymon& etymon = entry.etymology->etymons[0];
  CHECK(etymon.id == "l2");
  CHECK(etymon.orth == "ski");
  CHECK(etymon.orth_lang == "norwegian");
  CHECK(etymon.pos == "commonNoun");
  CHECK(etymon.gloss == "device for sliding on snow");
  REQUIRE(etymon.note.has_value());
  CHECK(testutil::contains(*etymon.note, "aus anord. skið"));
  REQUIRE(entry.etymology->links.size() == 1);
  CHECK(entry.etymology->links[0] == LmfLink{"l2", "l1", "loan word"});
}

TEST_CASE("lmf unbind rebuilds a bindable tree") {
  XmlDocument doc = parse_xml(read_fixture("ski_lmf.xml"), "ski_lmf.xml");
  LmfEntry entry = bind_lmf(doc.root());
  XmlElement rebuilt = unbind_lmf(entry);
  CHECK(rebuilt.name.local == "LexicalEntry");
  CHECK(bind_lmf(rebuilt) == entry);
}

TEST_CASE("dangling etymological link ends are rejected") {
  XmlDocument doc = parse_xml(
      "<LexicalEntry><Lemma id=\"l1\"/><etymology>"
      "<etymologicalLink source=\"l9\" target=\"l1\"/>"
      "</etymology></LexicalEntry>", "t");
  CHECK_THROWS_AS(bind_lmf(doc.root()), DanglingLinkError);
}

TEST_CASE("unexpected lmf structure is rejected") {
  XmlDocument doc = parse_xml("<LexicalEntry><Weird/></LexicalEntry>", "t");
  CHECK_THROWS_AS(bind_lmf(doc.root()), UnknownElementError);
  XmlDocument not_entry = parse_xml("<Other/>", "t");
  CHECK_THROWS_AS(bind_lmf(not_entry.root()), BindError);
}
