// Copyright 2026 The locmt Authors.
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


#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "locmt/common/error.h"
#include "locmt/locfile/align.h"
#include "locmt/locfile/bitext.h"
#include "locmt/locfile/kv_table.h"
#include "locmt/locfile/placeholder.h"
#include "locmt/locfile/tmx.h"
#include "support/generators.h"

namespace locmt::locfile {
namespace {

std::string Tmx(const std::string& body, const std::string& version = "1.4") {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<tmx version=\"" + version +
         "\"><header srclang=\"en\" segtype=\"sentence\"/><body>" + body + "</body></tmx>";
}

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(TmxTest, EmptyBody) { EXPECT_TRUE(ParseTmx(Tmx("")).units.empty()); }

TEST(TmxTest, OneUnit) {
  const auto doc = ParseTmx(Tmx(
      "<tu tuid=\"loc_1\"><tuv xml:lang=\"en\"><seg>Skyrim</seg></tuv><tuv xml:lang=\"fr\"><seg>Bordeciel</seg></tuv></tu>"));
  ASSERT_EQ(doc.units.size(), 1u);
  EXPECT_EQ(doc.units[0].source.text, "Skyrim");
  EXPECT_EQ(doc.units[0].source.lang, "en");
  EXPECT_EQ(doc.units[0].target.text, "Bordeciel");
  EXPECT_EQ(doc.units[0].target.lang, "fr");
  EXPECT_EQ(doc.units[0].source.key, "loc_1");
  EXPECT_EQ(doc.units[0].target.key, "loc_1");
  EXPECT_EQ(doc.version, "1.4");
}

TEST(TmxTest, EntitiesAndInlineMarkup) {
  const auto doc = ParseTmx(Tmx(
      "<tu><tuv xml:lang=\"fr\"><seg>Appuyez</seg></tuv>"
      "<tuv xml:lang=\"en\"><seg>Press &lt;BUTTON&gt; <bpt i=\"1\">&lt;b&gt;</bpt>now<ept i=\"1\">&lt;/b&gt;</ept>"
      "<ph>%d</ph>&#233;</seg></tuv></tu>"));
  ASSERT_EQ(doc.units.size(), 1u);
  // srclang="en" selects the second variant as source.
  EXPECT_EQ(doc.units[0].source.text, "Press <BUTTON> <b>now</b>%dé");
  EXPECT_EQ(doc.units[0].source.key, "tu-1");
}

TEST(TmxTest, PropsMapToMetaAndOrigin) {
  const auto doc = ParseTmx(Tmx(
      "<tu tuid=\"k\"><prop type=\"x-origin\">skyrim</prop><prop type=\"game\">TES5</prop>"
      "<tuv xml:lang=\"en\"><prop type=\"speaker\">Ulfric</prop><seg>a</seg></tuv>"
      "<tuv xml:lang=\"fr\"><seg>b</seg></tuv></tu>"));
  ASSERT_EQ(doc.units.size(), 1u);
  EXPECT_EQ(doc.units[0].origin, "skyrim");
  EXPECT_EQ(doc.units[0].source.meta, (Meta{{"game", "TES5"}, {"speaker", "Ulfric"}}));
  EXPECT_EQ(doc.units[0].target.meta, (Meta{{"game", "TES5"}}));
}

TEST(TmxTest, MissingVariantIsSkippedAndReported) {
  const auto doc = ParseTmx(Tmx(
      "<tu tuid=\"a\"><tuv xml:lang=\"en\"><seg>x</seg></tuv></tu>"
      "<tu tuid=\"b\"><tuv xml:lang=\"en\"><seg>y</seg></tuv><tuv xml:lang=\"fr\"><seg>z</seg></tuv></tu>"));
  ASSERT_EQ(doc.units.size(), 1u);
  EXPECT_EQ(doc.units[0].source.key, "b");
  ASSERT_EQ(doc.diagnostics.size(), 1u);
  EXPECT_EQ(doc.diagnostics[0].code, ErrorCode::kMissingVariant);
}

TEST(TmxTest, UnknownElementsAreReported) {
  const auto doc = ParseTmx(Tmx(
      "<tu><tuv xml:lang=\"en\"><seg>a<x-mark>b</x-mark></seg></tuv><tuv xml:lang=\"fr\"><seg>c</seg></tuv></tu>"));
  ASSERT_EQ(doc.units.size(), 1u);
  EXPECT_EQ(doc.units[0].source.text, "ab");
  ASSERT_EQ(doc.diagnostics.size(), 1u);
  EXPECT_EQ(doc.diagnostics[0].code, ErrorCode::kUnknownElement);
}

TEST(TmxTest, Errors) {
  EXPECT_EQ(CodeOf([] { ParseTmx(Tmx("", "1.1")); }), ErrorCode::kUnsupportedVersion);
  EXPECT_EQ(CodeOf([] { ParseTmx("<tmx version=\"1.4\"><body><tu></body></tmx>"); }), ErrorCode::kMalformedXml);
  EXPECT_EQ(CodeOf([] { ParseTmx("<xliff/>"); }), ErrorCode::kMalformedXml);
  try {
    ParseTmx("<tmx version=\"1.4\">\n<body>\n<tu></body></tmx>");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(TmxTest, BomAndVersion14b) {
  EXPECT_EQ(ParseTmx("\xEF\xBB\xBF" + Tmx("", "1.4b")).version, "1.4b");
}

TEST(TmxTest, WriteEscapes) {
  TranslationUnit u;
  u.source = {"k", "A & B", "en", {}, 0};
  u.target = {"k", "A & B <i>", "fr", {}, 0};
  const std::string xml = WriteTmx(std::vector<TranslationUnit>{u});
  EXPECT_NE(xml.find("<seg>A &amp; B</seg>"), std::string::npos);
  EXPECT_EQ(ParseTmx(xml).units[0], u);
}

TEST(TmxTest, WriteEmptyIsValid) {
  const std::string xml = WriteTmx({});
  EXPECT_TRUE(ParseTmx(xml).units.empty());
  EXPECT_EQ(xml.rfind("\xEF\xBB\xBF", 0), std::string::npos);
}

TEST(TmxTest, WriteRejectsInvalidUnits) {
  TranslationUnit u;
  u.source = {"k", "x", "en", {}, 0};
  u.target = {"k", "y", "en", {}, 0};
  EXPECT_EQ(CodeOf([&] { WriteTmx(std::vector<TranslationUnit>{u}); }), ErrorCode::kInvalidUnit);
  u.target.lang = "fr";
  u.target.text = "bell\x07";
  EXPECT_EQ(CodeOf([&] { WriteTmx(std::vector<TranslationUnit>{u}); }), ErrorCode::kInvalidUnit);
  u.target.text = "ok";
  u.source.key = "";
  EXPECT_EQ(CodeOf([&] { WriteTmx(std::vector<TranslationUnit>{u}); }), ErrorCode::kInvalidUnit);
}

TEST(TmxTest, RandomRoundTrip) {
  testing::Rng rng(42);
  std::vector<TranslationUnit> units;
  for (std::size_t i = 0; i < 500; ++i) units.push_back(testing::RandomUnit(rng, i));
  const std::string xml = WriteTmx(units, {{"project", "skyrim & co"}});
  const TmxDocument doc = ParseTmx(xml);
  EXPECT_TRUE(doc.diagnostics.empty());
  ASSERT_EQ(doc.units.size(), units.size());
  for (std::size_t i = 0; i < units.size(); ++i) ASSERT_EQ(doc.units[i], units[i]) << i;
  EXPECT_EQ(doc.header.at("project"), "skyrim & co");
  EXPECT_EQ(WriteTmx(doc.units, {{"project", "skyrim & co"}}), xml);
}

TEST(KvTableTest, Tsv) {
  const auto t = ParseKvTable("greet_01\tHello\nbye_01\tFarewell\n", TableFormat::kTsv, "en");
  ASSERT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.entries[0].key, "greet_01");
  EXPECT_EQ(t.entries[0].text, "Hello");
  EXPECT_EQ(t.entries[1].key, "bye_01");
  EXPECT_EQ(t.entries[1].line, 2u);
  EXPECT_EQ(t.entries[1].lang, "en");
}

TEST(KvTableTest, TsvEscapesHeaderAndRaggedRows) {
  const auto t = ParseKvTable("id\tTEXT\na\tx\\ty\\\\n\nb\nc\t1\t2\n\r\nd\t  spaced  \r\n", TableFormat::kTsv, "fr");
  ASSERT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.entries[0].text, "x\ty\\n");
  EXPECT_EQ(t.entries[1].text, "  spaced  ");
  ASSERT_EQ(t.diagnostics.size(), 2u);
  EXPECT_EQ(t.diagnostics[0].code, ErrorCode::kRaggedRow);
  EXPECT_EQ(t.diagnostics[0].line, 3u);
  EXPECT_EQ(t.diagnostics[1].line, 4u);
}

TEST(KvTableTest, Csv) {
  const auto t = ParseKvTable("\"q_12\",\"He said \"\"go\"\"\"\r\nq_13,\"two\nlines, here\"\nq_14,\n", TableFormat::kCsv,
                              "en");
  ASSERT_EQ(t.entries.size(), 3u);
  EXPECT_EQ(t.entries[0].key, "q_12");
  EXPECT_EQ(t.entries[0].text, "He said \"go\"");
  EXPECT_EQ(t.entries[1].text, "two\nlines, here");
  EXPECT_EQ(t.entries[2].text, "");
  EXPECT_EQ(t.entries[2].line, 4u);
}

TEST(KvTableTest, EmptyAndErrors) {
  EXPECT_TRUE(ParseKvTable("", TableFormat::kCsv, "en").entries.empty());
  EXPECT_TRUE(ParseKvTable("", TableFormat::kTsv, "en").entries.empty());
  EXPECT_EQ(CodeOf([] { ParseKvTable("a\t\xFF\n", TableFormat::kTsv, "en"); }), ErrorCode::kEncodingError);
  EXPECT_EQ(CodeOf([] { ParseKvTable("a,\"open\n", TableFormat::kCsv, "en"); }), ErrorCode::kMalformedTable);
}

std::vector<RawEntry> Entries(std::initializer_list<const char*> keys, const char* lang) {
  std::vector<RawEntry> out;
  std::size_t line = 1;
  for (const char* k : keys) out.push_back({k, std::string("t-") + k, lang, {}, line++});
  return out;
}

TEST(AlignTest, InnerJoin) {
  const auto a = AlignByKey(Entries({"a", "b"}, "en"), Entries({"b", "c"}, "fr"), "g1");
  ASSERT_EQ(a.units.size(), 1u);
  EXPECT_EQ(a.units[0].source.key, "b");
  EXPECT_EQ(a.units[0].origin, "g1");
  ASSERT_EQ(a.orphans.size(), 2u);
  EXPECT_EQ(a.orphans[0].key, "a");
  EXPECT_EQ(a.orphans[1].key, "c");
  const auto b = AlignByKey({}, Entries({"x"}, "fr"));
  EXPECT_TRUE(b.units.empty());
  EXPECT_EQ(b.orphans.size(), 1u);
}

TEST(AlignTest, Conservation) {
  std::vector<RawEntry> src;
  std::vector<RawEntry> tgt;
  for (int i = 0; i < 1000; ++i) {
    if (i % 100 != 3) src.push_back({"k" + std::to_string(i), "s", "en", {}, 0});
    if (i % 100 != 57) tgt.push_back({"k" + std::to_string(i), "t", "fr", {}, 0});
  }
  const auto a = AlignByKey(src, tgt);
  EXPECT_EQ(a.units.size(), 980u);
  EXPECT_EQ(a.orphans.size(), 20u);
  EXPECT_EQ(2 * a.units.size() + a.orphans.size(), src.size() + tgt.size());
}

TEST(AlignTest, DuplicateKey) {
  try {
    AlignByKey(Entries({"a", "b", "a"}, "en"), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateKey);
    EXPECT_NE(std::string(e.what()).find("lines 1 and 3"), std::string::npos) << e.what();
  }
}

TEST(PlaceholderTest, Examples) {
  const auto s = ExtractPlaceholders("Hello <Alias=Player>, take [pagebreak] this.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].literal, "<Alias=Player>");
  EXPECT_EQ(s[0].kind, PlaceholderKind::kTag);
  EXPECT_EQ(s[0].start, 6u);
  EXPECT_EQ(s[0].end, 20u);
  EXPECT_EQ(s[1].literal, "[pagebreak]");
  const auto v = ExtractPlaceholders("Gain %d gold");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].literal, "%d");
  EXPECT_EQ(v[0].kind, PlaceholderKind::kVariable);
  EXPECT_TRUE(ExtractPlaceholders("No markup here.").empty());
}

TEST(PlaceholderTest, GrammarEdges) {
  EXPECT_EQ(PlaceholderLiterals("%{gold_amount} %{9x} %% %q"), (std::vector<std::string>{"%{gold_amount}", "%%"}));
  EXPECT_EQ(PlaceholderLiterals("a < b and c > d"), (std::vector<std::string>{"< b and c >"}));
  EXPECT_EQ(PlaceholderLiterals("<a<b>> [x[y]] <> []"), (std::vector<std::string>{"<b>", "[y]"}));
  EXPECT_TRUE(PlaceholderLiterals("<" + std::string(63, 'x') + ">").empty());
  EXPECT_EQ(PlaceholderLiterals("<" + std::string(62, 'x') + ">").size(), 1u);
  EXPECT_TRUE(PlaceholderLiterals("unclosed [tag").empty());
  PlaceholderGrammar g;
  g.extra_literals.push_back({"$PLAYER$", PlaceholderKind::kVariable});
  g.extra_literals.push_back({"%dx", PlaceholderKind::kVariable});
  EXPECT_EQ(PlaceholderLiterals("Hi $PLAYER$, %dx", g), (std::vector<std::string>{"$PLAYER$", "%dx"}));
}

TEST(PlaceholderTest, Reconstruction) {
  testing::Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const std::string text = testing::RandomText(rng, 20);
    const auto spans = ExtractPlaceholders(text);
    std::string rebuilt;
    std::size_t pos = 0;
    for (const auto& s : spans) {
      ASSERT_LE(pos, s.start);
      ASSERT_LT(s.start, s.end);
      ASSERT_LE(s.end, text.size());
      rebuilt += text.substr(pos, s.start - pos);
      rebuilt += s.literal;
      pos = s.end;
    }
    rebuilt += text.substr(pos);
    ASSERT_EQ(rebuilt, text);
  }
}

TEST(BitextTest, WriteAndRead) {
  EXPECT_EQ(WriteBitext({}).source, "");
  std::vector<TranslationUnit> units(2);
  units[0].source.text = "Hello";
  units[0].target.text = "Bonjour";
  units[1].source.text = "";
  units[1].target.text = " x ";
  const Bitext b = WriteBitext(units);
  EXPECT_EQ(b.source, "Hello\n\n");
  EXPECT_EQ(b.target, "Bonjour\n x \n");
  const auto back = ReadBitext(b.source, b.target);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].second, " x ");
  units[1].target.text = "a\nb";
  EXPECT_EQ(CodeOf([&] { WriteBitext(units); }), ErrorCode::kEmbeddedNewline);
  EXPECT_EQ(CodeOf([] { ReadBitext("a\n", "a\nb\n"); }), ErrorCode::kSegmentCountMismatch);
}

}  // namespace
}  // namespace locmt::locfile
