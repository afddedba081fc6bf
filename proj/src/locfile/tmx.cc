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


#include "locmt/locfile/tmx.h"

#include <expat.h>

#include <algorithm>
#include <optional>
#include <set>

#include "locmt/common/unicode.h"

namespace locmt::locfile {
namespace {

constexpr std::string_view kOriginProp = "x-origin";
constexpr std::string_view kKeyProp = "x-key";

const std::set<std::string, std::less<>>& KnownElements() {
  static const auto* s = new std::set<std::string, std::less<>>{
      "tmx", "header", "body", "tu", "tuv", "seg", "prop", "note", "ude", "map",
      "bpt", "ept", "it",  "ph", "hi", "sub", "ut"};
  return *s;
}

bool InlineElement(std::string_view name) {
  return name == "bpt" || name == "ept" || name == "it" || name == "ph" || name == "hi" || name == "sub" ||
         name == "ut";
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto lower = [](char c) { return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c; };
    if (lower(a[i]) != lower(b[i])) return false;
  }
  return true;
}

struct Variant {
  std::string lang;
  Meta meta;
  std::string text;
  std::string key;
  bool has_key = false;
  bool has_seg = false;
};

struct PendingUnit {
  std::string tuid;
  std::string srclang;
  Meta props;
  std::string origin;
  bool has_origin = false;
  std::vector<Variant> variants;
  std::size_t line = 0;
};

class TmxReader {
 public:
  TmxReader() : parser_(XML_ParserCreate("UTF-8")) {
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &TmxReader::OnStart, &TmxReader::OnEnd);
    XML_SetCharacterDataHandler(parser_, &TmxReader::OnText);
  }
  ~TmxReader() { XML_ParserFree(parser_); }
  TmxReader(const TmxReader&) = delete;
  TmxReader& operator=(const TmxReader&) = delete;

  TmxDocument Run(std::string_view bytes) {
    bytes = unicode::StripBom(bytes);
    const XML_Status st = XML_Parse(parser_, bytes.data(), static_cast<int>(bytes.size()), XML_TRUE);
    if (fatal_) throw Error(fatal_->code, fatal_->message);
    if (st != XML_STATUS_OK) {
      throw Error(ErrorCode::kMalformedXml,
                  "line " + std::to_string(XML_GetCurrentLineNumber(parser_)) + ", column " +
                      std::to_string(XML_GetCurrentColumnNumber(parser_) + 1) + ": " +
                      XML_ErrorString(XML_GetErrorCode(parser_)));
    }
    if (!saw_root_) throw Error(ErrorCode::kMalformedXml, "root element is not <tmx>");
    return std::move(doc_);
  }

 private:
  static void OnStart(void* self, const XML_Char* name, const XML_Char** attrs) {
    static_cast<TmxReader*>(self)->Start(name, attrs);
  }
  static void OnEnd(void* self, const XML_Char* name) { static_cast<TmxReader*>(self)->End(name); }
  static void OnText(void* self, const XML_Char* s, int len) {
    static_cast<TmxReader*>(self)->Text(std::string_view(s, static_cast<std::size_t>(len)));
  }

  std::size_t Line() const { return static_cast<std::size_t>(XML_GetCurrentLineNumber(parser_)); }

  void Fail(ErrorCode code, std::string message) {
    if (!fatal_) fatal_ = Diagnostic{code, std::move(message), Line()};
    XML_StopParser(parser_, XML_FALSE);
  }

  static std::string Attr(const XML_Char** attrs, std::string_view key) {
    for (int i = 0; attrs[i] != nullptr; i += 2) {
      if (key == attrs[i]) return attrs[i + 1];
    }
    return {};
  }

  void Start(std::string_view name, const XML_Char** attrs) {
    const std::string parent = stack_.empty() ? "" : stack_.back();
    stack_.emplace_back(name);
    if (stack_.size() == 1) {
      if (name != "tmx") {
        Fail(ErrorCode::kMalformedXml, "root element is <" + std::string(name) + ">, expected <tmx>");
        return;
      }
      saw_root_ = true;
      doc_.version = Attr(attrs, "version");
      if (doc_.version != "1.4" && doc_.version != "1.4b") {
        Fail(ErrorCode::kUnsupportedVersion, "TMX version '" + doc_.version + "' (supported: 1.4, 1.4b)");
      }
      return;
    }
    if (!KnownElements().contains(name)) {
      doc_.diagnostics.push_back({ErrorCode::kUnknownElement, "unknown element <" + std::string(name) + ">", Line()});
    }
    if (seg_depth_ > 0) {
      ++seg_depth_;
      if (!InlineElement(name) && KnownElements().contains(name)) {
        doc_.diagnostics.push_back(
            {ErrorCode::kUnknownElement, "<" + std::string(name) + "> inside <seg>", Line()});
      }
      return;
    }
    if (name == "header" && parent == "tmx") {
      for (int i = 0; attrs[i] != nullptr; i += 2) doc_.header[attrs[i]] = attrs[i + 1];
      in_header_ = true;
    } else if (name == "tu" && parent == "body") {
      unit_ = PendingUnit{};
      unit_->tuid = Attr(attrs, "tuid");
      unit_->srclang = Attr(attrs, "srclang");
      unit_->line = Line();
      ++tu_count_;
    } else if (name == "tuv" && parent == "tu" && unit_) {
      Variant v;
      v.lang = Attr(attrs, "xml:lang");
      if (v.lang.empty()) v.lang = Attr(attrs, "lang");
      unit_->variants.push_back(std::move(v));
    } else if (name == "seg" && parent == "tuv" && unit_) {
      seg_depth_ = 1;
      unit_->variants.back().has_seg = true;
      unit_->variants.back().text.clear();
    } else if (name == "prop") {
      prop_type_ = Attr(attrs, "type");
      prop_text_.clear();
      in_prop_ = true;
    }
  }

  void End(std::string_view name) {
    stack_.pop_back();
    if (seg_depth_ > 0) {
      --seg_depth_;
      return;
    }
    if (name == "prop" && in_prop_) {
      in_prop_ = false;
      const std::string& parent = stack_.empty() ? std::string() : stack_.back();
      if (parent == "header") {
        doc_.header[prop_type_] = prop_text_;
      } else if (parent == "tu" && unit_) {
        if (prop_type_ == kOriginProp) {
          unit_->origin = prop_text_;
          unit_->has_origin = true;
        } else {
          unit_->props[prop_type_] = prop_text_;
        }
      } else if (parent == "tuv" && unit_ && !unit_->variants.empty()) {
        Variant& v = unit_->variants.back();
        if (prop_type_ == kKeyProp) {
          v.key = prop_text_;
          v.has_key = true;
        } else {
          v.meta[prop_type_] = prop_text_;
        }
      }
    } else if (name == "header") {
      in_header_ = false;
    } else if (name == "tu" && unit_) {
      FinishUnit();
      unit_.reset();
    }
  }

  void Text(std::string_view s) {
    if (seg_depth_ > 0 && unit_) {
      unit_->variants.back().text.append(s);
    } else if (in_prop_) {
      prop_text_.append(s);
    }
  }

  void FinishUnit() {
    PendingUnit& u = *unit_;
    std::vector<Variant*> vs;
    for (auto& v : u.variants) {
      if (v.has_seg && !v.lang.empty()) vs.push_back(&v);
    }
    const std::string id = u.tuid.empty() ? "#" + std::to_string(tu_count_) : "'" + u.tuid + "'";
    if (vs.size() != 2 || EqualsIgnoreCase(vs[0]->lang, vs[1]->lang)) {
      doc_.diagnostics.push_back({ErrorCode::kMissingVariant,
                                  "tu " + id + " has " + std::to_string(vs.size()) +
                                      " usable variant(s) in distinct languages, expected 2; skipped",
                                  u.line});
      return;
    }
    std::string srclang = u.srclang;
    if (srclang.empty()) {
      auto it = doc_.header.find("srclang");
      if (it != doc_.header.end()) srclang = it->second;
    }
    Variant* src = vs[0];
    Variant* tgt = vs[1];
    if (!EqualsIgnoreCase(srclang, src->lang) && EqualsIgnoreCase(srclang, tgt->lang)) std::swap(src, tgt);
    const std::string key = u.tuid.empty() ? "tu-" + std::to_string(tu_count_) : u.tuid;
    auto entry = [&](Variant& v) {
      RawEntry e;
      e.key = v.has_key ? v.key : key;
      e.text = std::move(v.text);
      e.lang = v.lang;
      e.meta = u.props;
      for (auto& [k, val] : v.meta) e.meta[k] = val;
      e.line = u.line;
      return e;
    };
    TranslationUnit tu;
    tu.source = entry(*src);
    tu.target = entry(*tgt);
    tu.origin = u.origin;
    doc_.units.push_back(std::move(tu));
  }

  XML_Parser parser_;
  TmxDocument doc_;
  std::vector<std::string> stack_;
  std::optional<PendingUnit> unit_;
  std::optional<Diagnostic> fatal_;
  std::size_t tu_count_ = 0;
  int seg_depth_ = 0;
  bool in_header_ = false;
  bool in_prop_ = false;
  bool saw_root_ = false;
  std::string prop_type_;
  std::string prop_text_;
};

bool XmlChar(char32_t c) {
  return c == 0x9 || c == 0xA || c == 0xD || (c >= 0x20 && c <= 0xD7FF) || (c >= 0xE000 && c <= 0xFFFD) ||
         (c >= 0x10000 && c <= 0x10FFFF);
}

bool Representable(std::string_view s) {
  if (!unicode::IsValidUtf8(s)) return false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (!XmlChar(unicode::DecodeNext(s, pos))) return false;
  }
  return true;
}

void EscapeText(std::string_view s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
}

void EscapeAttr(std::string_view s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
}

void Attribute(std::string_view name, std::string_view value, std::string& out) {
  out += ' ';
  out += name;
  out += "=\"";
  EscapeAttr(value, out);
  out += '"';
}

void Prop(std::string_view indent, std::string_view type, std::string_view value, std::string& out) {
  out += indent;
  out += "<prop";
  Attribute("type", type, out);
  out += '>';
  EscapeText(value, out);
  out += "</prop>\n";
}

void CheckUnit(const TranslationUnit& u, std::size_t index) {
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::kInvalidUnit, "unit " + std::to_string(index) + ": " + why);
  };
  for (const RawEntry* e : {&u.source, &u.target}) {
    if (e->key.empty()) bad("empty key");
    if (e->lang.empty()) bad("empty language");
    if (!Representable(e->text) || !Representable(e->key) || !Representable(e->lang)) {
      bad("text is not valid UTF-8 or holds characters XML cannot carry");
    }
    for (const auto& [k, v] : e->meta) {
      if (k == kKeyProp) bad("meta key 'x-key' is reserved");
      if (k.empty() || !Representable(k) || !Representable(v)) bad("meta '" + k + "' cannot be written");
    }
  }
  if (EqualsIgnoreCase(u.source.lang, u.target.lang)) bad("source and target language are both " + u.source.lang);
  if (!Representable(u.origin)) bad("origin cannot be written");
}

}  // namespace

TmxDocument ParseTmx(std::string_view bytes) { return TmxReader().Run(bytes); }

std::string WriteTmx(std::span<const TranslationUnit> units, const Meta& header_meta) {
  for (std::size_t i = 0; i < units.size(); ++i) CheckUnit(units[i], i);
  Meta attrs = {{"creationtool", "locmt"},
                {"creationtoolversion", LOCMT_VERSION},
                {"segtype", "sentence"},
                {"o-tmf", "locmt"},
                {"adminlang", "en"},
                {"srclang", units.empty() ? "en" : units.front().source.lang},
                {"datatype", "plaintext"}};
  for (const auto& u : units) {
    if (!EqualsIgnoreCase(u.source.lang, attrs["srclang"])) attrs["srclang"] = "*all*";
  }
  Meta props;
  for (const auto& [k, v] : header_meta) {
    if (attrs.contains(k) || k == "o-encoding" || k == "creationdate" || k == "creationid" ||
        k == "changedate" || k == "changeid") {
      attrs[k] = v;
    } else {
      props[k] = v;
    }
  }
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<tmx version=\"1.4\">\n";
  out += "  <header";
  static constexpr std::string_view kOrder[] = {"creationtool", "creationtoolversion", "segtype", "o-tmf",
                                                "adminlang",    "srclang",             "datatype"};
  for (auto k : kOrder) Attribute(k, attrs.at(std::string(k)), out);
  for (const auto& [k, v] : attrs) {
    if (std::find(std::begin(kOrder), std::end(kOrder), k) == std::end(kOrder)) Attribute(k, v, out);
  }
  if (props.empty()) {
    out += "/>\n";
  } else {
    out += ">\n";
    for (const auto& [k, v] : props) Prop("    ", k, v, out);
    out += "  </header>\n";
  }
  out += "  <body>\n";
  for (const auto& u : units) {
    out += "    <tu";
    Attribute("tuid", u.source.key, out);
    Attribute("srclang", u.source.lang, out);
    out += ">\n";
    if (!u.origin.empty()) Prop("      ", kOriginProp, u.origin, out);
    for (const RawEntry* e : {&u.source, &u.target}) {
      out += "      <tuv";
      Attribute("xml:lang", e->lang, out);
      out += ">\n";
      if (e->key != u.source.key) Prop("        ", kKeyProp, e->key, out);
      for (const auto& [k, v] : e->meta) Prop("        ", k, v, out);
      out += "        <seg>";
      EscapeText(e->text, out);
      out += "</seg>\n";
      out += "      </tuv>\n";
    }
    out += "    </tu>\n";
  }
  out += "  </body>\n";
  out += "</tmx>\n";
  return out;
}

}  // namespace locmt::locfile
