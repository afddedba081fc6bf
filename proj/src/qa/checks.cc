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


#include "locmt/qa/checks.h"

#include <algorithm>
#include <map>
#include <optional>

#include "locmt/common/error.h"
#include "locmt/common/unicode.h"
#include "locmt/corpus/typography.h"
#include "locmt/qa/text.h"

namespace locmt::qa {
namespace {

bool IsEnglish(std::string_view lang) {
  return lang.size() >= 2 && (lang[0] == 'e' || lang[0] == 'E') && (lang[1] == 'n' || lang[1] == 'N') &&
         (lang.size() == 2 || lang[2] == '-' || lang[2] == '_');
}

bool Contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string_view Slice(std::string_view text, Span s) { return text.substr(s.start, s.end - s.start); }

QaFinding NewFinding(const BiSegment& seg, Category cat, Severity sev, std::string message) {
  QaFinding f;
  f.segment_id = seg.id;
  f.category = cat;
  f.severity = sev;
  f.message = std::move(message);
  return f;
}

bool Overlaps(Span w, const std::vector<Span>& masks) {
  for (const Span& m : masks) {
    if (w.start < m.end && m.start < w.end) return true;
  }
  return false;
}

std::vector<Span> PlaceholderMasks(std::string_view text, const locfile::PlaceholderGrammar& grammar) {
  std::vector<Span> out;
  for (const auto& p : locfile::ExtractPlaceholders(text, grammar)) out.push_back({p.start, p.end});
  return out;
}

// True when the gap between two words holds only whitespace or hyphens.
bool TightGap(std::string_view gap) {
  std::size_t pos = 0;
  while (pos < gap.size()) {
    const char32_t c = unicode::DecodeNext(gap, pos);
    if (!unicode::IsSpace(c) && c != '-') return false;
  }
  return true;
}

bool OnlySpaces(std::string_view gap) {
  if (gap.empty()) return false;
  std::size_t pos = 0;
  while (pos < gap.size()) {
    if (!unicode::IsSpace(unicode::DecodeNext(gap, pos))) return false;
  }
  return true;
}

bool EndsSentence(std::string_view gap) {
  std::size_t pos = 0;
  while (pos < gap.size()) {
    const char32_t c = unicode::DecodeNext(gap, pos);
    if (c == '.' || c == '!' || c == '?' || c == U'…' || c == ':' || c == '\n' || c == '\r') return true;
  }
  return false;
}

bool EndsWithApostrophe(std::string_view w) {
  return (!w.empty() && w.back() == '\'') || (w.size() >= 3 && w.substr(w.size() - 3) == "\xE2\x80\x99");
}

std::string Quote(std::string_view s) { return "'" + std::string(s) + "'"; }

const std::vector<std::string>& TitleFunctionWords() {
  static const std::vector<std::string> w = {"of", "the", "a",    "an",   "and",  "or",   "in",  "on",
                                             "at", "to",  "for",  "with", "from", "by",   "into", "upon"};
  return w;
}

bool HasTitleCaseSpan(std::string_view text, const locfile::PlaceholderGrammar& grammar) {
  const auto masks = PlaceholderMasks(text, grammar);
  std::vector<Span> words;
  for (Span w : SplitWords(text)) {
    if (!Overlaps(w, masks)) words.push_back(w);
  }
  std::size_t caps = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string_view w = Slice(text, words[i]);
    const bool joined = i > 0 && TightGap(text.substr(words[i - 1].end, words[i].start - words[i - 1].end));
    if (!joined) caps = 0;
    if (StartsUpper(w)) {
      if (++caps >= 2) return true;
    } else if (caps == 0 || !Contains(TitleFunctionWords(), Fold(w))) {
      caps = 0;
    }
  }
  return false;
}

}  // namespace

std::vector<QaFinding> CheckPlaceholders(const BiSegment& seg, const locfile::PlaceholderGrammar& grammar) {
  std::map<std::string, std::pair<std::vector<Span>, std::vector<Span>>> by_literal;
  for (const auto& p : locfile::ExtractPlaceholders(seg.source_text, grammar)) {
    by_literal[p.literal].first.push_back({p.start, p.end});
  }
  for (const auto& p : locfile::ExtractPlaceholders(seg.target_text, grammar)) {
    by_literal[p.literal].second.push_back({p.start, p.end});
  }
  QaFinding f = NewFinding(seg, Category::kPlaceholderMismatch, Severity::kError, "");
  std::string missing;
  std::string extra;
  for (const auto& [lit, sides] : by_literal) {
    const auto& [src, tgt] = sides;
    if (src.size() == tgt.size()) continue;
    const std::string counts = Quote(lit) + " (source " + std::to_string(src.size()) + ", target " +
                               std::to_string(tgt.size()) + ")";
    if (src.size() > tgt.size()) {
      missing += (missing.empty() ? "" : ", ") + counts;
      for (std::size_t i = tgt.size(); i < src.size(); ++i) {
        f.evidence.push_back(MakeEvidence(Side::kSource, seg.source_text, src[i].start, src[i].end));
      }
    } else {
      extra += (extra.empty() ? "" : ", ") + counts;
      for (std::size_t i = src.size(); i < tgt.size(); ++i) {
        f.evidence.push_back(MakeEvidence(Side::kTarget, seg.target_text, tgt[i].start, tgt[i].end));
      }
    }
  }
  if (f.evidence.empty()) return {};
  if (!missing.empty()) f.message = "missing on target: " + missing;
  if (!extra.empty()) f.message += (f.message.empty() ? "" : "; ") + std::string("extra on target: ") + extra;
  return {f};
}

std::vector<QaFinding> CheckTerms(const BiSegment& seg, const Termbase& termbase) {
  std::vector<QaFinding> out;
  for (const TermEntry& e : termbase.entries) {
    const auto src_hits = FindTerm(seg.source_text, e.source_term, e.case_sensitive);
    if (src_hits.empty()) continue;
    const Evidence src_ev = MakeEvidence(Side::kSource, seg.source_text, src_hits[0].start, src_hits[0].end);

    bool forbidden = false;
    for (const std::string& bad : e.forbidden_targets) {
      // Forbidden renderings are matched in any case.
      const auto hits = FindTerm(seg.target_text, bad, false);
      if (hits.empty()) continue;
      QaFinding f = NewFinding(seg, Category::kTermViolation, Severity::kError,
                               Quote(e.source_term) + " rendered as forbidden " + Quote(bad) + "; expected " +
                                   Quote(e.target_term));
      f.evidence.push_back(src_ev);
      for (Span h : hits) f.evidence.push_back(MakeEvidence(Side::kTarget, seg.target_text, h.start, h.end));
      f.suggestions = {e.target_term};
      out.push_back(std::move(f));
      forbidden = true;
      break;
    }
    if (forbidden) continue;
    if (!FindTerm(seg.target_text, e.target_term, e.case_sensitive).empty()) continue;

    const auto copied = FindTerm(seg.target_text, e.source_term, e.case_sensitive);
    if (!copied.empty()) {
      QaFinding f = NewFinding(seg, Category::kUntranslatedTerm, Severity::kError,
                               Quote(e.source_term) + " left untranslated; expected " + Quote(e.target_term));
      f.evidence.push_back(src_ev);
      for (Span h : copied) f.evidence.push_back(MakeEvidence(Side::kTarget, seg.target_text, h.start, h.end));
      f.suggestions = {e.target_term};
      out.push_back(std::move(f));
      continue;
    }
    QaFinding f = NewFinding(seg, Category::kTermViolation, Severity::kWarning,
                             Quote(e.target_term) + " not found for " + Quote(e.source_term) +
                                 "; possible paraphrase");
    f.evidence.push_back(src_ev);
    f.suggestions = {e.target_term};
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<QaFinding> CheckCapitalization(const BiSegment& seg, const Termbase& termbase,
                                           const std::vector<std::string>& exemptions,
                                           const locfile::PlaceholderGrammar& grammar) {
  if (!corpus::IsFrench(seg.target_lang)) {
    return {NewFinding(seg, Category::kCapitalizationDrift, Severity::kInfo,
                       "capitalization check skipped: target language " + Quote(seg.target_lang) + " is not French")};
  }
  if (!HasTitleCaseSpan(seg.source_text, grammar)) return {};

  const std::string_view text = seg.target_text;
  std::vector<Span> masks = PlaceholderMasks(text, grammar);
  for (const auto& e : termbase.entries) {
    for (Span s : FindTerm(text, e.target_term, e.case_sensitive)) masks.push_back(s);
  }
  for (const auto& x : exemptions) {
    for (Span s : FindTerm(text, x, true)) masks.push_back(s);
  }

  std::vector<QaFinding> out;
  const auto words = SplitWords(text);
  std::size_t run_start = 0;
  std::size_t run_len = 0;
  std::size_t run_end = 0;
  auto flush = [&] {
    if (run_len >= 2) {
      QaFinding f = NewFinding(seg, Category::kCapitalizationDrift, Severity::kWarning,
                               std::to_string(run_len) + " capitalized words copy the source title case");
      f.evidence.push_back(MakeEvidence(Side::kTarget, text, run_start, run_end));
      out.push_back(std::move(f));
    }
    run_len = 0;
  };
  bool initial = true;  // the next word starts a sentence
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Span w = words[i];
    if (i > 0) {
      const std::string_view gap = text.substr(prev_end, w.start - prev_end);
      if (EndsSentence(gap)) initial = true;
      if (!TightGap(gap)) flush();
    }
    prev_end = w.end;
    const std::string_view word = Slice(text, w);
    const bool elided = EndsWithApostrophe(word);
    if (Overlaps(w, masks)) {
      flush();
      initial = false;
    } else if (initial) {
      flush();
      // An elided article passes the sentence start on to the next word.
      initial = elided;
    } else if (StartsUpper(word) && !elided) {
      if (run_len == 0) run_start = w.start;
      run_end = w.end;
      ++run_len;
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::vector<QaFinding> CheckGender(const BiSegment& seg, const GenderLexicon& lexicon) {
  if (lexicon.empty()) throw Error(ErrorCode::kInvalidConfig, "gender lexicon has no pairs or no markers");
  bool addressed = false;
  for (const auto& m : lexicon.player_referent_markers) {
    if (!FindTerm(seg.source_text, m, false).empty()) {
      addressed = true;
      break;
    }
  }
  if (!addressed) return {};

  struct Hit {
    Span span;
    const GenderPair* pair;
    bool feminine;
  };
  std::vector<Hit> hits;
  for (const auto& p : lexicon.pairs) {
    for (Span s : FindTerm(seg.target_text, p.masculine, false)) hits.push_back({s, &p, false});
    for (Span s : FindTerm(seg.target_text, p.feminine, false)) hits.push_back({s, &p, true});
  }
  std::stable_sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return a.span.start != b.span.start ? a.span.start < b.span.start : a.span.end > b.span.end;
  });
  std::vector<QaFinding> out;
  std::size_t covered = 0;
  for (const Hit& h : hits) {
    if (h.span.start < covered) continue;
    covered = h.span.end;
    QaFinding f = NewFinding(seg, Category::kGenderMarked, Severity::kWarning,
                             std::string(h.feminine ? "feminine" : "masculine") + " form " +
                                 Quote(Slice(seg.target_text, h.span)) + " in a line addressing the player");
    f.evidence.push_back(MakeEvidence(Side::kTarget, seg.target_text, h.span.start, h.span.end));
    f.suggestions = h.pair->neutral_alternatives;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

enum class Family { kNone, kTu, kVous };

Family Classify(std::string_view word, const RegisterLexicon& lex) {
  std::string f = Fold(word);
  const std::string kCurly = "’";
  for (std::size_t p = f.find(kCurly); p != std::string::npos; p = f.find(kCurly, p)) f.replace(p, kCurly.size(), "'");
  if (Contains(lex.tu_forms, f)) return Family::kTu;
  if (Contains(lex.vous_forms, f)) return Family::kVous;
  if (Contains(lex.ending_exceptions, f)) return Family::kNone;
  for (const auto& end : lex.vous_endings) {
    if (f.size() > end.size() + 1 && f.compare(f.size() - end.size(), end.size(), end) == 0) return Family::kVous;
  }
  return Family::kNone;
}

struct Occurrence {
  std::size_t index = 0;
  Span span;
};

}  // namespace

std::vector<QaFinding> CheckRegister(std::span<const BiSegment> group, RegisterProfile profile,
                                     const RegisterLexicon& lexicon, std::string_view conversation_key) {
  if (group.empty()) return {};
  const std::string key(conversation_key);
  for (const auto& s : group) {
    if (!s.meta.count(key)) {
      throw Error(ErrorCode::kMissingConversationKey,
                  "segment " + corpus::FormatId(s.id) + " has no meta '" + key + "' for the register check");
    }
  }
  const std::string& conversation = group[0].meta.at(key);
  std::optional<Occurrence> tu;
  std::optional<Occurrence> vous;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (!corpus::IsFrench(group[i].target_lang)) continue;
    for (Span w : SplitWords(group[i].target_text)) {
      const Family fam = Classify(Slice(group[i].target_text, w), lexicon);
      if (fam == Family::kTu && !tu) tu = Occurrence{i, w};
      if (fam == Family::kVous && !vous) vous = Occurrence{i, w};
    }
  }
  auto make = [&](const Occurrence& at, std::string message) {
    const BiSegment& seg = group[at.index];
    QaFinding f = NewFinding(seg, Category::kRegisterInconsistent, Severity::kError, std::move(message));
    f.position = at.index;
    f.evidence.push_back(MakeEvidence(Side::kTarget, seg.target_text, at.span.start, at.span.end));
    return f;
  };
  if (tu && vous) {
    const bool vous_later = vous->index > tu->index || (vous->index == tu->index && vous->span.start > tu->span.start);
    const Occurrence& later = vous_later ? *vous : *tu;
    const Occurrence& earlier = vous_later ? *tu : *vous;
    const std::string_view later_word = Slice(group[later.index].target_text, later.span);
    const std::string_view earlier_word = Slice(group[earlier.index].target_text, earlier.span);
    return {make(later, "conversation " + Quote(conversation) + " mixes tu and vous: " + Quote(later_word) +
                            " here, " + Quote(earlier_word) + " in segment " + corpus::FormatId(group[earlier.index].id))};
  }
  if (profile == RegisterProfile::kVous && tu) {
    return {make(*tu, "conversation " + Quote(conversation) + " uses tu but the profile requires vous")};
  }
  if (profile == RegisterProfile::kTu && vous) {
    return {make(*vous, "conversation " + Quote(conversation) + " uses vous but the profile requires tu")};
  }
  return {};
}

std::vector<QaFinding> FlagAmbiguousVerbForms(const BiSegment& seg, const VerbLexicon& lexicon) {
  if (!IsEnglish(seg.source_lang)) return {};
  const auto masks = PlaceholderMasks(seg.source_text, {});
  for (Span w : SplitWords(seg.source_text)) {
    if (Overlaps(w, masks)) continue;
    const std::string f = Fold(Slice(seg.source_text, w));
    if (Contains(lexicon.lead_ins, f)) continue;
    if (!Contains(lexicon.base_verbs, f)) return {};
    QaFinding out = NewFinding(seg, Category::kAmbiguousVerbForm, Severity::kInfo,
                               Quote(Slice(seg.source_text, w)) +
                                   " may be an imperative (-ez) or an infinitive (-er) in French");
    out.evidence.push_back(MakeEvidence(Side::kSource, seg.source_text, w.start, w.end));
    out.suggestions = {"imperative", "infinitive"};
    return {out};
  }
  return {};
}

std::vector<QaFinding> FlagAllCaps(const BiSegment& seg, const locfile::PlaceholderGrammar& grammar) {
  const std::string_view text = seg.source_text;
  const auto masks = PlaceholderMasks(text, grammar);
  std::vector<QaFinding> out;
  std::optional<Span> run;
  auto flush = [&] {
    if (!run) return;
    QaFinding f = NewFinding(seg, Category::kAllCapsRisk, Severity::kInfo,
                             "all-caps " + Quote(Slice(text, *run)) + " may confuse MT");
    f.evidence.push_back(MakeEvidence(Side::kSource, text, run->start, run->end));
    out.push_back(std::move(f));
    run.reset();
  };
  for (Span w : SplitWords(text)) {
    if (Overlaps(w, masks) || !IsAllCapsWord(Slice(text, w))) {
      flush();
      continue;
    }
    if (run && OnlySpaces(text.substr(run->end, w.start - run->end))) {
      run->end = w.end;
    } else {
      flush();
      run = w;
    }
  }
  flush();
  return out;
}

}  // namespace locmt::qa
