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


#include "locmt/metrics/chrf.h"

#include <algorithm>

#include "locmt/common/error.h"
#include "locmt/common/parallel.h"
#include "locmt/common/unicode.h"
#include "ngram_match.h"

namespace locmt::metrics {
namespace {

constexpr double kEps = 1e-16;

bool IsAsciiPunct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 0x21 && u <= 0x2F) || (u >= 0x3A && u <= 0x40) || (u >= 0x5B && u <= 0x60) ||
         (u >= 0x7B && u <= 0x7E);
}

std::vector<std::uint32_t> CharsWithoutSpace(std::string_view s) {
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t c = unicode::DecodeNext(s, pos);
    if (!unicode::IsSpace(c)) out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

}  // namespace

ChrFStats& ChrFStats::operator+=(const ChrFStats& o) {
  if (orders.size() < o.orders.size()) orders.resize(o.orders.size());
  for (std::size_t i = 0; i < o.orders.size(); ++i) {
    orders[i].hyp += o.orders[i].hyp;
    orders[i].ref += o.orders[i].ref;
    orders[i].match += o.orders[i].match;
  }
  return *this;
}

std::vector<std::string_view> ChrFWords(std::string_view text) {
  std::vector<std::string_view> out;
  for (std::string_view w : unicode::SplitWhitespace(text)) {
    if (unicode::CodePointCount(w) == 1) {
      out.push_back(w);
    } else if (IsAsciiPunct(w.back())) {
      out.push_back(w.substr(0, w.size() - 1));
      out.push_back(w.substr(w.size() - 1));
    } else if (IsAsciiPunct(w.front())) {
      out.push_back(w.substr(0, 1));
      out.push_back(w.substr(1));
    } else {
      out.push_back(w);
    }
  }
  return out;
}

ChrFStats ChrFSegmentStats(std::string_view hyp, std::string_view ref, const MetricSignature& sig) {
  std::string hl;
  std::string rl;
  if (sig.case_mode == CaseMode::kLower) {
    hl = unicode::ToLower(hyp);
    rl = unicode::ToLower(ref);
    hyp = hl;
    ref = rl;
  }
  ChrFStats st;
  st.orders.reserve(static_cast<std::size_t>(sig.char_order + sig.word_order));
  auto append = [&st](const std::vector<internal::NgramCounts>& counts) {
    for (const auto& c : counts) st.orders.push_back({c.ref > 0 ? c.hyp : 0, c.ref, c.match});
  };
  append(internal::MatchNgrams(CharsWithoutSpace(hyp), CharsWithoutSpace(ref), sig.char_order));
  if (sig.word_order > 0) {
    const auto hw = ChrFWords(hyp);
    const auto rw = ChrFWords(ref);
    std::vector<std::uint32_t> hid;
    std::vector<std::uint32_t> rid;
    internal::InternTokens(hw, rw, hid, rid);
    append(internal::MatchNgrams(hid, rid, sig.word_order));
  }
  return st;
}

double ChrFFromStats(const ChrFStats& stats, const MetricSignature& sig) {
  const double factor = sig.beta * sig.beta;
  const std::size_t order = static_cast<std::size_t>(sig.char_order + sig.word_order);
  double score = 0;
  double avg_prec = 0;
  double avg_rec = 0;
  int effective = 0;
  for (std::size_t i = 0; i < order; ++i) {
    const ChrFStats::Order o = i < stats.orders.size() ? stats.orders[i] : ChrFStats::Order{};
    const double prec = o.hyp > 0 ? static_cast<double>(o.match) / static_cast<double>(o.hyp) : kEps;
    const double rec = o.ref > 0 ? static_cast<double>(o.match) / static_cast<double>(o.ref) : kEps;
    const double denom = factor * prec + rec;
    score += denom > 0 ? (1 + factor) * prec * rec / denom : kEps;
    if (o.hyp > 0 && o.ref > 0) {
      avg_prec += prec;
      avg_rec += rec;
      ++effective;
    }
  }
  if (sig.smoothing == Smoothing::kEps) return 100 * score / static_cast<double>(order);
  if (effective == 0) {
    avg_prec = avg_rec = 0;
  } else {
    avg_prec /= effective;
    avg_rec /= effective;
  }
  if (avg_prec + avg_rec != 0) {
    double f = (1 + factor) * avg_prec * avg_rec;
    f /= factor * avg_prec + avg_rec;
    return 100 * f;
  }
  return 0.0;
}

MetricScore ChrF(std::span<const std::string> hyps, std::span<const std::string> refs, const MetricSignature& sig,
                 unsigned threads) {
  if (hyps.size() != refs.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(hyps.size()) + " hypotheses vs " + std::to_string(refs.size()) + " references");
  }
  if (hyps.empty()) throw Error(ErrorCode::kEmptyCorpus, "no segments to score");
  ValidateSignature(sig);
  const std::size_t chunks = std::min<std::size_t>(hyps.size(), 256);
  std::vector<ChrFStats> partial(chunks);
  ParallelFor(chunks, threads, [&](std::size_t c) {
    const std::size_t begin = hyps.size() * c / chunks;
    const std::size_t end = hyps.size() * (c + 1) / chunks;
    for (std::size_t i = begin; i < end; ++i) partial[c] += ChrFSegmentStats(hyps[i], refs[i], sig);
  }, 1);
  ChrFStats total;
  for (const auto& p : partial) total += p;
  return MetricScore{Metric::kChrF2pp, ChrFFromStats(total, sig), sig.ToString(), hyps.size()};
}

}  // namespace locmt::metrics
