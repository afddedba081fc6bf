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


#include "locmt/metrics/ter.h"

#include <algorithm>
#include <cmath>
#include <string_view>

#include "locmt/common/error.h"
#include "locmt/common/parallel.h"
#include "locmt/common/unicode.h"
#include "ngram_match.h"

namespace locmt::metrics {
namespace {

constexpr int kMaxShiftSize = 10;
constexpr int kMaxShiftDist = 50;
constexpr int kBeamWidth = 25;
constexpr std::int64_t kMaxShiftCandidates = 1000;
constexpr std::int64_t kInf = 10000000000000000;

// Operations of the hypothesis-by-reference matrix: kSub/kNop consume one
// word of each, kDel consumes a hypothesis word, kIns a reference word.
enum Op : char { kUndef = 'x', kNop = ' ', kSub = 's', kDel = 'd', kIns = 'i' };

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  if (s.find(from) == std::string::npos) return;
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s.find(from, pos);
    if (hit == std::string::npos) break;
    out.append(s, pos, hit - pos);
    out.append(to);
    pos = hit + from.size();
  }
  out.append(s, pos, std::string::npos);
  s = std::move(out);
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsPaddedSymbol(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 0x7B && u <= 0x7E) || (u >= 0x5B && u <= 0x60) || (u >= 0x20 && u <= 0x26) ||
         (u >= 0x28 && u <= 0x2B) || (u >= 0x3A && u <= 0x40) || u == '/';
}

// Western tercom normalisation. Byte scanning is exact here for the same
// reason as in the 13a tokenizer: only ASCII bytes anchor the rules.
std::string NormalizeWestern(std::string s) {
  ReplaceAll(s, "\n-", "");
  ReplaceAll(s, "\n", " ");
  ReplaceAll(s, "&quot;", "\"");
  ReplaceAll(s, "&amp;", "&");
  ReplaceAll(s, "&lt;", "<");
  ReplaceAll(s, "&gt;", ">");
  std::string t = " " + s + " ";
  std::string u;
  for (char c : t) {
    if (IsPaddedSymbol(c)) {
      u.push_back(' ');
      u.push_back(c);
      u.push_back(' ');
    } else {
      u.push_back(c);
    }
  }
  // The string ends in a space, so only the mid-string possessive rule fires.
  ReplaceAll(u, "'s ", " 's ");
  std::string v;
  for (std::size_t i = 0; i < u.size();) {
    if (i + 1 < u.size() && !IsDigit(u[i]) && (u[i + 1] == '.' || u[i + 1] == ',')) {
      v += u[i];
      v += ' ';
      v += u[i + 1];
      v += ' ';
      i += 2;
    } else {
      v += u[i++];
    }
  }
  std::string w;
  for (std::size_t i = 0; i < v.size();) {
    if (i + 1 < v.size() && (v[i] == '.' || v[i] == ',') && !IsDigit(v[i + 1])) {
      w += ' ';
      w += v[i];
      w += ' ';
      w += v[i + 1];
      i += 2;
    } else {
      w += v[i++];
    }
  }
  std::string x;
  for (std::size_t i = 0; i < w.size();) {
    if (i + 1 < w.size() && IsDigit(w[i]) && w[i + 1] == '-') {
      x += w[i];
      x += " - ";
      i += 2;
    } else {
      x += w[i++];
    }
  }
  return x;
}

std::string RemovePunct(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (std::string_view(".,?:;!\"()").find(c) == std::string_view::npos) out.push_back(c);
  }
  return out;
}

// Beam-restricted Levenshtein distance between hypothesis rows and
// reference columns. The band follows the length-ratio diagonal; the last row
// spans the full width.
class BeamEditDistance {
 public:
  explicit BeamEditDistance(std::span<const std::uint32_t> ref) : ref_(ref), m_(ref.size()) {}

  // Fills the whole matrix for `hyp` and keeps it for Trace() and FromRow().
  std::int64_t Full(std::span<const std::uint32_t> hyp) {
    SetLength(hyp.size());
    cost_.assign((n_ + 1) * (m_ + 1), kInf);
    op_.assign((n_ + 1) * (m_ + 1), kUndef);
    for (std::size_t j = 0; j <= m_; ++j) {
      cost_[j] = static_cast<std::int64_t>(j);
      op_[j] = kIns;
    }
    for (std::size_t i = 1; i <= n_; ++i) {
      Row<true>(i, hyp[i - 1], &cost_[(i - 1) * (m_ + 1)], &cost_[i * (m_ + 1)], &op_[i * (m_ + 1)]);
    }
    return cost_[n_ * (m_ + 1) + m_];
  }

  // Distance for a hypothesis of the same length sharing its first `start`
  // words with the one passed to the last Full() call.
  std::int64_t FromRow(std::span<const std::uint32_t> hyp, std::size_t start) {
    if (start >= n_) return cost_[n_ * (m_ + 1) + m_];
    prev_.assign(cost_.begin() + static_cast<std::ptrdiff_t>(start * (m_ + 1)),
                 cost_.begin() + static_cast<std::ptrdiff_t>((start + 1) * (m_ + 1)));
    cur_.resize(m_ + 1);
    for (std::size_t i = start + 1; i <= n_; ++i) {
      std::fill(cur_.begin(), cur_.end(), kInf);
      Row<false>(i, hyp[i - 1], prev_.data(), cur_.data(), nullptr);
      prev_.swap(cur_);
    }
    return prev_[m_];
  }

  // Operations of the last Full() matrix from the top-left corner.
  std::string Trace() const {
    std::string rev;
    std::size_t i = n_;
    std::size_t j = m_;
    while (i > 0 || j > 0) {
      const char op = op_[i * (m_ + 1) + j];
      rev.push_back(op);
      if (op == kSub || op == kNop) {
        --i;
        --j;
      } else if (op == kIns) {
        --j;
      } else if (op == kDel) {
        --i;
      } else {
        throw Error(ErrorCode::kInvalidArgument, "TER trace left the beam");
      }
    }
    return {rev.rbegin(), rev.rend()};
  }

 private:
  void SetLength(std::size_t n) {
    n_ = n;
    ratio_ = n == 0 ? 1.0 : static_cast<double>(m_) / static_cast<double>(n);
    beam_ = kBeamWidth < ratio_ / 2 ? static_cast<std::int64_t>(std::ceil(ratio_ / 2 + kBeamWidth)) : kBeamWidth;
  }

  template <bool kOps>
  void Row(std::size_t i, std::uint32_t word, const std::int64_t* prev, std::int64_t* cur, char* ops) const {
    const auto diag = static_cast<std::int64_t>(std::floor(static_cast<double>(i) * ratio_));
    std::size_t min_j = static_cast<std::size_t>(std::max<std::int64_t>(0, diag - beam_));
    std::size_t max_j = static_cast<std::size_t>(
        std::max<std::int64_t>(0, std::min<std::int64_t>(static_cast<std::int64_t>(m_) + 1, diag + beam_)));
    if (i == n_) max_j = m_ + 1;
    for (std::size_t j = min_j; j < max_j; ++j) {
      if (j == 0) {
        cur[0] = prev[0] + 1;
        if constexpr (kOps) ops[0] = kDel;
        continue;
      }
      const bool same = word == ref_[j - 1];
      std::int64_t best = cur[j];
      char best_op = kOps ? ops[j] : static_cast<char>(kUndef);
      const std::int64_t sub = prev[j - 1] + (same ? 0 : 1);
      if (best > sub) best = sub, best_op = same ? kNop : kSub;
      const std::int64_t del = prev[j] + 1;
      if (best > del) best = del, best_op = kDel;
      const std::int64_t ins = cur[j - 1] + 1;
      if (best > ins) best = ins, best_op = kIns;
      cur[j] = best;
      if constexpr (kOps) ops[j] = best_op;
    }
  }

  std::span<const std::uint32_t> ref_;
  std::size_t m_;
  std::size_t n_ = 0;
  double ratio_ = 1;
  std::int64_t beam_ = kBeamWidth;
  std::vector<std::int64_t> cost_;
  std::vector<char> op_;
  std::vector<std::int64_t> prev_;
  std::vector<std::int64_t> cur_;
};

// Python-style slice append: words[a:b] with clamping.
void AppendSlice(std::span<const std::uint32_t> w, std::int64_t a, std::int64_t b, std::vector<std::uint32_t>& out) {
  const auto n = static_cast<std::int64_t>(w.size());
  a = std::clamp<std::int64_t>(a, 0, n);
  b = std::clamp<std::int64_t>(b, 0, n);
  if (a < b) out.insert(out.end(), w.begin() + a, w.begin() + b);
}

void PerformShift(std::span<const std::uint32_t> w, std::int64_t start, std::int64_t length, std::int64_t target,
                  std::vector<std::uint32_t>& out) {
  const auto n = static_cast<std::int64_t>(w.size());
  out.clear();
  if (target < start) {
    AppendSlice(w, 0, target, out);
    AppendSlice(w, start, start + length, out);
    AppendSlice(w, target, start, out);
    AppendSlice(w, start + length, n, out);
  } else if (target > start + length) {
    AppendSlice(w, 0, start, out);
    AppendSlice(w, start + length, target, out);
    AppendSlice(w, start, start + length, out);
    AppendSlice(w, target, n, out);
  } else {
    AppendSlice(w, 0, start, out);
    AppendSlice(w, start + length, length + target, out);
    AppendSlice(w, start, start + length, out);
    AppendSlice(w, length + target, n, out);
  }
}

struct Candidate {
  std::int64_t delta;
  std::int64_t length;
  std::int64_t start_h;
  std::int64_t idx;

  // Lexicographic on (delta, length, -start_h, -idx).
  bool Beats(const Candidate& o) const {
    if (delta != o.delta) return delta > o.delta;
    if (length != o.length) return length > o.length;
    if (start_h != o.start_h) return start_h < o.start_h;
    return idx < o.idx;
  }
};

}  // namespace

double TerAlignment::Rate() const {
  if (ref_length > 0) return static_cast<double>(edits()) / static_cast<double>(ref_length);
  return edits() > 0 ? 1.0 : 0.0;
}

std::vector<std::string> TercomTokenize(std::string_view text, const MetricSignature& sig) {
  std::string s(unicode::StripRight(text));
  if (s.empty()) return {};
  if (sig.case_mode == CaseMode::kLower) s = unicode::ToLower(s);
  if (sig.normalized) s = NormalizeWestern(std::move(s));
  if (!sig.punctuation) s = RemovePunct(s);
  std::vector<std::string> out;
  for (std::string_view t : unicode::SplitWhitespace(s)) out.emplace_back(t);
  return out;
}

std::vector<std::string> TercomTokenizeReference(std::string_view text, const MetricSignature& sig) {
  std::vector<std::string> once = TercomTokenize(text, sig);
  if (!sig.normalized) return once;
  std::string joined;
  for (const auto& t : once) {
    if (!joined.empty()) joined += ' ';
    joined += t;
  }
  return TercomTokenize(joined, sig);
}

TerAlignment TerSegmentIds(std::span<const std::uint32_t> hyp, std::span<const std::uint32_t> ref) {
  TerAlignment a;
  const auto n = static_cast<std::int64_t>(hyp.size());
  const auto m = static_cast<std::int64_t>(ref.size());
  a.ref_length = m;
  if (m == 0) {
    a.insertions = n;
    return a;
  }
  BeamEditDistance ed(ref);
  std::vector<std::uint32_t> cur(hyp.begin(), hyp.end());
  std::vector<std::uint32_t> shifted;
  std::vector<std::uint32_t> best_words;
  std::vector<std::int64_t> align(static_cast<std::size_t>(m));
  std::vector<std::int64_t> hyp_err_sum(static_cast<std::size_t>(n) + 1);
  std::vector<std::int64_t> ref_err_sum(static_cast<std::size_t>(m) + 1);
  std::int64_t checked = 0;

  while (true) {
    const std::int64_t pre = ed.Full(cur);
    const std::string trace = ed.Trace();
    {
      std::int64_t ph = -1;
      std::int64_t pr = -1;
      for (char op : trace) {
        // Hypothesis-side view: kDel here is a hypothesis-only word.
        if (op == kNop || op == kSub) {
          ++ph;
          ++pr;
          align[pr] = ph;
          hyp_err_sum[ph + 1] = hyp_err_sum[ph] + (op == kSub);
          ref_err_sum[pr + 1] = ref_err_sum[pr] + (op == kSub);
        } else if (op == kDel) {
          ++ph;
          hyp_err_sum[ph + 1] = hyp_err_sum[ph] + 1;
        } else {
          ++pr;
          align[pr] = ph;
          ref_err_sum[pr + 1] = ref_err_sum[pr] + 1;
        }
      }
    }

    bool have_best = false;
    Candidate best{};
    bool stop = false;
    for (std::int64_t sh = 0; sh < n && !stop; ++sh) {
      for (std::int64_t sr = 0; sr < m && !stop; ++sr) {
        if (std::abs(sr - sh) > kMaxShiftDist) continue;
        std::int64_t len = 0;
        while (len < kMaxShiftSize && cur[sh + len] == ref[sr + len]) {
          ++len;
          const bool last = n == sh + len || m == sr + len;
          const bool skip = hyp_err_sum[sh + len] - hyp_err_sum[sh] == 0 ||
                            ref_err_sum[sr + len] - ref_err_sum[sr] == 0 ||
                            (sh <= align[sr] && align[sr] < sh + len);
          if (!skip) {
            std::int64_t prev_idx = -1;
            for (std::int64_t off = -1; off < len; ++off) {
              const std::int64_t idx = sr + off == -1 ? 0 : align[sr + off] + 1;
              if (idx == prev_idx) continue;
              prev_idx = idx;
              PerformShift(cur, sh, len, idx, shifted);
              const Candidate c{pre - ed.FromRow(shifted, static_cast<std::size_t>(std::min(sh, idx))), len, sh, idx};
              ++checked;
              if (!have_best || c.Beats(best)) {
                have_best = true;
                best = c;
                best_words = shifted;
              }
            }
            if (checked >= kMaxShiftCandidates) {
              stop = true;
              break;
            }
          }
          if (last) break;
        }
      }
    }
    if (checked >= kMaxShiftCandidates) break;
    if (!have_best || best.delta <= 0) break;
    ++a.shifts;
    cur.swap(best_words);
  }

  ed.Full(cur);
  for (char op : ed.Trace()) {
    if (op == kSub) ++a.substitutions;
    else if (op == kDel) ++a.insertions;
    else if (op == kIns) ++a.deletions;
  }
  return a;
}

TerAlignment TerSegmentTokens(std::span<const std::string> hyp, std::span<const std::string> ref) {
  std::vector<std::string_view> hv(hyp.begin(), hyp.end());
  std::vector<std::string_view> rv(ref.begin(), ref.end());
  std::vector<std::uint32_t> hid;
  std::vector<std::uint32_t> rid;
  internal::InternTokens(hv, rv, hid, rid);
  return TerSegmentIds(hid, rid);
}

TerResult Ter(std::span<const std::string> hyps, std::span<const std::string> refs, const MetricSignature& sig,
              unsigned threads) {
  if (hyps.size() != refs.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(hyps.size()) + " hypotheses vs " + std::to_string(refs.size()) + " references");
  }
  if (hyps.empty()) throw Error(ErrorCode::kEmptyCorpus, "no segments to score");
  ValidateSignature(sig);
  TerResult r;
  r.alignments.resize(hyps.size());
  ParallelFor(hyps.size(), threads, [&](std::size_t i) {
    r.alignments[i] = TerSegmentTokens(TercomTokenize(hyps[i], sig), TercomTokenizeReference(refs[i], sig));
  }, 64);
  for (const auto& a : r.alignments) {
    r.total_edits += a.edits();
    r.total_ref_length += a.ref_length;
  }
  if (r.total_ref_length == 0) {
    throw Error(ErrorCode::kEmptyRef, "every reference is empty; TER is undefined");
  }
  const double value = 100 * (static_cast<double>(r.total_edits) / static_cast<double>(r.total_ref_length));
  r.score = MetricScore{Metric::kTer, value, sig.ToString(), hyps.size()};
  return r;
}

}  // namespace locmt::metrics
