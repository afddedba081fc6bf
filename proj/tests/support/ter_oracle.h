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


#ifndef LOCMT_TESTS_SUPPORT_TER_ORACLE_H_
#define LOCMT_TESTS_SUPPORT_TER_ORACLE_H_

// Reference TER computations written for tests only. They share no code with
// the library: a full (unbanded) Levenshtein matrix, shifts built by vector
// splicing, and candidate rules restated from the tercom description.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace locmt::testing {

using Words = std::vector<int>;

struct OracleDistance {
  int cost = 0;
  // Path from the top-left corner; 'M' match, 'S' substitution, 'H' a
  // hypothesis-only word, 'R' a reference-only word.
  std::string path;
};

// Ties prefer a diagonal step, then a hypothesis-only step, then a
// reference-only step, judged at each cell; the path is read back from the
// bottom-right corner.
inline OracleDistance OracleLevenshtein(const Words& h, const Words& r) {
  const std::size_t n = h.size();
  const std::size_t m = r.size();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1));
  std::vector<std::vector<char>> how(n + 1, std::vector<char>(m + 1, 'R'));
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    d[i][0] = static_cast<int>(i);
    how[i][0] = 'H';
    for (std::size_t j = 1; j <= m; ++j) {
      const bool eq = h[i - 1] == r[j - 1];
      int best = d[i - 1][j - 1] + (eq ? 0 : 1);
      char op = eq ? 'M' : 'S';
      if (d[i - 1][j] + 1 < best) best = d[i - 1][j] + 1, op = 'H';
      if (d[i][j - 1] + 1 < best) best = d[i][j - 1] + 1, op = 'R';
      d[i][j] = best;
      how[i][j] = op;
    }
  }
  OracleDistance out;
  out.cost = d[n][m];
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const char op = how[i][j];
    out.path.insert(out.path.begin(), op);
    if (op == 'M' || op == 'S') {
      --i;
      --j;
    } else if (op == 'H') {
      --i;
    } else {
      --j;
    }
  }
  return out;
}

struct OracleShift {
  int start = 0;   // first hypothesis word of the block
  int length = 0;
  int target = 0;  // insertion point as defined by the tercom splice rules
  Words result;
};

// Tercom's splice: `target` indexes the original sequence when the block
// moves left, and the sequence without the block when it moves right.
inline Words OracleSplice(const Words& w, int start, int length, int target) {
  Words block(w.begin() + start, w.begin() + start + length);
  Words rest(w.begin(), w.begin() + start);
  rest.insert(rest.end(), w.begin() + start + length, w.end());
  int at;
  if (target < start) {
    at = target;
  } else if (target > start + length) {
    at = target - length;
  } else {
    at = std::min<int>(target, static_cast<int>(rest.size()));
  }
  rest.insert(rest.begin() + at, block.begin(), block.end());
  return rest;
}

// All shift candidates tercom would evaluate from `h`, in generation order,
// grouped by (block start, reference start, block length).
// A block must equal a reference span, be at most 10 words long, start at
// most 50 positions away from that span, contain an erroneous hypothesis word,
// cover an erroneous reference word, and not already be aligned to the start
// of the reference span.
inline std::vector<std::vector<OracleShift>> OracleCandidates(const Words& h, const Words& r) {
  const OracleDistance ed = OracleLevenshtein(h, r);
  const int n = static_cast<int>(h.size());
  const int m = static_cast<int>(r.size());
  std::vector<int> hyp_bad(n, 0);
  std::vector<int> ref_bad(m, 0);
  std::vector<int> ref_to_hyp(m, -1);
  int hi = -1;
  int ri = -1;
  for (char op : ed.path) {
    if (op == 'M' || op == 'S') {
      ++hi;
      ++ri;
      ref_to_hyp[ri] = hi;
      if (op == 'S') hyp_bad[hi] = ref_bad[ri] = 1;
    } else if (op == 'H') {
      hyp_bad[++hi] = 1;
    } else {
      ++ri;
      ref_to_hyp[ri] = hi;
      ref_bad[ri] = 1;
    }
  }
  std::vector<std::vector<OracleShift>> out;
  for (int sh = 0; sh < n; ++sh) {
    for (int sr = 0; sr < m; ++sr) {
      if (std::abs(sr - sh) > 50) continue;
      for (int len = 1; len <= 10 && sh + len <= n && sr + len <= m; ++len) {
        if (h[sh + len - 1] != r[sr + len - 1]) break;
        bool hb = false;
        bool rb = false;
        for (int k = 0; k < len; ++k) hb = hb || hyp_bad[sh + k];
        for (int k = 0; k < len; ++k) rb = rb || ref_bad[sr + k];
        if (!hb || !rb) continue;
        if (ref_to_hyp[sr] >= sh && ref_to_hyp[sr] < sh + len) continue;
        out.emplace_back();
        int last = -1;
        for (int off = -1; off < len; ++off) {
          const int target = sr + off < 0 ? 0 : ref_to_hyp[sr + off] + 1;
          if (target == last) continue;
          last = target;
          out.back().push_back({sh, len, target, OracleSplice(h, sh, len, target)});
        }
      }
    }
  }
  return out;
}

// Greedy tercom: apply the candidate with the largest gain (ties: longer
// block, earlier block, earlier target) while the gain is positive; give up
// once 1000 candidates have been evaluated in total.
inline int OracleGreedyTer(const Words& hyp, const Words& ref) {
  if (ref.empty()) return static_cast<int>(hyp.size());
  Words cur = hyp;
  int shifts = 0;
  int evaluated = 0;
  while (true) {
    const int base = OracleLevenshtein(cur, ref).cost;
    const OracleShift* best = nullptr;
    int best_gain = 0;
    const auto groups = OracleCandidates(cur, ref);
    bool capped = false;
    for (const auto& group : groups) {
      for (const auto& c : group) {
        const int gain = base - OracleLevenshtein(c.result, ref).cost;
        ++evaluated;
        bool better = best == nullptr || gain > best_gain;
        if (!better && gain == best_gain) {
          if (c.length != best->length) {
            better = c.length > best->length;
          } else if (c.start != best->start) {
            better = c.start < best->start;
          } else {
            better = c.target < best->target;
          }
        }
        if (better) {
          best = &c;
          best_gain = gain;
        }
      }
      if (evaluated >= 1000) {
        capped = true;
        break;
      }
    }
    if (capped || best == nullptr || best_gain <= 0) break;
    ++shifts;
    cur = best->result;
  }
  return shifts + OracleLevenshtein(cur, ref).cost;
}

// Minimum of shifts + edit distance over every sequence of admissible shifts
// in which each shift strictly lowers the edit distance.
inline int OracleExhaustiveTer(const Words& hyp, const Words& ref) {
  if (ref.empty()) return static_cast<int>(hyp.size());
  // Shifts permute the hypothesis, so unmatched words bound the distance.
  std::map<int, int> bag;
  for (int w : hyp) ++bag[w];
  int common = 0;
  for (int w : ref) {
    if (bag[w] > 0) --bag[w], ++common;
  }
  const int floor_ed = static_cast<int>(std::max(hyp.size(), ref.size())) - common;

  int best = OracleLevenshtein(hyp, ref).cost;
  std::map<Words, int> seen;  // fewest shifts with which a state was reached
  std::vector<std::pair<Words, int>> stack{{hyp, 0}};
  while (!stack.empty()) {
    auto [cur, shifts] = std::move(stack.back());
    stack.pop_back();
    auto it = seen.find(cur);
    if (it != seen.end() && it->second <= shifts) continue;
    seen[cur] = shifts;
    const int ed = OracleLevenshtein(cur, ref).cost;
    best = std::min(best, shifts + ed);
    if (shifts + 1 + floor_ed >= best) continue;
    for (auto& group : OracleCandidates(cur, ref)) {
      for (auto& c : group) {
        if (OracleLevenshtein(c.result, ref).cost < ed) stack.emplace_back(std::move(c.result), shifts + 1);
      }
    }
  }
  return best;
}

}  // namespace locmt::testing

#endif  // LOCMT_TESTS_SUPPORT_TER_ORACLE_H_
