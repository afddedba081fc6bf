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


#ifndef LOCMT_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_
#define LOCMT_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_

// Synthetic bilingual corpora with known contents.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "locmt/corpus/segment.h"

namespace locmt::testing {

inline const std::vector<std::string>& EnglishWords() {
  static const std::vector<std::string> w = {"the",   "guard", "dragon", "sword", "city",  "north", "gold",
                                             "quest", "shout", "shield", "arrow", "king",  "road",  "fire",
                                             "stone", "night", "bring",  "find",  "speak", "wait"};
  return w;
}

inline const std::vector<std::string>& FrenchWords() {
  static const std::vector<std::string> w = {"le",     "garde",   "dragon", "épée",    "ville",  "nord",  "or",
                                             "quête",  "cri",     "bouclier", "flèche", "roi",   "route", "feu",
                                             "pierre", "nuit",    "apporte", "trouve", "parle", "attends"};
  return w;
}

// A distinct translated pair: the index is spelled into both sides so no two
// calls with different n collide, and the sides never match.
inline corpus::BiSegment DistinctPair(std::mt19937_64& rng, std::size_t n, corpus::Meta meta = {}) {
  const auto& en = EnglishWords();
  const auto& fr = FrenchWords();
  std::string src;
  std::string tgt;
  const std::size_t len = 2 + rng() % 10;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t w = rng() % en.size();
    src += en[w] + " ";
    tgt += fr[w] + " ";
  }
  src += "no. " + std::to_string(n) + ".";
  tgt += "n° " + std::to_string(n) + ".";
  return corpus::MakeSegment(src, tgt, "en", "fr", std::move(meta));
}

struct PlantedCorpus {
  std::vector<corpus::BiSegment> segments;
  std::size_t empties = 0;
  std::size_t untranslated = 0;
  std::size_t duplicates = 0;
  std::size_t clean = 0;
};

// `clean` distinct pairs plus planted empties, untranslated pairs and exact
// repeats of earlier clean pairs, shuffled together.
inline PlantedCorpus MakePlantedCorpus(std::uint64_t seed, std::size_t clean, std::size_t empties,
                                       std::size_t untranslated, std::size_t duplicates) {
  std::mt19937_64 rng(seed);
  PlantedCorpus pc{{}, empties, untranslated, duplicates, clean};
  std::vector<corpus::BiSegment> base;
  for (std::size_t i = 0; i < clean; ++i) base.push_back(DistinctPair(rng, i));
  std::vector<corpus::BiSegment> extra;
  static const std::vector<std::pair<std::string, std::string>> kEmpty = {
      {"", "Bonjour"}, {"Hello", ""}, {"  ", "x"}, {"y", "\t "}, {"", ""}};
  for (std::size_t i = 0; i < empties; ++i) {
    const auto& e = kEmpty[i % kEmpty.size()];
    extra.push_back(corpus::MakeSegment(e.first, e.second, "en", "fr"));
  }
  for (std::size_t i = 0; i < untranslated; ++i) {
    const std::string s = "Ysgramor " + std::to_string(i);
    extra.push_back(corpus::MakeSegment(s, s, "en", "fr"));
  }
  // Duplicates must follow their original, so repeats are appended after a
  // shuffle of the rest.
  std::vector<corpus::BiSegment> all = base;
  all.insert(all.end(), extra.begin(), extra.end());
  std::shuffle(all.begin(), all.end(), rng);
  for (std::size_t i = 0; i < duplicates; ++i) {
    const std::size_t pos = all.size() - rng() % (all.size() / 2 + 1);
    all.insert(all.begin() + static_cast<std::ptrdiff_t>(pos), base[rng() % (clean / 2)]);
  }
  pc.segments = std::move(all);
  return pc;
}

// One game of `skyrim` segments (game=Skyrim) and games-1 of `others` each.
inline std::vector<corpus::BiSegment> MakeGameCorpus(std::uint64_t seed, std::size_t skyrim, std::size_t others,
                                                     std::size_t games) {
  std::mt19937_64 rng(seed);
  std::vector<corpus::BiSegment> out;
  std::size_t n = 0;
  for (std::size_t g = 0; g < games; ++g) {
    const std::string name = g == 0 ? "Skyrim" : "Game" + std::to_string(g);
    const std::size_t count = g == 0 ? skyrim : others;
    for (std::size_t i = 0; i < count; ++i) out.push_back(DistinctPair(rng, n++, {{"game", name}}));
  }
  return out;
}

}  // namespace locmt::testing

#endif  // LOCMT_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_
