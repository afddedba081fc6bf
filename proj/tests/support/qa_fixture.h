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


#ifndef LOCMT_TESTS_SUPPORT_QA_FIXTURE_H_
#define LOCMT_TESTS_SUPPORT_QA_FIXTURE_H_

// English-French conversations that pass every automatic check, and copies
// with exactly one planted defect per chosen segment.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "locmt/corpus/segment.h"
#include "locmt/qa/config.h"
#include "locmt/qa/finding.h"

namespace locmt::testing {

inline constexpr std::size_t kQaGroupSize = 9;

struct QaFixture {
  std::vector<corpus::BiSegment> segments;
  qa::QaConfig config;
  // Positions holding a planted defect, per category.
  std::map<qa::Category, std::vector<std::size_t>> planted;
};

inline qa::QaConfig QaFixtureConfig() {
  qa::QaConfig c = qa::QaConfig::Default();
  c.termbase.entries = {{"Skyrim", "Bordeciel", false, {}},
                        {"Greybeards", "Grises-Barbes", false, {}},
                        {"Dogmeat", "Canigou", false, {"viande de chien"}}};
  return c;
}

inline std::pair<std::string, std::string> CleanPair(std::size_t slot, const std::string& g) {
  switch (slot) {
    case 0: return {"The guard " + g + " has %d gold.", "Le garde " + g + " a %d pièces d'or."};
    case 1: return {"Welcome to Skyrim, friend " + g + ".", "Bienvenue à Bordeciel, ami " + g + "."};
    case 2: return {"The Greybeards await " + g + ".", "Les Grises-Barbes vous attendent " + g + "."};
    case 3: return {"Dogmeat found " + g + " bones.", "Canigou a trouvé " + g + " os."};
    case 4: return {"Can you help me, " + g + "?", "Pouvez-vous m'aider, " + g + " ?"};
    case 5: return {"By the gods, woman, why " + g + "?", "Mais pourquoi " + g + ", par les dieux ?"};
    case 6: return {"We should leave now " + g + ".", "Nous devrions partir maintenant " + g + "."};
    case 7: return {"The fire burns " + g + ".", "Le feu brûle " + g + "."};
    default: return {"Night falls " + g + ".", "La nuit tombe " + g + "."};
  }
}

// Slot that receives each category's defect and the defective pair.
inline std::size_t PlantSlot(qa::Category c) {
  switch (c) {
    case qa::Category::kPlaceholderMismatch: return 0;
    case qa::Category::kCapitalizationDrift: return 1;
    case qa::Category::kUntranslatedTerm: return 2;
    case qa::Category::kTermViolation: return 3;
    case qa::Category::kGenderMarked: return 5;
    case qa::Category::kRegisterInconsistent: return 6;
    case qa::Category::kAmbiguousVerbForm: return 7;
    default: return 8;
  }
}

inline std::pair<std::string, std::string> DefectivePair(qa::Category c, const std::string& g) {
  switch (c) {
    case qa::Category::kPlaceholderMismatch: return {"The guard " + g + " has %d gold.", "Le garde " + g + " a de l'or."};
    case qa::Category::kCapitalizationDrift: return {"Iron Sword of Doom " + g, "Épée De Fer Du Destin " + g};
    case qa::Category::kUntranslatedTerm: return {"The Greybeards await " + g + ".", "Les Greybeards vous attendent " + g + "."};
    case qa::Category::kTermViolation: return {"Dogmeat found " + g + " bones.", "La viande de chien a trouvé " + g + " os."};
    case qa::Category::kGenderMarked: return {"By the gods, woman, why " + g + "?", "Par les dieux, femme, pourquoi " + g + " ?"};
    case qa::Category::kRegisterInconsistent: return {"We should leave now " + g + ".", "Tu devrais partir maintenant " + g + "."};
    case qa::Category::kAmbiguousVerbForm: return {"Open the door " + g + ".", "Ouvrir la porte " + g + "."};
    default: return {"The sign reads DANGER " + g + ".", "Le panneau indique DANGER " + g + "."};
  }
}

inline const std::vector<qa::Category>& AutomaticCategories() {
  static const std::vector<qa::Category> c = {
      qa::Category::kPlaceholderMismatch, qa::Category::kTermViolation,       qa::Category::kUntranslatedTerm,
      qa::Category::kCapitalizationDrift, qa::Category::kGenderMarked,        qa::Category::kRegisterInconsistent,
      qa::Category::kAmbiguousVerbForm,   qa::Category::kAllCapsRisk};
  return c;
}

inline QaFixture MakeQaControl(std::size_t groups) {
  QaFixture f;
  f.config = QaFixtureConfig();
  for (std::size_t g = 0; g < groups; ++g) {
    const std::string tag = std::to_string(g + 1);
    for (std::size_t slot = 0; slot < kQaGroupSize; ++slot) {
      auto [src, tgt] = CleanPair(slot, tag);
      f.segments.push_back(corpus::MakeSegment(src, tgt, "en", "fr", {{"conversation", "conv-" + tag}}));
    }
  }
  return f;
}

// Plants `per_category` defects of every automatic category into distinct,
// seeded groups (one defect of a category per group).
inline QaFixture MakeQaPlanted(std::uint64_t seed, std::size_t groups, std::size_t per_category) {
  QaFixture f = MakeQaControl(groups);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(groups);
  for (qa::Category c : AutomaticCategories()) {
    for (std::size_t i = 0; i < groups; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k < per_category && k < groups; ++k) {
      const std::size_t g = order[k];
      const std::size_t pos = g * kQaGroupSize + PlantSlot(c);
      auto [src, tgt] = DefectivePair(c, std::to_string(g + 1));
      corpus::BiSegment& s = f.segments[pos];
      s = corpus::MakeSegment(src, tgt, "en", "fr", s.meta);
      f.planted[c].push_back(pos);
    }
    std::sort(f.planted[c].begin(), f.planted[c].end());
  }
  return f;
}

}  // namespace locmt::testing

#endif  // LOCMT_TESTS_SUPPORT_QA_FIXTURE_H_
