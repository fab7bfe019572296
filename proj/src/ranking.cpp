/*
 * Copyright 2026 The ireval authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "ireval/ranking.hpp"

#include <algorithm>

namespace ireval {

Ranking induce_ranking(const std::vector<RunTable::ScoredDoc>& run_docs,
                       const QueryJudgments& judgments) {
  std::vector<const RunTable::ScoredDoc*> order;
  order.reserve(run_docs.size());
  for (const auto& doc : run_docs) order.push_back(&doc);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->second != b->second) return a->second > b->second;
    return a->first > b->first;
  });

  Ranking ranking;
  ranking.reserve(order.size());
  for (const auto* doc : order) {
    ranking.push_back(RankedDoc{doc->first, judgments.grade(doc->first)});
  }
  return ranking;
}

}  // namespace ireval
