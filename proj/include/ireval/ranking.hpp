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
#ifndef IREVAL_RANKING_HPP_
#define IREVAL_RANKING_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ireval/trec_io.hpp"

namespace ireval {

// One document in an induced ranking, annotated with its grade when judged.
struct RankedDoc {
  std::string doc_id;
  std::optional<int> grade;

  bool judged() const { return grade.has_value(); }
  // Grade with unjudged treated as 0; negative grades pass through.
  int grade_or_zero() const { return grade.value_or(0); }
  // True when the document counts as relevant at the given threshold.
  bool relevant(int threshold) const {
    return grade.has_value() && *grade >= threshold;
  }
};

using Ranking = std::vector<RankedDoc>;

// Orders one query's run documents by score descending, ties by doc id
// descending (byte-wise), and annotates each with its judgment. The run's
// own rank field plays no part.
Ranking induce_ranking(const std::vector<RunTable::ScoredDoc>& run_docs,
                       const QueryJudgments& judgments);

}  // namespace ireval

#endif  // IREVAL_RANKING_HPP_
