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
#include "ireval/compat.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <unordered_set>

namespace ireval::compatibility {

std::vector<std::string> greedy_ideal(const QueryJudgments& judgments,
                                      const Ranking& ranking) {
  std::unordered_map<std::string, std::size_t> run_position;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    run_position.emplace(ranking[i].doc_id, i);
  }

  struct Candidate {
    const std::string* doc_id;
    int grade;
    bool in_run;
    std::size_t position;  // run position, or tie-break slot for the rest
  };
  std::vector<Candidate> candidates;
  for (const auto& [doc_id, grade] : judgments.docs()) {
    if (grade <= 0) continue;
    auto it = run_position.find(doc_id);
    bool in_run = it != run_position.end();
    candidates.push_back(
        Candidate{&doc_id, grade, in_run, in_run ? it->second : 0});
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.grade != b.grade) return a.grade > b.grade;
              if (a.in_run != b.in_run) return a.in_run;
              if (a.in_run) return a.position < b.position;
              return *a.doc_id < *b.doc_id;
            });

  std::vector<std::string> ideal;
  ideal.reserve(candidates.size());
  for (const auto& candidate : candidates) ideal.push_back(*candidate.doc_id);
  return ideal;
}

double rbo_truncated(const std::vector<std::string>& a,
                     const std::vector<std::string>& b, double p,
                     long long depth) {
  // Elements encountered in exactly one of the two prefixes so far. Each doc
  // id occurs at most once per list, so meeting it a second time means the
  // other list contributed it.
  std::unordered_set<std::string> seen;
  double score = 0.0;
  double weight = 1.0;
  long long overlap = 0;
  for (long long d = 1; d <= depth; ++d) {
    std::size_t i = static_cast<std::size_t>(d - 1);
    bool has_a = i < a.size();
    bool has_b = i < b.size();
    if (has_a && has_b && a[i] == b[i]) {
      ++overlap;
    } else {
      if (has_a) {
        if (seen.erase(a[i])) {
          ++overlap;
        } else {
          seen.insert(a[i]);
        }
      }
      if (has_b) {
        if (seen.erase(b[i])) {
          ++overlap;
        } else {
          seen.insert(b[i]);
        }
      }
    }
    score += weight * static_cast<double>(overlap) / static_cast<double>(d);
    weight *= p;
  }
  return (1.0 - p) * score;
}

double compat(const Ranking& ranking, const QueryJudgments& judgments,
              double p, long long depth) {
  std::vector<std::string> ideal = greedy_ideal(judgments, ranking);
  if (ideal.empty()) return 0.0;

  std::vector<std::string> run_ids;
  run_ids.reserve(ranking.size());
  for (const auto& doc : ranking) run_ids.push_back(doc.doc_id);

  long long effective_depth =
      std::min<long long>(depth, static_cast<long long>(ideal.size()));
  double best = rbo_truncated(ideal, ideal, p, effective_depth);
  if (best <= 0.0) return 0.0;
  return rbo_truncated(run_ids, ideal, p, effective_depth) / best;
}

}  // namespace ireval::compatibility
