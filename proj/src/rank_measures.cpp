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
#include "ireval/rank_measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace ireval::metrics {

namespace {

constexpr double kInfApEpsilon = 1e-5;

std::size_t depth_limit(const Ranking& ranking, long long k) {
  if (k < 0) return ranking.size();
  return std::min<std::size_t>(ranking.size(), static_cast<std::size_t>(k));
}

double gain_of(int grade, GainFunction gain) {
  int g = std::max(grade, 0);
  return gain == GainFunction::linear ? static_cast<double>(g)
                                      : std::exp2(g) - 1.0;
}

}  // namespace

double precision_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                      int rel, long long k) {
  (void)judgments;
  if (k < 1) return 0.0;
  long long hits = 0;
  for (std::size_t i = 0; i < depth_limit(ranking, k); ++i) {
    if (ranking[i].relevant(rel)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

double recall_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                   int rel, long long k) {
  int total_relevant = judgments.relevant_count(rel);
  if (total_relevant == 0 || k < 1) return 0.0;
  long long hits = 0;
  for (std::size_t i = 0; i < depth_limit(ranking, k); ++i) {
    if (ranking[i].relevant(rel)) ++hits;
  }
  return static_cast<double>(hits) / total_relevant;
}

double average_precision(const Ranking& ranking,
                         const QueryJudgments& judgments, int rel,
                         std::optional<long long> cutoff) {
  int total_relevant = judgments.relevant_count(rel);
  if (total_relevant == 0) return 0.0;
  std::size_t depth = depth_limit(ranking, cutoff.value_or(-1));
  double sum = 0.0;
  long long hits = 0;
  for (std::size_t i = 0; i < depth; ++i) {
    if (ranking[i].relevant(rel)) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  return sum / total_relevant;
}

double r_precision(const Ranking& ranking, const QueryJudgments& judgments,
                   int rel) {
  int total_relevant = judgments.relevant_count(rel);
  if (total_relevant == 0) return 0.0;
  return precision_at_k(ranking, judgments, rel, total_relevant);
}

double reciprocal_rank(const Ranking& ranking, const QueryJudgments& judgments,
                       int rel, std::optional<long long> cutoff) {
  (void)judgments;
  std::size_t depth = depth_limit(ranking, cutoff.value_or(-1));
  for (std::size_t i = 0; i < depth; ++i) {
    if (ranking[i].relevant(rel)) return 1.0 / static_cast<double>(i + 1);
  }
  return 0.0;
}

double ndcg(const Ranking& ranking, const QueryJudgments& judgments,
            GainFunction gain, std::optional<long long> cutoff) {
  std::size_t depth = depth_limit(ranking, cutoff.value_or(-1));
  double dcg = 0.0;
  for (std::size_t i = 0; i < depth; ++i) {
    if (ranking[i].judged()) {
      dcg += gain_of(*ranking[i].grade, gain) / std::log2(i + 2.0);
    }
  }

  std::vector<int> ideal_grades;
  ideal_grades.reserve(judgments.judged_count());
  for (const auto& [doc, grade] : judgments.docs()) {
    ideal_grades.push_back(grade);
  }
  std::sort(ideal_grades.begin(), ideal_grades.end(), std::greater<int>());
  std::size_t ideal_depth = ideal_grades.size();
  if (cutoff.has_value()) {
    ideal_depth = std::min<std::size_t>(ideal_depth,
                                        static_cast<std::size_t>(*cutoff));
  }
  double idcg = 0.0;
  for (std::size_t i = 0; i < ideal_depth; ++i) {
    idcg += gain_of(ideal_grades[i], gain) / std::log2(i + 2.0);
  }

  return idcg > 0.0 ? dcg / idcg : 0.0;
}

double err_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                long long k) {
  int g_max = judgments.table_max_grade();
  if (g_max <= 0) return 0.0;
  double denom = std::exp2(g_max);
  double err = 0.0;
  double continue_prob = 1.0;
  for (std::size_t i = 0; i < depth_limit(ranking, k); ++i) {
    double satisfaction =
        (std::exp2(std::max(ranking[i].grade_or_zero(), 0)) - 1.0) / denom;
    err += continue_prob * satisfaction / static_cast<double>(i + 1);
    continue_prob *= 1.0 - satisfaction;
  }
  return err;
}

double bpref(const Ranking& ranking, const QueryJudgments& judgments,
             int rel) {
  int total_relevant = judgments.relevant_count(rel);
  if (total_relevant == 0) return 0.0;
  int total_nonrelevant = judgments.nonrelevant_count(rel);
  int bound = std::min(total_relevant, total_nonrelevant);

  double sum = 0.0;
  long long nonrelevant_above = 0;
  for (const auto& doc : ranking) {
    if (!doc.judged()) continue;
    if (*doc.grade >= rel) {
      if (bound == 0) {
        sum += 1.0;
      } else {
        sum += 1.0 - static_cast<double>(std::min<long long>(
                         nonrelevant_above, bound)) /
                         bound;
      }
    } else {
      ++nonrelevant_above;
    }
  }
  return sum / total_relevant;
}

double inf_ap(const Ranking& ranking, const QueryJudgments& judgments,
              int rel) {
  int total_relevant = judgments.relevant_count(rel);
  if (total_relevant == 0) return 0.0;

  double sum = 0.0;
  long long judged_above = 0;
  long long relevant_above = 0;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const auto& doc = ranking[i];
    if (doc.relevant(rel)) {
      std::size_t rank = i + 1;
      if (rank == 1) {
        sum += 1.0;
      } else {
        double above = static_cast<double>(rank - 1);
        double judged_rate = static_cast<double>(judged_above) / above;
        double rel_k = static_cast<double>(relevant_above);
        double nonrel_k = static_cast<double>(judged_above - relevant_above);
        double precision_est = (rel_k + kInfApEpsilon) /
                               (rel_k + nonrel_k + 2.0 * kInfApEpsilon);
        sum += 1.0 / rank + (above / rank) * judged_rate * precision_est;
      }
    }
    if (doc.judged()) {
      ++judged_above;
      if (doc.relevant(rel)) ++relevant_above;
    }
  }
  return sum / total_relevant;
}

double iprec_at_recall(const Ranking& ranking, const QueryJudgments& judgments,
                       int rel, double recall_point) {
  int total_relevant = judgments.relevant_count(rel);
  if (total_relevant == 0) return 0.0;
  double best = 0.0;
  long long hits = 0;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (ranking[i].relevant(rel)) ++hits;
    double recall = static_cast<double>(hits) / total_relevant;
    if (recall >= recall_point) {
      best = std::max(best, static_cast<double>(hits) /
                                static_cast<double>(i + 1));
    }
  }
  return best;
}

double success_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                    int rel, long long k) {
  (void)judgments;
  for (std::size_t i = 0; i < depth_limit(ranking, k); ++i) {
    if (ranking[i].relevant(rel)) return 1.0;
  }
  return 0.0;
}

double judged_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                   long long k) {
  (void)judgments;
  if (k < 1) return 0.0;
  long long judged = 0;
  for (std::size_t i = 0; i < depth_limit(ranking, k); ++i) {
    if (ranking[i].judged()) ++judged;
  }
  return static_cast<double>(judged) / static_cast<double>(k);
}

SetScores set_measures(const Ranking& ranking, const QueryJudgments& judgments,
                       int rel, double beta) {
  SetScores scores;
  long long retrieved = static_cast<long long>(ranking.size());
  long long relevant_retrieved = 0;
  for (const auto& doc : ranking) {
    if (doc.relevant(rel)) ++relevant_retrieved;
  }
  int total_relevant = judgments.relevant_count(rel);

  if (retrieved > 0) {
    scores.set_p = static_cast<double>(relevant_retrieved) / retrieved;
  }
  if (total_relevant > 0) {
    scores.set_r = static_cast<double>(relevant_retrieved) / total_relevant;
  }
  double beta2 = beta * beta;
  double denom = beta2 * scores.set_p + scores.set_r;
  if (denom > 0.0) {
    scores.set_f = (1.0 + beta2) * scores.set_p * scores.set_r / denom;
  }
  scores.set_ap = scores.set_p * scores.set_r;
  return scores;
}

Counts count_measures(const Ranking& ranking, const QueryJudgments& judgments,
                      int rel) {
  Counts counts;
  counts.num_ret = static_cast<long long>(ranking.size());
  counts.num_rel = judgments.relevant_count(rel);
  for (const auto& doc : ranking) {
    if (doc.relevant(rel)) ++counts.num_rel_ret;
  }
  return counts;
}

}  // namespace ireval::metrics
