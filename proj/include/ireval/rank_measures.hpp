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
#ifndef IREVAL_RANK_MEASURES_HPP_
#define IREVAL_RANK_MEASURES_HPP_

#include <optional>

#include "ireval/ranking.hpp"
#include "ireval/trec_io.hpp"

// Pure rank-based effectiveness measures. Conventions shared by all of them:
// unjudged documents count as nonrelevant (except judged_at_k, which counts
// judgment presence, and bpref/inf_ap, which distinguish judged-nonrelevant
// from unjudged); negative grades are judged-nonrelevant; rankings shorter
// than a cutoff are padded with nonrelevant documents.
namespace ireval::metrics {

enum class GainFunction { linear, exp };

// |{i <= k : grade_i >= rel}| / k.
double precision_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                      int rel, long long k);

// |{i <= k : grade_i >= rel}| / R(rel); 0 when R(rel) = 0.
double recall_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                   int rel, long long k);

// Mean of precision-at-rank over ranks of relevant documents (within the
// cutoff when given), divided by R(rel); 0 when R(rel) = 0.
double average_precision(const Ranking& ranking,
                         const QueryJudgments& judgments, int rel,
                         std::optional<long long> cutoff = std::nullopt);

// precision_at_k with k = R(rel); 0 when R(rel) = 0.
double r_precision(const Ranking& ranking, const QueryJudgments& judgments,
                   int rel);

// 1/rank of the first document with grade >= rel within the cutoff; 0 when
// there is none. Absent or fully-unjudged rankings score 0, never error.
double reciprocal_rank(const Ranking& ranking, const QueryJudgments& judgments,
                       int rel,
                       std::optional<long long> cutoff = std::nullopt);

// DCG over gains g(grade)/log2(rank+1), normalized by the ideal DCG over the
// judged documents; 0 when the ideal DCG is 0. The linear gain is max(g, 0),
// the exponential gain 2^max(g, 0) - 1 (extra weight on high relevance).
double ndcg(const Ranking& ranking, const QueryJudgments& judgments,
            GainFunction gain,
            std::optional<long long> cutoff = std::nullopt);

// Cascade model: with g_max the maximum grade in the whole qrels table and
// R_i = (2^max(grade_i,0) - 1) / 2^g_max, sums (1/i) R_i prod_{j<i}(1 - R_j).
double err_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                long long k);

// Preference among judged documents: penalizes relevant documents ranked
// below judged-nonrelevant ones; 0 when R(rel) = 0.
double bpref(const Ranking& ranking, const QueryJudgments& judgments, int rel);

// Inferred AP under incomplete judgments; reduces to average_precision when
// every retrieved document is judged.
double inf_ap(const Ranking& ranking, const QueryJudgments& judgments,
              int rel);

// Interpolated precision: max precision over ranks whose recall reaches the
// recall point; 0 when unreachable or R(rel) = 0.
double iprec_at_recall(const Ranking& ranking, const QueryJudgments& judgments,
                       int rel, double recall_point);

// 1 when any of the top k documents has grade >= rel, else 0.
double success_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                    int rel, long long k);

// Fraction of the top k documents that carry any judgment (any grade,
// including 0 and negatives).
double judged_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                   long long k);

struct SetScores {
  double set_p = 0.0;
  double set_r = 0.0;
  double set_f = 0.0;
  double set_ap = 0.0;
};

// Whole-retrieved-set precision/recall/F/AP.
SetScores set_measures(const Ranking& ranking, const QueryJudgments& judgments,
                       int rel, double beta);

struct Counts {
  long long num_ret = 0;
  long long num_rel = 0;
  long long num_rel_ret = 0;
};

Counts count_measures(const Ranking& ranking, const QueryJudgments& judgments,
                      int rel);

}  // namespace ireval::metrics

#endif  // IREVAL_RANK_MEASURES_HPP_
