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
#include "ireval/cwl.hpp"

#include <algorithm>
#include <cmath>

#include "ireval/errors.hpp"

namespace ireval::cwl {

double SdcgContinuation::continuation(long long rank, double) const {
  if (rank >= k_) return 0.0;
  return std::log(rank + 1.0) / std::log(rank + 2.0);
}

double InstContinuation::continuation(long long rank,
                                      double cumulative_gain) const {
  double denom = rank + t_ + cumulative_gain;
  double ratio = (denom - 1.0) / denom;
  return ratio * ratio;
}

double InsqContinuation::continuation(long long rank, double) const {
  double denom = rank + 2.0 * t_;
  double ratio = (denom - 1.0) / denom;
  return ratio * ratio;
}

std::vector<double> map_gains(const Ranking& ranking,
                              const QueryJudgments& judgments) {
  std::vector<double> gains(ranking.size(), 0.0);
  int g_max = judgments.table_max_grade();
  if (g_max <= 0) return gains;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    gains[i] = static_cast<double>(std::max(ranking[i].grade_or_zero(), 0)) /
               g_max;
  }
  return gains;
}

std::vector<double> binary_gains(const Ranking& ranking, int rel) {
  std::vector<double> gains(ranking.size(), 0.0);
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (ranking[i].relevant(rel)) gains[i] = 1.0;
  }
  return gains;
}

WeightProfile weights_from_continuation(const ContinuationModel& model,
                                        const std::vector<double>& gains,
                                        std::size_t depth, double tail_tol) {
  WeightProfile profile;
  std::vector<double> visit(depth, 0.0);  // V(i) for i = 1..depth

  double v = 1.0;
  double z = 0.0;
  double prefix_sum = 0.0;
  double cumulative_gain = 0.0;
  for (std::size_t i = 0; i < depth; ++i) {
    visit[i] = v;
    z += v;
    prefix_sum += v;
    cumulative_gain += i < gains.size() ? gains[i] : 0.0;
    v *= model.continuation(static_cast<long long>(i) + 1, cumulative_gain);
  }

  // Tail: ranks past the ranking contribute no gain but still carry
  // probability mass that the normalizer must account for.
  double tail_sum = 0.0;
  if (v > 0.0) {
    if (auto p = model.constant_tail()) {
      if (*p >= 1.0) throw EvalError("divergent expected depth");
      tail_sum = v / (1.0 - *p);
    } else {
      long long rank = static_cast<long long>(depth) + 1;
      while (rank <= kMaxTailRank && v >= tail_tol) {
        tail_sum += v;
        v *= model.continuation(rank, cumulative_gain);
        ++rank;
      }
    }
  }
  z += tail_sum;

  profile.normalizer = z;
  profile.weights.resize(depth, 0.0);
  if (z > 0.0) {
    for (std::size_t i = 0; i < depth; ++i) profile.weights[i] = visit[i] / z;
    profile.tail_mass = tail_sum / z;
  }
  return profile;
}

double expected_utility(const std::vector<double>& weights,
                        const std::vector<double>& gains) {
  double utility = 0.0;
  std::size_t n = std::min(weights.size(), gains.size());
  for (std::size_t i = 0; i < n; ++i) utility += weights[i] * gains[i];
  return utility;
}

namespace {

double evaluate(const ContinuationModel& model,
                const std::vector<double>& gains) {
  WeightProfile profile =
      weights_from_continuation(model, gains, gains.size());
  return expected_utility(profile.weights, gains);
}

}  // namespace

double rbp(const Ranking& ranking, const QueryJudgments& judgments, double p,
           std::optional<int> rel) {
  std::vector<double> gains = rel.has_value() ? binary_gains(ranking, *rel)
                                              : map_gains(ranking, judgments);
  return evaluate(ConstantContinuation(p), gains);
}

double sdcg(const Ranking& ranking, const QueryJudgments& judgments,
            long long k) {
  return evaluate(SdcgContinuation(k), map_gains(ranking, judgments));
}

double inst(const Ranking& ranking, const QueryJudgments& judgments,
            double t) {
  return evaluate(InstContinuation(t), map_gains(ranking, judgments));
}

double insq(const Ranking& ranking, const QueryJudgments& judgments,
            double t) {
  return evaluate(InsqContinuation(t), map_gains(ranking, judgments));
}

double precision_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                      int rel, long long k) {
  (void)judgments;
  return evaluate(TruncationContinuation(k), binary_gains(ranking, rel));
}

double reciprocal_rank(const Ranking& ranking, const QueryJudgments& judgments,
                       int rel, std::optional<long long> cutoff) {
  (void)judgments;
  std::vector<double> gains = binary_gains(ranking, rel);
  // Without a hit the uncut browsing model never stops, but the measure's
  // limit is well defined: weights vanish everywhere, so the utility is 0.
  if (!cutoff.has_value() &&
      std::all_of(gains.begin(), gains.end(),
                  [](double g) { return g == 0.0; })) {
    return 0.0;
  }
  return evaluate(StopAtFirstHitContinuation(cutoff), gains);
}

}  // namespace ireval::cwl
