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
#ifndef IREVAL_CWL_HPP_
#define IREVAL_CWL_HPP_

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "ireval/ranking.hpp"
#include "ireval/trec_io.hpp"

// A user-browsing evaluator: a continuation probability C(i) induces a rank
// weight distribution W(i) = V(i)/Z with V(i) = prod_{j<i} C(j), and a
// measure is the expected utility sum_i W(i) g_i over per-rank gains in
// [0,1]. Instantiates RBP, SDCG, INST and INSQ, and doubles as an
// independent route to precision@k and reciprocal rank.
namespace ireval::cwl {

class ContinuationModel {
 public:
  virtual ~ContinuationModel() = default;

  virtual std::string_view name() const = 0;

  // C(i): probability of continuing past rank i (1-based), given the
  // cumulative gain through rank i inclusive. Must lie in [0,1].
  virtual double continuation(long long rank, double cumulative_gain) const = 0;

  // When the model's continuation is a constant once gains are exhausted,
  // that constant; the engine then closes the tail analytically. Otherwise
  // the tail is summed numerically.
  virtual std::optional<double> constant_tail() const { return std::nullopt; }
};

// C(i) = p. Weights are the geometric distribution (1-p) p^(i-1).
class ConstantContinuation final : public ContinuationModel {
 public:
  explicit ConstantContinuation(double p) : p_(p) {}
  std::string_view name() const override { return "constant"; }
  double continuation(long long, double) const override { return p_; }
  std::optional<double> constant_tail() const override { return p_; }

 private:
  double p_;
};

// C(i) = 1 for i < k, 0 at i = k. Weights are uniform over the top k.
class TruncationContinuation final : public ContinuationModel {
 public:
  explicit TruncationContinuation(long long k) : k_(k) {}
  std::string_view name() const override { return "truncation"; }
  double continuation(long long rank, double) const override {
    return rank < k_ ? 1.0 : 0.0;
  }

 private:
  long long k_;
};

// C(i) = log(i+1)/log(i+2) for i < k, 0 at i = k; V(i) = 1/log2(i+1).
class SdcgContinuation final : public ContinuationModel {
 public:
  explicit SdcgContinuation(long long k) : k_(k) {}
  std::string_view name() const override { return "sdcg"; }
  double continuation(long long rank, double) const override;

 private:
  long long k_;
};

// C(i) = ((i + T + T_i - 1)/(i + T + T_i))^2 with T_i the cumulative gain
// through rank i inclusive.
class InstContinuation final : public ContinuationModel {
 public:
  explicit InstContinuation(double t) : t_(t) {}
  std::string_view name() const override { return "inst"; }
  double continuation(long long rank, double cumulative_gain) const override;

 private:
  double t_;
};

// C(i) = ((i + 2T - 1)/(i + 2T))^2.
class InsqContinuation final : public ContinuationModel {
 public:
  explicit InsqContinuation(double t) : t_(t) {}
  std::string_view name() const override { return "insq"; }
  double continuation(long long rank, double cumulative_gain) const override;

 private:
  double t_;
};

// Continue while nothing useful has been seen: C(i) = 0 once the cumulative
// gain is positive or the optional cutoff is reached, else 1. With binary
// gains this reproduces reciprocal rank. Divergent when uncut and the
// ranking holds no gain at all.
class StopAtFirstHitContinuation final : public ContinuationModel {
 public:
  StopAtFirstHitContinuation() = default;
  explicit StopAtFirstHitContinuation(std::optional<long long> cutoff)
      : cutoff_(cutoff) {}
  std::string_view name() const override { return "stop-at-first-hit"; }
  double continuation(long long rank, double cumulative_gain) const override {
    if (cumulative_gain > 0.0) return 0.0;
    if (cutoff_.has_value() && rank >= *cutoff_) return 0.0;
    return 1.0;
  }
  std::optional<double> constant_tail() const override {
    if (cutoff_.has_value()) return std::nullopt;  // truncates on its own
    return 1.0;
  }

 private:
  std::optional<long long> cutoff_;
};

// Grades mapped linearly into [0,1] by the whole-table maximum grade;
// unjudged and non-positive grades map to 0.
std::vector<double> map_gains(const Ranking& ranking,
                              const QueryJudgments& judgments);

// Indicator gains at a grade threshold.
std::vector<double> binary_gains(const Ranking& ranking, int rel);

struct WeightProfile {
  // W(1..depth); ranks beyond the ranking carry no gain, so these are the
  // only weights expected_utility needs.
  std::vector<double> weights;
  // Probability mass at ranks beyond depth: 1 - sum(weights).
  double tail_mass = 0.0;
  // Normalizer Z = sum_i V(i), for diagnostics.
  double normalizer = 0.0;
};

inline constexpr double kDefaultTailTolerance = 1e-12;
inline constexpr long long kMaxTailRank = 10000;

// Computes W for the first `depth` ranks. The normalizer extends past depth
// with zero gains until the increment drops below tail_tol or rank 10,000,
// whichever comes first; constant-continuation tails are closed analytically.
// Throws EvalError("divergent expected depth") when the tail cannot converge
// (constant C = 1 with mass remaining).
WeightProfile weights_from_continuation(const ContinuationModel& model,
                                        const std::vector<double>& gains,
                                        std::size_t depth,
                                        double tail_tol = kDefaultTailTolerance);

// sum_i W(i) g_i over the ranks both vectors cover.
double expected_utility(const std::vector<double>& weights,
                        const std::vector<double>& gains);

// Rank-biased precision with persistence p. A present `rel` selects binary
// gains at that threshold; absent means graded gains.
double rbp(const Ranking& ranking, const QueryJudgments& judgments, double p,
           std::optional<int> rel = std::nullopt);

// Scaled DCG@k: graded gains under the 1/log2(i+1) weight profile.
double sdcg(const Ranking& ranking, const QueryJudgments& judgments,
            long long k);

double inst(const Ranking& ranking, const QueryJudgments& judgments, double t);
double insq(const Ranking& ranking, const QueryJudgments& judgments, double t);

// Precision@k through the truncation model; an independent route to
// metrics::precision_at_k.
double precision_at_k(const Ranking& ranking, const QueryJudgments& judgments,
                      int rel, long long k);

// Reciprocal rank through the stop-at-first-hit model; 0 when the ranking
// holds no relevant document within the cutoff.
double reciprocal_rank(const Ranking& ranking, const QueryJudgments& judgments,
                       int rel,
                       std::optional<long long> cutoff = std::nullopt);

}  // namespace ireval::cwl

#endif  // IREVAL_CWL_HPP_
