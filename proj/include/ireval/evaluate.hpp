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
#ifndef IREVAL_EVALUATE_HPP_
#define IREVAL_EVALUATE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ireval/measure.hpp"
#include "ireval/ranking.hpp"
#include "ireval/trec_io.hpp"

namespace ireval {

struct QueryResult {
  Measure measure;
  std::string query_id;
  double value = 0.0;
};

struct AggregateResult {
  Measure measure;
  double value = 0.0;
  long long n_queries = 0;
};

// Measures grouped by the backend that computes them. One pass per backend;
// parameter variants of one family (AP(rel=1), AP(rel=2)) share a group.
struct EvalPlan {
  struct BackendGroup {
    std::string backend;
    std::vector<Measure> measures;  // request order
  };
  std::vector<BackendGroup> groups;  // backend first-appearance order

  int passes() const { return static_cast<int>(groups.size()); }
  const BackendGroup* group(std::string_view backend) const;
};

struct EvalOptions {
  // Drop qrels queries the run never retrieved instead of scoring them
  // against an empty ranking.
  bool intersect = false;
  // Route every measure through this backend; empty means each measure's
  // registry default. Unsupported combinations fail fast.
  std::string backend_override;
  // Worker threads for per-query evaluation. Results are merged in query-id
  // order, so the schedule never shows in the output.
  unsigned threads = 1;
};

// Groups measures by their effective backend. Throws MeasureError when an
// override names a backend that cannot compute one of the measures.
EvalPlan make_plan(const std::vector<Measure>& measures,
                   std::string_view backend_override = {});

// Computes one measure on one query through the given backend.
double compute_measure(const Measure& measure, std::string_view backend,
                       const Ranking& ranking,
                       const QueryJudgments& judgments);

// Frozen qrels plus a measure plan, reusable across runs. Evaluating the
// same run twice yields identical results.
class Evaluator {
 public:
  Evaluator(std::vector<Measure> measures, QrelsTable qrels,
            EvalOptions options = {});

  const EvalPlan& plan() const { return plan_; }
  const std::vector<Measure>& measures() const { return measures_; }

  // One row per (evaluated query, measure): every qrels query with at least
  // one judgment, scored against an empty ranking when the run misses it;
  // run-only queries are skipped. Rows are ordered by query id ascending,
  // measures in request order within a query.
  std::vector<QueryResult> per_query(const RunTable& run) const;

  // Mean over evaluated queries for mean-type measures (compensated
  // summation), sum for the count measures; NumQ counts evaluated queries.
  // Throws EvalError when no query qualifies.
  std::map<Measure, AggregateResult> aggregate(const RunTable& run) const;

 private:
  std::vector<Measure> measures_;
  QrelsTable qrels_;
  EvalOptions options_;
  EvalPlan plan_;

  std::vector<std::string> evaluated_queries(const RunTable& run) const;
};

// One-shot conveniences over Evaluator.
std::vector<QueryResult> iter_calc(const std::vector<Measure>& measures,
                                   const QrelsTable& qrels,
                                   const RunTable& run,
                                   const EvalOptions& options = {});
std::map<Measure, AggregateResult> calc_aggregate(
    const std::vector<Measure>& measures, const QrelsTable& qrels,
    const RunTable& run, const EvalOptions& options = {});

}  // namespace ireval

#endif  // IREVAL_EVALUATE_HPP_
