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
#include "ireval/evaluate.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <utility>

#include "ireval/compat.hpp"
#include "ireval/cwl.hpp"
#include "ireval/errors.hpp"
#include "ireval/rank_measures.hpp"
#include "ireval/registry.hpp"

namespace ireval {

namespace {

int rel_of(const Measure& m) {
  const ParamValue* rel = m.param("rel");
  return rel == nullptr ? 1 : static_cast<int>(rel->as_integer());
}

std::optional<long long> cutoff_of(const Measure& m) {
  if (!m.has_cutoff()) return std::nullopt;
  return m.cutoff();
}

double compute_rank_measure(const Measure& m, const Ranking& ranking,
                            const QueryJudgments& judgments) {
  const std::string& name = m.name();
  using namespace metrics;
  if (name == "P") return precision_at_k(ranking, judgments, rel_of(m), m.cutoff());
  if (name == "R") return recall_at_k(ranking, judgments, rel_of(m), m.cutoff());
  if (name == "AP") return average_precision(ranking, judgments, rel_of(m), cutoff_of(m));
  if (name == "RR") return reciprocal_rank(ranking, judgments, rel_of(m), cutoff_of(m));
  if (name == "nDCG") {
    GainFunction gain = m.param("gain")->as_text() == "exp"
                            ? GainFunction::exp
                            : GainFunction::linear;
    return ndcg(ranking, judgments, gain, cutoff_of(m));
  }
  if (name == "ERR") return err_at_k(ranking, judgments, m.cutoff());
  if (name == "Bpref") return bpref(ranking, judgments, rel_of(m));
  if (name == "infAP") return inf_ap(ranking, judgments, rel_of(m));
  if (name == "IPrec") {
    return iprec_at_recall(ranking, judgments, rel_of(m), m.cutoff_real());
  }
  if (name == "Rprec") return r_precision(ranking, judgments, rel_of(m));
  if (name == "Success") return success_at_k(ranking, judgments, rel_of(m), m.cutoff());
  if (name == "Judged") return judged_at_k(ranking, judgments, m.cutoff());
  if (name == "SetP" || name == "SetR" || name == "SetF" || name == "SetAP") {
    double beta = 1.0;
    if (const ParamValue* b = m.param("beta")) beta = b->as_real();
    SetScores scores = set_measures(ranking, judgments, rel_of(m), beta);
    if (name == "SetP") return scores.set_p;
    if (name == "SetR") return scores.set_r;
    if (name == "SetF") return scores.set_f;
    return scores.set_ap;
  }
  if (name == "NumQ") return 1.0;  // summed by the aggregator
  if (name == "NumRet" || name == "NumRel" || name == "NumRelRet") {
    Counts counts = count_measures(ranking, judgments, rel_of(m));
    if (name == "NumRet") return static_cast<double>(counts.num_ret);
    if (name == "NumRel") return static_cast<double>(counts.num_rel);
    return static_cast<double>(counts.num_rel_ret);
  }
  throw MeasureError("rank backend cannot compute " + m.str());
}

double compute_cwl_measure(const Measure& m, const Ranking& ranking,
                           const QueryJudgments& judgments) {
  const std::string& name = m.name();
  if (name == "RBP") {
    std::optional<int> rel;
    if (const ParamValue* r = m.param("rel")) {
      rel = static_cast<int>(r->as_integer());
    }
    return cwl::rbp(ranking, judgments, m.param("p")->as_real(), rel);
  }
  if (name == "SDCG") return cwl::sdcg(ranking, judgments, m.cutoff());
  if (name == "INST") return cwl::inst(ranking, judgments, m.param("T")->as_real());
  if (name == "INSQ") return cwl::insq(ranking, judgments, m.param("T")->as_real());
  if (name == "P") return cwl::precision_at_k(ranking, judgments, rel_of(m), m.cutoff());
  if (name == "RR") {
    return cwl::reciprocal_rank(ranking, judgments, rel_of(m), cutoff_of(m));
  }
  throw MeasureError("cwl backend cannot compute " + m.str());
}

double compute_compat_measure(const Measure& m, const Ranking& ranking,
                              const QueryJudgments& judgments) {
  if (m.name() == "Compat") {
    long long depth =
        m.has_cutoff() ? m.cutoff() : compatibility::kDefaultDepth;
    return compatibility::compat(ranking, judgments, m.param("p")->as_real(),
                                 depth);
  }
  throw MeasureError("compat backend cannot compute " + m.str());
}

}  // namespace

const EvalPlan::BackendGroup* EvalPlan::group(std::string_view backend) const {
  for (const auto& g : groups) {
    if (g.backend == backend) return &g;
  }
  return nullptr;
}

EvalPlan make_plan(const std::vector<Measure>& measures,
                   std::string_view backend_override) {
  const Registry& registry = Registry::instance();
  EvalPlan plan;
  for (const Measure& measure : measures) {
    std::string backend;
    if (backend_override.empty()) {
      backend = registry.lookup(measure.name()).backend;
    } else {
      if (!registry.backend_supports(backend_override, measure.name())) {
        throw MeasureError("backend '" + std::string(backend_override) +
                           "' cannot compute " + measure.str());
      }
      backend = std::string(backend_override);
    }
    EvalPlan::BackendGroup* group = nullptr;
    for (auto& g : plan.groups) {
      if (g.backend == backend) group = &g;
    }
    if (group == nullptr) {
      plan.groups.push_back(EvalPlan::BackendGroup{backend, {}});
      group = &plan.groups.back();
    }
    group->measures.push_back(measure);
  }
  return plan;
}

double compute_measure(const Measure& measure, std::string_view backend,
                       const Ranking& ranking,
                       const QueryJudgments& judgments) {
  if (backend == "rank") return compute_rank_measure(measure, ranking, judgments);
  if (backend == "cwl") return compute_cwl_measure(measure, ranking, judgments);
  if (backend == "compat") {
    return compute_compat_measure(measure, ranking, judgments);
  }
  throw MeasureError("unknown backend '" + std::string(backend) + "'");
}

Evaluator::Evaluator(std::vector<Measure> measures, QrelsTable qrels,
                     EvalOptions options)
    : measures_(std::move(measures)),
      qrels_(std::move(qrels)),
      options_(std::move(options)),
      plan_(make_plan(measures_, options_.backend_override)) {}

std::vector<std::string> Evaluator::evaluated_queries(
    const RunTable& run) const {
  std::vector<std::string> queries;
  for (const auto& qid : qrels_.query_ids()) {
    if (qrels_.judgments(qid).empty()) continue;
    if (options_.intersect && !run.has_query(qid)) continue;
    queries.push_back(qid);
  }
  return queries;
}

std::vector<QueryResult> Evaluator::per_query(const RunTable& run) const {
  std::vector<std::string> queries = evaluated_queries(run);

  // Flatten the plan into (measure, backend, output slot) once.
  struct Dispatch {
    const Measure* measure;
    const std::string* backend;
    std::size_t slot;
  };
  std::vector<Dispatch> dispatches;
  dispatches.reserve(measures_.size());
  for (const auto& group : plan_.groups) {
    for (const auto& measure : group.measures) {
      auto slot = std::find(measures_.begin(), measures_.end(), measure);
      dispatches.push_back(Dispatch{&measure, &group.backend,
                                    static_cast<std::size_t>(
                                        slot - measures_.begin())});
    }
  }

  // One task per query; results land in a fixed slot so the schedule cannot
  // reorder them.
  auto evaluate_query = [this, &run, &dispatches](const std::string& qid) {
    QueryJudgments judgments = qrels_.judgments(qid);
    Ranking ranking = induce_ranking(run.docs(qid), judgments);
    std::vector<double> values(measures_.size(), 0.0);
    for (const auto& dispatch : dispatches) {
      values[dispatch.slot] = compute_measure(*dispatch.measure,
                                              *dispatch.backend, ranking,
                                              judgments);
    }
    return values;
  };

  std::vector<std::vector<double>> all_values(queries.size());
  unsigned workers = std::max(1u, options_.threads);
  if (workers == 1 || queries.size() <= 1) {
    for (std::size_t i = 0; i < queries.size(); ++i) {
      all_values[i] = evaluate_query(queries[i]);
    }
  } else {
    std::vector<std::future<void>> futures;
    std::size_t chunk = (queries.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(queries.size(), begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, [&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) {
          all_values[i] = evaluate_query(queries[i]);
        }
      }));
    }
    for (auto& future : futures) future.get();
  }

  std::vector<QueryResult> results;
  results.reserve(queries.size() * measures_.size());
  for (std::size_t i = 0; i < queries.size(); ++i) {
    for (std::size_t j = 0; j < measures_.size(); ++j) {
      results.push_back(QueryResult{measures_[j], queries[i], all_values[i][j]});
    }
  }
  return results;
}

std::map<Measure, AggregateResult> Evaluator::aggregate(
    const RunTable& run) const {
  if (measures_.empty()) return {};
  std::vector<QueryResult> rows = per_query(run);
  if (rows.empty()) throw EvalError("no overlapping queries");

  const Registry& registry = Registry::instance();
  std::map<Measure, AggregateResult> aggregates;

  // Rows are query-major with measures in request order within each query.
  std::size_t stride = measures_.size();
  for (std::size_t j = 0; j < stride; ++j) {
    const Measure& measure = measures_[j];
    const MeasureSchema& schema = registry.lookup(measure.name());
    double sum = 0.0;
    double compensation = 0.0;  // Kahan, so accumulation order cannot drift
    long long n = 0;
    for (std::size_t i = j; i < rows.size(); i += stride) {
      double y = rows[i].value - compensation;
      double t = sum + y;
      compensation = (t - sum) - y;
      sum = t;
      ++n;
    }
    double value = schema.aggregator == Aggregator::mean && n > 0
                       ? sum / static_cast<double>(n)
                       : sum;
    aggregates.emplace(measure, AggregateResult{measure, value, n});
  }
  return aggregates;
}

std::vector<QueryResult> iter_calc(const std::vector<Measure>& measures,
                                   const QrelsTable& qrels,
                                   const RunTable& run,
                                   const EvalOptions& options) {
  return Evaluator(measures, qrels, options).per_query(run);
}

std::map<Measure, AggregateResult> calc_aggregate(
    const std::vector<Measure>& measures, const QrelsTable& qrels,
    const RunTable& run, const EvalOptions& options) {
  return Evaluator(measures, qrels, options).aggregate(run);
}

}  // namespace ireval
