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
#ifndef IREVAL_COMPAT_HPP_
#define IREVAL_COMPAT_HPP_

#include <string>
#include <vector>

#include "ireval/ranking.hpp"
#include "ireval/trec_io.hpp"

// The Compatibility measure: truncated rank-biased overlap between the run
// and the ideal ranking closest to it. Graded qrels only.
namespace ireval::compatibility {

inline constexpr long long kDefaultDepth = 1000;

// Judged documents with grade > 0 ordered by grade descending. Grade ties
// resolve toward the evaluated run: tied documents that the run retrieved
// come first in run order, the rest follow by doc id ascending. This greedy
// rule yields the ideal ordering with maximal overlap against the run.
std::vector<std::string> greedy_ideal(const QueryJudgments& judgments,
                                      const Ranking& ranking);

// (1-p) * sum_{d=1..depth} p^(d-1) |a[..d] intersect b[..d]| / d.
double rbo_truncated(const std::vector<std::string>& a,
                     const std::vector<std::string>& b, double p,
                     long long depth);

// rbo(run, ideal) normalized by rbo(ideal, ideal), both truncated at
// min(depth, |ideal|) so a run that leads with the full ideal scores exactly
// 1; 0 when the ideal is empty.
double compat(const Ranking& ranking, const QueryJudgments& judgments,
              double p, long long depth = kDefaultDepth);

}  // namespace ireval::compatibility

#endif  // IREVAL_COMPAT_HPP_
