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
#ifndef IREVAL_OUTPUT_HPP_
#define IREVAL_OUTPUT_HPP_

#include <map>
#include <string>
#include <vector>

#include "ireval/evaluate.hpp"
#include "ireval/measure.hpp"

namespace ireval {

// Fixed-point with exactly `places` decimals, ties to even. Count measures
// print as plain integers.
std::string format_value(const Measure& measure, double value, int places);

// Aggregate lines `<measure>\t<value>` in request order; with by_query rows,
// `<measure>\t<qid>\t<value>` lines come first, ordered by (measure request
// order, query id).
std::string render_tsv(const std::vector<Measure>& measures,
                       const std::map<Measure, AggregateResult>& aggregates,
                       const std::vector<QueryResult>* by_query, int places);

// {"aggregates": {measure: value}, "by_query": [{measure, qid, value}]}
// with sorted keys; by_query only when requested. Values are full-precision.
std::string render_json(const std::vector<Measure>& measures,
                        const std::map<Measure, AggregateResult>& aggregates,
                        const std::vector<QueryResult>* by_query);

}  // namespace ireval

#endif  // IREVAL_OUTPUT_HPP_
