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
#ifndef IREVAL_REGISTRY_HPP_
#define IREVAL_REGISTRY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ireval/measure.hpp"

namespace ireval {

enum class ParamType { integer, real, text };

struct ParamSpec {
  std::string name;
  ParamType type = ParamType::integer;
  // Absent default means the parameter is optional and stays unset when not
  // given (RBP's `rel`, whose absence selects graded gains).
  std::optional<ParamValue> default_value;

  // Numeric range, when applicable.
  std::optional<double> min;
  std::optional<double> max;
  bool min_exclusive = false;
  bool max_exclusive = false;

  // Allowed words for text parameters.
  std::vector<std::string> choices;

  bool in_range(const ParamValue& value) const;
  std::string range_text() const;
};

enum class CutoffPolicy { required, optional_, forbidden };
enum class Aggregator { mean, sum };

struct MeasureSchema {
  std::string name;  // canonical
  std::vector<ParamSpec> params;
  CutoffPolicy cutoff = CutoffPolicy::forbidden;
  // IPrec's cutoff slot holds a recall point in [0,1] instead of a rank.
  bool real_cutoff = false;
  // Default cutoff value applied when the policy is optional and no cutoff
  // was given (Compat's evaluation depth). Unset for the others: an absent
  // optional cutoff means "whole ranking".
  std::optional<long long> default_cutoff;
  std::string backend;  // "rank", "cwl" or "compat"
  Aggregator aggregator = Aggregator::mean;
  // Count measures print as integers and aggregate by sum.
  bool integer_valued = false;
  // Value every mean-type measure takes on an empty ranking.
  double empty_value = 0.0;

  const ParamSpec* find_param(std::string_view name) const;
};

// The fixed measure catalog, built once and read-only afterwards.
class Registry {
 public:
  static const Registry& instance();

  // Resolves aliases (MAP, NDCG, MRR, R-Prec). Returns nullptr when unknown.
  const MeasureSchema* find(std::string_view name_or_alias) const;

  // Like find() but throws MeasureError with a helpful message, including a
  // dedicated one for the diversity measures this engine does not cover.
  const MeasureSchema& lookup(std::string_view name_or_alias) const;

  const std::vector<MeasureSchema>& schemas() const { return schemas_; }

  // True when `backend` can compute `measure_name` (canonical name).
  bool backend_supports(std::string_view backend,
                        std::string_view measure_name) const;

  std::vector<std::string> backend_ids() const;

 private:
  Registry();

  std::vector<MeasureSchema> schemas_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::map<std::string, std::string, std::less<>> aliases_;
  std::map<std::string, std::vector<std::string>, std::less<>> backend_extra_;
};

}  // namespace ireval

#endif  // IREVAL_REGISTRY_HPP_
