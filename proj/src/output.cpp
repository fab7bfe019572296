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
#include "ireval/output.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "ireval/registry.hpp"

namespace ireval {

std::string format_value(const Measure& measure, double value, int places) {
  const MeasureSchema& schema = Registry::instance().lookup(measure.name());
  char buffer[64];
  if (schema.integer_valued) {
    std::snprintf(buffer, sizeof(buffer), "%lld", std::llround(value));
  } else {
    if (value == 0.0) value = 0.0;  // never print -0
    std::snprintf(buffer, sizeof(buffer), "%.*f", places, value);
  }
  return buffer;
}

std::string render_tsv(const std::vector<Measure>& measures,
                       const std::map<Measure, AggregateResult>& aggregates,
                       const std::vector<QueryResult>* by_query, int places) {
  std::string out;
  if (by_query != nullptr) {
    for (const auto& measure : measures) {
      std::string rendered = measure.str();
      for (const auto& row : *by_query) {
        if (!(row.measure == measure)) continue;
        out += rendered;
        out += '\t';
        out += row.query_id;
        out += '\t';
        out += format_value(measure, row.value, places);
        out += '\n';
      }
    }
  }
  for (const auto& measure : measures) {
    auto it = aggregates.find(measure);
    if (it == aggregates.end()) continue;
    out += measure.str();
    out += '\t';
    out += format_value(measure, it->second.value, places);
    out += '\n';
  }
  return out;
}

std::string render_json(const std::vector<Measure>& measures,
                        const std::map<Measure, AggregateResult>& aggregates,
                        const std::vector<QueryResult>* by_query) {
  const Registry& registry = Registry::instance();
  nlohmann::json root = nlohmann::json::object();

  nlohmann::json agg = nlohmann::json::object();
  for (const auto& measure : measures) {
    auto it = aggregates.find(measure);
    if (it == aggregates.end()) continue;
    if (registry.lookup(measure.name()).integer_valued) {
      agg[measure.str()] = std::llround(it->second.value);
    } else {
      agg[measure.str()] = it->second.value;
    }
  }
  root["aggregates"] = std::move(agg);

  if (by_query != nullptr) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& measure : measures) {
      bool integer_valued = registry.lookup(measure.name()).integer_valued;
      for (const auto& row : *by_query) {
        if (!(row.measure == measure)) continue;
        nlohmann::json entry = nlohmann::json::object();
        entry["measure"] = measure.str();
        entry["qid"] = row.query_id;
        if (integer_valued) {
          entry["value"] = std::llround(row.value);
        } else {
          entry["value"] = row.value;
        }
        rows.push_back(std::move(entry));
      }
    }
    root["by_query"] = std::move(rows);
  }
  return root.dump(2) + "\n";
}

}  // namespace ireval
