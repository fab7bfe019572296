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
#include "ireval/registry.hpp"

#include <algorithm>
#include <set>

#include "ireval/errors.hpp"

namespace ireval {

namespace {

// Diversity measures need subtopic-graded qrels, which this engine does not
// model; name them explicitly so the error is actionable.
const std::set<std::string, std::less<>> kDiversityMeasures = {
    "alpha_nDCG", "ERR_IA", "AP_IA", "MAP_IA", "P_IA", "NRBP", "STREC"};

ParamSpec rel_param() {
  ParamSpec spec;
  spec.name = "rel";
  spec.type = ParamType::integer;
  spec.default_value = ParamValue(1LL);
  spec.min = 1.0;
  return spec;
}

ParamSpec persistence_param(double default_p) {
  ParamSpec spec;
  spec.name = "p";
  spec.type = ParamType::real;
  spec.default_value = ParamValue(default_p);
  spec.min = 0.0;
  spec.max = 1.0;
  spec.min_exclusive = true;
  spec.max_exclusive = true;
  return spec;
}

}  // namespace

bool ParamSpec::in_range(const ParamValue& value) const {
  if (type == ParamType::text) {
    return choices.empty() ||
           std::find(choices.begin(), choices.end(), value.as_text()) !=
               choices.end();
  }
  double v = value.as_real();
  if (min && (min_exclusive ? v <= *min : v < *min)) return false;
  if (max && (max_exclusive ? v >= *max : v > *max)) return false;
  return true;
}

std::string ParamSpec::range_text() const {
  if (type == ParamType::text) {
    std::string out = "one of {";
    for (std::size_t i = 0; i < choices.size(); ++i) {
      if (i) out += ", ";
      out += choices[i];
    }
    return out + "}";
  }
  std::string out;
  if (min) out += (min_exclusive ? "> " : ">= ") + ParamValue(*min).str();
  if (min && max) out += " and ";
  if (max) out += (max_exclusive ? "< " : "<= ") + ParamValue(*max).str();
  return out.empty() ? "unbounded" : out;
}

const ParamSpec* MeasureSchema::find_param(std::string_view name) const {
  for (const auto& spec : params) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

Registry::Registry() {
  auto add = [this](MeasureSchema schema) {
    by_name_[schema.name] = schemas_.size();
    schemas_.push_back(std::move(schema));
  };

  // --- rank backend -------------------------------------------------------
  {
    MeasureSchema m;
    m.name = "P";
    m.params = {rel_param()};
    m.cutoff = CutoffPolicy::required;
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "R";
    m.params = {rel_param()};
    m.cutoff = CutoffPolicy::required;
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "AP";
    m.params = {rel_param()};
    m.cutoff = CutoffPolicy::optional_;
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "RR";
    m.params = {rel_param()};
    m.cutoff = CutoffPolicy::optional_;
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "nDCG";
    ParamSpec gain;
    gain.name = "gain";
    gain.type = ParamType::text;
    gain.default_value = ParamValue(std::string("linear"));
    gain.choices = {"linear", "exp"};
    m.params = {gain};
    m.cutoff = CutoffPolicy::optional_;
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "ERR";
    m.cutoff = CutoffPolicy::required;
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "Bpref";
    m.params = {rel_param()};
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "infAP";
    m.params = {rel_param()};
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "IPrec";
    m.params = {rel_param()};
    m.cutoff = CutoffPolicy::required;
    m.real_cutoff = true;  // the cutoff slot is a recall point in [0,1]
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "Rprec";
    m.params = {rel_param()};
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "Success";
    m.params = {rel_param()};
    m.cutoff = CutoffPolicy::required;
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "Judged";
    m.cutoff = CutoffPolicy::required;
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "SetP";
    m.params = {rel_param()};
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "SetR";
    m.params = {rel_param()};
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "SetF";
    ParamSpec beta;
    beta.name = "beta";
    beta.type = ParamType::real;
    beta.default_value = ParamValue(1.0);
    beta.min = 0.0;
    beta.min_exclusive = true;
    m.params = {rel_param(), beta};
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "SetAP";
    m.params = {rel_param()};
    m.backend = "rank";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "NumQ";
    m.backend = "rank";
    m.aggregator = Aggregator::sum;
    m.integer_valued = true;
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "NumRel";
    m.params = {rel_param()};
    m.backend = "rank";
    m.aggregator = Aggregator::sum;
    m.integer_valued = true;
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "NumRet";
    m.backend = "rank";
    m.aggregator = Aggregator::sum;
    m.integer_valued = true;
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "NumRelRet";
    m.params = {rel_param()};
    m.backend = "rank";
    m.aggregator = Aggregator::sum;
    m.integer_valued = true;
    add(m);
  }

  // --- cwl backend --------------------------------------------------------
  {
    MeasureSchema m;
    m.name = "RBP";
    // `rel` has no default here: absent means graded gains, present means
    // binary gains at that grade threshold.
    ParamSpec rel = rel_param();
    rel.default_value.reset();
    m.params = {persistence_param(0.8), rel};
    m.backend = "cwl";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "SDCG";
    m.cutoff = CutoffPolicy::required;
    m.backend = "cwl";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "INST";
    ParamSpec t;
    t.name = "T";
    t.type = ParamType::real;
    t.default_value = ParamValue(1.0);
    t.min = 0.0;
    t.min_exclusive = true;
    m.params = {t};
    m.backend = "cwl";
    add(m);
  }
  {
    MeasureSchema m;
    m.name = "INSQ";
    ParamSpec t;
    t.name = "T";
    t.type = ParamType::real;
    t.default_value = ParamValue(1.0);
    t.min = 0.0;
    t.min_exclusive = true;
    m.params = {t};
    m.backend = "cwl";
    add(m);
  }

  // --- compat backend -----------------------------------------------------
  {
    MeasureSchema m;
    m.name = "Compat";
    m.params = {persistence_param(0.95)};
    m.cutoff = CutoffPolicy::optional_;  // RBO evaluation depth
    m.default_cutoff = 1000;
    m.backend = "compat";
    add(m);
  }

  aliases_ = {{"MAP", "AP"},
              {"NDCG", "nDCG"},
              {"MRR", "RR"},
              {"R-Prec", "Rprec"}};

  // Measures a non-default backend can also compute: the cwl engine covers
  // precision (truncation model) and reciprocal rank (stop at first
  // relevant), which doubles as an independent cross-check of the rank
  // backend.
  backend_extra_ = {{"cwl", {"P", "RR"}}};
}

const Registry& Registry::instance() {
  static const Registry registry;
  return registry;
}

const MeasureSchema* Registry::find(std::string_view name_or_alias) const {
  auto alias = aliases_.find(name_or_alias);
  std::string_view name =
      alias == aliases_.end() ? name_or_alias : std::string_view(alias->second);
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &schemas_[it->second];
}

const MeasureSchema& Registry::lookup(std::string_view name_or_alias) const {
  const MeasureSchema* schema = find(name_or_alias);
  if (schema != nullptr) return *schema;
  if (kDiversityMeasures.count(name_or_alias)) {
    throw MeasureError("diversity measures unsupported: " +
                       std::string(name_or_alias));
  }
  throw MeasureError("unknown measure: " + std::string(name_or_alias));
}

bool Registry::backend_supports(std::string_view backend,
                                std::string_view measure_name) const {
  const MeasureSchema* schema = find(measure_name);
  if (schema == nullptr) return false;
  if (schema->backend == backend) return true;
  auto extra = backend_extra_.find(backend);
  if (extra == backend_extra_.end()) return false;
  return std::find(extra->second.begin(), extra->second.end(),
                   schema->name) != extra->second.end();
}

std::vector<std::string> Registry::backend_ids() const {
  return {"rank", "cwl", "compat"};
}

}  // namespace ireval
