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
#ifndef IREVAL_MEASURE_HPP_
#define IREVAL_MEASURE_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ireval {

// A typed measure-parameter value: integer, real, or bare word.
class ParamValue {
 public:
  ParamValue() : value_(0LL) {}
  ParamValue(long long v) : value_(v) {}            // NOLINT(runtime/explicit)
  ParamValue(int v) : value_((long long)v) {}       // NOLINT(runtime/explicit)
  ParamValue(double v) : value_(v) {}               // NOLINT(runtime/explicit)
  ParamValue(std::string v) : value_(std::move(v)) {}  // NOLINT

  bool is_integer() const { return std::holds_alternative<long long>(value_); }
  bool is_real() const { return std::holds_alternative<double>(value_); }
  bool is_text() const { return std::holds_alternative<std::string>(value_); }

  long long as_integer() const { return std::get<long long>(value_); }
  double as_real() const {
    return is_integer() ? static_cast<double>(as_integer())
                        : std::get<double>(value_);
  }
  const std::string& as_text() const { return std::get<std::string>(value_); }

  // Canonical text: integers plainly, reals in shortest round-trip form.
  std::string str() const;

  friend bool operator==(const ParamValue& a, const ParamValue& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const ParamValue& a, const ParamValue& b) {
    return a.value_ < b.value_;
  }

 private:
  std::variant<long long, double, std::string> value_;
};

// A parsed, validated measure expression. Construction goes through
// Measure::make or Measure::parse, both of which resolve aliases, fill
// parameter defaults and check every value against the registry schema.
class Measure {
 public:
  // name_or_alias resolved through the registry; throws MeasureError on any
  // violation of the schema.
  static Measure make(std::string_view name_or_alias,
                      std::vector<std::pair<std::string, ParamValue>> params,
                      std::optional<ParamValue> cutoff);

  // Grammar: name [ '(' key '=' value {',' key '=' value} ')' ] [ '@' num ].
  // No whitespace anywhere inside one expression.
  static Measure parse(std::string_view expr);

  const std::string& name() const { return name_; }

  // Parameters with defaults filled, in schema order. Parameters that have
  // no default and were not given are absent.
  const std::vector<std::pair<std::string, ParamValue>>& params() const {
    return params_;
  }
  const ParamValue* param(std::string_view key) const;

  bool has_cutoff() const { return cutoff_.has_value(); }
  // Rank cutoff; valid only for measures with an integer cutoff slot.
  long long cutoff() const { return cutoff_->as_integer(); }
  // The one real-valued cutoff slot (IPrec's recall point).
  double cutoff_real() const { return cutoff_->as_real(); }

  // Canonical text. Parameters at their default value are omitted;
  // parse(str()) reproduces this measure.
  std::string str() const;

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.name_ == b.name_ && a.params_ == b.params_ &&
           a.cutoff_ == b.cutoff_;
  }
  friend bool operator<(const Measure& a, const Measure& b);

 private:
  Measure() = default;

  std::string name_;
  std::vector<std::pair<std::string, ParamValue>> params_;
  std::optional<ParamValue> cutoff_;
};

// Whitespace-separated measure expressions, deduplicated with stable
// first-occurrence order.
std::vector<Measure> parse_measure_list(std::string_view exprs);

}  // namespace ireval

#endif  // IREVAL_MEASURE_HPP_
