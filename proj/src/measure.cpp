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
#include "ireval/measure.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "ireval/errors.hpp"
#include "ireval/registry.hpp"

namespace ireval {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}
bool is_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Cursor over one measure expression.
struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool eat(char c) {
    if (!done() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw MeasureError(what + " in measure expression '" + std::string(text) +
                       "'");
  }
};

std::string_view scan_while(Scanner& s, bool (*pred)(char)) {
  std::size_t start = s.pos;
  while (!s.done() && pred(s.peek())) ++s.pos;
  return s.text.substr(start, s.pos - start);
}

// A numeric token: optional sign, digits, optional fraction/exponent.
std::string_view scan_number(Scanner& s) {
  std::size_t start = s.pos;
  if (!s.done() && (s.peek() == '-' || s.peek() == '+')) ++s.pos;
  while (!s.done() && (std::isdigit(static_cast<unsigned char>(s.peek())) ||
                       s.peek() == '.')) {
    ++s.pos;
  }
  if (!s.done() && (s.peek() == 'e' || s.peek() == 'E')) {
    std::size_t mark = s.pos;
    ++s.pos;
    if (!s.done() && (s.peek() == '-' || s.peek() == '+')) ++s.pos;
    std::size_t digits = s.pos;
    while (!s.done() && std::isdigit(static_cast<unsigned char>(s.peek()))) {
      ++s.pos;
    }
    if (s.pos == digits) s.pos = mark;  // bare 'e' is not an exponent
  }
  return s.text.substr(start, s.pos - start);
}

bool parse_integer_token(std::string_view token, long long* out) {
  if (token.empty()) return false;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (token.front() == '+') ++begin;
  auto result = std::from_chars(begin, end, *out);
  return result.ec == std::errc() && result.ptr == end;
}

bool parse_real_token(std::string_view token, double* out) {
  if (token.empty()) return false;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (token.front() == '+') ++begin;
  auto result = std::from_chars(begin, end, *out);
  return result.ec == std::errc() && result.ptr == end &&
         std::isfinite(*out);
}

ParamValue scan_value(Scanner& s) {
  if (s.done()) s.fail("missing parameter value");
  char c = s.peek();
  if (c == '-' || c == '+' || c == '.' ||
      std::isdigit(static_cast<unsigned char>(c))) {
    std::string_view token = scan_number(s);
    long long integer = 0;
    if (parse_integer_token(token, &integer)) return ParamValue(integer);
    double real = 0.0;
    if (parse_real_token(token, &real)) return ParamValue(real);
    s.fail("malformed number '" + std::string(token) + "'");
  }
  std::string_view word = scan_while(s, is_key_char);
  if (word.empty()) s.fail("missing parameter value");
  return ParamValue(std::string(word));
}

std::string render_double(double value) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace

std::string ParamValue::str() const {
  if (is_integer()) return std::to_string(as_integer());
  if (is_real()) return render_double(std::get<double>(value_));
  return as_text();
}

const ParamValue* Measure::param(std::string_view key) const {
  for (const auto& [name, value] : params_) {
    if (name == key) return &value;
  }
  return nullptr;
}

Measure Measure::make(std::string_view name_or_alias,
                      std::vector<std::pair<std::string, ParamValue>> params,
                      std::optional<ParamValue> cutoff) {
  const MeasureSchema& schema = Registry::instance().lookup(name_or_alias);

  // Validate the given bindings against the schema.
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto& [key, value] = params[i];
    const ParamSpec* spec = schema.find_param(key);
    if (spec == nullptr) {
      throw MeasureError("unknown parameter '" + key + "' for measure " +
                         schema.name);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (params[j].first == key) {
        throw MeasureError("parameter '" + key + "' given twice for measure " +
                           schema.name);
      }
    }
    switch (spec->type) {
      case ParamType::integer:
        if (!value.is_integer()) {
          throw MeasureError("parameter '" + key + "' of " + schema.name +
                             " must be an integer");
        }
        break;
      case ParamType::real:
        if (value.is_integer()) value = ParamValue(value.as_real());
        if (!value.is_real()) {
          throw MeasureError("parameter '" + key + "' of " + schema.name +
                             " must be a number");
        }
        break;
      case ParamType::text:
        if (!value.is_text()) {
          throw MeasureError("parameter '" + key + "' of " + schema.name +
                             " must be a word");
        }
        break;
    }
    if (!spec->in_range(value)) {
      throw MeasureError("parameter '" + key + "' of " + schema.name +
                         " out of range: got " + value.str() + ", expected " +
                         spec->range_text());
    }
  }

  Measure measure;
  measure.name_ = schema.name;

  // Fill in schema order; parameters without a default stay absent.
  for (const auto& spec : schema.params) {
    const ParamValue* given = nullptr;
    for (const auto& [key, value] : params) {
      if (key == spec.name) given = &value;
    }
    if (given != nullptr) {
      measure.params_.emplace_back(spec.name, *given);
    } else if (spec.default_value) {
      measure.params_.emplace_back(spec.name, *spec.default_value);
    }
  }

  // Cutoff policy.
  if (cutoff.has_value()) {
    if (schema.cutoff == CutoffPolicy::forbidden) {
      throw MeasureError("measure " + schema.name + " does not take a cutoff");
    }
    if (schema.real_cutoff) {
      ParamValue point = cutoff->is_integer()
                             ? ParamValue(cutoff->as_real())
                             : *cutoff;
      if (!point.is_real()) {
        throw MeasureError("cutoff of " + schema.name + " must be a number");
      }
      double v = point.as_real();
      if (v < 0.0 || v > 1.0) {
        throw MeasureError("recall point of " + schema.name +
                           " must lie in [0,1], got " + point.str());
      }
      measure.cutoff_ = point;
    } else {
      if (!cutoff->is_integer()) {
        throw MeasureError("cutoff of " + schema.name + " must be an integer");
      }
      if (cutoff->as_integer() < 1) {
        throw MeasureError("cutoff of " + schema.name + " must be >= 1, got " +
                           cutoff->str());
      }
      measure.cutoff_ = *cutoff;
    }
  } else {
    if (schema.cutoff == CutoffPolicy::required) {
      throw MeasureError("measure " + schema.name +
                         " requires a cutoff (write " + schema.name +
                         (schema.real_cutoff ? "@0.1)" : "@k)"));
    }
    if (schema.default_cutoff) {
      measure.cutoff_ = ParamValue(*schema.default_cutoff);
    }
  }

  return measure;
}

Measure Measure::parse(std::string_view expr) {
  Scanner s{expr};
  if (s.done() || !is_name_start(s.peek())) {
    s.fail("expected a measure name");
  }
  std::string_view name = scan_while(s, is_name_char);

  std::vector<std::pair<std::string, ParamValue>> params;
  if (s.eat('(')) {
    if (s.eat(')')) s.fail("empty parameter list");
    do {
      std::string_view key = scan_while(s, is_key_char);
      if (key.empty()) s.fail("expected a parameter name");
      if (!s.eat('=')) s.fail("expected '=' after parameter name");
      params.emplace_back(std::string(key), scan_value(s));
    } while (s.eat(','));
    if (!s.eat(')')) s.fail("expected ')'");
  }

  std::optional<ParamValue> cutoff;
  if (s.eat('@')) {
    std::string_view token = scan_number(s);
    long long integer = 0;
    double real = 0.0;
    if (parse_integer_token(token, &integer)) {
      cutoff = ParamValue(integer);
    } else if (parse_real_token(token, &real)) {
      cutoff = ParamValue(real);
    } else {
      s.fail("malformed cutoff '" + std::string(token) + "'");
    }
  }

  if (!s.done()) {
    s.fail("trailing characters '" + std::string(s.text.substr(s.pos)) + "'");
  }
  return make(name, std::move(params), std::move(cutoff));
}

std::string Measure::str() const {
  const MeasureSchema& schema = Registry::instance().lookup(name_);
  std::string out = name_;
  std::string param_text;
  for (const auto& [key, value] : params_) {
    const ParamSpec* spec = schema.find_param(key);
    if (spec != nullptr && spec->default_value &&
        *spec->default_value == value) {
      continue;  // defaults are elided
    }
    if (!param_text.empty()) param_text += ',';
    param_text += key;
    param_text += '=';
    param_text += value.str();
  }
  if (!param_text.empty()) {
    out += '(';
    out += param_text;
    out += ')';
  }
  if (cutoff_.has_value()) {
    bool is_default = schema.default_cutoff && cutoff_->is_integer() &&
                      cutoff_->as_integer() == *schema.default_cutoff;
    if (!is_default) {
      out += '@';
      out += cutoff_->str();
    }
  }
  return out;
}

bool operator<(const Measure& a, const Measure& b) {
  if (a.name_ != b.name_) return a.name_ < b.name_;
  if (a.params_ != b.params_) return a.params_ < b.params_;
  if (a.cutoff_.has_value() != b.cutoff_.has_value()) {
    return !a.cutoff_.has_value();
  }
  if (!a.cutoff_.has_value()) return false;
  return *a.cutoff_ < *b.cutoff_;
}

std::vector<Measure> parse_measure_list(std::string_view exprs) {
  std::vector<Measure> measures;
  std::size_t i = 0;
  while (i < exprs.size()) {
    while (i < exprs.size() &&
           std::isspace(static_cast<unsigned char>(exprs[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < exprs.size() &&
           !std::isspace(static_cast<unsigned char>(exprs[i]))) {
      ++i;
    }
    if (i == start) break;
    Measure measure = Measure::parse(exprs.substr(start, i - start));
    if (std::find(measures.begin(), measures.end(), measure) ==
        measures.end()) {
      measures.push_back(std::move(measure));
    }
  }
  return measures;
}

}  // namespace ireval
