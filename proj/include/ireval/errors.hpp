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
#ifndef IREVAL_ERRORS_HPP_
#define IREVAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ireval {

// Malformed qrels/run input. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Bad measure expression: unknown name, bad parameter, bad cutoff.
class MeasureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation cannot proceed (e.g. no overlapping queries).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ireval

#endif  // IREVAL_ERRORS_HPP_
