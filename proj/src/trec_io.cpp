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
#include "ireval/trec_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "ireval/errors.hpp"

namespace ireval {

namespace {

// Splits on runs of spaces/tabs; leading and trailing whitespace ignored.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool parse_int(std::string_view text, long long* out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && text.front() == '+') ++begin;  // from_chars rejects '+'
  auto result = std::from_chars(begin, end, *out);
  return result.ec == std::errc() && result.ptr == end;
}

// Locale-independent: decimal point only, no thousands separators.
bool parse_double(std::string_view text, double* out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto result = std::from_chars(begin, end, *out);
  return result.ec == std::errc() && result.ptr == end;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::optional<int> QueryJudgments::grade(const std::string& doc_id) const {
  if (docs_ == nullptr) return std::nullopt;
  auto it = docs_->find(doc_id);
  if (it == docs_->end()) return std::nullopt;
  return it->second;
}

int QueryJudgments::relevant_count(int threshold) const {
  if (sorted_grades_ == nullptr) return 0;
  auto it = std::lower_bound(sorted_grades_->begin(), sorted_grades_->end(),
                             threshold);
  return static_cast<int>(sorted_grades_->end() - it);
}

int QueryJudgments::nonrelevant_count(int threshold) const {
  return judged_count() - relevant_count(threshold);
}

int QueryJudgments::judged_count() const {
  return sorted_grades_ == nullptr ? 0
                                   : static_cast<int>(sorted_grades_->size());
}

const std::map<std::string, int>& QueryJudgments::docs() const {
  static const std::map<std::string, int> kEmpty;
  return docs_ == nullptr ? kEmpty : *docs_;
}

void QrelsTable::insert(const QrelsEntry& entry, std::size_t line) {
  if (entry.query_id.empty() || entry.doc_id.empty()) {
    throw ParseError("empty query or document id", line);
  }
  auto& per_query = by_query_[entry.query_id];
  auto [it, inserted] = per_query.docs.emplace(entry.doc_id, entry.grade);
  if (!inserted) {
    throw ParseError("duplicate judgment for query '" + entry.query_id +
                         "', document '" + entry.doc_id + "'",
                     line);
  }
  ++entry_count_;
}

void QrelsTable::finalize() {
  max_grade_ = 0;
  bool first = true;
  for (auto& [qid, per_query] : by_query_) {
    per_query.sorted_grades.clear();
    per_query.sorted_grades.reserve(per_query.docs.size());
    for (const auto& [doc, grade] : per_query.docs) {
      per_query.sorted_grades.push_back(grade);
      if (first || grade > max_grade_) {
        max_grade_ = grade;
        first = false;
      }
    }
    std::sort(per_query.sorted_grades.begin(), per_query.sorted_grades.end());
  }
}

QrelsTable QrelsTable::from_entries(const std::vector<QrelsEntry>& entries) {
  QrelsTable table;
  for (const auto& entry : entries) table.insert(entry, 0);
  table.finalize();
  return table;
}

QrelsTable QrelsTable::parse(std::istream& in) {
  QrelsTable table;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() < 4) {
      throw ParseError("expected 4 fields `qid iter docid grade`, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    long long grade = 0;
    if (!parse_int(fields[3], &grade) ||
        grade < std::numeric_limits<int>::min() ||
        grade > std::numeric_limits<int>::max()) {
      throw ParseError(
          "grade is not an integer: '" + std::string(fields[3]) + "'",
          line_no);
    }
    QrelsEntry entry;
    entry.query_id = std::string(fields[0]);
    entry.iteration = std::string(fields[1]);
    entry.doc_id = std::string(fields[2]);
    entry.grade = static_cast<int>(grade);
    table.insert(entry, line_no);
  }
  table.finalize();
  return table;
}

QrelsTable QrelsTable::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

QrelsTable QrelsTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open qrels file '" + path + "'");
  return parse(in);
}

std::vector<std::string> QrelsTable::query_ids() const {
  std::vector<std::string> ids;
  ids.reserve(by_query_.size());
  for (const auto& [qid, unused] : by_query_) ids.push_back(qid);
  return ids;
}

bool QrelsTable::has_query(const std::string& query_id) const {
  return by_query_.count(query_id) != 0;
}

QueryJudgments QrelsTable::judgments(const std::string& query_id) const {
  auto it = by_query_.find(query_id);
  if (it == by_query_.end()) {
    return QueryJudgments(nullptr, nullptr, max_grade_);
  }
  return QueryJudgments(&it->second.docs, &it->second.sorted_grades,
                        max_grade_);
}

void RunTable::insert(const RunEntry& entry, std::size_t line,
                      SeenDocs& seen) {
  if (entry.query_id.empty() || entry.doc_id.empty()) {
    throw ParseError("empty query or document id", line);
  }
  if (!std::isfinite(entry.score)) {
    throw ParseError("non-finite score for query '" + entry.query_id +
                         "', document '" + entry.doc_id + "'",
                     line);
  }
  if (!seen[entry.query_id].insert(entry.doc_id).second) {
    throw ParseError("duplicate document '" + entry.doc_id + "' for query '" +
                         entry.query_id + "'",
                     line);
  }
  by_query_[entry.query_id].emplace_back(entry.doc_id, entry.score);
}

RunTable RunTable::from_entries(const std::vector<RunEntry>& entries) {
  RunTable table;
  SeenDocs seen;
  for (const auto& entry : entries) table.insert(entry, 0, seen);
  return table;
}

RunTable RunTable::parse(std::istream& in) {
  RunTable table;
  SeenDocs seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 6) {
      throw ParseError("expected 6 fields `qid Q0 docid rank score tag`, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    RunEntry entry;
    entry.query_id = std::string(fields[0]);
    entry.literal_q0 = std::string(fields[1]);
    entry.doc_id = std::string(fields[2]);
    if (!parse_int(fields[3], &entry.rank_field)) {
      throw ParseError("rank is not an integer: '" + std::string(fields[3]) +
                           "'",
                       line_no);
    }
    if (!parse_double(fields[4], &entry.score) ||
        !std::isfinite(entry.score)) {
      throw ParseError("score is not a finite number: '" +
                           std::string(fields[4]) + "'",
                       line_no);
    }
    entry.tag = std::string(fields[5]);
    table.insert(entry, line_no, seen);
  }
  return table;
}

RunTable RunTable::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

RunTable RunTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open run file '" + path + "'");
  return parse(in);
}

std::vector<std::string> RunTable::query_ids() const {
  std::vector<std::string> ids;
  ids.reserve(by_query_.size());
  for (const auto& [qid, unused] : by_query_) ids.push_back(qid);
  return ids;
}

bool RunTable::has_query(const std::string& query_id) const {
  return by_query_.count(query_id) != 0;
}

const std::vector<RunTable::ScoredDoc>& RunTable::docs(
    const std::string& query_id) const {
  static const std::vector<ScoredDoc> kEmpty;
  auto it = by_query_.find(query_id);
  return it == by_query_.end() ? kEmpty : it->second;
}

std::size_t RunTable::entry_count() const {
  std::size_t n = 0;
  for (const auto& [qid, docs] : by_query_) n += docs.size();
  return n;
}

void RunTable::write(std::ostream& out, const std::string& tag) const {
  for (const auto& [qid, docs] : by_query_) {
    std::vector<ScoredDoc> ordered(docs);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first > b.first;  // run-order convention: doc id descending
    });
    std::size_t rank = 0;
    for (const auto& [doc, score] : ordered) {
      char buffer[64];
      std::snprintf(buffer, sizeof(buffer), "%.17g", score);
      out << qid << " Q0 " << doc << ' ' << ++rank << ' ' << buffer << ' '
          << tag << '\n';
    }
  }
}

std::string RunTable::write_string(const std::string& tag) const {
  std::ostringstream out;
  write(out, tag);
  return out.str();
}

bool same_run(const RunTable& a, const RunTable& b) {
  auto ids_a = a.query_ids();
  if (ids_a != b.query_ids()) return false;
  for (const auto& qid : ids_a) {
    auto docs_a = a.docs(qid);
    auto docs_b = b.docs(qid);
    std::sort(docs_a.begin(), docs_a.end());
    std::sort(docs_b.begin(), docs_b.end());
    if (docs_a != docs_b) return false;
  }
  return true;
}

}  // namespace ireval
