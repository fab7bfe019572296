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
#ifndef IREVAL_TREC_IO_HPP_
#define IREVAL_TREC_IO_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ireval {

// One line of a TREC qrels file: `qid iter docid grade`.
struct QrelsEntry {
  std::string query_id;
  std::string iteration;  // carried through, never interpreted
  std::string doc_id;
  int grade = 0;  // may be negative ("judged, not relevant")
};

// One line of a TREC run file: `qid Q0 docid rank score tag`.
// The rank field is informational only; rankings are induced from scores.
struct RunEntry {
  std::string query_id;
  std::string literal_q0;
  std::string doc_id;
  long long rank_field = 0;
  double score = 0.0;  // always finite
  std::string tag;
};

// Per-query view over one query's judgments plus the table-wide maximum
// grade. R(t)/N(t) lookups are O(log n) over a sorted grade list.
class QueryJudgments {
 public:
  QueryJudgments() = default;
  QueryJudgments(const std::map<std::string, int>* docs,
                 const std::vector<int>* sorted_grades, int table_max_grade)
      : docs_(docs), sorted_grades_(sorted_grades),
        table_max_grade_(table_max_grade) {}

  // Grade of a document, or nullopt when unjudged.
  std::optional<int> grade(const std::string& doc_id) const;

  // R(t): judged documents with grade >= t.
  int relevant_count(int threshold) const;
  // N(t): judged documents with grade < t.
  int nonrelevant_count(int threshold) const;
  // Total judged documents for this query.
  int judged_count() const;

  // Maximum grade across the *whole* qrels table, not just this query.
  int table_max_grade() const { return table_max_grade_; }

  const std::map<std::string, int>& docs() const;

  bool empty() const { return judged_count() == 0; }

 private:
  const std::map<std::string, int>* docs_ = nullptr;
  const std::vector<int>* sorted_grades_ = nullptr;
  int table_max_grade_ = 0;
};

// Immutable relevance-judgment table: per query, doc id -> integer grade.
class QrelsTable {
 public:
  QrelsTable() = default;

  // Duplicate (query, doc) pairs are an error.
  static QrelsTable from_entries(const std::vector<QrelsEntry>& entries);
  static QrelsTable parse(std::istream& in);
  static QrelsTable parse_string(const std::string& text);
  static QrelsTable load(const std::string& path);

  // Query ids in ascending byte order.
  std::vector<std::string> query_ids() const;
  std::size_t query_count() const { return by_query_.size(); }
  bool has_query(const std::string& query_id) const;

  // View over one query; table_max_grade is still filled in when the query
  // is unknown (empty view).
  QueryJudgments judgments(const std::string& query_id) const;

  int max_grade() const { return max_grade_; }
  std::size_t entry_count() const { return entry_count_; }

 private:
  struct PerQuery {
    std::map<std::string, int> docs;
    std::vector<int> sorted_grades;  // ascending, rebuilt at construction
  };

  std::map<std::string, PerQuery> by_query_;
  int max_grade_ = 0;
  std::size_t entry_count_ = 0;

  void insert(const QrelsEntry& entry, std::size_t line);
  void finalize();
};

// Immutable run table: per query, (doc id, score) in file order.
class RunTable {
 public:
  using ScoredDoc = std::pair<std::string, double>;

  RunTable() = default;

  static RunTable from_entries(const std::vector<RunEntry>& entries);
  static RunTable parse(std::istream& in);
  static RunTable parse_string(const std::string& text);
  static RunTable load(const std::string& path);

  std::vector<std::string> query_ids() const;
  std::size_t query_count() const { return by_query_.size(); }
  bool has_query(const std::string& query_id) const;

  // File-ordered scored documents for one query; empty when absent.
  const std::vector<ScoredDoc>& docs(const std::string& query_id) const;

  std::size_t entry_count() const;

  // Serializes queries in ascending id order, documents in induced ranking
  // order with ranks renumbered 1..n. Round-trips with parse() up to the
  // informational rank field and line order.
  void write(std::ostream& out, const std::string& tag) const;
  std::string write_string(const std::string& tag) const;

 private:
  using SeenDocs = std::map<std::string, std::unordered_set<std::string>>;

  std::map<std::string, std::vector<ScoredDoc>> by_query_;

  void insert(const RunEntry& entry, std::size_t line, SeenDocs& seen);
};

// Semantic equality: same queries and the same (doc, score) sets per query.
// File order and the rank field are not semantic content.
bool same_run(const RunTable& a, const RunTable& b);

}  // namespace ireval

#endif  // IREVAL_TREC_IO_HPP_
