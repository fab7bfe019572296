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
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ireval/errors.hpp"
#include "ireval/evaluate.hpp"
#include "ireval/measure.hpp"
#include "ireval/output.hpp"
#include "ireval/trec_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitMeasure = 3;

#ifndef IREVAL_VERSION
#define IREVAL_VERSION "0.0.0"
#endif

int run(int argc, char** argv) {
  CLI::App app{
      "Evaluate a TREC run against relevance judgments.\n"
      "Example: ireval qrels.txt run.txt 'nDCG@10 P(rel=2)@5 Judged@10'"};
  app.set_version_flag("--version", std::string("ireval ") + IREVAL_VERSION);

  std::string qrels_path;
  std::string run_path;
  std::vector<std::string> measure_args;
  bool by_query = false;
  bool intersect = false;
  int places = 4;
  std::string format = "tsv";
  std::string backend;

  app.add_option("qrels", qrels_path, "TREC qrels file (qid iter docid grade)")
      ->required();
  app.add_option("run", run_path, "TREC run file (qid Q0 docid rank score tag)")
      ->required();
  app.add_option("measures", measure_args,
                 "Measure expressions; one token may hold a whitespace-"
                 "separated list")
      ->required();
  app.add_flag("--by-query", by_query,
               "Print per-query results before the aggregates");
  app.add_flag("--intersect", intersect,
               "Evaluate only queries present in both qrels and run");
  app.add_option("--places", places, "Decimal places for values (default 4)")
      ->check(CLI::Range(1, 10));
  app.add_option("--format", format, "Output format: tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--backend", backend,
                 "Force one backend (rank, cwl, compat) for every measure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    std::cout << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "ireval: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<ireval::Measure> measures;
  try {
    std::string joined;
    for (const auto& token : measure_args) {
      if (!joined.empty()) joined += ' ';
      joined += token;
    }
    measures = ireval::parse_measure_list(joined);
    if (measures.empty()) {
      std::cerr << "ireval: no measures given\n";
      return kExitUsage;
    }
  } catch (const ireval::MeasureError& e) {
    std::cerr << "ireval: " << e.what() << '\n';
    return kExitMeasure;
  }

  try {
    ireval::QrelsTable qrels = ireval::QrelsTable::load(qrels_path);
    ireval::RunTable run_table = ireval::RunTable::load(run_path);

    ireval::EvalOptions options;
    options.intersect = intersect;
    options.backend_override = backend;

    ireval::Evaluator evaluator(measures, std::move(qrels), options);
    std::vector<ireval::QueryResult> rows;
    if (by_query) rows = evaluator.per_query(run_table);
    auto aggregates = evaluator.aggregate(run_table);

    const std::vector<ireval::QueryResult>* rows_ptr =
        by_query ? &rows : nullptr;
    if (format == "json") {
      std::cout << ireval::render_json(measures, aggregates, rows_ptr);
    } else {
      std::cout << ireval::render_tsv(measures, aggregates, rows_ptr, places);
    }
    return kExitOk;
  } catch (const ireval::MeasureError& e) {
    std::cerr << "ireval: " << e.what() << '\n';
    return kExitMeasure;
  } catch (const ireval::ParseError& e) {
    std::cerr << "ireval: " << e.what() << '\n';
    return kExitParse;
  } catch (const ireval::EvalError& e) {
    std::cerr << "ireval: " << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
