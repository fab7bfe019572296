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
#include <doctest.h>

#include <random>
#include <set>

#include "ireval/errors.hpp"
#include "ireval/measure.hpp"
#include "ireval/registry.hpp"

using ireval::Measure;
using ireval::MeasureError;
using ireval::ParamValue;
using ireval::Registry;

TEST_CASE("documented expressions parse to the expected structure") {
  Measure ndcg10 = Measure::parse("nDCG@10");
  CHECK(ndcg10.name() == "nDCG");
  CHECK(ndcg10.param("gain")->as_text() == "linear");
  CHECK(ndcg10.cutoff() == 10);

  Measure p_rel2 = Measure::parse("P(rel=2)@5");
  CHECK(p_rel2.name() == "P");
  CHECK(p_rel2.param("rel")->as_integer() == 2);
  CHECK(p_rel2.cutoff() == 5);

  Measure ap_rel2 = Measure::parse("AP(rel=2)");
  CHECK(ap_rel2.name() == "AP");
  CHECK(ap_rel2.param("rel")->as_integer() == 2);
  CHECK_FALSE(ap_rel2.has_cutoff());

  Measure judged = Measure::parse("Judged@10");
  CHECK(judged.name() == "Judged");
  CHECK(judged.cutoff() == 10);

  CHECK(Measure::parse("nDCG@20").cutoff() == 20);
}

TEST_CASE("parse failures are structured errors") {
  CHECK_THROWS_AS(Measure::parse("nDCG@0"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("RBP(p=1.5)"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("RBP(p=1)"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("XYZ@5"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("P"), MeasureError);        // cutoff required
  CHECK_THROWS_AS(Measure::parse("Bpref@5"), MeasureError);  // cutoff forbidden
  CHECK_THROWS_AS(Measure::parse("AP(rel=2)x"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("AP(bogus=2)"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("AP(rel=two)"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("AP(rel=2.5)"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("AP(rel=2,rel=3)"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("AP()"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("nDCG(gain=cubic)"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("nDCG@ 10"), MeasureError);
  CHECK_THROWS_AS(Measure::parse(""), MeasureError);
  CHECK_THROWS_AS(Measure::parse("@5"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("P@-3"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("IPrec@1.5"), MeasureError);
}

TEST_CASE("unknown measures name diversity measures specially") {
  try {
    Measure::parse("alpha_nDCG@10");
    FAIL("expected MeasureError");
  } catch (const MeasureError& e) {
    CHECK(std::string(e.what()).find("diversity") != std::string::npos);
  }
  try {
    Measure::parse("XYZ@5");
    FAIL("expected MeasureError");
  } catch (const MeasureError& e) {
    CHECK(std::string(e.what()).find("unknown measure: XYZ") !=
          std::string::npos);
  }
}

TEST_CASE("aliases resolve case-sensitively") {
  CHECK(Measure::parse("MAP").name() == "AP");
  CHECK(Measure::parse("NDCG@5").name() == "nDCG");
  CHECK(Measure::parse("MRR").name() == "RR");
  CHECK(Measure::parse("R-Prec").name() == "Rprec");
  CHECK_THROWS_AS(Measure::parse("map"), MeasureError);
  CHECK_THROWS_AS(Measure::parse("ndcg@5"), MeasureError);
}

TEST_CASE("registry holds exactly the catalogued names") {
  const std::set<std::string> expected = {
      "P",     "R",       "AP",     "RR",     "nDCG",   "ERR",   "RBP",
      "SDCG",  "INST",    "INSQ",   "Bpref",  "infAP",  "IPrec", "Rprec",
      "Success", "Judged", "SetP",  "SetR",   "SetF",   "SetAP", "NumQ",
      "NumRel", "NumRet", "NumRelRet", "Compat"};
  std::set<std::string> actual;
  for (const auto& schema : Registry::instance().schemas()) {
    actual.insert(schema.name);
  }
  CHECK(actual == expected);
}

TEST_CASE("IPrec's cutoff slot holds a recall point") {
  Measure half = Measure::parse("IPrec@0.5");
  CHECK(half.cutoff_real() == 0.5);
  CHECK(half.str() == "IPrec@0.5");
  CHECK(Measure::parse("IPrec@1").cutoff_real() == 1.0);
  CHECK(Measure::parse("IPrec@0").cutoff_real() == 0.0);
  CHECK_THROWS_AS(Measure::parse("IPrec"), MeasureError);
}

TEST_CASE("rendering elides defaults and keeps schema order") {
  CHECK(Measure::parse("P(rel=2)@5").str() == "P(rel=2)@5");
  CHECK(Measure::parse("AP(rel=1)").str() == "AP");
  CHECK(Measure::parse("MAP").str() == "AP");
  CHECK(Measure::parse("nDCG(gain=linear)@10").str() == "nDCG@10");
  CHECK(Measure::parse("nDCG(gain=exp)@10").str() == "nDCG(gain=exp)@10");
  CHECK(Measure::parse("RBP(rel=1,p=0.5)").str() == "RBP(p=0.5,rel=1)");
  CHECK(Measure::parse("RBP(p=0.8)").str() == "RBP");
  CHECK(Measure::parse("Compat(p=0.95)").str() == "Compat");
  CHECK(Measure::parse("Compat@1000").str() == "Compat");
  CHECK(Measure::parse("Compat(p=0.9)@10").str() == "Compat(p=0.9)@10");
  CHECK(Measure::parse("SetF(beta=0.5,rel=2)").str() == "SetF(rel=2,beta=0.5)");
}

TEST_CASE("RBP distinguishes graded from thresholded parameterizations") {
  Measure graded = Measure::parse("RBP(p=0.5)");
  CHECK(graded.param("rel") == nullptr);
  Measure binary = Measure::parse("RBP(p=0.5,rel=1)");
  REQUIRE(binary.param("rel") != nullptr);
  CHECK(binary.param("rel")->as_integer() == 1);
  CHECK_FALSE(graded == binary);
}

TEST_CASE("measure lists split on whitespace with set semantics") {
  auto measures = ireval::parse_measure_list("nDCG@10 P(rel=2)@5 Judged@10");
  REQUIRE(measures.size() == 3);
  CHECK(measures[0].str() == "nDCG@10");
  CHECK(measures[1].str() == "P(rel=2)@5");
  CHECK(measures[2].str() == "Judged@10");

  CHECK(ireval::parse_measure_list("").empty());
  CHECK(ireval::parse_measure_list("  \t \n ").empty());

  auto dedup = ireval::parse_measure_list("AP AP");
  REQUIRE(dedup.size() == 1);
  CHECK(dedup[0].str() == "AP");

  // Canonical equality drives the deduplication, not the spelling.
  auto aliased = ireval::parse_measure_list("MAP AP(rel=1) AP");
  CHECK(aliased.size() == 1);

  CHECK_THROWS_AS(ireval::parse_measure_list("AP XYZ"), MeasureError);
}

namespace {

ParamValue random_value(const ireval::ParamSpec& spec, std::mt19937& rng) {
  switch (spec.type) {
    case ireval::ParamType::integer: {
      std::uniform_int_distribution<long long> dist(
          spec.min ? static_cast<long long>(*spec.min) : -5, 20);
      return ParamValue(dist(rng));
    }
    case ireval::ParamType::real: {
      double lo = spec.min.value_or(0.0);
      double hi = spec.max.value_or(lo + 10.0);
      std::uniform_real_distribution<double> dist(lo + 1e-3, hi - 1e-3);
      return ParamValue(dist(rng));
    }
    case ireval::ParamType::text: {
      std::uniform_int_distribution<std::size_t> dist(
          0, spec.choices.size() - 1);
      return ParamValue(spec.choices[dist(rng)]);
    }
  }
  return ParamValue(0LL);
}

}  // namespace

TEST_CASE("arbitrary text never crashes the parser") {
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> length(0, 24);
  std::uniform_int_distribution<int> byte(32, 126);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    int n = length(rng);
    for (int i = 0; i < n; ++i) {
      text.push_back(static_cast<char>(byte(rng)));
    }
    try {
      (void)Measure::parse(text);
    } catch (const MeasureError&) {
      // structured failure is the contract
    }
  }
}

TEST_CASE("parse of render is the identity for random valid measures") {
  std::mt19937 rng(42);
  std::bernoulli_distribution include_param(0.7);
  std::uniform_int_distribution<long long> cutoff_dist(1, 100);
  std::uniform_real_distribution<double> recall_dist(0.0, 1.0);

  for (const auto& schema : Registry::instance().schemas()) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::pair<std::string, ParamValue>> params;
      for (const auto& spec : schema.params) {
        if (include_param(rng)) {
          params.emplace_back(spec.name, random_value(spec, rng));
        }
      }
      std::optional<ParamValue> cutoff;
      if (schema.cutoff == ireval::CutoffPolicy::required ||
          (schema.cutoff == ireval::CutoffPolicy::optional_ &&
           include_param(rng))) {
        cutoff = schema.real_cutoff ? ParamValue(recall_dist(rng))
                                    : ParamValue(cutoff_dist(rng));
      }
      Measure measure = Measure::make(schema.name, params, cutoff);
      Measure reparsed = Measure::parse(measure.str());
      CHECK(reparsed == measure);
      // Rendering is canonical: a second round trip is a fixed point.
      CHECK(reparsed.str() == measure.str());
    }
  }
}
