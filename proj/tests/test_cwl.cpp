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

#include <cmath>
#include <random>

#include "ireval/cwl.hpp"
#include "ireval/errors.hpp"
#include "ireval/rank_measures.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace ireval::cwl;

namespace {

struct InstanceA {
  ireval::QrelsTable qrels = testutil::instance_a_qrels();
  ireval::RunTable run = testutil::instance_a_run();
  ireval::QueryJudgments judgments = qrels.judgments("q1");
  ireval::Ranking ranking = testutil::instance_a_ranking(qrels, run);
};

}  // namespace

TEST_CASE("gain mapping is linear in the table maximum") {
  InstanceA a;
  auto gains = map_gains(a.ranking, a.judgments);
  REQUIRE(gains.size() == 3);
  CHECK(gains[0] == 1.0);
  CHECK(gains[1] == 0.0);
  CHECK(gains[2] == 0.5);

  // Binary qrels give indicator gains.
  ireval::QrelsTable binary =
      ireval::QrelsTable::parse_string("q 0 a 1\nq 0 b 0\n");
  ireval::RunTable run =
      ireval::RunTable::parse_string("q Q0 a 1 2.0 t\nq Q0 b 2 1.0 t\n");
  auto ranking = ireval::induce_ranking(run.docs("q"), binary.judgments("q"));
  auto binary_mapped = map_gains(ranking, binary.judgments("q"));
  CHECK(binary_mapped == std::vector<double>{1.0, 0.0});
  CHECK(binary_mapped == binary_gains(ranking, 1));

  // All grades zero: no gain anywhere.
  ireval::QrelsTable zeros =
      ireval::QrelsTable::parse_string("q 0 a 0\nq 0 b 0\n");
  auto zero_ranking =
      ireval::induce_ranking(run.docs("q"), zeros.judgments("q"));
  auto zero_gains = map_gains(zero_ranking, zeros.judgments("q"));
  CHECK(zero_gains == std::vector<double>{0.0, 0.0});
}

TEST_CASE("constant continuation gives geometric weights") {
  ConstantContinuation model(0.5);
  std::vector<double> gains = {1.0, 0.0, 0.5};
  WeightProfile profile = weights_from_continuation(model, gains, 3);
  CHECK(profile.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(profile.weights[1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(profile.weights[2] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(profile.tail_mass == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("truncation continuation gives uniform weights") {
  TruncationContinuation model(3);
  std::vector<double> gains = {1.0, 0.0, 0.5};
  WeightProfile profile = weights_from_continuation(model, gains, 3);
  CHECK(profile.weights[0] == doctest::Approx(1.0 / 3));
  CHECK(profile.weights[1] == doctest::Approx(1.0 / 3));
  CHECK(profile.weights[2] == doctest::Approx(1.0 / 3));
  CHECK(profile.tail_mass == doctest::Approx(0.0));

  CHECK(expected_utility(profile.weights, gains) == doctest::Approx(0.5));
}

TEST_CASE("expected utility basics") {
  CHECK(expected_utility({1.0, 0.0, 0.0}, {0.7, 1.0, 1.0}) ==
        doctest::Approx(0.7));
  CHECK(expected_utility({0.2, 0.3, 0.5}, {0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("weights from an INST model match direct summation") {
  InstanceA a;
  std::vector<double> gains = {1.0, 0.0, 0.5};
  InstContinuation model(1.0);
  WeightProfile profile = weights_from_continuation(model, gains, 3);
  auto direct = oracle::cwl_direct(
      [&](long long rank, double cum) { return model.continuation(rank, cum); },
      gains);
  REQUIRE(direct.weights.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(profile.weights[i] ==
          doctest::Approx(direct.weights[i]).epsilon(1e-9));
  }
}

TEST_CASE("rbp hand values") {
  InstanceA a;
  CHECK(rbp(a.ranking, a.judgments, 0.5, 1) == doctest::Approx(0.625));
  CHECK(rbp(a.ranking, a.judgments, 0.5) == doctest::Approx(0.5625));

  // All ranks relevant at depth n: 1 - p^n.
  ireval::QrelsTable qrels =
      ireval::QrelsTable::parse_string("q 0 a 1\nq 0 b 1\nq 0 c 1\n");
  ireval::RunTable run = ireval::RunTable::parse_string(
      "q Q0 a 1 3.0 t\nq Q0 b 2 2.0 t\nq Q0 c 3 1.0 t\n");
  auto ranking = ireval::induce_ranking(run.docs("q"), qrels.judgments("q"));
  CHECK(rbp(ranking, qrels.judgments("q"), 0.8, 1) ==
        doctest::Approx(1.0 - std::pow(0.8, 3)).epsilon(1e-12));
}

TEST_CASE("rbp approaches the first gain as p vanishes") {
  InstanceA a;
  CHECK(rbp(a.ranking, a.judgments, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rbp(a.ranking, a.judgments, 1e-9, 2) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sdcg hand value and normalization") {
  InstanceA a;
  CHECK(sdcg(a.ranking, a.judgments, 3) ==
        doctest::Approx(0.58660).epsilon(1e-5));

  // Ideal gains everywhere: exactly 1.
  ireval::QrelsTable qrels = ireval::QrelsTable::parse_string(
      "q 0 a 2\nq 0 b 2\nq 0 c 2\n");
  ireval::RunTable run = ireval::RunTable::parse_string(
      "q Q0 a 1 3.0 t\nq Q0 b 2 2.0 t\nq Q0 c 3 1.0 t\n");
  auto ranking = ireval::induce_ranking(run.docs("q"), qrels.judgments("q"));
  CHECK(sdcg(ranking, qrels.judgments("q"), 3) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Zero gains score zero.
  ireval::Ranking unjudged = {{"x", std::nullopt}, {"y", std::nullopt}};
  CHECK(sdcg(unjudged, a.judgments, 3) == 0.0);
}

TEST_CASE("inst and insq match direct summation") {
  InstanceA a;
  auto gains = map_gains(a.ranking, a.judgments);
  InstContinuation inst_model(1.0);
  InsqContinuation insq_model(1.0);
  double inst_oracle =
      oracle::cwl_direct([&](long long r, double c) {
        return inst_model.continuation(r, c);
      }, gains).expected_utility;
  double insq_oracle =
      oracle::cwl_direct([&](long long r, double c) {
        return insq_model.continuation(r, c);
      }, gains).expected_utility;
  CHECK(inst(a.ranking, a.judgments, 1.0) ==
        doctest::Approx(inst_oracle).epsilon(1e-9));
  CHECK(insq(a.ranking, a.judgments, 1.0) ==
        doctest::Approx(insq_oracle).epsilon(1e-9));
}

TEST_CASE("inst and insq weight profiles differ even with zero gains") {
  std::vector<double> zero_gains = {0.0, 0.0, 0.0};
  InstContinuation inst_model(1.0);
  InsqContinuation insq_model(1.0);
  auto inst_profile = weights_from_continuation(inst_model, zero_gains, 3);
  auto insq_profile = weights_from_continuation(insq_model, zero_gains, 3);
  auto inst_direct = oracle::cwl_direct(
      [&](long long r, double c) { return inst_model.continuation(r, c); },
      zero_gains);
  auto insq_direct = oracle::cwl_direct(
      [&](long long r, double c) { return insq_model.continuation(r, c); },
      zero_gains);
  for (int i = 0; i < 3; ++i) {
    CHECK(inst_profile.weights[i] ==
          doctest::Approx(inst_direct.weights[i]).epsilon(1e-9));
    CHECK(insq_profile.weights[i] ==
          doctest::Approx(insq_direct.weights[i]).epsilon(1e-9));
  }
  CHECK(inst_profile.weights[0] != insq_profile.weights[0]);
}

TEST_CASE("weights always form a distribution") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> p_dist(0.05, 0.95);
  std::uniform_int_distribution<long long> k_dist(1, 10);
  std::uniform_real_distribution<double> t_dist(0.2, 4.0);

  for (int trial = 0; trial < 100; ++trial) {
    auto instance = testutil::make_random_instance(rng);
    auto gains = map_gains(instance.ranking, instance.judgments);
    std::vector<const ContinuationModel*> models;
    ConstantContinuation constant(p_dist(rng));
    TruncationContinuation truncation(k_dist(rng));
    SdcgContinuation sdcg_model(k_dist(rng));
    InstContinuation inst_model(t_dist(rng));
    InsqContinuation insq_model(t_dist(rng));
    for (const ContinuationModel* model :
         {static_cast<const ContinuationModel*>(&constant),
          static_cast<const ContinuationModel*>(&truncation),
          static_cast<const ContinuationModel*>(&sdcg_model),
          static_cast<const ContinuationModel*>(&inst_model),
          static_cast<const ContinuationModel*>(&insq_model)}) {
      WeightProfile profile =
          weights_from_continuation(*model, gains, gains.size());
      double total = profile.tail_mass;
      for (double w : profile.weights) {
        CHECK(w >= 0.0);
        total += w;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("truncation route reproduces precision, stop model reproduces rr") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto instance = testutil::make_random_instance(rng);
    for (int rel : {1, 2}) {
      for (long long k : {1, 3, 5}) {
        CHECK(precision_at_k(instance.ranking, instance.judgments, rel, k) ==
              doctest::Approx(ireval::metrics::precision_at_k(
                                  instance.ranking, instance.judgments, rel, k))
                  .epsilon(1e-9));
      }
      CHECK(reciprocal_rank(instance.ranking, instance.judgments, rel) ==
            doctest::Approx(ireval::metrics::reciprocal_rank(
                                instance.ranking, instance.judgments, rel))
                .epsilon(1e-9));
      CHECK(reciprocal_rank(instance.ranking, instance.judgments, rel, 2) ==
            doctest::Approx(ireval::metrics::reciprocal_rank(
                                instance.ranking, instance.judgments, rel, 2))
                .epsilon(1e-9));
    }
  }
}

TEST_CASE("constant model matches the closed-form rbp sum") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> p_dist(0.05, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    auto instance = testutil::make_random_instance(rng);
    double p = p_dist(rng);
    auto gains = map_gains(instance.ranking, instance.judgments);
    double closed_form = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
      closed_form += (1.0 - p) * std::pow(p, static_cast<double>(i)) * gains[i];
    }
    CHECK(rbp(instance.ranking, instance.judgments, p) ==
          doctest::Approx(closed_form).epsilon(1e-9));
  }
}

TEST_CASE("a divergent browsing model is reported") {
  StopAtFirstHitContinuation model;
  std::vector<double> no_hits = {0.0, 0.0};
  CHECK_THROWS_AS(weights_from_continuation(model, no_hits, no_hits.size()),
                  ireval::EvalError);
  // The measure wrapper resolves the limit instead of failing.
  ireval::Ranking unjudged = {{"x", std::nullopt}};
  ireval::QrelsTable qrels = ireval::QrelsTable::parse_string("q 0 a 1\n");
  CHECK(reciprocal_rank(unjudged, qrels.judgments("q"), 1) == 0.0);
}

TEST_CASE("raising one gain never lowers expected utility") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> p_dist(0.1, 0.9);
  for (int trial = 0; trial < 100; ++trial) {
    auto instance = testutil::make_random_instance(rng);
    if (instance.ranking.empty()) continue;
    auto gains = map_gains(instance.ranking, instance.judgments);
    std::uniform_int_distribution<std::size_t> pick(0, gains.size() - 1);
    std::size_t slot = pick(rng);
    auto raised = gains;
    raised[slot] = std::min(1.0, raised[slot] + 0.5);

    // Gain-independent weight profiles: monotonicity is a dot-product fact.
    ConstantContinuation constant(p_dist(rng));
    SdcgContinuation sdcg_model(3);
    InsqContinuation insq_model(1.0);
    for (const ContinuationModel* model :
         {static_cast<const ContinuationModel*>(&constant),
          static_cast<const ContinuationModel*>(&sdcg_model),
          static_cast<const ContinuationModel*>(&insq_model)}) {
      auto profile = weights_from_continuation(*model, gains, gains.size());
      CHECK(expected_utility(profile.weights, raised) >=
            expected_utility(profile.weights, gains) - 1e-12);
    }

    // INST's weights depend on the gains; assert through the direct route.
    InstContinuation inst_model(1.0);
    auto inst_c = [&](long long r, double c) {
      return inst_model.continuation(r, c);
    };
    double before = oracle::cwl_direct(inst_c, gains).expected_utility;
    double after = oracle::cwl_direct(inst_c, raised).expected_utility;
    CHECK(after >= before - 1e-9);
    auto profile =
        weights_from_continuation(inst_model, raised, raised.size());
    CHECK(expected_utility(profile.weights, raised) ==
          doctest::Approx(after).epsilon(1e-9));
  }
}
