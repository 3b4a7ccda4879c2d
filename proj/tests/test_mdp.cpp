/*
 * Copyright 2026 The qrctl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <doctest.h>

#include "corpus.hpp"
#include "qrctl/qrctl.hpp"

#include <string>

using namespace qrctl;

namespace {

Mdp from_json(const std::string& text) { return validate(parse_model_json(text)); }

const char* kChain = R"({
  "propositions": ["q", "r"],
  "states": [
    {"name": "s", "labels": ["q"], "actions": {"a": {"s": "1/2", "t": "1/2"}}},
    {"name": "t", "labels": ["r"], "actions": {"a": {"t": 1}}}
  ]
})";

}  // namespace

TEST_CASE("probabilities parse exactly when written as fractions") {
    auto half = Probability::parse("1/2");
    CHECK(half.is_exact());
    CHECK(half.value() == doctest::Approx(0.5));
    CHECK(half.to_string() == "1/2");
    CHECK(Probability::parse("1").to_string() == "1");
    CHECK_FALSE(Probability::parse("0.25").is_exact());
    CHECK(Probability::parse("0.25").value() == 0.25);
    CHECK_THROWS_AS(Probability::parse("1/0"), FormatError);
    CHECK_THROWS_AS(Probability::parse("half"), FormatError);
    CHECK(Probability::parse("1/3") + Probability::parse("2/3") == Probability::parse("1"));
}

TEST_CASE("a two-state chain loads") {
    Mdp m = from_json(kChain);
    REQUIRE(m.num_states() == 2);
    CHECK(m.name(0) == "s");
    CHECK(m.state_id("t") == 1);
    CHECK(m.states_labeled("q") == make_set(2, {0}));
    CHECK(m.states_labeled("r") == make_set(2, {1}));
    CHECK(m.states_labeled(kTurn).none());
    CHECK(m.is_markov_chain());
    CHECK(m.transition_count() == 3);
    CHECK(m.support(m.first_choice(0)).size() == 2);
    CHECK(m.warnings().empty());
    CHECK_THROWS_AS(m.state_id("u"), UnknownState);
    CHECK_THROWS_AS(m.states_labeled("p"), UndeclaredProposition);
}

TEST_CASE("model validation rejects broken inputs") {
    CHECK_THROWS_AS(from_json(R"({"states": [{"name": "s", "labels": [], "actions": {}}]})"), EmptyMoveSet);
    CHECK_THROWS_AS(from_json(R"({"states": [{"name": "s", "labels": [], "actions": {"a": {"s": "1/3"}}}]})"),
                    BadDistribution);
    CHECK_THROWS_AS(from_json(R"({"states": [{"name": "s", "labels": [], "actions": {"a": {"s": 0.5, "t": 0.4}}},
                                             {"name": "t", "labels": [], "actions": {"a": {"t": 1}}}]})"),
                    BadDistribution);
    CHECK_THROWS_AS(from_json(R"({"states": [{"name": "s", "labels": [], "actions": {"a": {"s": 1}}},
                                             {"name": "s", "labels": [], "actions": {"a": {"s": 1}}}]})"),
                    DuplicateState);
    CHECK_THROWS_AS(from_json(R"({"states": [{"name": "s", "labels": [], "actions": {"a": {"u": 1}}}]})"),
                    UnknownState);
    CHECK_THROWS_AS(from_json(R"({"propositions": ["q"],
                                  "states": [{"name": "s", "labels": ["p"], "actions": {"a": {"s": 1}}}]})"),
                    UndeclaredProposition);
    CHECK_THROWS_AS(from_json("{"), FormatError);
    CHECK_THROWS_AS(from_json(R"({"states": [{"name": "s", "labels": [], "actions": {"a": {"s": true}}}]})"),
                    FormatError);
}

TEST_CASE("decimal distributions are accepted up to rounding") {
    Mdp m = from_json(R"({"states": [{"name": "s", "labels": [], "actions": {"a": {"s": 0.1, "t": 0.2, "u": 0.7}}},
                                     {"name": "t", "labels": [], "actions": {"a": {"t": 1}}},
                                     {"name": "u", "labels": [], "actions": {"a": {"u": 1}}}]})");
    CHECK(m.num_states() == 3);
}

TEST_CASE("a turn state with a random action is reported") {
    Mdp m = from_json(R"({"states": [{"name": "s", "labels": ["turn"], "actions": {"a": {"s": "1/2", "t": "1/2"}}},
                                     {"name": "t", "labels": [], "actions": {"a": {"t": 1}}}]})");
    CHECK(m.warnings().size() == 1);
    auto alt = check_alternating(m);
    CHECK_FALSE(alt.accepted());
    REQUIRE(alt.violations.size() == 1);
    CHECK(alt.violations[0].clause == 1);
}

TEST_CASE("model JSON round-trips") {
    testing::Rng rng(7);
    for (const Mdp& m : testing::corpus(11, 40, {})) {
        Mdp back = from_json(model_to_json(m));
        CHECK(model_to_json(back) == model_to_json(m));
        CHECK(back.names() == m.names());
        CHECK(back.transition_count() == m.transition_count());
    }
}

TEST_CASE("edge relation lists distinct successors") {
    Mdp m = reference::convex_combination_mdp();
    auto e = edge_relation(m);
    auto s = m.state_id("s'");
    CHECK(e.successors(s) == std::vector<StateId>{m.state_id("u"), m.state_id("v")});
}

TEST_CASE("alternate splits every choice into a probabilistic state") {
    Mdp m = reference::convex_combination_mdp();
    CHECK_FALSE(check_alternating(m).accepted());
    auto alt = alternate(m);
    CHECK(alt.synthesized_states == 7);
    CHECK(alt.mdp.num_states() == 11);
    CHECK(check_alternating(alt.mdp).accepted());
    CHECK(alt.partition.player1 == alt.mdp.states_labeled(kTurn));
    CHECK(alt.mdp.find_state("<s',c>").has_value());
}

TEST_CASE("alternate yields an alternating model on random inputs") {
    for (const Mdp& m : testing::corpus(3, 60, {})) {
        auto alt = alternate(m);
        CHECK(check_alternating(alt.mdp).accepted());
        CHECK(alt.synthesized_states == m.num_choices());
        CHECK(alt.mdp.num_states() == m.num_states() + m.num_choices());
    }
}

TEST_CASE("random alternating models pass the alternation check") {
    testing::Rng rng(5);
    for (int i = 0; i < 50; ++i) CHECK(check_alternating(testing::random_amdp(rng, 8, 3)).accepted());
}

TEST_CASE("perturbation keeps supports and sums") {
    testing::Rng rng(9);
    for (const Mdp& m : testing::corpus(4, 30, {})) {
        Mdp p = testing::perturb(m, rng, 0.2);
        REQUIRE(p.num_choices() == m.num_choices());
        for (std::size_t c = 0; c < m.num_choices(); ++c) {
            auto a = m.support(c), b = p.support(c);
            CHECK(std::vector<StateId>(a.begin(), a.end()) == std::vector<StateId>(b.begin(), b.end()));
        }
    }
}
