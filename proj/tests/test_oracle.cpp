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

#include "automata.hpp"
#include "corpus.hpp"
#include "qrctl/qrctl.hpp"

using namespace qrctl;

namespace {

constexpr Quantifier Eas{Polarity::exists, Mode::almost};
constexpr Quantifier Esure{Polarity::exists, Mode::sure};
constexpr Quantifier Anullo{Polarity::forall, Mode::nullo};

RawModel coin() {
    auto half = Probability::parse("1/2"), one = Probability::parse("1");
    return {{"q", "r"},
            {{"c", {}, {{"flip", {{"g", half}, {"d", half}}}}},
             {"g", {"q"}, {{"stay", {{"g", one}}}}},
             {"d", {"r"}, {{"stay", {{"d", one}}}}}}};
}

}  // namespace

TEST_CASE("reachability probabilities") {
    Mdp m1 = reference::two_state_chain();
    auto r = chain_reach_prob(m1, make_set(2, {1}));
    CHECK(r.probability[0] == doctest::Approx(1.0));
    CHECK(r.probability[1] == 1.0);
    CHECK(r.one == full_set(2));

    auto none = chain_reach_prob(m1, empty_set(2));
    CHECK(none.probability == std::vector<double>{0.0, 0.0});
    CHECK(none.zero == full_set(2));

    Mdp c = validate(coin());
    auto g = chain_reach_prob(c, make_set(3, {1}));
    CHECK(g.probability[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(g.one.test(0));
    CHECK_FALSE(g.zero.test(0));
    CHECK_THROWS_AS(chain_reach_prob(reference::convex_combination_mdp(), make_set(4, {2})), Error);
}

TEST_CASE("strategy enumeration") {
    Mdp m = reference::convex_combination_mdp();
    CHECK(strategy_count(m) == 6);
    MemorylessStrategy sigma(m.num_states(), 0);
    std::size_t seen = 1;
    while (next_strategy(m, sigma)) ++seen;
    CHECK(seen == 6);
    for (const Mdp& r : testing::corpus(111, 30, {})) {
        auto v = qualitative_verdict(r, TemporalOp::next, r.states_labeled("q"), r.states_labeled("r"));
        CHECK(v.strategies == strategy_count(r));
    }
}

TEST_CASE("oracle verdicts on the two-state chain") {
    Mdp m = reference::two_state_chain();
    auto t = make_set(2, {1});
    auto v = qualitative_verdict(m, TemporalOp::until, full_set(2), t);
    CHECK(v.holds(0, Eas));
    CHECK_FALSE(v.holds(0, Esure));
    CHECK(v.holds(1, Esure));
    for (const Mdp& r : testing::corpus(113, 20, {1, 6, 3, 3, {"q", "r"}})) {
        auto all = qualitative_verdict(r, TemporalOp::until, full_set(r.num_states()), full_set(r.num_states()));
        CHECK(all.satisfying(Anullo).all());
    }
}

TEST_CASE("oracle bounds") {
    auto big = testing::line_chain(9);
    CHECK_THROWS_AS(qualitative_verdict(big, TemporalOp::next, full_set(9), full_set(9)), BoundExceeded);
    OracleBounds wide;
    wide.max_states = 9;
    CHECK_NOTHROW(qualitative_verdict(big, TemporalOp::next, full_set(9), full_set(9), wide));
    auto pm = product(testing::line_chain(13), testing::dra_until("q", "r"), true);
    CHECK_THROWS_AS(rabin_verdict(pm, Mode::almost), BoundExceeded);
}

TEST_CASE("lasso analysis on simple products") {
    Mdp m = reference::two_state_chain();
    auto pm = product(m, testing::dra_eventually_r());
    const StateId s = *pm.initial_of[0];
    CHECK(rabin_verdict(pm, Mode::almost).test(s));
    CHECK_FALSE(rabin_verdict(pm, Mode::sure).test(s));
    auto trivial = product(m, testing::dra_trivial({"q", "r"}));
    for (Mode mode : {Mode::sure, Mode::almost, Mode::pos, Mode::nullo}) CHECK(rabin_verdict(trivial, mode).all());

    // A rejecting self-loop: nothing is accepted in any mode.
    RabinAutomaton never;
    never.alphabet = {"q"};
    never.locations = {{"n", {}, {"n", "y"}}, {"y", {"q"}, {"n", "y"}}};
    never.initial = {"n", "y"};
    never.pairs = {{{"n", "y"}, {"n", "y"}}};
    auto loop = product(m, never);
    for (Mode mode : {Mode::sure, Mode::almost, Mode::pos, Mode::nullo}) CHECK(rabin_verdict(loop, mode).none());
}

TEST_CASE("distinguisher enumeration") {
    Mdp m = reference::almost_sure_separation_mdp();
    CHECK(same_relation(enumerate_distinguishers(m, Logic::pos, 0), initial_partition(m)));
    auto d = enumerate_distinguishers(m, Logic::pos, 3);
    CHECK_FALSE(d.same_block(m.state_id("s"), m.state_id("t")));
    auto sure = enumerate_distinguishers(m, Logic::sure, 3);
    CHECK(sure.same_block(m.state_id("s"), m.state_id("t")));

    Mdp f = reference::one_neighbourhood_family();
    auto p = enumerate_distinguishers(f, Logic::pos, 3);
    CHECK_FALSE(p.same_block(f.state_id("s1"), f.state_id("s3")));
    CHECK(p.same_block(f.state_id("s1"), f.state_id("s2")));

    CHECK_THROWS_AS(enumerate_distinguishers(testing::line_chain(7), Logic::pos, 2), BoundExceeded);
}
