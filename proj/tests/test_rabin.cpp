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
#include "suites.hpp"

#include <string>

using namespace qrctl;

namespace {

constexpr Mode kModes[] = {Mode::sure, Mode::almost, Mode::pos, Mode::nullo};
constexpr Quantifier Eas{Polarity::exists, Mode::almost};
constexpr Quantifier Esure{Polarity::exists, Mode::sure};

// Accepts the runs that see q only finitely often.
RabinAutomaton finitely_often_q() {
    RabinAutomaton a;
    a.alphabet = {"q"};
    a.locations = {{"n", {}, {"n", "y"}}, {"y", {"q"}, {"n", "y"}}};
    a.initial = {"n", "y"};
    a.pairs = {{{"y"}, {"n", "y"}}};
    return a;
}

void require_clean(const testing::Tally& t) {
    INFO(t.first);
    CHECK(t.checked > 0);
    CHECK(t.mismatches == 0);
}

}  // namespace

TEST_CASE("automaton JSON round-trips") {
    auto a = testing::dra_eventually_r();
    auto b = parse_rabin_json(rabin_to_json(a));
    CHECK(rabin_to_json(b) == rabin_to_json(a));
    CHECK(b.locations.size() == a.locations.size());
    CHECK_THROWS_AS(parse_rabin_json("{\"alphabet\": []}"), FormatError);
    CHECK_THROWS_AS(parse_rabin_json("[1, 2"), FormatError);
    auto dangling = a;
    dangling.locations[0].successors.push_back("nowhere");
    CHECK_THROWS_AS(is_deterministic(dangling), FormatError);
}

TEST_CASE("determinism clauses") {
    CHECK(is_deterministic(testing::dra_eventually_r()).deterministic);
    CHECK(is_deterministic(testing::dra_until("q", "r")).deterministic);
    auto nd = is_deterministic(testing::dra_nondeterministic());
    CHECK_FALSE(nd.deterministic);
    REQUIRE_FALSE(nd.violations.empty());
    CHECK(nd.violations[0].rfind("clause 1", 0) == 0);

    auto missing = testing::dra_eventually_r();
    missing.locations[0].successors.pop_back();
    auto report = is_deterministic(missing);
    CHECK_FALSE(report.deterministic);
    CHECK(report.violations[0].rfind("clause 2", 0) == 0);

    auto doubled = testing::dra_trivial({"q"});
    doubled.locations.push_back({"extra", {}, doubled.locations[0].successors});
    doubled.locations[0].successors.push_back("extra");
    bool clause3 = false;
    for (const auto& v : is_deterministic(doubled).violations) clause3 = clause3 || v.rfind("clause 3", 0) == 0;
    CHECK(clause3);
}

TEST_CASE("products preserve distributions and labels") {
    for (const Mdp& m : testing::corpus(91, 40, {})) {
        auto a = testing::dra_until("q", "r");
        for (bool reachable : {false, true}) {
            ProductMdp pm = product(m, a, reachable);
            for (StateId s = 0; s < m.num_states(); ++s) REQUIRE(pm.initial_of[s].has_value());
            for (StateId x = 0; x < pm.mdp.num_states(); ++x) {
                CHECK(pm.mdp.labels(x) == m.labels(pm.model_state[x]));
                CHECK(pm.mdp.choices(x).size() == m.choices(pm.model_state[x]).size());
                for (const Choice& c : pm.mdp.choices(x)) {
                    double sum = 0;
                    for (const Transition& t : c.distribution) sum += t.probability.value();
                    CHECK(sum == doctest::Approx(1.0));
                }
            }
        }
    }
}

TEST_CASE("reachable products agree with full products") {
    for (const Mdp& m : testing::corpus(93, 40, {})) {
        for (const auto& a : {testing::dra_until("q", "r"), testing::dra_not_wait("q", "r")}) {
            ProductMdp full = product(m, a, false), reach = product(m, a, true);
            CHECK(reach.mdp.num_states() <= full.mdp.num_states());
            for (Mode mode : kModes) {
                auto x = rabin_qual(full, mode), y = rabin_qual(reach, mode);
                for (StateId s = 0; s < m.num_states(); ++s) CHECK(x.test(*full.initial_of[s]) == y.test(*reach.initial_of[s]));
            }
        }
    }
}

TEST_CASE("eventually r on the two-state chain") {
    Mdp m = reference::two_state_chain();
    ProductMdp pm = product(m, testing::dra_eventually_r());
    const StateId s = *pm.initial_of[m.state_id("s")];
    CHECK(rabin_qual(pm, Mode::almost).test(s));
    CHECK_FALSE(rabin_qual(pm, Mode::sure).test(s));
    CHECK(check_star(m, Eas, testing::dra_eventually_r()) == full_set(2));
    CHECK(check_star(m, Esure, testing::dra_eventually_r()) == make_set(2, {1}));
}

TEST_CASE("a trivially accepting automaton accepts everywhere") {
    for (const Mdp& m : testing::corpus(95, 20, {})) {
        ProductMdp pm = product(m, testing::dra_trivial({"q", "r"}));
        for (Mode mode : kModes) CHECK(rabin_qual(pm, mode).all());
        CHECK(check_star(m, {Polarity::exists, Mode::nullo}, testing::dra_trivial({"q", "r"})).all());
    }
}

TEST_CASE("errors") {
    Mdp m = reference::two_state_chain();
    CHECK_THROWS_AS(check_star(m, Eas, testing::dra_nondeterministic()), NotDeterministic);
    CHECK_THROWS_AS(check_star(m, {Polarity::forall, Mode::almost}, testing::dra_eventually_r()), MissingComplement);
}

TEST_CASE("modes are ordered") {
    for (const Mdp& m : testing::corpus(97, 60, {})) {
        for (const auto& a : {testing::dra_until("q", "r"), testing::dra_not_until("q", "r"), testing::dra_wait("q", "r"),
                              testing::dra_eventually_and_always("q", "r")}) {
            ProductMdp pm = product(m, a, true);
            auto sure = rabin_qual(pm, Mode::sure), almost = rabin_qual(pm, Mode::almost);
            auto pos = rabin_qual(pm, Mode::pos), nullo = rabin_qual(pm, Mode::nullo);
            CHECK(sure.is_subset_of(almost));
            CHECK(almost.is_subset_of(pos));
            CHECK(pos.is_subset_of(nullo));
        }
    }
}

TEST_CASE("star agrees with the checker on single operators") {
    require_clean(testing::star_suite(testing::corpus(99, 60, {})));
}

TEST_CASE("fixpoints agree with lasso analysis") {
    std::size_t products = 0;
    require_clean(testing::rabin_oracle_suite(testing::corpus(101, 120, {1, 4, 2, 2, {"q", "r"}}), &products));
    CHECK(products > 100);
}

TEST_CASE("the closed sure formula misses a co-Buchi win") {
    // a flips between staying and moving to b; b must be left for good, c loops and is good.
    RawModel raw{{"q", "r"},
                 {{"a", {}, {{"x", {{"a", Probability::parse("1/2")}, {"b", Probability::parse("1/2")}}}}},
                  {"b", {"q"}, {{"x", {{"c", Probability::parse("1")}}}}},
                  {"c", {}, {{"x", {{"c", Probability::parse("1")}}}}}}};
    Mdp m = validate(raw);
    const RabinAutomaton fin = finitely_often_q();
    ProductMdp pm = product(m, fin, true);
    const StateId start = *pm.initial_of[m.state_id("a")];
    CHECK(rabin_verdict(pm, Mode::sure).test(start));
    CHECK(rabin_qual(pm, Mode::sure).test(start));
    CHECK_FALSE(rabin_qual_formula(pm, Mode::sure).test(start));
    CHECK(rabin_qual(pm, Mode::sure) == rabin_verdict(pm, Mode::sure));
    CHECK(check_star(m, Esure, fin) == full_set(3));
}

TEST_CASE("the closed sure formula under-approximates the game") {
    bool strict = false;
    for (const Mdp& m : testing::corpus(103, 1000, {1, 4, 2, 2, {"q", "r"}})) {
        for (const auto& a : {testing::dra_not_until("q", "r"), finitely_often_q()}) {
            ProductMdp pm = product(m, a, true);
            auto formula = rabin_qual_formula(pm, Mode::sure), game = rabin_game_sure(pm);
            CHECK(formula.is_subset_of(game));
            strict = strict || formula != game;
            for (Mode mode : {Mode::almost, Mode::pos, Mode::nullo}) CHECK(rabin_qual_formula(pm, mode) == rabin_qual(pm, mode));
        }
    }
    CHECK(strict);
}

TEST_CASE("eventually q while always p reduces to a pos formula") {
    // With p = Epos X q, the star formula equals Eas (p U (q & !Apos F !p)), which is
    // built from pos quantifiers only, so pos-equivalent states cannot disagree on it.
    const auto reduced = parse("Eas (p U (q & !Apos F !p))");
    CHECK_FALSE(classify(reduced).pos);
    CHECK(classify(parse("!Apos !(p U (q & !Apos F !p))")).pos);
    for (const Mdp& base : testing::corpus(105, 150, {1, 6, 3, 3, {"q"}})) {
        Mdp m = testing::with_label(base, "p", check(base, parse("Epos X q")));
        const StateSet star = check_star(m, Eas, testing::dra_eventually_and_always("q", "p"));
        CHECK(star == check(m, reduced));
        CHECK(star == check(m, parse("!Apos !(p U (q & !Apos F !p))")));
        auto pos = equiv(base, Relation::pos).partition;
        for (StateId s = 0; s < m.num_states(); ++s)
            for (StateId t = s + 1; t < m.num_states(); ++t)
                if (pos.same_block(s, t)) CHECK(star.test(s) == star.test(t));
    }
}
