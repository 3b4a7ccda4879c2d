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

#include <algorithm>

using namespace qrctl;

namespace {

constexpr Quantifier Eas{Polarity::exists, Mode::almost};
constexpr Quantifier Esure{Polarity::exists, Mode::sure};
constexpr Quantifier Epos{Polarity::exists, Mode::pos};

bool has(const Fragments& f, Fragment tag) { return f.contains(tag); }

}  // namespace

TEST_CASE("eventually desugars to until from true") {
    auto f = parse("Eas F r");
    REQUIRE(f->kind == StateNode::Kind::Quant);
    CHECK(f->quantifier == Eas);
    REQUIRE(f->path->kind == PathNode::Kind::Until);
    CHECK(equal(f->path->lhs->state, truth()));
    CHECK(equal(f->path->rhs->state, atom("r")));
    CHECK(to_string(f) == "Eas (F r)");
}

TEST_CASE("ATL quantifiers resolve to their QRCTL counterparts") {
    auto g = parse("<1> G q");
    CHECK(g->quantifier == Esure);
    REQUIRE(g->path->kind == PathNode::Kind::WaitFor);
    CHECK(equal(g->path->lhs->state, atom("q")));
    CHECK(equal(g->path->rhs->state, falsity()));
    CHECK(equal(parse("<1,p> X q"), parse("Eex X q")));
    CHECK(equal(parse("<p> X q"), parse("Aex X q")));
    CHECK(equal(parse("<0> X q"), parse("Asure X q")));
}

TEST_CASE("binding strength") {
    CHECK(equal(parse("a | b & c"), parse("a | (b & c)")));
    CHECK(equal(parse("a -> b -> c"), parse("a -> (b -> c)")));
    CHECK(equal(parse("!a & b"), parse("(!a) & b")));
    CHECK(equal(parse("Eas q U r"), parse("Eas (q U r)")));
    CHECK(equal(parse("Epos (a U b U c)"), parse("Epos (a U (b U c))")));
    CHECK(equal(parse("Eas (F q & G p)"),
                quantify(Eas, conjoin(eventually(embed(atom("q"))), always(embed(atom("p")))))));
    CHECK(equal(parse("Epos X q & r"), conjoin(parse("Epos X q"), atom("r"))));
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse("Epos (q U");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 9);
    }
    CHECK_THROWS_AS(parse("q &"), SyntaxError);
    CHECK_THROWS_AS(parse("F q"), SyntaxError);
    CHECK_THROWS_AS(parse("q r"), SyntaxError);
    CHECK_THROWS_AS(parse("<2> X q"), UnknownQuantifier);
    CHECK_THROWS_AS(parse("Emaybe (X q)"), UnknownQuantifier);
}

TEST_CASE("identifiers may carry primes and dots") {
    auto f = parse("s' | a.b");
    CHECK(equal(f, disjoin(atom("s'"), atom("a.b"))));
}

TEST_CASE("printing then parsing is the identity") {
    testing::Rng rng(17);
    for (int i = 0; i < 500; ++i) {
        auto f = testing::random_qrctl(rng, 3, {"q", "r"});
        auto text = to_string(f);
        CHECK_MESSAGE(equal(parse(text), f), text);
        CHECK(to_string(parse(text)) == text);
    }
    for (const char* text : {"Eas (F q & G p)", "Aas (q U r) -> !Epos X (q | r)", "Eex (X q | r U q)",
                             "Esure (Epos X q W false)", "!(Apos G F q)", "Asure X Eas (q W r)"}) {
        auto f = parse(text);
        CHECK_MESSAGE(equal(parse(to_string(f)), f), text);
    }
}

TEST_CASE("fragment tags") {
    auto tags = classify(parse("Epos X q"));
    CHECK(has(tags, Fragment::qrctl));
    CHECK(has(tags, Fragment::qrctl_star));
    CHECK(has(tags, Fragment::pos));
    CHECK(has(tags, Fragment::next_only));
    CHECK_FALSE(has(tags, Fragment::sure));

    auto star = classify(parse("Eas (F q & G Epos X q)"));
    CHECK(star.tags() == std::vector<Fragment>{Fragment::qrctl_star});

    auto wait = classify(parse("Esure (q W r)"));
    CHECK(wait.tags() == std::vector<Fragment>{Fragment::qrctl, Fragment::qrctl_star, Fragment::sure});

    CHECK(has(classify(parse("Apos (q U Epos X r)")), Fragment::pos));
    CHECK_FALSE(has(classify(parse("Apos (q U Eas X r)")), Fragment::pos));
    CHECK(has(classify(parse("Asure X q")), Fragment::sure));
    CHECK_FALSE(has(classify(parse("Aex X q")), Fragment::sure));
    CHECK_FALSE(has(classify(parse("Epos F q")), Fragment::next_only));
    CHECK(has(classify(parse("q & !r")), Fragment::pos));
}

TEST_CASE("QRCTL tag implies every temporal operator sits under a quantifier") {
    testing::Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        auto f = testing::random_qrctl(rng, 3, {"q", "r"});
        CHECK(classify(f).qrctl);
    }
    CHECK_FALSE(classify(parse("Epos X X q")).qrctl);
    CHECK_FALSE(classify(parse("Epos (q U X r)")).qrctl);
}

TEST_CASE("dualize rewrites universal quantifiers") {
    auto apos = dualize(parse("Apos X q"));
    CHECK(equal(apos, negate(quantify(Eas, next(embed(negate(atom("q"))))))));

    auto aas = dualize(parse("Aas (q U r)"));
    CHECK(equal(aas, negate(quantify(Epos, wait_for(embed(negate(atom("r"))), embed(negate(atom("q"))))))));

    CHECK(equal(dualize(parse("!!q")), atom("q")));
    CHECK(equal(dualize(parse("Esure X q")), parse("Esure X q")));
    CHECK(equal(dualize(parse("Asure (q W r)")), parse("!Eex (!r U !q)")));
}

TEST_CASE("dualized formulas contain no universal quantifier") {
    testing::Rng rng(29);
    std::function<bool(const StateFormula&)> existential = [&](const StateFormula& f) -> bool {
        switch (f->kind) {
            case StateNode::Kind::True:
            case StateNode::Kind::Atom: return true;
            case StateNode::Kind::Not: return existential(f->lhs);
            case StateNode::Kind::Or: return existential(f->lhs) && existential(f->rhs);
            case StateNode::Kind::Quant: {
                if (f->quantifier.polarity == Polarity::forall) return false;
                std::function<bool(const PathFormula&)> walk = [&](const PathFormula& p) -> bool {
                    if (!p) return true;
                    if (p->kind == PathNode::Kind::State) return existential(p->state);
                    return walk(p->lhs) && walk(p->rhs);
                };
                return walk(f->path);
            }
        }
        return false;
    };
    for (int i = 0; i < 300; ++i) CHECK(existential(dualize(testing::random_qrctl(rng, 3, {"q", "r"}))));
}
