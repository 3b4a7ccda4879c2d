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

#include "qrctl/reference_models.hpp"

#include <initializer_list>
#include <utility>

namespace qrctl::reference {
namespace {

using Succ = std::pair<const char*, const char*>;  // target, probability

struct Act {
    const char* name;
    std::initializer_list<Succ> successors;
};

RawState state(const char* name, std::initializer_list<const char*> labels, std::initializer_list<Act> actions) {
    RawState st;
    st.name = name;
    for (const char* l : labels) st.labels.emplace_back(l);
    for (const Act& a : actions) {
        RawAction act;
        act.name = a.name;
        for (const auto& [target, p] : a.successors) act.successors.push_back({target, Probability::parse(p)});
        st.actions.push_back(std::move(act));
    }
    return st;
}

Mdp build(std::initializer_list<const char*> props, std::initializer_list<RawState> states) {
    RawModel raw;
    for (const char* p : props) raw.propositions.emplace_back(p);
    raw.states.assign(states.begin(), states.end());
    return validate(raw);
}

}  // namespace

Mdp two_state_chain() {
    return build({"q", "r"}, {
        state("s", {"q"}, {{"a", {{"s", "1/2"}, {"t", "1/2"}}}}),
        state("t", {"r"}, {{"a", {{"t", "1"}}}}),
    });
}

Mdp convex_combination_mdp() {
    return build({"q", "r"}, {
        state("s", {}, {{"a", {{"u", "1"}}}, {"b", {{"v", "1"}}}}),
        state("s'", {}, {{"a", {{"u", "1"}}}, {"b", {{"v", "1"}}}, {"c", {{"u", "1/2"}, {"v", "1/2"}}}}),
        state("u", {"q"}, {{"stay", {{"u", "1"}}}}),
        state("v", {"r"}, {{"stay", {{"v", "1"}}}}),
    });
}

Mdp almost_sure_separation_mdp() {
    return build({"q", "r"}, {
        state("s", {}, {{"a", {{"s", "1/2"}, {"g", "1/2"}}}, {"b", {{"s", "1"}}}, {"c", {{"g", "1/2"}, {"d", "1/2"}}}}),
        state("t", {}, {{"b", {{"t", "1"}}}, {"c", {{"g", "1/2"}, {"d", "1/2"}}}}),
        state("g", {"q"}, {{"stay", {{"g", "1"}}}}),
        state("d", {"r"}, {{"stay", {{"d", "1"}}}}),
    });
}

Mdp one_neighbourhood_family() {
    return build({"q", "r"}, {
        state("s1", {}, {{"a", {{"s1", "1/2"}, {"g", "1/2"}}}, {"b", {{"s1", "1"}}}, {"c", {{"g", "1/2"}, {"d", "1/2"}}}}),
        state("s2", {}, {{"b", {{"s1", "1"}}}, {"c", {{"g", "1/2"}, {"d", "1/2"}}}}),
        state("s3", {}, {{"b", {{"s3", "1"}}}, {"c", {{"g", "1/2"}, {"d", "1/2"}}}}),
        state("s4", {}, {{"b", {{"s4", "1"}}}, {"c", {{"g", "1/2"}, {"d", "1/2"}}}}),
        state("g", {"r"}, {{"stay", {{"g", "1"}}}}),
        state("d", {"q"}, {{"stay", {{"d", "1"}}}}),
    });
}

}  // namespace qrctl::reference
