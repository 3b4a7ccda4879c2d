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

#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qrctl::testing {
namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Splits `den` into k positive integer parts.
std::vector<std::size_t> split(Rng& rng, std::size_t den, std::size_t k) {
    std::set<std::size_t> cuts;
    while (cuts.size() + 1 < k) cuts.insert(pick(rng, 1, den - 1));
    std::vector<std::size_t> out;
    std::size_t prev = 0;
    for (std::size_t c : cuts) {
        out.push_back(c - prev);
        prev = c;
    }
    out.push_back(den - prev);
    return out;
}

std::string frac(std::size_t num, std::size_t den) {
    std::size_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

Mdp random_model(Rng& rng, const ModelShape& shape) {
    const std::size_t n = pick(rng, shape.min_states, shape.max_states);
    RawModel raw;
    raw.propositions = shape.props;
    for (std::size_t s = 0; s < n; ++s) {
        RawState st;
        st.name = "s" + std::to_string(s);
        for (const auto& p : shape.props)
            if (pick(rng, 0, 1)) st.labels.push_back(p);
        const std::size_t na = pick(rng, 1, shape.max_actions);
        for (std::size_t a = 0; a < na; ++a) {
            RawAction act;
            act.name = std::string(1, static_cast<char>('a' + a));
            const std::size_t k = pick(rng, 1, std::min(shape.max_support, n));
            std::vector<std::size_t> targets(n);
            std::iota(targets.begin(), targets.end(), 0);
            std::shuffle(targets.begin(), targets.end(), rng);
            const std::size_t den = 12;
            auto parts = split(rng, den, k);
            for (std::size_t i = 0; i < k; ++i)
                act.successors.push_back({"s" + std::to_string(targets[i]), Probability::parse(frac(parts[i], den))});
            st.actions.push_back(std::move(act));
        }
        raw.states.push_back(std::move(st));
    }
    return validate(raw);
}

std::vector<Mdp> corpus(std::uint64_t seed, std::size_t count, const ModelShape& shape) {
    Rng rng(seed);
    std::vector<Mdp> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_model(rng, shape));
    return out;
}

Mdp random_amdp(Rng& rng, std::size_t max_states, std::size_t max_actions) {
    const std::size_t n = pick(rng, 2, max_states);
    RawModel raw;
    raw.propositions = {"q", "r", "turn"};
    std::vector<bool> player(n);
    player[0] = true;
    for (std::size_t s = 1; s < n; ++s) player[s] = pick(rng, 0, 1);
    for (std::size_t s = 0; s < n; ++s) {
        RawState st;
        st.name = "s" + std::to_string(s);
        for (const char* p : {"q", "r"})
            if (pick(rng, 0, 1)) st.labels.emplace_back(p);
        if (player[s]) {
            st.labels.emplace_back("turn");
            const std::size_t na = pick(rng, 1, max_actions);
            std::vector<std::size_t> targets(n);
            std::iota(targets.begin(), targets.end(), 0);
            std::shuffle(targets.begin(), targets.end(), rng);
            for (std::size_t a = 0; a < std::min(na, n); ++a)
                st.actions.push_back({std::string(1, static_cast<char>('a' + a)),
                                      {{"s" + std::to_string(targets[a]), Probability::parse("1")}}});
        } else {
            const std::size_t k = pick(rng, 1, std::min<std::size_t>(3, n));
            std::vector<std::size_t> targets(n);
            std::iota(targets.begin(), targets.end(), 0);
            std::shuffle(targets.begin(), targets.end(), rng);
            auto parts = split(rng, 6, k);
            RawAction act{"p", {}};
            for (std::size_t i = 0; i < k; ++i)
                act.successors.push_back({"s" + std::to_string(targets[i]), Probability::parse(frac(parts[i], 6))});
            st.actions.push_back(std::move(act));
        }
        raw.states.push_back(std::move(st));
    }
    return validate(raw);
}

StateFormula random_qrctl(Rng& rng, std::size_t depth, const std::vector<std::string>& props) {
    auto leaf = [&]() -> StateFormula {
        const std::size_t k = pick(rng, 0, props.size());
        return k == props.size() ? truth() : atom(props[k]);
    };
    if (depth == 0) return pick(rng, 0, 3) == 0 ? negate(leaf()) : leaf();
    switch (pick(rng, 0, 5)) {
    case 0: return negate(random_qrctl(rng, depth, props));
    case 1: return disjoin(random_qrctl(rng, depth - 1, props), random_qrctl(rng, depth - 1, props));
    case 2: return conjoin(random_qrctl(rng, depth - 1, props), random_qrctl(rng, depth - 1, props));
    default: break;
    }
    const Quantifier q = kAllQuantifiers[pick(rng, 0, 7)];
    auto operand = [&] { return embed(random_qrctl(rng, depth - 1, props)); };
    PathFormula path;
    switch (pick(rng, 0, 5)) {
    case 0: path = next(operand()); break;
    case 1: path = until(operand(), operand()); break;
    case 2: path = wait_for(operand(), operand()); break;
    case 3: path = eventually(operand()); break;
    case 4: path = always(operand()); break;
    default: path = negate(until(operand(), operand())); break;
    }
    return quantify(q, path);
}

Mdp perturb(const Mdp& m, Rng& rng, double spread) {
    std::uniform_real_distribution<double> factor(1.0 - spread, 1.0 + spread);
    RawModel raw = m.to_raw();
    for (RawState& st : raw.states)
        for (RawAction& act : st.actions) {
            std::vector<double> w;
            double total = 0.0;
            for (const RawSuccessor& s : act.successors) {
                w.push_back(s.probability.value() * factor(rng));
                total += w.back();
            }
            for (std::size_t i = 0; i < w.size(); ++i) act.successors[i].probability = Probability(w[i] / total);
        }
    return validate(raw);
}

Mdp with_label(const Mdp& m, const std::string& prop, const StateSet& where) {
    RawModel raw = m.to_raw();
    raw.propositions.push_back(prop);
    for (StateId s = 0; s < raw.states.size(); ++s)
        if (where.test(s)) raw.states[s].labels.push_back(prop);
    return validate(raw);
}

Mdp line_chain(std::size_t n) {
    RawModel raw;
    raw.propositions = {"q", "r"};
    for (std::size_t s = 0; s < n; ++s) {
        RawState st;
        st.name = "s" + std::to_string(s);
        st.labels.emplace_back(s + 1 == n ? "r" : "q");
        RawAction act{"a", {}};
        if (s + 1 == n) {
            act.successors.push_back({st.name, Probability::parse("1")});
        } else {
            act.successors.push_back({st.name, Probability::parse("1/2")});
            act.successors.push_back({"s" + std::to_string(s + 1), Probability::parse("1/2")});
        }
        st.actions.push_back(std::move(act));
        raw.states.push_back(std::move(st));
    }
    return validate(raw);
}

std::vector<StateSet> atom_sets(const Mdp& m) {
    const std::size_t n = m.num_states();
    const StateSet q = m.states_labeled("q");
    const StateSet r = m.states_labeled("r");
    return {full_set(n), empty_set(n), q, r, ~q, ~r, q & r, q | r};
}

std::string set_names(const Mdp& m, const StateSet& s) {
    std::string out = "{";
    bool first = true;
    for_each_member(s, [&](StateId x) {
        out += (first ? "" : ",") + m.name(x);
        first = false;
    });
    return out + "}";
}

}  // namespace qrctl::testing
