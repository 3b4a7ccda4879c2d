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

#include "qrctl/mdp.hpp"

#include "qrctl/error.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace qrctl {

std::optional<StateId> Mdp::find_state(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

StateId Mdp::state_id(std::string_view name) const {
    if (auto s = find_state(name)) return *s;
    throw UnknownState(std::string(name));
}

std::optional<PropId> Mdp::find_proposition(std::string_view prop) const {
    auto it = std::find(propositions_.begin(), propositions_.end(), prop);
    if (it == propositions_.end()) return std::nullopt;
    return static_cast<PropId>(it - propositions_.begin());
}

const StateSet& Mdp::states_labeled(std::string_view prop) const {
    if (auto p = find_proposition(prop)) return label_sets_[*p];
    throw UndeclaredProposition(std::string(prop));
}

std::vector<std::string> Mdp::label_names(StateId s) const {
    std::vector<std::string> out;
    for (PropId p : labels_.at(s)) out.push_back(propositions_[p]);
    return out;
}

bool Mdp::is_markov_chain() const {
    return std::all_of(choices_.begin(), choices_.end(), [](const auto& cs) { return cs.size() == 1; });
}

RawModel Mdp::to_raw() const {
    RawModel raw;
    raw.propositions = propositions_;
    for (StateId s = 0; s < num_states(); ++s) {
        RawState rs;
        rs.name = names_[s];
        rs.labels = label_names(s);
        for (const Choice& c : choices_[s]) {
            RawAction ra;
            ra.name = actions_[c.action];
            for (const Transition& t : c.distribution) ra.successors.push_back({names_[t.target], t.probability});
            rs.actions.push_back(std::move(ra));
        }
        raw.states.push_back(std::move(rs));
    }
    return raw;
}

namespace {

void check_distribution(const RawState& state, const RawAction& action) {
    if (action.successors.empty()) throw BadDistribution(state.name, action.name, 0.0);
    bool exact = true;
    Rational exact_sum = 0;
    double sum = 0.0;
    std::unordered_set<std::string> seen;
    for (const auto& succ : action.successors) {
        if (!seen.insert(succ.target).second)
            throw BadDistribution(state.name, action.name, 0.0, "lists successor '" + succ.target + "' twice");
        const Probability& p = succ.probability;
        bool positive = p.is_exact() ? *p.exact() > 0 : p.value() > 0.0;
        bool at_most_one = p.is_exact() ? *p.exact() <= 1 : p.value() <= 1.0 + 1e-9;
        if (!positive || !at_most_one)
            throw BadDistribution(state.name, action.name, p.value(),
                                  "assigns probability " + p.to_string() + " to '" + succ.target + "'");
        sum += p.value();
        if (p.is_exact())
            exact_sum += *p.exact();
        else
            exact = false;
    }
    bool ok = exact ? exact_sum == 1 : std::abs(sum - 1.0) <= 1e-9;
    if (!ok) throw BadDistribution(state.name, action.name, sum);
}

}  // namespace

Mdp validate(const RawModel& raw) {
    Mdp m;

    for (const auto& p : raw.propositions)
        if (std::find(m.propositions_.begin(), m.propositions_.end(), p) == m.propositions_.end())
            m.propositions_.push_back(p);
    if (std::find(m.propositions_.begin(), m.propositions_.end(), kTurn) == m.propositions_.end())
        m.propositions_.emplace_back(kTurn);

    const std::size_t n = raw.states.size();
    for (StateId s = 0; s < n; ++s) {
        const auto& name = raw.states[s].name;
        if (!m.index_.emplace(name, s).second) throw DuplicateState(name);
        m.names_.push_back(name);
    }

    m.label_sets_.assign(m.propositions_.size(), StateSet(n));
    m.labels_.resize(n);
    m.choices_.resize(n);
    std::unordered_map<std::string, ActionId> action_index;
    const auto turn = *m.find_proposition(kTurn);

    for (StateId s = 0; s < n; ++s) {
        const RawState& rs = raw.states[s];
        for (const auto& label : rs.labels) {
            auto p = m.find_proposition(label);
            if (!p) throw UndeclaredProposition(label);
            m.label_sets_[*p].set(s);
        }
        for (PropId p = 0; p < m.propositions_.size(); ++p)
            if (m.label_sets_[p].test(s)) m.labels_[s].push_back(p);

        if (rs.actions.empty()) throw EmptyMoveSet(rs.name);
        std::unordered_set<std::string> seen_actions;
        for (const RawAction& ra : rs.actions) {
            if (!seen_actions.insert(ra.name).second)
                throw ModelError("state '" + rs.name + "' declares action '" + ra.name + "' twice");
            check_distribution(rs, ra);
            auto [it, fresh] = action_index.emplace(ra.name, static_cast<ActionId>(m.actions_.size()));
            if (fresh) m.actions_.push_back(ra.name);
            Choice c{it->second, {}};
            for (const auto& succ : ra.successors) {
                auto t = m.index_.find(succ.target);
                if (t == m.index_.end()) throw UnknownState(succ.target);
                c.distribution.push_back({t->second, succ.probability});
            }
            m.choices_[s].push_back(std::move(c));
        }
        if (m.label_sets_[turn].test(s)) {
            for (const Choice& c : m.choices_[s]) {
                if (c.distribution.size() > 1) {
                    m.warnings_.push_back("state '" + rs.name +
                                          "' is labelled turn but has an action with several destinations");
                    break;
                }
            }
        }
    }

    m.support_offset_.push_back(0);
    for (StateId s = 0; s < n; ++s) {
        m.state_choice_offset_.push_back(m.choice_source_.size());
        for (const Choice& c : m.choices_[s]) {
            m.choice_source_.push_back(s);
            for (const Transition& t : c.distribution) m.support_.push_back(t.target);
            m.support_offset_.push_back(m.support_.size());
        }
    }
    m.state_choice_offset_.push_back(m.choice_source_.size());
    return m;
}

EdgeRelation edge_relation(const Mdp& m) {
    EdgeRelation e;
    e.adjacency.resize(m.num_states());
    for (std::size_t c = 0; c < m.num_choices(); ++c) {
        auto& adj = e.adjacency[m.choice_source(c)];
        for (StateId t : m.support(c)) adj.push_back(t);
    }
    for (auto& adj : e.adjacency) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return e;
}

AlternationCheck check_alternating(const Mdp& m) {
    const std::size_t n = m.num_states();
    const StateSet& turn = m.states_labeled(kTurn);
    AlternationCheck result;
    for (StateId s = 0; s < n; ++s) {
        const auto& cs = m.choices(s);
        if (turn.test(s)) {
            for (const Choice& c : cs) {
                if (c.distribution.size() != 1) {
                    result.violations.push_back({s, 1,
                                                 "turn-labelled state '" + m.name(s) + "' has action '" +
                                                     m.actions()[c.action] + "' with " +
                                                     std::to_string(c.distribution.size()) + " destinations"});
                }
            }
        } else if (cs.size() != 1) {
            result.violations.push_back(
                {s, 2, "state '" + m.name(s) + "' lacks turn but has " + std::to_string(cs.size()) + " actions"});
        }
    }
    if (result.violations.empty()) result.partition = AmdpPartition{turn, ~turn};
    return result;
}

AlternatedMdp alternate(const Mdp& m) {
    RawModel raw;
    raw.propositions = m.propositions();
    std::unordered_set<std::string> taken(m.names().begin(), m.names().end());

    const std::size_t n = m.num_states();
    std::vector<std::vector<std::string>> decision_names(n);
    for (StateId s = 0; s < n; ++s) {
        for (const Choice& c : m.choices(s)) {
            std::string base = "<" + m.name(s) + "," + m.actions()[c.action] + ">";
            std::string name = base;
            for (std::size_t k = 1; taken.count(name) && k <= n + m.num_choices(); ++k)
                name = base + "#" + std::to_string(k);
            if (!taken.insert(name).second) throw NameCollision(name);
            decision_names[s].push_back(name);
        }
    }

    const auto turn = *m.find_proposition(kTurn);
    auto labels_without_turn = [&](StateId s) {
        std::vector<std::string> out;
        for (PropId p : m.labels(s))
            if (p != turn) out.push_back(m.propositions()[p]);
        return out;
    };

    for (StateId s = 0; s < n; ++s) {
        RawState rs;
        rs.name = m.name(s);
        rs.labels = labels_without_turn(s);
        rs.labels.emplace_back(kTurn);
        const auto& cs = m.choices(s);
        for (std::size_t i = 0; i < cs.size(); ++i)
            rs.actions.push_back({m.actions()[cs[i].action], {{decision_names[s][i], Probability(Rational(1))}}});
        raw.states.push_back(std::move(rs));
    }
    std::size_t synthesized = 0;
    for (StateId s = 0; s < n; ++s) {
        const auto& cs = m.choices(s);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            RawState rs;
            rs.name = decision_names[s][i];
            rs.labels = labels_without_turn(s);
            RawAction ra{m.actions()[cs[i].action], {}};
            for (const Transition& t : cs[i].distribution) ra.successors.push_back({m.name(t.target), t.probability});
            rs.actions.push_back(std::move(ra));
            raw.states.push_back(std::move(rs));
            ++synthesized;
        }
    }

    AlternatedMdp out{validate(raw), {}, synthesized};
    const StateSet& turn_set = out.mdp.states_labeled(kTurn);
    out.partition = {turn_set, ~turn_set};
    return out;
}

}  // namespace qrctl
