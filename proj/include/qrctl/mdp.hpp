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

#ifndef QRCTL_MDP_HPP
#define QRCTL_MDP_HPP

#include "qrctl/probability.hpp"
#include "qrctl/state_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qrctl {

using ActionId = std::uint32_t;
using PropId = std::uint32_t;

/// The proposition that marks player-1 states of an alternating MDP.
inline constexpr std::string_view kTurn = "turn";

// Unvalidated model description, in file order.
struct RawSuccessor {
    std::string target;
    Probability probability;
};

struct RawAction {
    std::string name;
    std::vector<RawSuccessor> successors;
};

struct RawState {
    std::string name;
    std::vector<std::string> labels;
    std::vector<RawAction> actions;
};

struct RawModel {
    std::vector<std::string> propositions;
    std::vector<RawState> states;
};

struct Transition {
    StateId target;
    Probability probability;
};

/// One enabled action of a state together with its successor distribution.
struct Choice {
    ActionId action;
    std::vector<Transition> distribution;
};

/// An explicit finite Markov decision process. Immutable once validated.
///
/// States, actions and propositions are densely indexed. Every choice's support
/// is also stored in one flat array so predecessor operators run in a single
/// pass over all (state, action) pairs.
class Mdp {
public:
    std::size_t num_states() const noexcept { return names_.size(); }
    const std::string& name(StateId s) const { return names_.at(s); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<StateId> find_state(std::string_view name) const;
    /// Throws UnknownState.
    StateId state_id(std::string_view name) const;

    const std::vector<std::string>& propositions() const noexcept { return propositions_; }
    std::optional<PropId> find_proposition(std::string_view prop) const;
    /// The set of states carrying `prop`. Throws UndeclaredProposition.
    const StateSet& states_labeled(std::string_view prop) const;
    const StateSet& states_labeled(PropId prop) const { return label_sets_.at(prop); }
    const std::vector<PropId>& labels(StateId s) const { return labels_.at(s); }
    bool has_label(StateId s, PropId p) const { return label_sets_.at(p).test(s); }
    std::vector<std::string> label_names(StateId s) const;

    const std::vector<std::string>& actions() const noexcept { return actions_; }
    const std::vector<Choice>& choices(StateId s) const { return choices_.at(s); }

    // Flat view of all (state, action) pairs.
    std::size_t num_choices() const noexcept { return choice_source_.size(); }
    StateId choice_source(std::size_t c) const { return choice_source_[c]; }
    std::span<const StateId> support(std::size_t c) const {
        return {support_.data() + support_offset_[c], support_.data() + support_offset_[c + 1]};
    }
    /// Index of the first flat choice of `s`; the choices of `s` are contiguous.
    std::size_t first_choice(StateId s) const { return state_choice_offset_[s]; }

    /// Sum over all (s, a) of |dest(s, a)|.
    std::size_t transition_count() const noexcept { return support_.size(); }
    bool is_markov_chain() const;

    /// Non-fatal findings from validation.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    RawModel to_raw() const;

private:
    friend Mdp validate(const RawModel& raw);

    std::vector<std::string> names_;
    std::unordered_map<std::string, StateId> index_;
    std::vector<std::string> propositions_;
    std::vector<StateSet> label_sets_;
    std::vector<std::vector<PropId>> labels_;
    std::vector<std::string> actions_;
    std::vector<std::vector<Choice>> choices_;
    std::vector<StateId> choice_source_;
    std::vector<std::size_t> support_offset_;
    std::vector<std::size_t> state_choice_offset_;
    std::vector<StateId> support_;
    std::vector<std::string> warnings_;
};

/// Checks every MDP invariant and builds the indexed model.
///
/// Distributions are never renormalized: a sum off by more than 1e-9 (or any
/// exact sum other than 1) is a BadDistribution. The proposition `turn` is always
/// part of the alphabet, even when the input does not declare it.
Mdp validate(const RawModel& raw);

struct EdgeRelation {
    std::vector<std::vector<StateId>> adjacency;
    const std::vector<StateId>& successors(StateId s) const { return adjacency.at(s); }
};

EdgeRelation edge_relation(const Mdp& m);

struct AmdpPartition {
    StateSet player1;
    StateSet player_p;
};

struct AlternationViolation {
    StateId state;
    int clause;  // 1: player-1 clause, 2: probabilistic clause
    std::string detail;
};

struct AlternationCheck {
    std::optional<AmdpPartition> partition;
    std::vector<AlternationViolation> violations;
    bool accepted() const noexcept { return partition.has_value(); }
};

/// Decides whether the `turn` labelling makes `m` an alternating MDP.
AlternationCheck check_alternating(const Mdp& m);

struct AlternatedMdp {
    Mdp mdp;
    AmdpPartition partition;
    std::size_t synthesized_states = 0;
};

/// Splits every (state, action) decision into its own probabilistic state.
///
/// The original states keep their indices and become `turn`-labelled player-1
/// states; the state for (s, a) is named "<s,a>" and appended afterwards.
AlternatedMdp alternate(const Mdp& m);

}  // namespace qrctl

#endif
