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

#ifndef QRCTL_RABIN_HPP
#define QRCTL_RABIN_HPP

#include "qrctl/formula.hpp"
#include "qrctl/mdp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrctl {

struct RabinLocation {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::string> successors;
};

/// A run is accepted when, for some pair, it visits `avoid` finitely often and
/// `visit` infinitely often.
struct RabinPair {
    std::vector<std::string> avoid;
    std::vector<std::string> visit;
};

/// Automaton over 2^alphabet that reads state labels rather than edge letters:
/// a location carries the labelling it accepts.
struct RabinAutomaton {
    std::vector<std::string> alphabet;
    std::vector<RabinLocation> locations;
    std::vector<std::string> initial;
    std::vector<RabinPair> pairs;
};

/// JSON: {"alphabet": [..], "locations": [{"name", "labels", "successors"}],
/// "initial": [..], "pairs": [{"P": [..], "R": [..]}]}. Throws FormatError.
RabinAutomaton parse_rabin_json(const std::string& text);
RabinAutomaton read_rabin(const std::string& path);
std::string rabin_to_json(const RabinAutomaton& a);

struct DeterminismReport {
    bool deterministic = true;
    std::vector<std::string> violations;
};

/// Checks the three determinism clauses over every labelling of the alphabet.
/// Throws FormatError for dangling location names or labels outside the alphabet.
DeterminismReport is_deterministic(const RabinAutomaton& a);

struct ProductMdp {
    Mdp mdp;
    std::vector<StateId> model_state;
    std::vector<std::uint32_t> location;
    /// Product state (s, l_init(s)) for every model state s, when present.
    std::vector<std::optional<StateId>> initial_of;
    std::vector<StateSet> avoid;
    std::vector<StateSet> visit;
};

/// Synchronous product. With `reachable_only`, keeps only pairs reachable from
/// the initial pairs (s, l_init(s)). Throws NotDeterministic.
ProductMdp product(const Mdp& m, const RabinAutomaton& a, bool reachable_only = false);

/// States of the product from which the acceptance condition holds in the given mode.
StateSet rabin_qual(const ProductMdp& pm, Mode mode);

/// The closed-form fixpoint expressions with avoid sets complemented. Exact for
/// almost, pos and nullo; for sure it is only an under-approximation, which is
/// why rabin_qual solves the sure case as a Rabin game instead.
StateSet rabin_qual_formula(const ProductMdp& pm, Mode mode);

/// Sure-winning region of the Rabin game where the controller picks actions and
/// the environment picks successors.
StateSet rabin_game_sure(const ProductMdp& pm);

/// {s | (s, l_init(s)) is in rabin_qual}. Universal quantifiers need an
/// automaton for the negated property (MissingComplement otherwise).
StateSet check_star(const Mdp& m, Quantifier q, const RabinAutomaton& a,
                    const RabinAutomaton* complement = nullptr);

}  // namespace qrctl

#endif
