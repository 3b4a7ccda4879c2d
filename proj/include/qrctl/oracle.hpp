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

#ifndef QRCTL_ORACLE_HPP
#define QRCTL_ORACLE_HPP

#include "qrctl/equivalence.hpp"
#include "qrctl/formula.hpp"
#include "qrctl/mdp.hpp"
#include "qrctl/rabin.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

// Brute-force semantics used to cross-check the analytic algorithms. Every
// answer is obtained by enumerating memoryless deterministic strategies.

namespace qrctl {

struct MarkovChain {
    std::vector<std::vector<std::pair<StateId, double>>> successors;
    std::size_t size() const noexcept { return successors.size(); }
};

/// Throws Error unless every state has exactly one action.
MarkovChain to_chain(const Mdp& m);

/// Index into choices(s), for every state s.
using MemorylessStrategy = std::vector<std::uint32_t>;

/// Product of the per-state action counts, saturating at SIZE_MAX.
std::size_t strategy_count(const Mdp& m);
/// Advances like an odometer; returns false after the last strategy.
bool next_strategy(const Mdp& m, MemorylessStrategy& sigma);
MarkovChain induced_chain(const Mdp& m, const MemorylessStrategy& sigma);

struct ReachResult {
    std::vector<double> probability;
    StateSet zero;  // decided by graph search, never by iteration
    StateSet one;
};

/// Probability of eventually reaching `target`. Qualitative classes come from
/// graph analysis first; the rest is value iteration to absolute tolerance `tol`.
ReachResult chain_reach_prob(const MarkovChain& chain, const StateSet& target, double tol = 1e-12);
ReachResult chain_reach_prob(const Mdp& chain, const StateSet& target, double tol = 1e-12);

struct OracleBounds {
    std::size_t max_states = 8;
    std::size_t max_actions = 3;
    std::size_t max_product_states = 12;
    std::size_t max_distinguisher_states = 6;
    std::size_t max_depth = 4;
    double tolerance = 1e-12;
};

enum class TemporalOp { next, until, wait };

struct OracleVerdict {
    /// answers[s][slot(q)], slot = 2 * mode + (polarity == forall).
    std::vector<std::array<bool, 8>> answers;
    std::size_t strategies = 0;

    static std::size_t slot(Quantifier q);
    bool holds(StateId s, Quantifier q) const { return answers.at(s)[slot(q)]; }
    StateSet satisfying(Quantifier q) const;
};

/// Verdicts of Q X Q, Q (Q U R) and Q (Q W R) for all eight quantifiers.
/// For `next`, R is ignored. Throws BoundExceeded.
OracleVerdict qualitative_verdict(const Mdp& m, TemporalOp op, const StateSet& q, const StateSet& r,
                                  const OracleBounds& bounds = {});

/// Product states from which some memoryless strategy meets the Rabin condition in `mode`.
StateSet rabin_verdict(const ProductMdp& pm, Mode mode, const OracleBounds& bounds = {});

enum class Logic { pos, sure, pos_next, qrctl };

/// Partition induced by every formula of the logic with at most `depth` nested
/// temporal operators. Operands range over all unions of the classes found so
/// far, which is what closure under boolean connectives yields.
Partition enumerate_distinguishers(const Mdp& m, Logic logic, std::size_t depth, const OracleBounds& bounds = {});

}  // namespace qrctl

#endif
