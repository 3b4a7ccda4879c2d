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

#ifndef QRCTL_EQUIVALENCE_HPP
#define QRCTL_EQUIVALENCE_HPP

#include "qrctl/mdp.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qrctl {

using BlockId = std::uint32_t;

struct Partition {
    std::vector<BlockId> block_of;
    std::vector<StateSet> blocks;

    std::size_t size() const noexcept { return blocks.size(); }
    bool same_block(StateId s, StateId t) const { return block_of.at(s) == block_of.at(t); }
    StateSet unite(const std::vector<BlockId>& ids) const;

    static Partition from_assignment(const std::vector<BlockId>& assignment);
    static Partition from_blocks(std::size_t n, const std::vector<StateSet>& blocks);
    /// Blocks renumbered in order of their least member.
    Partition canonical() const;
};

/// Same equivalence relation, regardless of block numbering.
bool same_relation(const Partition& a, const Partition& b);
/// Every block of `finer` lies inside a block of `coarser`.
bool refines(const Partition& finer, const Partition& coarser);

enum class SplitterKind { pre, cpre, eu };
std::string_view to_string(SplitterKind k);

/// A predecessor operator applied to unions of blocks. `first` is C (or C1 for
/// EU); `second` is C2 and is only used by EU. Block ids refer to the partition
/// at the time the splitter was applied.
struct Splitter {
    SplitterKind kind;
    std::vector<BlockId> first;
    std::vector<BlockId> second;
};

/// One applied split: members of `block` inside the splitter's set stay, the
/// rest move to the fresh block `created`. A splitter may cut several blocks at
/// once; those records share a round, and the splitter's block ids refer to the
/// partition as it was when the round started.
struct SplitRecord {
    Splitter splitter;
    BlockId block;
    BlockId created;
    std::uint32_t round;
};

struct OperatorSet {
    bool pre = true;
    bool cpre = false;
    bool eu = false;
};

enum class Relation { bisim, simclo, pos, sure, pos_next };
std::string_view to_string(Relation r);
std::optional<Relation> relation_from_string(std::string_view s);
OperatorSet operators_for(Relation r);

struct RefinementOptions {
    /// Largest block count at which EU splitters are still searched.
    std::size_t budget = 20;
};

struct RefinementResult {
    Partition partition;
    std::vector<SplitRecord> log;
};

/// Label-equality classes, numbered in order of first member.
Partition initial_partition(const Mdp& m);

/// States with a strategy reaching C2 through C1 with probability 1.
StateSet eu_almost_set(const Mdp& m, const StateSet& c1, const StateSet& c2);

/// The set a splitter denotes over the given partition.
StateSet splitter_set(const Mdp& m, const Partition& p, const Splitter& s);

/// Coarsest refinement of the label partition stable under the chosen operators.
/// Throws BudgetExceeded when EU splitting is needed above the block budget.
RefinementResult coarsest_stable(const Mdp& m, OperatorSet ops, const RefinementOptions& opt = {});

RefinementResult equiv(const Mdp& m, Relation r, const RefinementOptions& opt = {});

/// Replays a certificate log from the label partition: every splitter must be
/// non-constant on the block it splits and the replay must end at `result`.
/// Returns an empty string on success, otherwise the first problem found.
std::string verify_certificate(const Mdp& m, const std::vector<SplitRecord>& log, const Partition& result);

/// One state per block; block i becomes state i. Labels and actions come from
/// the least member, with successor probabilities summed per target block.
Mdp quotient(const Mdp& m, const Partition& p);

/// s and t are equivalent and their one-step futures match up to the partition.
bool one_neighbourhood_isomorphic(const Mdp& m, const Partition& p, StateId s, StateId t);

struct NeighbourhoodReport {
    std::vector<std::string> isomorphic_pairs;  // pairs among s1..s4, e.g. "s2~s3"
    bool s1_s2_equivalent = false;
    bool s1_s3_equivalent = false;
    bool eu_splitter_fired = false;
    bool without_eu_differs = false;
    bool witness_separates_s1_s3 = false;
    /// Whether some decision uniform on the isomorphic pairs could match the
    /// true partition (it cannot: s2, s3, s4 are isomorphic yet split differently from s1).
    bool uniform_decision_possible = true;
    Partition pos;
    Partition without_eu;
};

NeighbourhoodReport regression_1neighbourhood();

}  // namespace qrctl

#endif
