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

#include "qrctl/equivalence.hpp"

#include "qrctl/checker.hpp"
#include "qrctl/error.hpp"
#include "qrctl/fixpoint.hpp"
#include "qrctl/parser.hpp"
#include "qrctl/reference_models.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace qrctl {

StateSet Partition::unite(const std::vector<BlockId>& ids) const {
    StateSet out = empty_set(block_of.size());
    for (BlockId b : ids) out |= blocks.at(b);
    return out;
}

Partition Partition::from_assignment(const std::vector<BlockId>& assignment) {
    Partition p;
    const std::size_t n = assignment.size();
    std::map<BlockId, BlockId> renumber;
    p.block_of.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        auto [it, fresh] = renumber.emplace(assignment[s], static_cast<BlockId>(renumber.size()));
        if (fresh) p.blocks.push_back(empty_set(n));
        p.block_of[s] = it->second;
        p.blocks[it->second].set(s);
    }
    return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<StateSet>& blocks) {
    std::vector<BlockId> assignment(n, static_cast<BlockId>(-1));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].size() != n || blocks[b].none()) throw Error("malformed partition block");
        for_each_member(blocks[b], [&](StateId s) {
            if (assignment[s] != static_cast<BlockId>(-1)) throw Error("partition blocks overlap");
            assignment[s] = static_cast<BlockId>(b);
        });
    }
    for (BlockId a : assignment)
        if (a == static_cast<BlockId>(-1)) throw Error("partition blocks do not cover the state space");
    return from_assignment(assignment);
}

Partition Partition::canonical() const { return from_assignment(block_of); }

bool same_relation(const Partition& a, const Partition& b) {
    return a.block_of.size() == b.block_of.size() && a.canonical().block_of == b.canonical().block_of;
}

bool refines(const Partition& finer, const Partition& coarser) {
    if (finer.block_of.size() != coarser.block_of.size()) return false;
    for (const StateSet& blk : finer.blocks) {
        const BlockId target = coarser.block_of[blk.find_first()];
        if (!blk.is_subset_of(coarser.blocks[target])) return false;
    }
    return true;
}

std::string_view to_string(SplitterKind k) {
    switch (k) {
    case SplitterKind::pre: return "pre";
    case SplitterKind::cpre: return "cpre";
    case SplitterKind::eu: return "EU";
    }
    return "?";
}

std::string_view to_string(Relation r) {
    switch (r) {
    case Relation::bisim: return "bisim";
    case Relation::simclo: return "simclo";
    case Relation::pos: return "pos";
    case Relation::sure: return "sure";
    case Relation::pos_next: return "pos_next";
    }
    return "?";
}

std::optional<Relation> relation_from_string(std::string_view s) {
    for (Relation r : {Relation::bisim, Relation::simclo, Relation::pos, Relation::sure, Relation::pos_next})
        if (to_string(r) == s) return r;
    return std::nullopt;
}

OperatorSet operators_for(Relation r) {
    switch (r) {
    case Relation::bisim: return {true, false, false};
    case Relation::pos: return {true, true, true};
    default: return {true, true, false};
    }
}

Partition initial_partition(const Mdp& m) {
    std::map<std::vector<PropId>, BlockId> classes;
    std::vector<BlockId> assignment(m.num_states());
    for (StateId s = 0; s < m.num_states(); ++s) {
        std::vector<PropId> key = m.labels(s);
        std::sort(key.begin(), key.end());
        assignment[s] = classes.emplace(std::move(key), static_cast<BlockId>(classes.size())).first->second;
    }
    return Partition::from_assignment(assignment);
}

StateSet eu_almost_set(const Mdp& m, const StateSet& c1, const StateSet& c2) {
    return ex_until(Mode::almost, m, c1, c2);
}

StateSet splitter_set(const Mdp& m, const Partition& p, const Splitter& s) {
    switch (s.kind) {
    case SplitterKind::pre: return pre(m, p.unite(s.first));
    case SplitterKind::cpre: return cpre(m, p.unite(s.first));
    case SplitterKind::eu: return eu_almost_set(m, p.unite(s.first), p.unite(s.second));
    }
    return empty_set(m.num_states());
}

namespace {

// Splits every block cut by `set`; returns whether anything changed.
bool apply_split(Partition& p, const StateSet& set, const Splitter& sp, std::uint32_t round,
                 std::vector<SplitRecord>* log) {
    bool changed = false;
    const std::size_t existing = p.blocks.size();
    for (BlockId b = 0; b < existing; ++b) {
        StateSet inside = p.blocks[b] & set;
        if (inside.none() || inside == p.blocks[b]) continue;
        StateSet outside = p.blocks[b] - inside;
        const auto created = static_cast<BlockId>(p.blocks.size());
        for_each_member(outside, [&](StateId s) { p.block_of[s] = created; });
        p.blocks[b] = std::move(inside);
        p.blocks.push_back(std::move(outside));
        if (log) log->push_back({sp, b, created, round});
        changed = true;
    }
    return changed;
}

// Calls fn(combination) for every k-subset of `pool` in lexicographic order until fn returns true.
template <class Fn>
bool for_each_subset(const std::vector<BlockId>& pool, std::size_t k, Fn&& fn) {
    if (k > pool.size()) return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<BlockId> pick(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) pick[i] = pool[idx[i]];
        if (fn(pick)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

class Refiner {
public:
    Refiner(const Mdp& m, OperatorSet ops, const RefinementOptions& opt)
        : m_(m), ops_(ops), opt_(opt), p_(initial_partition(m)) {}

    RefinementResult run() {
        if (m_.num_states() <= 1) return {p_, {}};
        while ((ops_.pre && pre_round()) || (ops_.cpre && cpre_round()) || (ops_.eu && eu_round())) {
        }
        return {p_, log_};
    }

private:
    const Mdp& m_;
    OperatorSet ops_;
    RefinementOptions opt_;
    Partition p_;
    std::vector<SplitRecord> log_;
    std::uint32_t round_ = 0;

    bool attempt(const Splitter& sp) {
        StateSet set = splitter_set(m_, p_, sp);
        if (!apply_split(p_, set, sp, round_, &log_)) return false;
        ++round_;
        return true;
    }

    bool pre_round() {
        for (BlockId b = 0; b < p_.size(); ++b)
            if (attempt({SplitterKind::pre, {b}, {}})) return true;
        return false;
    }

    // s is in cpre(C) iff one of its actions has its block set inside C, so the
    // block sets of individual actions are the only unions worth trying.
    bool cpre_round() {
        std::vector<std::vector<BlockId>> candidates;
        for (std::size_t c = 0; c < m_.num_choices(); ++c) {
            std::vector<BlockId> ids;
            for (StateId t : m_.support(c)) ids.push_back(p_.block_of[t]);
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            candidates.push_back(std::move(ids));
        }
        std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (auto& ids : candidates)
            if (attempt({SplitterKind::cpre, ids, {}})) return true;
        return false;
    }

    bool eu_round() {
        const std::size_t nb = p_.size();
        if (nb > opt_.budget) throw BudgetExceeded(nb, opt_.budget);
        std::vector<BlockId> all(nb);
        std::iota(all.begin(), all.end(), 0);
        for (std::size_t k = 2; k <= nb; ++k) {
            for (std::size_t i = 1; i < k; ++i) {
                bool hit = for_each_subset(all, i, [&](const std::vector<BlockId>& c1) {
                    std::vector<BlockId> rest;
                    std::set_difference(all.begin(), all.end(), c1.begin(), c1.end(), std::back_inserter(rest));
                    return for_each_subset(rest, k - i, [&](const std::vector<BlockId>& c2) {
                        return attempt({SplitterKind::eu, c1, c2});
                    });
                });
                if (hit) return true;
            }
        }
        return false;
    }
};

}  // namespace

RefinementResult coarsest_stable(const Mdp& m, OperatorSet ops, const RefinementOptions& opt) {
    return Refiner(m, ops, opt).run();
}

RefinementResult equiv(const Mdp& m, Relation r, const RefinementOptions& opt) {
    return coarsest_stable(m, operators_for(r), opt);
}

std::string verify_certificate(const Mdp& m, const std::vector<SplitRecord>& log, const Partition& result) {
    Partition p = initial_partition(m);
    Partition snapshot = p;
    std::optional<std::uint32_t> round;
    for (std::size_t i = 0; i < log.size(); ++i) {
        const SplitRecord& rec = log[i];
        if (!round || rec.round != *round) {
            snapshot = p;
            round = rec.round;
        }
        const std::string where = "record " + std::to_string(i) + ": ";
        auto valid = [&](const std::vector<BlockId>& ids) {
            return std::all_of(ids.begin(), ids.end(), [&](BlockId b) { return b < snapshot.size(); });
        };
        if (!valid(rec.splitter.first) || !valid(rec.splitter.second) || rec.block >= snapshot.size())
            return where + "unknown block id";
        if (rec.created != p.size()) return where + "fresh block id out of sequence";
        const StateSet set = splitter_set(m, snapshot, rec.splitter);
        const StateSet& blk = p.blocks[rec.block];
        StateSet inside = blk & set;
        if (inside.none() || inside == blk) return where + "splitter is constant on the block";
        StateSet outside = blk - inside;
        for_each_member(outside, [&](StateId s) { p.block_of[s] = rec.created; });
        p.blocks[rec.block] = std::move(inside);
        p.blocks.push_back(std::move(outside));
    }
    if (!same_relation(p, result)) return "replay does not reproduce the partition";
    return {};
}

Mdp quotient(const Mdp& m, const Partition& p) {
    RawModel raw;
    raw.propositions = m.propositions();
    for (const StateSet& blk : p.blocks) {
        const auto rep = static_cast<StateId>(blk.find_first());
        RawState st;
        st.name = m.name(rep);
        st.labels = m.label_names(rep);
        for (const Choice& ch : m.choices(rep)) {
            RawAction act;
            act.name = m.actions()[ch.action];
            std::map<BlockId, std::size_t> slot;
            for (const Transition& tr : ch.distribution) {
                const BlockId b = p.block_of[tr.target];
                auto [it, fresh] = slot.emplace(b, act.successors.size());
                if (fresh) {
                    const auto target = static_cast<StateId>(p.blocks[b].find_first());
                    act.successors.push_back({m.name(target), tr.probability});
                } else {
                    act.successors[it->second].probability = act.successors[it->second].probability + tr.probability;
                }
            }
            st.actions.push_back(std::move(act));
        }
        raw.states.push_back(std::move(st));
    }
    return validate(raw);
}

namespace {

bool same_value(const Probability& a, const Probability& b) {
    if (a.is_exact() && b.is_exact()) return *a.exact() == *b.exact();
    return std::fabs(a.value() - b.value()) <= 1e-12;
}

std::vector<StateId> neighbourhood(const Mdp& m, StateId s) {
    std::vector<StateId> out;
    for (const Choice& ch : m.choices(s))
        for (const Transition& tr : ch.distribution) out.push_back(tr.target);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Probability> weight(const Choice& ch, StateId target) {
    for (const Transition& tr : ch.distribution)
        if (tr.target == target) return tr.probability;
    return std::nullopt;
}

}  // namespace

bool one_neighbourhood_isomorphic(const Mdp& m, const Partition& p, StateId s, StateId t) {
    if (!p.same_block(s, t)) return false;
    const std::vector<StateId> es = neighbourhood(m, s);
    std::vector<StateId> et = neighbourhood(m, t);
    const auto& ms = m.choices(s);
    const auto& mt = m.choices(t);
    if (es.size() != et.size() || ms.size() != mt.size()) return false;

    // compatible[a][b]: action a of s and b of t agree on every R-related pair.
    auto actions_match = [&](const std::vector<StateId>& image) {
        std::vector<std::vector<char>> compatible(ms.size(), std::vector<char>(mt.size(), 1));
        for (std::size_t a = 0; a < ms.size(); ++a)
            for (std::size_t b = 0; b < mt.size(); ++b)
                for (std::size_t i = 0; i < es.size() && compatible[a][b]; ++i) {
                    auto x = weight(ms[a], es[i]);
                    auto y = weight(mt[b], image[i]);
                    if (x.has_value() != y.has_value() || (x && !same_value(*x, *y))) compatible[a][b] = 0;
                }
        std::vector<std::size_t> perm(mt.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (std::size_t a = 0; a < ms.size() && ok; ++a) ok = compatible[a][perm[a]];
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };

    std::sort(et.begin(), et.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < es.size() && ok; ++i) ok = p.same_block(es[i], et[i]);
        if (ok && actions_match(et)) return true;
    } while (std::next_permutation(et.begin(), et.end()));
    return false;
}

NeighbourhoodReport regression_1neighbourhood() {
    const Mdp m = reference::one_neighbourhood_family();
    NeighbourhoodReport r;
    const Partition pred = initial_partition(m);
    const StateId s[4] = {m.state_id("s1"), m.state_id("s2"), m.state_id("s3"), m.state_id("s4")};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (one_neighbourhood_isomorphic(m, pred, s[i], s[j]))
                r.isomorphic_pairs.push_back("s" + std::to_string(i + 1) + "~s" + std::to_string(j + 1));

    RefinementResult full = equiv(m, Relation::pos);
    r.pos = full.partition;
    r.s1_s2_equivalent = r.pos.same_block(s[0], s[1]);
    r.s1_s3_equivalent = r.pos.same_block(s[0], s[2]);
    r.eu_splitter_fired = std::any_of(full.log.begin(), full.log.end(),
                                      [](const SplitRecord& x) { return x.splitter.kind == SplitterKind::eu; });
    r.without_eu = coarsest_stable(m, {true, true, false}).partition;
    r.without_eu_differs = !same_relation(r.pos, r.without_eu);

    const StateSet witness = check(m, parse("Eas F r"));
    r.witness_separates_s1_s3 = witness.test(s[0]) != witness.test(s[2]);

    // A uniform operator keeps (s1,s2), (s1,s3), (s1,s4) all together or splits them all,
    // whenever s2, s3 and s4 are pairwise isomorphic.
    const bool s234 = one_neighbourhood_isomorphic(m, pred, s[1], s[2]) &&
                      one_neighbourhood_isomorphic(m, pred, s[2], s[3]);
    const bool truth_uniform = r.pos.same_block(s[0], s[1]) == r.pos.same_block(s[0], s[2]) &&
                               r.pos.same_block(s[0], s[2]) == r.pos.same_block(s[0], s[3]);
    r.uniform_decision_possible = !s234 || truth_uniform;
    return r;
}

}  // namespace qrctl
