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

#include "qrctl/oracle.hpp"

#include "qrctl/checker.hpp"
#include "qrctl/error.hpp"
#include "qrctl/parser.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace qrctl {

MarkovChain to_chain(const Mdp& m) {
    if (!m.is_markov_chain()) throw Error("model is not a Markov chain: some state has several actions");
    MemorylessStrategy sigma(m.num_states(), 0);
    return induced_chain(m, sigma);
}

std::size_t strategy_count(const Mdp& m) {
    std::size_t total = 1;
    for (StateId s = 0; s < m.num_states(); ++s) {
        const std::size_t k = m.choices(s).size();
        if (total > std::numeric_limits<std::size_t>::max() / k) return std::numeric_limits<std::size_t>::max();
        total *= k;
    }
    return total;
}

bool next_strategy(const Mdp& m, MemorylessStrategy& sigma) {
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (++sigma[s] < m.choices(s).size()) return true;
        sigma[s] = 0;
    }
    return false;
}

MarkovChain induced_chain(const Mdp& m, const MemorylessStrategy& sigma) {
    MarkovChain c;
    c.successors.resize(m.num_states());
    for (StateId s = 0; s < m.num_states(); ++s)
        for (const Transition& t : m.choices(s).at(sigma.at(s)).distribution)
            c.successors[s].emplace_back(t.target, t.probability.value());
    return c;
}

namespace {

std::vector<std::vector<StateId>> predecessors(const MarkovChain& c) {
    std::vector<std::vector<StateId>> pred(c.size());
    for (StateId s = 0; s < c.size(); ++s)
        for (auto [t, p] : c.successors[s]) pred[t].push_back(s);
    return pred;
}

// Backward closure of `seed`, moving only through states in `through`.
StateSet backward(const std::vector<std::vector<StateId>>& pred, const StateSet& seed, const StateSet& through) {
    StateSet seen = seed;
    std::vector<StateId> stack = members(seed);
    while (!stack.empty()) {
        const StateId t = stack.back();
        stack.pop_back();
        for (StateId s : pred[t])
            if (!seen.test(s) && through.test(s)) {
                seen.set(s);
                stack.push_back(s);
            }
    }
    return seen;
}

// Strongly connected components of the chain's support graph restricted to `mask`.
std::vector<std::vector<StateId>> components(const MarkovChain& c, const StateSet& mask) {
    const std::size_t n = c.size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<StateId> stack;
    std::vector<std::vector<StateId>> out;
    int counter = 0;
    std::function<void(StateId)> visit = [&](StateId v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (auto [w, p] : c.successors[v]) {
            if (!mask.test(w)) continue;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<StateId> comp;
            StateId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp.push_back(w);
            } while (w != v);
            out.push_back(std::move(comp));
        }
    };
    for (StateId v = 0; v < n; ++v)
        if (mask.test(v) && index[v] < 0) visit(v);
    return out;
}

bool has_cycle(const MarkovChain& c, const std::vector<StateId>& comp) {
    if (comp.size() > 1) return true;
    for (auto [t, p] : c.successors[comp[0]])
        if (t == comp[0]) return true;
    return false;
}

StateSet as_set(std::size_t n, const std::vector<StateId>& v) { return make_set(n, v); }

}  // namespace

ReachResult chain_reach_prob(const MarkovChain& c, const StateSet& target, double tol) {
    const std::size_t n = c.size();
    const auto pred = predecessors(c);
    ReachResult r;
    const StateSet all = full_set(n);
    r.zero = ~backward(pred, target, all);
    r.one = ~backward(pred, r.zero, ~target);
    r.probability.assign(n, 0.0);
    for_each_member(r.one, [&](StateId s) { r.probability[s] = 1.0; });
    const StateSet open = ~(r.zero | r.one);
    for (std::size_t iter = 0; iter < 10'000'000 && open.any(); ++iter) {
        double delta = 0.0;
        for_each_member(open, [&](StateId s) {
            double v = 0.0;
            for (auto [t, p] : c.successors[s]) v += p * r.probability[t];
            delta = std::max(delta, std::fabs(v - r.probability[s]));
            r.probability[s] = v;
        });
        if (delta < tol) break;
    }
    return r;
}

ReachResult chain_reach_prob(const Mdp& chain, const StateSet& target, double tol) {
    return chain_reach_prob(to_chain(chain), target, tol);
}

std::size_t OracleVerdict::slot(Quantifier q) {
    return 2 * static_cast<std::size_t>(q.mode) + (q.polarity == Polarity::forall ? 1 : 0);
}

StateSet OracleVerdict::satisfying(Quantifier q) const {
    StateSet out = empty_set(answers.size());
    for (StateId s = 0; s < answers.size(); ++s)
        if (holds(s, q)) out.set(s);
    return out;
}

namespace {

void check_bounds(const Mdp& m, std::size_t max_states, std::size_t max_actions) {
    if (m.num_states() > max_states)
        throw BoundExceeded("oracle bound: " + std::to_string(m.num_states()) + " states, at most " +
                            std::to_string(max_states) + " allowed");
    for (StateId s = 0; s < m.num_states(); ++s)
        if (m.choices(s).size() > max_actions)
            throw BoundExceeded("oracle bound: state '" + m.name(s) + "' has more than " +
                                std::to_string(max_actions) + " actions");
}

enum Class { kZero, kPositive, kOne };

// Per-state outcome of one strategy: probability class plus the support-only
// answers "every path" (sure) and "some path" (nullo).
struct Outcome {
    std::vector<Class> cls;
    StateSet sure;
    StateSet nullo;
};

Outcome until_outcome(const MarkovChain& chain, const StateSet& q, const StateSet& r, double tol) {
    const std::size_t n = chain.size();
    MarkovChain c = chain;
    for (StateId s = 0; s < n; ++s)
        if (r.test(s) || !q.test(s)) c.successors[s] = {{s, 1.0}};
    const ReachResult rr = chain_reach_prob(c, r, tol);
    Outcome o;
    o.cls.resize(n);
    for (StateId s = 0; s < n; ++s) o.cls[s] = rr.zero.test(s) ? kZero : rr.one.test(s) ? kOne : kPositive;
    o.nullo = backward(predecessors(c), r, q);
    // Some path avoids r forever iff it can stay among non-r states indefinitely.
    StateSet alive = ~r;
    for (bool shrunk = true; shrunk;) {
        shrunk = false;
        for_each_member(alive, [&](StateId s) {
            bool any = false;
            for (auto [t, p] : c.successors[s]) any = any || alive.test(t);
            if (!any) {
                alive.reset(s);
                shrunk = true;
            }
        });
    }
    o.sure = ~alive;
    return o;
}

Outcome next_outcome(const MarkovChain& c, const StateSet& q) {
    const std::size_t n = c.size();
    Outcome o;
    o.cls.resize(n);
    o.sure = empty_set(n);
    o.nullo = empty_set(n);
    for (StateId s = 0; s < n; ++s) {
        bool all = true, some = false;
        for (auto [t, p] : c.successors[s]) {
            all = all && q.test(t);
            some = some || q.test(t);
        }
        o.cls[s] = all ? kOne : some ? kPositive : kZero;
        if (all) o.sure.set(s);
        if (some) o.nullo.set(s);
    }
    return o;
}

Outcome outcome(const MarkovChain& c, TemporalOp op, const StateSet& q, const StateSet& r, double tol) {
    switch (op) {
    case TemporalOp::next: return next_outcome(c, q);
    case TemporalOp::until: return until_outcome(c, q, r, tol);
    case TemporalOp::wait: {
        // q W r is the negation of (!r U !q).
        Outcome u = until_outcome(c, ~r, ~q, tol);
        Outcome w;
        w.cls.resize(u.cls.size());
        for (std::size_t s = 0; s < u.cls.size(); ++s)
            w.cls[s] = u.cls[s] == kZero ? kOne : u.cls[s] == kOne ? kZero : kPositive;
        w.sure = ~u.nullo;
        w.nullo = ~u.sure;
        return w;
    }
    }
    return {};
}

}  // namespace

OracleVerdict qualitative_verdict(const Mdp& m, TemporalOp op, const StateSet& q, const StateSet& r,
                                  const OracleBounds& bounds) {
    check_bounds(m, bounds.max_states, bounds.max_actions);
    const std::size_t n = m.num_states();
    OracleVerdict v;
    v.answers.assign(n, {});
    for (StateId s = 0; s < n; ++s)
        for (Mode mode : {Mode::sure, Mode::almost, Mode::pos, Mode::nullo})
            v.answers[s][OracleVerdict::slot({Polarity::forall, mode})] = true;
    MemorylessStrategy sigma(n, 0);
    do {
        ++v.strategies;
        const Outcome o = outcome(induced_chain(m, sigma), op, q, r, bounds.tolerance);
        for (StateId s = 0; s < n; ++s) {
            const bool got[4] = {o.sure.test(s), o.cls[s] == kOne, o.cls[s] != kZero, o.nullo.test(s)};
            for (int k = 0; k < 4; ++k) {
                const auto mode = static_cast<Mode>(k);
                auto& e = v.answers[s][OracleVerdict::slot({Polarity::exists, mode})];
                auto& a = v.answers[s][OracleVerdict::slot({Polarity::forall, mode})];
                e = e || got[k];
                a = a && got[k];
            }
        }
    } while (next_strategy(m, sigma));
    return v;
}

namespace {

// States lying in a reachable cycle set that violates every pair: for each i it
// either avoids R_i or meets P_i.
void rejecting_cycles(const MarkovChain& c, const StateSet& mask, const ProductMdp& pm, StateSet& bad) {
    for (const auto& comp : components(c, mask)) {
        if (!has_cycle(c, comp)) continue;
        const StateSet cs = as_set(c.size(), comp);
        std::size_t culprit = pm.avoid.size();
        for (std::size_t i = 0; i < pm.avoid.size() && culprit == pm.avoid.size(); ++i)
            if (cs.intersects(pm.visit[i]) && !cs.intersects(pm.avoid[i])) culprit = i;
        if (culprit == pm.avoid.size())
            bad |= cs;
        else
            rejecting_cycles(c, cs - pm.visit[culprit], pm, bad);
    }
}

}  // namespace

StateSet rabin_verdict(const ProductMdp& pm, Mode mode, const OracleBounds& bounds) {
    const Mdp& g = pm.mdp;
    check_bounds(g, bounds.max_product_states, bounds.max_actions);
    const std::size_t n = g.num_states();
    auto accepting = [&](const StateSet& inf) {
        for (std::size_t i = 0; i < pm.avoid.size(); ++i)
            if (!inf.intersects(pm.avoid[i]) && inf.intersects(pm.visit[i])) return true;
        return false;
    };
    StateSet result = empty_set(n);
    MemorylessStrategy sigma(n, 0);
    do {
        const MarkovChain c = induced_chain(g, sigma);
        const auto pred = predecessors(c);
        const StateSet all = full_set(n);
        StateSet win = empty_set(n);
        if (mode == Mode::almost || mode == Mode::pos) {
            StateSet good = empty_set(n), bad = empty_set(n);
            for (const auto& comp : components(c, all)) {
                const StateSet cs = as_set(n, comp);
                bool closed = true;
                for (StateId s : comp)
                    for (auto [t, p] : c.successors[s]) closed = closed && cs.test(t);
                if (!closed) continue;
                (accepting(cs) ? good : bad) |= cs;
            }
            win = mode == Mode::pos ? backward(pred, good, all) : ~backward(pred, bad, all);
        } else if (mode == Mode::nullo) {
            StateSet good = empty_set(n);
            for (std::size_t i = 0; i < pm.avoid.size(); ++i)
                for (const auto& comp : components(c, ~pm.avoid[i])) {
                    const StateSet cs = as_set(n, comp);
                    if (has_cycle(c, comp) && cs.intersects(pm.visit[i])) good |= cs;
                }
            win = backward(pred, good, all);
        } else {
            StateSet bad = empty_set(n);
            rejecting_cycles(c, all, pm, bad);
            win = ~backward(pred, bad, all);
        }
        result |= win;
    } while (next_strategy(g, sigma));
    return result;
}

namespace {

std::vector<std::string> unary_formulas(Logic logic) {
    std::vector<std::string> qs;
    switch (logic) {
    case Logic::pos:
    case Logic::pos_next: qs = {"Epos", "Apos"}; break;
    case Logic::sure: qs = {"Esure", "Asure"}; break;
    case Logic::qrctl: qs = {"Esure", "Asure", "Eas", "Aas", "Epos", "Apos", "Eex", "Aex"}; break;
    }
    std::vector<std::string> out;
    for (const auto& q : qs) out.push_back(q + " X __a");
    return out;
}

std::vector<std::string> binary_formulas(Logic logic) {
    std::vector<std::string> qs;
    switch (logic) {
    case Logic::pos: qs = {"Epos", "Apos"}; break;
    case Logic::sure: qs = {"Esure", "Asure"}; break;
    case Logic::qrctl: qs = {"Esure", "Asure", "Eas", "Aas", "Epos", "Apos", "Eex", "Aex"}; break;
    case Logic::pos_next: break;
    }
    std::vector<std::string> out;
    for (const auto& q : qs) {
        out.push_back(q + " (__a U __b)");
        out.push_back(q + " (__a W __b)");
    }
    return out;
}

Partition refine_by(const Partition& p, const std::vector<StateSet>& sets) {
    const std::size_t n = p.block_of.size();
    std::map<std::vector<char>, BlockId> sig;
    std::vector<BlockId> assignment(n);
    for (StateId s = 0; s < n; ++s) {
        std::vector<char> key{};
        key.reserve(sets.size() + 4);
        for (char c : std::to_string(p.block_of[s])) key.push_back(c);
        key.push_back('|');
        for (const StateSet& x : sets) key.push_back(x.test(s) ? 1 : 0);
        assignment[s] = sig.emplace(std::move(key), static_cast<BlockId>(sig.size())).first->second;
    }
    return Partition::from_assignment(assignment);
}

}  // namespace

Partition enumerate_distinguishers(const Mdp& m, Logic logic, std::size_t depth, const OracleBounds& bounds) {
    if (m.num_states() > bounds.max_distinguisher_states)
        throw BoundExceeded("formula enumeration bound: at most " + std::to_string(bounds.max_distinguisher_states) +
                            " states");
    if (depth > bounds.max_depth)
        throw BoundExceeded("formula enumeration bound: depth at most " + std::to_string(bounds.max_depth));
    std::vector<StateFormula> unary, binary;
    for (const auto& f : unary_formulas(logic)) unary.push_back(parse(f));
    for (const auto& f : binary_formulas(logic)) binary.push_back(parse(f));

    Partition p = initial_partition(m);
    const std::size_t n = m.num_states();
    for (std::size_t k = 0; k < depth; ++k) {
        const std::size_t b = p.size();
        std::vector<StateSet> unions;
        for (std::size_t mask = 0; mask < (std::size_t{1} << b); ++mask) {
            StateSet u = empty_set(n);
            for (std::size_t i = 0; i < b; ++i)
                if (mask >> i & 1u) u |= p.blocks[i];
            unions.push_back(std::move(u));
        }
        std::vector<StateSet> found;
        for (const StateSet& a : unions) {
            for (const StateFormula& f : unary) {
                Checker c(m);
                c.bind("__a", a);
                found.push_back(c.check(f));
            }
            for (const StateSet& bset : unions)
                for (const StateFormula& f : binary) {
                    Checker c(m);
                    c.bind("__a", a);
                    c.bind("__b", bset);
                    found.push_back(c.check(f));
                }
        }
        Partition next = refine_by(p, found);
        if (next.size() == p.size()) break;
        p = std::move(next);
    }
    return p;
}

}  // namespace qrctl
