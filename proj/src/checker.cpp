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

#include "qrctl/checker.hpp"

#include "qrctl/error.hpp"
#include "qrctl/fixpoint.hpp"
#include "qrctl/parser.hpp"
#include "qrctl/transform.hpp"

namespace qrctl {

StateSet ex_next(Mode mode, const Mdp& m, const StateSet& q) {
    if (mode == Mode::sure || mode == Mode::almost) return cpre(m, q);
    return pre(m, q);
}

StateSet ex_until(Mode mode, const Mdp& m, const StateSet& q, const StateSet& r) {
    const std::size_t n = m.num_states();
    switch (mode) {
    case Mode::sure: return lfp(n, [&](const StateSet& x) { return r | (q & cpre(m, x)); });
    case Mode::pos:
    case Mode::nullo: return lfp(n, [&](const StateSet& x) { return r | (q & pre(m, x)); });
    case Mode::almost:
        return gfp(n, [&](const StateSet& y) {
            return lfp(n, [&](const StateSet& x) { return r | (q & apre(m, y, x)); });
        });
    }
    return empty_set(n);
}

StateSet ex_wait(Mode mode, const Mdp& m, const StateSet& q, const StateSet& r) {
    const std::size_t n = m.num_states();
    const StateSet stop = q & r;
    switch (mode) {
    case Mode::sure:
    case Mode::almost: return gfp(n, [&](const StateSet& y) { return stop | (q & cpre(m, y)); });
    case Mode::nullo: return gfp(n, [&](const StateSet& y) { return stop | (q & pre(m, y)); });
    case Mode::pos: {
        const StateSet forever = ex_wait(Mode::sure, m, q, empty_set(n));
        return ex_until(Mode::pos, m, q, stop | forever);
    }
    }
    return empty_set(n);
}

void Checker::bind(std::string name, StateSet states) {
    if (states.size() != m_.num_states()) throw Error("bound set '" + name + "' has the wrong size");
    bound_[std::move(name)] = std::move(states);
    memo_.clear();
}

StateSet Checker::check(const StateFormula& f) {
    if (!classify(f).qrctl) throw NotQrctl("formula needs an automaton: " + to_string(f));
    StateFormula d = dualize(f);
    keep_.push_back(d);
    return eval(d);
}

const StateSet& Checker::eval(const StateFormula& f) {
    if (auto it = memo_.find(f.get()); it != memo_.end()) return it->second;
    const std::size_t n = m_.num_states();
    StateSet out;
    switch (f->kind) {
    case StateNode::Kind::True: out = full_set(n); break;
    case StateNode::Kind::Atom:
        if (auto it = bound_.find(f->atom); it != bound_.end())
            out = it->second;
        else
            out = m_.states_labeled(f->atom);
        break;
    case StateNode::Kind::Not: out = ~eval(f->lhs); break;
    case StateNode::Kind::Or: {
        StateSet a = eval(f->lhs);
        out = a | eval(f->rhs);
        break;
    }
    case StateNode::Kind::Quant: out = eval_quantified(f->quantifier, f->path); break;
    }
    keep_.push_back(f);
    trace_.push_back({to_string(f), out});
    return memo_.emplace(f.get(), std::move(out)).first->second;
}

StateSet Checker::operand(const PathFormula& p) {
    if (p->kind != PathNode::Kind::State) throw NotQrctl("nested temporal operator: " + to_string(p));
    return eval(p->state);
}

StateSet Checker::eval_quantified(Quantifier q, const PathFormula& path) {
    if (q.polarity == Polarity::forall) {
        StateFormula d = dualize(quantify(q, path));
        keep_.push_back(d);
        return eval(d);
    }
    switch (path->kind) {
    case PathNode::Kind::State: return eval(path->state);
    case PathNode::Kind::Next: return ex_next(q.mode, m_, operand(path->lhs));
    case PathNode::Kind::Until: return ex_until(q.mode, m_, operand(path->lhs), operand(path->rhs));
    case PathNode::Kind::WaitFor: return ex_wait(q.mode, m_, operand(path->lhs), operand(path->rhs));
    default: throw NotQrctl("boolean combination of temporal operators: " + to_string(path));
    }
}

StateSet check(const Mdp& m, const StateFormula& f) { return Checker(m).check(f); }

StateSet check_atl(const Mdp& m, const StateFormula& f) { return check(m, f); }

StateSet eval_F_apre_unchecked(const Mdp& m, const StateSet& phi, const StateSet& psi) {
    static const StateFormula f = parse("<1> X (__phi & __psi) | (<0> X __phi & <p> X __psi)");
    Checker c(m);
    c.bind("__phi", phi);
    c.bind("__psi", psi);
    return c.check(f);
}

StateSet eval_F_apre(const Mdp& m, const StateSet& phi, const StateSet& psi) {
    AlternationCheck alt = check_alternating(m);
    if (!alt.accepted()) throw NotAlternating("model is not an alternating MDP");
    return eval_F_apre_unchecked(m, phi, psi);
}

}  // namespace qrctl
