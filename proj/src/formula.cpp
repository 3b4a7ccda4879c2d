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

#include "qrctl/formula.hpp"

#include <stdexcept>
#include <utility>

namespace qrctl {

std::string_view to_string(Quantifier q) {
    const bool e = q.polarity == Polarity::exists;
    switch (q.mode) {
    case Mode::sure: return e ? "Esure" : "Asure";
    case Mode::almost: return e ? "Eas" : "Aas";
    case Mode::pos: return e ? "Epos" : "Apos";
    case Mode::nullo: return e ? "Eex" : "Aex";
    }
    return "?";
}

std::string_view to_string(Mode m) {
    switch (m) {
    case Mode::sure: return "sure";
    case Mode::almost: return "almost";
    case Mode::pos: return "pos";
    case Mode::nullo: return "nullo";
    }
    return "?";
}

Mode dual(Mode m) {
    switch (m) {
    case Mode::sure: return Mode::nullo;
    case Mode::nullo: return Mode::sure;
    case Mode::almost: return Mode::pos;
    case Mode::pos: return Mode::almost;
    }
    return m;
}

namespace {

StateFormula make_state(StateNode n) { return std::make_shared<const StateNode>(std::move(n)); }
PathFormula make_path(PathNode n) { return std::make_shared<const PathNode>(std::move(n)); }

void require(const void* p) {
    if (!p) throw std::invalid_argument("null formula operand");
}

}  // namespace

StateFormula truth() { return make_state({StateNode::Kind::True, {}, {}, {}, {}, {}}); }
StateFormula falsity() { return negate(truth()); }

StateFormula atom(std::string name) {
    return make_state({StateNode::Kind::Atom, std::move(name), {}, {}, {}, {}});
}

StateFormula negate(StateFormula f) {
    require(f.get());
    return make_state({StateNode::Kind::Not, {}, std::move(f), {}, {}, {}});
}

StateFormula disjoin(StateFormula a, StateFormula b) {
    require(a.get());
    require(b.get());
    return make_state({StateNode::Kind::Or, {}, std::move(a), std::move(b), {}, {}});
}

StateFormula conjoin(StateFormula a, StateFormula b) {
    return negate(disjoin(negate(std::move(a)), negate(std::move(b))));
}

StateFormula implies(StateFormula a, StateFormula b) { return disjoin(negate(std::move(a)), std::move(b)); }

StateFormula quantify(Quantifier q, PathFormula path) {
    require(path.get());
    return make_state({StateNode::Kind::Quant, {}, {}, {}, q, std::move(path)});
}

PathFormula embed(StateFormula f) {
    require(f.get());
    return make_path({PathNode::Kind::State, std::move(f), {}, {}});
}

PathFormula negate(PathFormula f) {
    require(f.get());
    if (f->kind == PathNode::Kind::State) return embed(negate(f->state));
    return make_path({PathNode::Kind::Not, {}, std::move(f), {}});
}

PathFormula disjoin(PathFormula a, PathFormula b) {
    require(a.get());
    require(b.get());
    if (a->kind == PathNode::Kind::State && b->kind == PathNode::Kind::State)
        return embed(disjoin(a->state, b->state));
    return make_path({PathNode::Kind::Or, {}, std::move(a), std::move(b)});
}

PathFormula conjoin(PathFormula a, PathFormula b) {
    return negate(disjoin(negate(std::move(a)), negate(std::move(b))));
}

PathFormula next(PathFormula f) {
    require(f.get());
    return make_path({PathNode::Kind::Next, {}, std::move(f), {}});
}

PathFormula until(PathFormula a, PathFormula b) {
    require(a.get());
    require(b.get());
    return make_path({PathNode::Kind::Until, {}, std::move(a), std::move(b)});
}

PathFormula wait_for(PathFormula a, PathFormula b) {
    require(a.get());
    require(b.get());
    return make_path({PathNode::Kind::WaitFor, {}, std::move(a), std::move(b)});
}

PathFormula eventually(PathFormula f) { return until(embed(truth()), std::move(f)); }
PathFormula always(PathFormula f) { return wait_for(std::move(f), embed(falsity())); }

bool equal(const StateFormula& a, const StateFormula& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
    case StateNode::Kind::True: return true;
    case StateNode::Kind::Atom: return a->atom == b->atom;
    case StateNode::Kind::Not: return equal(a->lhs, b->lhs);
    case StateNode::Kind::Or: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case StateNode::Kind::Quant: return a->quantifier == b->quantifier && equal(a->path, b->path);
    }
    return false;
}

bool equal(const PathFormula& a, const PathFormula& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
    case PathNode::Kind::State: return equal(a->state, b->state);
    case PathNode::Kind::Not:
    case PathNode::Kind::Next: return equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

bool is_temporal(const PathFormula& f) {
    switch (f->kind) {
    case PathNode::Kind::State: return false;
    case PathNode::Kind::Not: return is_temporal(f->lhs);
    case PathNode::Kind::Or: return is_temporal(f->lhs) || is_temporal(f->rhs);
    default: return true;
    }
}

namespace {

bool is_false(const StateFormula& f) {
    return f->kind == StateNode::Kind::Not && f->lhs->kind == StateNode::Kind::True;
}

bool is_true(const PathFormula& f) {
    return f->kind == PathNode::Kind::State && f->state->kind == StateNode::Kind::True;
}

bool is_false(const PathFormula& f) { return f->kind == PathNode::Kind::State && is_false(f->state); }

// Not(Or(Not a, Not b)) is printed as a conjunction.
template <class F>
bool conjunction_parts(const F& f, F& a, F& b) {
    using N = typename F::element_type;
    if (f->kind != N::Kind::Not || f->lhs->kind != N::Kind::Or) return false;
    const F& l = f->lhs->lhs;
    const F& r = f->lhs->rhs;
    if (l->kind != N::Kind::Not || r->kind != N::Kind::Not) return false;
    a = l->lhs;
    b = r->lhs;
    return true;
}

std::string print(const StateFormula& f, bool operand);
std::string print(const PathFormula& f, bool operand);

std::string print(const StateFormula& f, bool operand) {
    StateFormula a, b;
    switch (f->kind) {
    case StateNode::Kind::True: return "true";
    case StateNode::Kind::Atom: return f->atom;
    case StateNode::Kind::Not:
        if (is_false(f)) return "false";
        if (conjunction_parts(f, a, b)) return "(" + print(a, true) + " & " + print(b, true) + ")";
        return "!" + print(f->lhs, true);
    case StateNode::Kind::Or: return "(" + print(f->lhs, true) + " | " + print(f->rhs, true) + ")";
    case StateNode::Kind::Quant: {
        std::string s = std::string(to_string(f->quantifier)) + " (" + print(f->path, false) + ")";
        return operand ? "(" + s + ")" : s;
    }
    }
    return "?";
}

std::string print(const PathFormula& f, bool operand) {
    PathFormula a, b;
    switch (f->kind) {
    case PathNode::Kind::State: return print(f->state, operand);
    case PathNode::Kind::Not:
        if (conjunction_parts(f, a, b)) return "(" + print(a, true) + " & " + print(b, true) + ")";
        return "!" + print(f->lhs, true);
    case PathNode::Kind::Or: return "(" + print(f->lhs, true) + " | " + print(f->rhs, true) + ")";
    case PathNode::Kind::Next: return "X " + print(f->lhs, true);
    case PathNode::Kind::Until:
        if (is_true(f->lhs)) return "F " + print(f->rhs, true);
        return "(" + print(f->lhs, true) + " U " + print(f->rhs, true) + ")";
    case PathNode::Kind::WaitFor:
        if (is_false(f->rhs)) return "G " + print(f->lhs, true);
        return "(" + print(f->lhs, true) + " W " + print(f->rhs, true) + ")";
    }
    return "?";
}

}  // namespace

std::string to_string(const StateFormula& f) { return print(f, false); }
std::string to_string(const PathFormula& f) { return print(f, false); }

}  // namespace qrctl
