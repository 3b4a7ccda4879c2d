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

#include "qrctl/transform.hpp"

#include <unordered_map>

namespace qrctl {

std::string_view to_string(Fragment f) {
    switch (f) {
    case Fragment::qrctl: return "QRCTL";
    case Fragment::qrctl_star: return "QRCTL*";
    case Fragment::pos: return "QRCTLpos";
    case Fragment::sure: return "QRCTLsure";
    case Fragment::next_only: return "next-only";
    }
    return "?";
}

bool Fragments::contains(Fragment f) const {
    switch (f) {
    case Fragment::qrctl: return qrctl;
    case Fragment::qrctl_star: return qrctl_star;
    case Fragment::pos: return pos;
    case Fragment::sure: return sure;
    case Fragment::next_only: return next_only;
    }
    return false;
}

std::vector<Fragment> Fragments::tags() const {
    std::vector<Fragment> out;
    for (Fragment f : {Fragment::qrctl, Fragment::qrctl_star, Fragment::pos, Fragment::sure, Fragment::next_only})
        if (contains(f)) out.push_back(f);
    return out;
}

bool is_simple_path(const PathFormula& p) {
    const PathNode* n = p.get();
    while (n->kind == PathNode::Kind::Not) n = n->lhs.get();
    switch (n->kind) {
    case PathNode::Kind::State: return true;
    case PathNode::Kind::Next: return n->lhs->kind == PathNode::Kind::State;
    case PathNode::Kind::Until:
    case PathNode::Kind::WaitFor:
        return n->lhs->kind == PathNode::Kind::State && n->rhs->kind == PathNode::Kind::State;
    default: return false;
    }
}

namespace {

struct Scan {
    bool simple = true;
    bool only_pos = true;
    bool only_sure = true;
    bool has_until = false;
};

void scan(const StateFormula& f, Scan& s);

void scan(const PathFormula& p, Scan& s) {
    switch (p->kind) {
    case PathNode::Kind::State: scan(p->state, s); return;
    case PathNode::Kind::Until:
    case PathNode::Kind::WaitFor:
        s.has_until = true;
        scan(p->lhs, s);
        scan(p->rhs, s);
        return;
    case PathNode::Kind::Or:
        scan(p->lhs, s);
        scan(p->rhs, s);
        return;
    default: scan(p->lhs, s);
    }
}

void scan(const StateFormula& f, Scan& s) {
    switch (f->kind) {
    case StateNode::Kind::True:
    case StateNode::Kind::Atom: return;
    case StateNode::Kind::Not: scan(f->lhs, s); return;
    case StateNode::Kind::Or:
        scan(f->lhs, s);
        scan(f->rhs, s);
        return;
    case StateNode::Kind::Quant:
        if (f->quantifier.mode != Mode::pos) s.only_pos = false;
        if (f->quantifier.mode != Mode::sure) s.only_sure = false;
        if (!is_simple_path(f->path)) s.simple = false;
        scan(f->path, s);
        return;
    }
}

class Dualizer {
public:
    StateFormula state(const StateFormula& f) {
        if (auto it = memo_.find(f.get()); it != memo_.end()) return it->second;
        StateFormula out = rewrite(f);
        memo_.emplace(f.get(), out);
        keep_.push_back(f);
        return out;
    }

private:
    std::unordered_map<const StateNode*, StateFormula> memo_;
    std::vector<StateFormula> keep_;

    static StateFormula strip_not(const StateFormula& f) {
        if (f->kind == StateNode::Kind::Not) return f->lhs;
        return negate(f);
    }

    StateFormula rewrite(const StateFormula& f) {
        switch (f->kind) {
        case StateNode::Kind::True:
        case StateNode::Kind::Atom: return f;
        case StateNode::Kind::Not: return strip_not(state(f->lhs));
        case StateNode::Kind::Or: {
            StateFormula a = state(f->lhs), b = state(f->rhs);
            if (a == f->lhs && b == f->rhs) return f;
            return disjoin(a, b);
        }
        case StateNode::Kind::Quant: {
            PathFormula body = path(f->path);
            if (f->quantifier.polarity == Polarity::exists) {
                if (body == f->path) return f;
                return quantify(f->quantifier, body);
            }
            return negate(quantify({Polarity::exists, dual(f->quantifier.mode)}, negated(body)));
        }
        }
        return f;
    }

    // Normal form of the path with negations pushed down and nested states dualized.
    PathFormula path(const PathFormula& p) {
        switch (p->kind) {
        case PathNode::Kind::State: {
            StateFormula s = state(p->state);
            return s == p->state ? p : embed(s);
        }
        case PathNode::Kind::Not: return negated(path(p->lhs));
        case PathNode::Kind::Or: return disjoin(path(p->lhs), path(p->rhs));
        case PathNode::Kind::Next: return next(path(p->lhs));
        case PathNode::Kind::Until: return until(path(p->lhs), path(p->rhs));
        case PathNode::Kind::WaitFor: return wait_for(path(p->lhs), path(p->rhs));
        }
        return p;
    }

    // Normal form of !p, for p already in normal form.
    PathFormula negated(const PathFormula& p) {
        switch (p->kind) {
        case PathNode::Kind::State: return embed(strip_not(p->state));
        case PathNode::Kind::Not: return p->lhs;
        case PathNode::Kind::Next: return next(negated(p->lhs));
        case PathNode::Kind::Until: return wait_for(negated(p->rhs), negated(p->lhs));
        case PathNode::Kind::WaitFor: return until(negated(p->rhs), negated(p->lhs));
        case PathNode::Kind::Or: return negate(p);
        }
        return negate(p);
    }
};

}  // namespace

Fragments classify(const StateFormula& f) {
    Scan s;
    scan(f, s);
    Fragments out;
    out.qrctl = s.simple;
    out.pos = s.simple && s.only_pos;
    out.sure = s.simple && s.only_sure;
    out.next_only = s.simple && !s.has_until;
    return out;
}

StateFormula dualize(const StateFormula& f) { return Dualizer().state(f); }

}  // namespace qrctl
