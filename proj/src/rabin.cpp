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

#include "qrctl/rabin.hpp"

#include "qrctl/error.hpp"
#include "qrctl/fixpoint.hpp"
#include "qrctl/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace qrctl {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> names_of(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw FormatError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw FormatError(where + ": expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

const ordered_json& field(const ordered_json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw FormatError(where + ": missing field \"" + key + "\"");
    return obj.at(key);
}

// Index form of an automaton: labels as bit masks over the alphabet.
struct Compiled {
    std::size_t letters = 0;
    std::vector<std::uint32_t> mask;
    std::vector<std::vector<std::uint32_t>> succ;
    std::vector<std::uint32_t> initial;
    std::vector<std::vector<char>> avoid;
    std::vector<std::vector<char>> visit;
};

std::string labelling(const std::vector<std::string>& alphabet, std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (mask >> i & 1u) {
            out += (first ? "" : ",") + alphabet[i];
            first = false;
        }
    return out + "}";
}

Compiled compile(const RabinAutomaton& a) {
    Compiled c;
    c.letters = a.alphabet.size();
    if (c.letters > 20) throw FormatError("automaton alphabet has more than 20 propositions");
    std::map<std::string, std::uint32_t> letter, loc;
    for (std::size_t i = 0; i < a.alphabet.size(); ++i)
        if (!letter.emplace(a.alphabet[i], static_cast<std::uint32_t>(i)).second)
            throw FormatError("duplicate alphabet entry '" + a.alphabet[i] + "'");
    for (std::size_t i = 0; i < a.locations.size(); ++i)
        if (!loc.emplace(a.locations[i].name, static_cast<std::uint32_t>(i)).second)
            throw FormatError("duplicate location '" + a.locations[i].name + "'");
    auto location = [&](const std::string& name) {
        auto it = loc.find(name);
        if (it == loc.end()) throw FormatError("unknown location '" + name + "'");
        return it->second;
    };
    for (const RabinLocation& l : a.locations) {
        std::uint32_t mask = 0;
        for (const std::string& p : l.labels) {
            auto it = letter.find(p);
            if (it == letter.end()) throw FormatError("location '" + l.name + "' uses '" + p + "' outside the alphabet");
            mask |= 1u << it->second;
        }
        c.mask.push_back(mask);
        std::vector<std::uint32_t> next;
        for (const std::string& s : l.successors) next.push_back(location(s));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        c.succ.push_back(std::move(next));
    }
    for (const std::string& s : a.initial) c.initial.push_back(location(s));
    std::sort(c.initial.begin(), c.initial.end());
    c.initial.erase(std::unique(c.initial.begin(), c.initial.end()), c.initial.end());
    for (const RabinPair& p : a.pairs) {
        std::vector<char> av(a.locations.size(), 0), vi(a.locations.size(), 0);
        for (const std::string& s : p.avoid) av[location(s)] = 1;
        for (const std::string& s : p.visit) vi[location(s)] = 1;
        c.avoid.push_back(std::move(av));
        c.visit.push_back(std::move(vi));
    }
    return c;
}

}  // namespace

RabinAutomaton parse_rabin_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("automaton: top-level value must be an object");
    RabinAutomaton a;
    a.alphabet = names_of(field(doc, "alphabet", "automaton"), "alphabet");
    const auto& locs = field(doc, "locations", "automaton");
    if (!locs.is_array()) throw FormatError("automaton: \"locations\" must be an array");
    for (const auto& jl : locs) {
        RabinLocation l;
        const auto& name = field(jl, "name", "location");
        if (!name.is_string()) throw FormatError("location: \"name\" must be a string");
        l.name = name.get<std::string>();
        if (jl.contains("labels")) l.labels = names_of(jl.at("labels"), "location '" + l.name + "' labels");
        l.successors = names_of(field(jl, "successors", "location '" + l.name + "'"), "location '" + l.name + "'");
        a.locations.push_back(std::move(l));
    }
    a.initial = names_of(field(doc, "initial", "automaton"), "initial");
    const auto& pairs = field(doc, "pairs", "automaton");
    if (!pairs.is_array()) throw FormatError("automaton: \"pairs\" must be an array");
    for (const auto& jp : pairs)
        a.pairs.push_back({names_of(field(jp, "P", "pair"), "pair P"), names_of(field(jp, "R", "pair"), "pair R")});
    compile(a);
    return a;
}

RabinAutomaton read_rabin(const std::string& path) { return parse_rabin_json(read_text_file(path)); }

std::string rabin_to_json(const RabinAutomaton& a) {
    ordered_json doc;
    doc["alphabet"] = a.alphabet;
    doc["locations"] = ordered_json::array();
    for (const RabinLocation& l : a.locations)
        doc["locations"].push_back({{"name", l.name}, {"labels", l.labels}, {"successors", l.successors}});
    doc["initial"] = a.initial;
    doc["pairs"] = ordered_json::array();
    for (const RabinPair& p : a.pairs) doc["pairs"].push_back({{"P", p.avoid}, {"R", p.visit}});
    return doc.dump(2) + "\n";
}

DeterminismReport is_deterministic(const RabinAutomaton& a) {
    const Compiled c = compile(a);
    DeterminismReport r;
    auto violation = [&](std::string msg) {
        r.deterministic = false;
        r.violations.push_back(std::move(msg));
    };
    const std::uint32_t words = 1u << c.letters;
    for (std::uint32_t eta = 0; eta < words; ++eta) {
        std::vector<std::uint32_t> hits;
        for (std::uint32_t l : c.initial)
            if (c.mask[l] == eta) hits.push_back(l);
        if (hits.empty())
            violation("clause 1: no initial location labelled " + labelling(a.alphabet, eta));
        else if (hits.size() > 1)
            violation("clause 1: initial locations '" + a.locations[hits[0]].name + "' and '" +
                      a.locations[hits[1]].name + "' are both labelled " + labelling(a.alphabet, eta));
    }
    for (std::size_t l = 0; l < c.succ.size(); ++l) {
        std::vector<char> seen(words, 0);
        for (std::uint32_t t : c.succ[l]) {
            if (seen[c.mask[t]])
                violation("clause 3: location '" + a.locations[l].name + "' has two successors labelled " +
                          labelling(a.alphabet, c.mask[t]));
            seen[c.mask[t]] = 1;
        }
        for (std::uint32_t eta = 0; eta < words; ++eta)
            if (!seen[eta])
                violation("clause 2: location '" + a.locations[l].name + "' has no successor labelled " +
                          labelling(a.alphabet, eta));
    }
    return r;
}

ProductMdp product(const Mdp& m, const RabinAutomaton& a, bool reachable_only) {
    DeterminismReport det = is_deterministic(a);
    if (!det.deterministic) throw NotDeterministic(det.violations);
    const Compiled c = compile(a);
    const std::size_t nl = a.locations.size();

    std::vector<PropId> letter_prop;
    for (const std::string& p : a.alphabet) {
        auto id = m.find_proposition(p);
        if (!id) throw UndeclaredProposition(p);
        letter_prop.push_back(*id);
    }
    std::vector<std::uint32_t> word(m.num_states(), 0);
    for (StateId s = 0; s < m.num_states(); ++s)
        for (std::size_t i = 0; i < letter_prop.size(); ++i)
            if (m.has_label(s, letter_prop[i])) word[s] |= 1u << i;

    // by_label[l][eta]: the successor of l labelled eta (unique by determinism).
    std::vector<std::vector<std::uint32_t>> by_label(nl, std::vector<std::uint32_t>(1u << c.letters));
    for (std::size_t l = 0; l < nl; ++l)
        for (std::uint32_t t : c.succ[l]) by_label[l][c.mask[t]] = t;
    std::vector<std::uint32_t> init_by_label(1u << c.letters);
    for (std::uint32_t l : c.initial) init_by_label[c.mask[l]] = l;

    auto key = [nl](StateId s, std::uint32_t l) { return static_cast<std::size_t>(s) * nl + l; };
    std::vector<std::int64_t> index(m.num_states() * nl, -1);
    std::vector<std::pair<StateId, std::uint32_t>> order;
    if (reachable_only) {
        std::deque<std::pair<StateId, std::uint32_t>> work;
        auto visit = [&](StateId s, std::uint32_t l) {
            if (index[key(s, l)] >= 0) return;
            index[key(s, l)] = 0;
            work.emplace_back(s, l);
            order.emplace_back(s, l);
        };
        for (StateId s = 0; s < m.num_states(); ++s) visit(s, init_by_label[word[s]]);
        while (!work.empty()) {
            auto [s, l] = work.front();
            work.pop_front();
            for (const Choice& ch : m.choices(s))
                for (const Transition& tr : ch.distribution) visit(tr.target, by_label[l][word[tr.target]]);
        }
        std::sort(order.begin(), order.end());
    } else {
        for (StateId s = 0; s < m.num_states(); ++s)
            for (std::uint32_t l = 0; l < nl; ++l)
                if (c.mask[l] == word[s]) order.emplace_back(s, l);
    }
    for (std::size_t i = 0; i < order.size(); ++i) index[key(order[i].first, order[i].second)] = static_cast<std::int64_t>(i);

    auto pname = [&](StateId s, std::uint32_t l) { return "(" + m.name(s) + "," + a.locations[l].name + ")"; };
    RawModel raw;
    raw.propositions = a.alphabet;
    for (auto [s, l] : order) {
        RawState st;
        st.name = pname(s, l);
        st.labels = a.locations[l].labels;
        for (const Choice& ch : m.choices(s)) {
            RawAction act{m.actions()[ch.action], {}};
            for (const Transition& tr : ch.distribution)
                act.successors.push_back({pname(tr.target, by_label[l][word[tr.target]]), tr.probability});
            st.actions.push_back(std::move(act));
        }
        raw.states.push_back(std::move(st));
    }

    ProductMdp pm{validate(raw), {}, {}, {}, {}, {}};
    const std::size_t n = order.size();
    for (auto [s, l] : order) {
        pm.model_state.push_back(s);
        pm.location.push_back(l);
    }
    for (StateId s = 0; s < m.num_states(); ++s) {
        const std::int64_t i = index[key(s, init_by_label[word[s]])];
        pm.initial_of.push_back(i >= 0 ? std::optional<StateId>(static_cast<StateId>(i)) : std::nullopt);
    }
    for (std::size_t k = 0; k < c.avoid.size(); ++k) {
        StateSet av = empty_set(n), vi = empty_set(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (c.avoid[k][order[i].second]) av.set(i);
            if (c.visit[k][order[i].second]) vi.set(i);
        }
        pm.avoid.push_back(std::move(av));
        pm.visit.push_back(std::move(vi));
    }
    return pm;
}

StateSet rabin_qual_formula(const ProductMdp& pm, Mode mode) {
    const Mdp& g = pm.mdp;
    const std::size_t n = g.num_states();
    StateSet hat = empty_set(n);
    for (std::size_t i = 0; i < pm.avoid.size(); ++i) {
        const StateSet allowed = ~pm.avoid[i];
        const StateSet& good = pm.visit[i];
        hat |= gfp(n, [&](const StateSet& y) {
            const StateSet stay = cpre(g, y);
            const StateSet stay_pre = pre(g, y);
            return lfp(n, [&](const StateSet& x) {
                switch (mode) {
                case Mode::sure: return allowed & (cpre(g, x) | (good & stay));
                case Mode::nullo: return allowed & (pre(g, x) | (good & stay_pre));
                default: return allowed & (apre(g, y, x) | (good & stay));
                }
            });
        });
    }
    switch (mode) {
    case Mode::sure: return lfp(n, [&](const StateSet& w) { return hat | cpre(g, w); });
    case Mode::almost:
        return gfp(n, [&](const StateSet& z) { return lfp(n, [&](const StateSet& w) { return apre(g, z, w) | hat; }); });
    case Mode::pos:
    case Mode::nullo: return lfp(n, [&](const StateSet& w) { return hat | pre(g, w); });
    }
    return hat;
}

namespace {

// A subgame: the states in `domain` with the listed choices still enabled. The
// environment always picks successors inside the domain.
struct Arena {
    const Mdp* g;
    StateSet domain;
    std::vector<char> enabled;
};

bool inside(const Mdp& g, std::size_t c, const StateSet& domain, const StateSet& x) {
    for (StateId t : g.support(c))
        if (domain.test(t) && !x.test(t)) return false;
    return true;
}

bool meets(const Mdp& g, std::size_t c, const StateSet& domain, const StateSet& x) {
    for (StateId t : g.support(c))
        if (domain.test(t) && x.test(t)) return true;
    return false;
}

// States from which the controller forces a visit to `target`.
StateSet attract_controller(const Arena& a, const StateSet& target) {
    StateSet x = target & a.domain;
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t c = 0; c < a.g->num_choices(); ++c) {
            const StateId s = a.g->choice_source(c);
            if (!a.enabled[c] || x.test(s) || !a.domain.test(s)) continue;
            if (inside(*a.g, c, a.domain, x)) {
                x.set(s);
                grew = true;
            }
        }
    }
    return x;
}

// States from which the environment forces a visit to `target`.
StateSet attract_environment(const Arena& a, const StateSet& target) {
    StateSet x = target & a.domain;
    for (bool grew = true; grew;) {
        grew = false;
        for_each_member(a.domain - x, [&](StateId s) {
            const std::size_t end = s + 1 < a.g->num_states() ? a.g->first_choice(s + 1) : a.g->num_choices();
            bool forced = true;
            for (std::size_t c = a.g->first_choice(s); c < end && forced; ++c)
                if (a.enabled[c] && !meets(*a.g, c, a.domain, x)) forced = false;
            if (forced) {
                x.set(s);
                grew = true;
            }
        });
    }
    return x;
}

// Complement of an environment attractor: the controller keeps play inside by
// dropping the choices that may leave.
Arena controller_trap(const Arena& a, const StateSet& keep) {
    Arena b{a.g, keep, a.enabled};
    for (std::size_t c = 0; c < a.g->num_choices(); ++c)
        if (b.enabled[c]) b.enabled[c] = keep.test(a.g->choice_source(c)) && inside(*a.g, c, a.domain, keep);
    return b;
}

// Complement of a controller attractor: the environment keeps play inside.
Arena environment_trap(const Arena& a, const StateSet& keep) {
    Arena b{a.g, keep, a.enabled};
    for (std::size_t c = 0; c < a.g->num_choices(); ++c)
        if (b.enabled[c]) b.enabled[c] = keep.test(a.g->choice_source(c));
    return b;
}

struct Condition {
    StateSet avoid;  // empty for a plain Buchi pair
    StateSet visit;
};

StateSet solve_rabin(const Arena& a, const std::vector<Condition>& pairs);

// Controller wins if `visit` is seen infinitely often or one of `others` holds.
StateSet solve_buchi_or(Arena a, const StateSet& visit, const std::vector<Condition>& others) {
    while (a.domain.any()) {
        const StateSet b = attract_controller(a, visit);
        if (b == a.domain) return a.domain;
        const Arena rest = environment_trap(a, a.domain - b);
        const StateSet lost = rest.domain - solve_rabin(rest, others);
        if (lost.none()) return a.domain;
        a = controller_trap(a, a.domain - attract_environment(a, lost));
    }
    return a.domain;
}

StateSet solve_rabin(const Arena& a, const std::vector<Condition>& pairs) {
    if (a.domain.none() || pairs.empty()) return empty_set(a.domain.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Arena clean = controller_trap(a, a.domain - attract_environment(a, pairs[i].avoid));
        std::vector<Condition> others;
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if (j != i) others.push_back(pairs[j]);
        const StateSet won = solve_buchi_or(clean, pairs[i].visit, others);
        if (won.any()) {
            const StateSet taken = attract_controller(a, won);
            return taken | solve_rabin(environment_trap(a, a.domain - taken), pairs);
        }
    }
    return empty_set(a.domain.size());
}

}  // namespace

StateSet rabin_game_sure(const ProductMdp& pm) {
    const Mdp& g = pm.mdp;
    Arena a{&g, full_set(g.num_states()), std::vector<char>(g.num_choices(), 1)};
    std::vector<Condition> pairs;
    for (std::size_t i = 0; i < pm.avoid.size(); ++i) pairs.push_back({pm.avoid[i], pm.visit[i]});
    return solve_rabin(a, pairs);
}

StateSet rabin_qual(const ProductMdp& pm, Mode mode) {
    if (mode == Mode::sure) return rabin_game_sure(pm);
    return rabin_qual_formula(pm, mode);
}

StateSet check_star(const Mdp& m, Quantifier q, const RabinAutomaton& a, const RabinAutomaton* complement) {
    if (q.polarity == Polarity::forall) {
        if (!complement) throw MissingComplement("universal quantifier needs an automaton for the negated property");
        return ~check_star(m, {Polarity::exists, dual(q.mode)}, *complement);
    }
    const ProductMdp pm = product(m, a, true);
    const StateSet win = rabin_qual(pm, q.mode);
    StateSet out = empty_set(m.num_states());
    for (StateId s = 0; s < m.num_states(); ++s)
        if (pm.initial_of[s] && win.test(*pm.initial_of[s])) out.set(s);
    return out;
}

}  // namespace qrctl
