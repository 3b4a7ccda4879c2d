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

// Command-line front end. Results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 input or validation error, 2 formula outside QRCTL,
// 3 EU-splitter budget exceeded, 4 nondeterministic automaton.

#include "qrctl/qrctl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace qrctl;
using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> sorted_names(const Mdp& m, const StateSet& set) {
    std::vector<std::string> out;
    for_each_member(set, [&](StateId s) { out.push_back(m.name(s)); });
    std::sort(out.begin(), out.end());
    return out;
}

std::string joined(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

void print_lines(const std::vector<std::string>& v) {
    for (const auto& s : v) std::cout << s << '\n';
}

std::string formula_text(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::string text = read_text_file(arg);
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        return text;
    }
    return arg;
}

Quantifier parse_quantifier(const std::string& token) {
    StateFormula f = parse(token + " true");
    return f->quantifier;
}

int cmd_check(const std::string& model_path, const std::string& formula_arg, bool trace, bool json) {
    const Mdp m = read_model(model_path);
    const StateFormula f = parse(formula_text(formula_arg));
    Checker c(m);
    const StateSet sat = c.check(f);
    if (json) {
        ordered_json doc;
        doc["formula"] = to_string(f);
        doc["satisfying"] = sorted_names(m, sat);
        if (trace) {
            doc["trace"] = ordered_json::array();
            for (const TraceEntry& e : c.trace())
                doc["trace"].push_back({{"formula", e.formula}, {"states", sorted_names(m, e.states)}});
        }
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    print_lines(sorted_names(m, sat));
    if (trace) {
        std::cout << "-- trace\n";
        for (const TraceEntry& e : c.trace())
            std::cout << e.formula << ": {" << joined(sorted_names(m, e.states), ", ") << "}\n";
    }
    return 0;
}

int cmd_equiv(const std::string& model_path, const std::string& relation, std::size_t budget,
              const std::string& quotient_path) {
    const Mdp m = read_model(model_path);
    auto r = relation_from_string(relation);
    if (!r) throw Error("unknown relation '" + relation + "' (bisim, simclo, pos, sure, pos_next)");
    RefinementOptions opt;
    opt.budget = budget;
    const RefinementResult res = equiv(m, *r, opt);
    ordered_json doc;
    doc["relation"] = relation;
    doc["blocks"] = ordered_json::array();
    for (const StateSet& b : res.partition.blocks) {
        std::vector<std::string> names;
        for_each_member(b, [&](StateId s) { names.push_back(m.name(s)); });
        doc["blocks"].push_back(names);
    }
    doc["certificate"] = ordered_json::array();
    for (const SplitRecord& rec : res.log) {
        ordered_json j;
        j["round"] = rec.round;
        j["kind"] = std::string(to_string(rec.splitter.kind));
        j["C1"] = rec.splitter.first;
        if (rec.splitter.kind == SplitterKind::eu) j["C2"] = rec.splitter.second;
        j["block"] = rec.block;
        j["created"] = rec.created;
        doc["certificate"].push_back(std::move(j));
    }
    std::cout << doc.dump(2) << '\n';
    if (!quotient_path.empty()) {
        std::ofstream out(quotient_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + quotient_path + "'");
        out << model_to_json(quotient(m, res.partition));
    }
    return 0;
}

int cmd_star(const std::string& model_path, const std::string& quant, const std::string& dra_path,
             const std::string& complement_path, bool json) {
    const Mdp m = read_model(model_path);
    const Quantifier q = parse_quantifier(quant);
    const RabinAutomaton a = read_rabin(dra_path);
    std::optional<RabinAutomaton> comp;
    if (!complement_path.empty()) comp = read_rabin(complement_path);
    const StateSet sat = check_star(m, q, a, comp ? &*comp : nullptr);
    if (json) {
        ordered_json doc;
        doc["quantifier"] = std::string(to_string(q));
        doc["satisfying"] = sorted_names(m, sat);
        std::cout << doc.dump(2) << '\n';
    } else {
        print_lines(sorted_names(m, sat));
    }
    return 0;
}

int cmd_alternate(const std::string& model_path) {
    const Mdp m = read_model(model_path);
    if (check_alternating(m).accepted()) std::cerr << "warning: model is already alternating; transforming anyway\n";
    const AlternatedMdp alt = alternate(m);
    std::cerr << "synthesized " << alt.synthesized_states << " states\n";
    std::cout << model_to_json(alt.mdp);
    return 0;
}

int cmd_oracle(const std::string& model_path, const std::string& op_name, const std::string& q_text,
               const std::string& r_text, double tolerance, bool json) {
    const Mdp m = read_model(model_path);
    TemporalOp op;
    if (op_name == "X")
        op = TemporalOp::next;
    else if (op_name == "U")
        op = TemporalOp::until;
    else if (op_name == "W")
        op = TemporalOp::wait;
    else
        throw Error("unknown operator '" + op_name + "' (X, U, W)");
    const StateSet q = check(m, parse(q_text));
    const StateSet r = r_text.empty() ? empty_set(m.num_states()) : check(m, parse(r_text));
    OracleBounds bounds;
    bounds.tolerance = tolerance;
    const OracleVerdict v = qualitative_verdict(m, op, q, r, bounds);
    ordered_json doc;
    doc["strategies"] = v.strategies;
    for (Quantifier quant : kAllQuantifiers) {
        const auto names = sorted_names(m, v.satisfying(quant));
        if (json)
            doc[std::string(to_string(quant))] = names;
        else
            std::cout << to_string(quant) << ": " << joined(names, " ") << '\n';
    }
    if (json) std::cout << doc.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qualitative model checking and equivalences for Markov decision processes"};
    app.require_subcommand(1);

    std::string model, formula, relation, quant, dra, complement, quotient_path, op, q_text, r_text;
    bool trace = false, json = false;
    std::size_t budget = 20;
    double tolerance = 1e-12;

    auto* check_cmd = app.add_subcommand("check", "evaluate a QRCTL formula");
    check_cmd->add_option("model", model, "model JSON file")->required();
    check_cmd->add_option("formula", formula, "formula text or a file containing it")->required();
    check_cmd->add_flag("--trace", trace, "print the set of every subformula");
    check_cmd->add_flag("--json", json, "machine-readable output");

    auto* equiv_cmd = app.add_subcommand("equiv", "compute a qualitative equivalence");
    equiv_cmd->add_option("model", model, "model JSON file")->required();
    equiv_cmd->add_option("relation", relation, "bisim | simclo | pos | sure | pos_next")->required();
    equiv_cmd->add_option("--budget", budget, "largest block count for EU-splitter search");
    equiv_cmd->add_option("--quotient", quotient_path, "write the quotient model to this file");

    auto* star_cmd = app.add_subcommand("star", "check a path property given as a deterministic Rabin automaton");
    star_cmd->add_option("model", model, "model JSON file")->required();
    star_cmd->add_option("quantifier", quant, "Esure, Eas, Epos, Eex, or a universal one")->required();
    star_cmd->add_option("automaton", dra, "automaton JSON file")->required();
    star_cmd->add_option("--complement", complement, "automaton for the negated property (universal quantifiers)");
    star_cmd->add_flag("--json", json, "machine-readable output");

    auto* alt_cmd = app.add_subcommand("alternate", "print the alternating version of a model");
    alt_cmd->add_option("model", model, "model JSON file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force verdicts by strategy enumeration");
    oracle_cmd->add_option("model", model, "model JSON file")->required();
    oracle_cmd->add_option("op", op, "X | U | W")->required();
    oracle_cmd->add_option("q", q_text, "left operand (state formula)")->required();
    oracle_cmd->add_option("r", r_text, "right operand (state formula, unused for X)");
    oracle_cmd->add_option("--tolerance", tolerance, "value-iteration tolerance");
    oracle_cmd->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*check_cmd) return cmd_check(model, formula, trace, json);
        if (*equiv_cmd) return cmd_equiv(model, relation, budget, quotient_path);
        if (*star_cmd) return cmd_star(model, quant, dra, complement, json);
        if (*alt_cmd) return cmd_alternate(model);
        if (*oracle_cmd) return cmd_oracle(model, op, q_text, r_text, tolerance, json);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NotQrctl& e) {
        std::cerr << "error: " << e.what() << "\n(use the star subcommand with a Rabin automaton)\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const NotDeterministic& e) {
        std::cerr << "error: automaton is not deterministic\n";
        for (const auto& v : e.violations()) std::cerr << "  " << v << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
