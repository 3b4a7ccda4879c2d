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

#include "qrctl/model_io.hpp"

#include "qrctl/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qrctl {

using ordered_json = nlohmann::ordered_json;

namespace {

const ordered_json& require(const ordered_json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw FormatError(where + ": missing field \"" + key + "\"");
    return obj.at(key);
}

std::vector<std::string> string_list(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw FormatError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw FormatError(where + ": expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

Probability probability_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_string()) return Probability::parse(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned()) return Probability::parse(j.dump());
    if (j.is_number_float()) return Probability(j.get<double>());
    throw FormatError(where + ": probability must be a number or a \"p/q\" string");
}

}  // namespace

RawModel parse_model_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("model: top-level value must be an object");

    RawModel raw;
    if (doc.contains("propositions")) raw.propositions = string_list(doc.at("propositions"), "propositions");
    const auto& states = require(doc, "states", "model");
    if (!states.is_array()) throw FormatError("model: \"states\" must be an array");
    for (const auto& js : states) {
        RawState rs;
        const auto& name = require(js, "name", "state");
        if (!name.is_string()) throw FormatError("state: \"name\" must be a string");
        rs.name = name.get<std::string>();
        const std::string where = "state '" + rs.name + "'";
        if (js.contains("labels")) rs.labels = string_list(js.at("labels"), where + " labels");
        const auto& actions = require(js, "actions", where);
        if (!actions.is_object()) throw FormatError(where + ": \"actions\" must be an object");
        for (const auto& [aname, dist] : actions.items()) {
            RawAction ra{aname, {}};
            if (!dist.is_object()) throw FormatError(where + " action '" + aname + "': distribution must be an object");
            for (const auto& [target, p] : dist.items())
                ra.successors.push_back({target, probability_from_json(p, where + " action '" + aname + "'")});
            rs.actions.push_back(std::move(ra));
        }
        raw.states.push_back(std::move(rs));
    }
    return raw;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Mdp read_model(const std::filesystem::path& path) { return validate(parse_model_json(read_text_file(path))); }

std::string model_to_json(const Mdp& m) {
    ordered_json doc;
    doc["propositions"] = m.propositions();
    doc["states"] = ordered_json::array();
    for (StateId s = 0; s < m.num_states(); ++s) {
        ordered_json js;
        js["name"] = m.name(s);
        js["labels"] = m.label_names(s);
        ordered_json actions = ordered_json::object();
        for (const Choice& c : m.choices(s)) {
            ordered_json dist = ordered_json::object();
            for (const Transition& t : c.distribution) {
                const Probability& p = t.probability;
                if (!p.is_exact())
                    dist[m.name(t.target)] = p.value();
                else if (denominator(*p.exact()) == 1)
                    dist[m.name(t.target)] = 1;
                else
                    dist[m.name(t.target)] = p.to_string();
            }
            actions[m.actions()[c.action]] = std::move(dist);
        }
        js["actions"] = std::move(actions);
        doc["states"].push_back(std::move(js));
    }
    return doc.dump(2) + "\n";
}

}  // namespace qrctl
