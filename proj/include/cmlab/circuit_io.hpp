#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cmlab/circuit.hpp"

namespace cmlab {

// Circuit file format, the interchange unit for the CLI:
//   {"inputs": n,
//    "gates": [{"id": k, "kind": "INPUT"|"CONST"|"AND"|"OR"|"NOT",
//               "pos": p?, "bit": b?, "args": [ids]}, ...],
//    "outputs": [ids]}
// Ids are consecutive from 0 in topological order.

inline nlohmann::json encode_json(const Circuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        nlohmann::json jg;
        jg["id"] = i;
        jg["kind"] = to_string(g.kind);
        if (g.kind == GateKind::Input) jg["pos"] = g.aux;
        if (g.kind == GateKind::Const) jg["bit"] = g.aux;
        jg["args"] = g.args;
        gates.push_back(std::move(jg));
    }
    return nlohmann::json{{"inputs", c.input_count}, {"gates", gates}, {"outputs", c.outputs}};
}

inline std::string encode(const Circuit& c) { return encode_json(c).dump(1); }

inline Circuit decode(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("circuit decode: ") + e.what());
    }
    if (!j.is_object() || !j.contains("inputs") || !j.contains("gates") || !j.contains("outputs"))
        throw std::runtime_error("circuit decode: expected object with inputs/gates/outputs");

    Circuit c;
    c.input_count = j.at("inputs").get<std::uint32_t>();
    const nlohmann::json& gates = j.at("gates");
    if (!gates.is_array()) throw std::runtime_error("circuit decode: gates must be an array");
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const nlohmann::json& jg = gates[i];
        const std::string where = "circuit decode: gates[" + std::to_string(i) + "]";
        if (!jg.is_object()) throw std::runtime_error(where + ": expected object");
        if (jg.contains("id") && jg.at("id").get<std::uint64_t>() != i)
            throw std::runtime_error(where + ": ids must be consecutive from 0");
        const std::string kind = jg.at("kind").get<std::string>();
        Gate g;
        if (kind == "INPUT") {
            g = Gate::input(jg.at("pos").get<std::uint32_t>());
        } else if (kind == "CONST") {
            g = Gate::constant(jg.at("bit").get<std::uint32_t>() != 0);
        } else if (kind == "AND") {
            g = Gate::and_of(jg.at("args").get<std::vector<std::uint32_t>>());
        } else if (kind == "OR") {
            g = Gate::or_of(jg.at("args").get<std::vector<std::uint32_t>>());
        } else if (kind == "NOT") {
            const auto args = jg.at("args").get<std::vector<std::uint32_t>>();
            if (args.size() != 1) throw std::runtime_error(where + ": NOT takes exactly 1 arg");
            g = Gate::not_of(args[0]);
        } else {
            throw std::runtime_error(where + ": unknown kind '" + kind + "'");
        }
        c.gates.push_back(std::move(g));
    }
    c.outputs = j.at("outputs").get<std::vector<std::uint32_t>>();

    const auto errors = validate(c);
    if (!errors.empty()) {
        std::string msg = "circuit decode: invalid circuit:";
        for (const std::string& e : errors) msg += "\n  " + e;
        throw std::runtime_error(msg);
    }
    return c;
}

}  // namespace cmlab
