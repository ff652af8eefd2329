#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cmlab/bits.hpp"

namespace cmlab {

enum class GateKind : std::uint8_t { Input, Const, And, Or, Not };

inline const char* to_string(GateKind k) {
    switch (k) {
        case GateKind::Input: return "INPUT";
        case GateKind::Const: return "CONST";
        case GateKind::And: return "AND";
        case GateKind::Or: return "OR";
        case GateKind::Not: return "NOT";
    }
    return "?";
}

/// One vertex of the gate DAG. `aux` holds the input position for Input
/// gates and the constant bit for Const gates; it is unused otherwise.
/// AND/OR have unbounded fan-in.
struct Gate {
    GateKind kind = GateKind::Const;
    std::uint32_t aux = 0;
    std::vector<std::uint32_t> args;

    static Gate input(std::uint32_t pos) { return Gate{GateKind::Input, pos, {}}; }
    static Gate constant(bool bit) { return Gate{GateKind::Const, bit ? 1u : 0u, {}}; }
    static Gate and_of(std::vector<std::uint32_t> a) { return Gate{GateKind::And, 0, std::move(a)}; }
    static Gate or_of(std::vector<std::uint32_t> a) { return Gate{GateKind::Or, 0, std::move(a)}; }
    static Gate not_of(std::uint32_t a) { return Gate{GateKind::Not, 0, {a}}; }
};

/// Combinational gate DAG with ordered inputs and ordered outputs.
///
/// Gate ids are indices into `gates`. Every argument must reference a
/// smaller id, so the vector order is a topological order and evaluation
/// is a single forward pass. Size counts all vertices, inputs and
/// constants included; depth counts edges on the longest directed path,
/// so an inputs-only circuit has depth 0 and a single gate over inputs
/// has depth 1.
struct Circuit {
    std::uint32_t input_count = 0;
    std::vector<Gate> gates;
    std::vector<std::uint32_t> outputs;

    std::size_t size() const { return gates.size(); }
    std::size_t output_count() const { return outputs.size(); }

    std::size_t depth() const {
        std::size_t best = 0;
        std::vector<std::size_t> level(gates.size(), 0);
        for (std::size_t i = 0; i < gates.size(); ++i) {
            std::size_t l = 0;
            for (std::uint32_t a : gates[i].args) l = std::max(l, level[a] + 1);
            level[i] = l;
            best = std::max(best, l);
        }
        return best;
    }

    /// Forward evaluation into `vals` (resized to one value per gate).
    /// `x` must point at input_count bits.
    void evaluate_raw(const std::uint8_t* x, std::vector<std::uint8_t>& vals) const {
        vals.resize(gates.size());
        for (std::size_t i = 0; i < gates.size(); ++i) {
            const Gate& g = gates[i];
            switch (g.kind) {
                case GateKind::Input:
                    if (g.aux >= input_count)
                        throw std::invalid_argument("Circuit::evaluate: input position out of range");
                    vals[i] = x[g.aux];
                    break;
                case GateKind::Const:
                    vals[i] = static_cast<std::uint8_t>(g.aux & 1u);
                    break;
                case GateKind::And: {
                    std::uint8_t v = 1;
                    for (std::uint32_t a : g.args) {
                        if (a >= i) throw std::invalid_argument("Circuit::evaluate: non-topological arg");
                        v &= vals[a];
                    }
                    vals[i] = v;
                    break;
                }
                case GateKind::Or: {
                    std::uint8_t v = 0;
                    for (std::uint32_t a : g.args) {
                        if (a >= i) throw std::invalid_argument("Circuit::evaluate: non-topological arg");
                        v |= vals[a];
                    }
                    vals[i] = v;
                    break;
                }
                case GateKind::Not: {
                    if (g.args.size() != 1) throw std::invalid_argument("Circuit::evaluate: NOT arity");
                    std::uint32_t a = g.args[0];
                    if (a >= i) throw std::invalid_argument("Circuit::evaluate: non-topological arg");
                    vals[i] = vals[a] ^ 1u;
                    break;
                }
            }
        }
    }

    BitString evaluate(const BitString& x) const {
        if (x.width() != input_count) throw std::invalid_argument("Circuit::evaluate: width mismatch");
        std::vector<std::uint8_t> vals;
        evaluate_raw(x.raw().data(), vals);
        BitString out(outputs.size());
        for (std::size_t i = 0; i < outputs.size(); ++i) {
            if (outputs[i] >= gates.size())
                throw std::invalid_argument("Circuit::evaluate: output id out of range");
            out.set(i, vals[outputs[i]]);
        }
        return out;
    }
};

/// Checks all structural invariants and returns every violation found.
inline std::vector<std::string> validate(const Circuit& c) {
    std::vector<std::string> errors;
    std::vector<bool> seen_pos(c.input_count, false);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        const std::string at = "gate " + std::to_string(i) + " (" + to_string(g.kind) + ")";
        switch (g.kind) {
            case GateKind::Input:
                if (!g.args.empty()) errors.push_back(at + ": INPUT must have no args");
                if (g.aux >= c.input_count) {
                    errors.push_back(at + ": position " + std::to_string(g.aux) + " out of range");
                } else if (seen_pos[g.aux]) {
                    errors.push_back(at + ": position " + std::to_string(g.aux) + " used twice");
                } else {
                    seen_pos[g.aux] = true;
                }
                break;
            case GateKind::Const:
                if (!g.args.empty()) errors.push_back(at + ": CONST must have no args");
                if (g.aux > 1) errors.push_back(at + ": CONST bit must be 0 or 1");
                break;
            case GateKind::Not:
                if (g.args.size() != 1) errors.push_back(at + ": NOT must have exactly 1 arg");
                break;
            case GateKind::And:
            case GateKind::Or:
                if (g.args.empty()) errors.push_back(at + ": must have at least 1 arg");
                break;
        }
        for (std::uint32_t a : g.args)
            if (a >= i)
                errors.push_back(at + ": arg " + std::to_string(a) +
                                 " does not precede the gate (cycle or forward reference)");
    }
    for (std::size_t i = 0; i < c.outputs.size(); ++i)
        if (c.outputs[i] >= c.gates.size())
            errors.push_back("output " + std::to_string(i) + ": id " + std::to_string(c.outputs[i]) +
                             " out of range");
    return errors;
}

/// Feeds the concatenated outputs of `inners` into `outer`.
///
/// The composed circuit's inputs are the inners' inputs, concatenated in
/// order. Outer INPUT gates are dropped and rewired to the matching inner
/// output, so size(result) <= sum size(inner) + size(outer) and
/// depth(result) <= max depth(inner) + depth(outer).
inline Circuit compose(const Circuit& outer, const std::vector<Circuit>& inners) {
    std::size_t total_outputs = 0;
    std::uint32_t total_inputs = 0;
    for (const Circuit& in : inners) {
        total_outputs += in.output_count();
        total_inputs += in.input_count;
    }
    if (total_outputs != outer.input_count)
        throw std::invalid_argument("compose: inner outputs (" + std::to_string(total_outputs) +
                                    ") do not match outer inputs (" + std::to_string(outer.input_count) + ")");

    Circuit result;
    result.input_count = total_inputs;

    // Inner gates first, with input positions shifted to each inner's slot.
    std::vector<std::uint32_t> inner_output_ids;  // composed ids of the concatenated inner outputs
    std::uint32_t input_offset = 0;
    for (const Circuit& in : inners) {
        const std::uint32_t gate_offset = static_cast<std::uint32_t>(result.gates.size());
        for (const Gate& g : in.gates) {
            Gate ng = g;
            if (ng.kind == GateKind::Input) ng.aux += input_offset;
            for (std::uint32_t& a : ng.args) a += gate_offset;
            result.gates.push_back(std::move(ng));
        }
        for (std::uint32_t o : in.outputs) inner_output_ids.push_back(o + gate_offset);
        input_offset += in.input_count;
    }

    // Outer gates, with INPUT gates rewired to the matching inner output.
    std::vector<std::uint32_t> remap(outer.gates.size());
    for (std::size_t i = 0; i < outer.gates.size(); ++i) {
        const Gate& g = outer.gates[i];
        if (g.kind == GateKind::Input) {
            remap[i] = inner_output_ids[g.aux];
            continue;
        }
        Gate ng = g;
        for (std::uint32_t& a : ng.args) a = remap[a];
        remap[i] = static_cast<std::uint32_t>(result.gates.size());
        result.gates.push_back(std::move(ng));
    }
    for (std::uint32_t o : outer.outputs) result.outputs.push_back(remap[o]);
    return result;
}

}  // namespace cmlab
