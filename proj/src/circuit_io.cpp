#include "trapion/circuit_io.hpp"

#include "trapion/errors.hpp"
#include "trapion/json_fields.hpp"

namespace trapion::pulse {

using detail::field;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

Gate gate_from_json(const nlohmann::json& g, std::size_t k) {
    const std::string where = "gates[" + std::to_string(k) + "]: ";
    try {
        const auto op = field<std::string>(g, "op");
        if (op == "NOT" || op == "X") return gate::Not{field<std::size_t>(g, "ion")};
        if (op == "V") {
            return gate::V{field<std::size_t>(g, "ion"), field<double>(g, "theta"),
                           field<double>(g, "phi")};
        }
        if (op == "CSF" || op == "CZ") {
            return gate::Csf{field<std::size_t>(g, "control"), field<std::size_t>(g, "target")};
        }
        if (op == "CNOT") {
            return gate::Cnot{field<std::size_t>(g, "control"), field<std::size_t>(g, "target")};
        }
        if (op == "CCNOT" || op == "TOFFOLI") {
            const auto controls = g.find("controls");
            if (controls == g.end() || !controls->is_array() || controls->size() != 2 ||
                !(*controls)[0].is_number_unsigned() || !(*controls)[1].is_number_unsigned()) {
                throw InputError("field 'controls' must be an array of two ion indices");
            }
            return gate::Ccnot{(*controls)[0].get<std::size_t>(), (*controls)[1].get<std::size_t>(),
                               field<std::size_t>(g, "target")};
        }
        throw InputError("field 'op' has unknown value '" + op + "'");
    } catch (const InputError& e) {
        throw InputError(where + e.what());
    }
}

}  // namespace

GateCircuit circuit_from_json(const nlohmann::json& j) {
    GateCircuit c;
    c.num_ions = field<std::size_t>(j, "num_ions");
    const auto gates = j.find("gates");
    if (gates == j.end() || !gates->is_array()) throw InputError("field 'gates' must be an array");
    for (std::size_t k = 0; k < gates->size(); ++k) c.gates.push_back(gate_from_json((*gates)[k], k));
    c.validate();
    return c;
}

nlohmann::json to_json(const GateCircuit& circuit) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate& g : circuit.gates) {
        gates.push_back(std::visit(
            overloaded{
                [](const gate::Not& x) { return nlohmann::json{{"op", "NOT"}, {"ion", x.ion}}; },
                [](const gate::V& x) {
                    return nlohmann::json{{"op", "V"}, {"ion", x.ion}, {"theta", x.theta}, {"phi", x.phi}};
                },
                [](const gate::Csf& x) {
                    return nlohmann::json{{"op", "CSF"}, {"control", x.control}, {"target", x.target}};
                },
                [](const gate::Cnot& x) {
                    return nlohmann::json{{"op", "CNOT"}, {"control", x.control}, {"target", x.target}};
                },
                [](const gate::Ccnot& x) {
                    return nlohmann::json{{"op", "CCNOT"},
                                          {"controls", {x.control_a, x.control_b}},
                                          {"target", x.target}};
                }},
            g));
    }
    return {{"num_ions", circuit.num_ions}, {"gates", gates}};
}

nlohmann::json to_json(const PulseSchedule& schedule, const std::optional<LaserParams>& laser) {
    nlohmann::json pulses = nlohmann::json::array();
    for (const auto& p : schedule.pulses) {
        pulses.push_back(
            {{"kind", sim::to_string(p.kind)}, {"ion", p.ion}, {"theta", p.theta}, {"phi", p.phi}});
    }
    nlohmann::json out = {{"num_ions", schedule.shape.num_ions},
                          {"phonon_dim", schedule.shape.phonon_dim},
                          {"pulses", pulses},
                          {"u_pulse_count", count_u_pulses(schedule)},
                          {"gate_offsets", schedule.gate_offsets}};
    if (laser) {
        out["rabi_frequency"] = laser->rabi_frequency;
        out["lamb_dicke"] = laser->lamb_dicke;
        out["duration_s"] = schedule_duration(schedule, *laser);
        out["v_duration_s"] = v_pulse_duration(schedule, *laser);
    }
    return out;
}

PulseSchedule schedule_from_json(const nlohmann::json& j) {
    PulseSchedule s;
    s.shape.num_ions = field<std::size_t>(j, "num_ions");
    s.shape.phonon_dim = detail::field_or<std::size_t>(j, "phonon_dim", 2);
    s.shape.validate();
    const auto pulses = j.find("pulses");
    if (pulses == j.end() || !pulses->is_array()) throw InputError("field 'pulses' must be an array");
    for (std::size_t k = 0; k < pulses->size(); ++k) {
        const auto& p = (*pulses)[k];
        try {
            Pulse pulse{sim::pulse_kind_from_string(field<std::string>(p, "kind")),
                        field<std::size_t>(p, "ion"), field<double>(p, "theta"),
                        field<double>(p, "phi")};
            if (pulse.ion >= s.shape.num_ions) throw InputError("field 'ion' out of range");
            s.pulses.push_back(pulse);
        } catch (const InputError& e) {
            throw InputError("pulses[" + std::to_string(k) + "]: " + e.what());
        }
    }
    if (j.contains("gate_offsets")) {
        s.gate_offsets = field<std::vector<std::size_t>>(j, "gate_offsets");
        if (s.gate_offsets.empty() || s.gate_offsets.back() != s.pulses.size()) {
            throw InputError("field 'gate_offsets' is inconsistent with 'pulses'");
        }
    } else {
        s.gate_offsets = {0, s.pulses.size()};
    }
    if (j.contains("u_pulse_count") && field<std::size_t>(j, "u_pulse_count") != count_u_pulses(s)) {
        throw InputError("field 'u_pulse_count' does not match the pulse list");
    }
    return s;
}

}  // namespace trapion::pulse
