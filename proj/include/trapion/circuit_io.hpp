#pragma once

#include <optional>

#include <json.hpp>

#include "trapion/pulse_compiler.hpp"

namespace trapion::pulse {

// Circuit file:
//   { "num_ions": L, "gates": [ {"op":"CNOT","control":0,"target":1},
//                               {"op":"V","ion":0,"theta":..,"phi":..},
//                               {"op":"NOT","ion":0},
//                               {"op":"CSF","control":0,"target":1},
//                               {"op":"CCNOT","controls":[0,1],"target":2} ] }
GateCircuit circuit_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GateCircuit& circuit);

// Schedule file:
//   { "num_ions": L, "phonon_dim": d,
//     "pulses": [ {"kind":"U","ion":0,"theta":3.14159265,"phi":0.0}, ... ],
//     "u_pulse_count": n, "gate_offsets": [...] }
// plus "duration_s" / "v_duration_s" when laser parameters are given.
nlohmann::json to_json(const PulseSchedule& schedule,
                       const std::optional<LaserParams>& laser = std::nullopt);
PulseSchedule schedule_from_json(const nlohmann::json& j);

}  // namespace trapion::pulse
