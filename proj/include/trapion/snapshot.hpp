#pragma once

#include <json.hpp>

#include "trapion/qubit_state.hpp"
#include "trapion/state_vector.hpp"

namespace trapion::sim {

// { "num_ions": L, "phonon_dim": d, "amplitudes": [[re, im], ...] }
// in the normative index order.
nlohmann::json to_json(const StateVector& state);
StateVector state_from_json(const nlohmann::json& j);

// { "num_qubits": n, "amplitudes": [[re, im], ...] }
nlohmann::json to_json(const QubitState& state);
QubitState qubit_state_from_json(const nlohmann::json& j);

}  // namespace trapion::sim
