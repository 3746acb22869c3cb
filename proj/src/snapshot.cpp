#include "trapion/snapshot.hpp"

#include "trapion/errors.hpp"
#include "trapion/json_fields.hpp"

namespace trapion::sim {

namespace {

nlohmann::json amplitudes_to_json(std::span<const Amplitude> amps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : amps) arr.push_back({a.real(), a.imag()});
    return arr;
}

std::vector<Amplitude> amplitudes_from_json(const nlohmann::json& j) {
    auto it = j.find("amplitudes");
    if (it == j.end() || !it->is_array()) throw InputError("field 'amplitudes' must be an array");
    std::vector<Amplitude> out;
    out.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& e = (*it)[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw InputError("field 'amplitudes[" + std::to_string(i) + "]' must be [re, im]");
        }
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const StateVector& state) {
    return {{"num_ions", state.shape().num_ions},
            {"phonon_dim", state.shape().phonon_dim},
            {"amplitudes", amplitudes_to_json(state.amplitudes())}};
}

StateVector state_from_json(const nlohmann::json& j) {
    RegisterShape shape{detail::field<std::size_t>(j, "num_ions"),
                        detail::field<std::size_t>(j, "phonon_dim")};
    return StateVector::from_amplitudes(shape, amplitudes_from_json(j));
}

nlohmann::json to_json(const QubitState& state) {
    return {{"num_qubits", state.num_qubits()},
            {"amplitudes", amplitudes_to_json(state.amplitudes())}};
}

QubitState qubit_state_from_json(const nlohmann::json& j) {
    const auto n = detail::field<std::size_t>(j, "num_qubits");
    auto amps = amplitudes_from_json(j);
    if (n == 0 || n > 30 || amps.size() != (std::size_t{1} << n)) {
        throw InputError("field 'amplitudes' length does not match num_qubits");
    }
    return QubitState::from_amplitudes(std::move(amps));
}

}  // namespace trapion::sim
