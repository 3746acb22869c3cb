#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "trapion/qubit_state.hpp"
#include "trapion/state_vector.hpp"

namespace trapion::pulse {

using sim::Pulse;
using sim::PulseKind;
using sim::RegisterShape;

namespace gate {
struct Not {
    std::size_t ion;
};
struct V {
    std::size_t ion;
    double theta;
    double phi;
};
struct Csf {
    std::size_t control;
    std::size_t target;
};
struct Cnot {
    std::size_t control;
    std::size_t target;
};
struct Ccnot {
    std::size_t control_a;
    std::size_t control_b;
    std::size_t target;
};
}  // namespace gate

using Gate = std::variant<gate::Not, gate::V, gate::Csf, gate::Cnot, gate::Ccnot>;

std::string gate_name(const Gate& g);
std::vector<std::size_t> gate_ions(const Gate& g);

struct GateCircuit {
    std::size_t num_ions = 1;
    std::vector<Gate> gates;

    // Throws IndexOutOfRange / InputError on bad or repeated indices.
    void validate() const;
};

struct LaserParams {
    double rabi_frequency = 1e8;  // rad/s
    double lamb_dicke = 0.1;
    std::size_t num_ions = 1;

    void validate() const;
};

struct PulseSchedule {
    RegisterShape shape;
    std::vector<Pulse> pulses;
    // gate_offsets[g] is the first pulse of gate g; back() == pulses.size().
    std::vector<std::size_t> gate_offsets;

    std::size_t num_gates() const { return gate_offsets.empty() ? 0 : gate_offsets.size() - 1; }
};

// Operator products are written right-to-left; the schedule lists pulses in
// the order they are applied.
//   CSF_ct   = U_c(pi,0) UAux_t(2pi,0) U_c(pi,0)
//   CNOT_ct  = V_t(pi/2,pi/2) CSF_ct V_t(pi/2,-pi/2)                 (exact)
//   NOT_m    = V_m(pi,0)                                           (= -i X)
//   CCNOT    = V_t(pi/2,pi/2) CCZ V_t(pi/2,-pi/2), CCZ from six CNOTs and
//              seven pi/4 phase gates, each phase gate a pair of V(pi) pulses.
PulseSchedule compile(const GateCircuit& circuit, std::size_t phonon_dim = 2);

std::size_t count_u_pulses(const PulseSchedule& schedule);

// A U pulse of area theta lasts |theta| sqrt(L) / (eta Omega). V pulses are
// not counted.
double schedule_duration(const PulseSchedule& schedule, const LaserParams& laser);
// Diagnostic only: total V-pulse time |theta| / Omega.
double v_pulse_duration(const PulseSchedule& schedule, const LaserParams& laser);

void execute(const PulseSchedule& schedule, sim::StateVector& state);
void execute_gate(const PulseSchedule& schedule, std::size_t gate_index, sim::StateVector& state);

// Gate-level reference execution on the qubit backend.
sim::GateMatrix gate_matrix(const Gate& g);
void apply_gate(sim::QubitState& state, const Gate& g);
sim::QubitState run_gate_level(const GateCircuit& circuit);
sim::QubitState run_gate_level(const GateCircuit& circuit, sim::QubitState initial);

// Bridges between the two backends. project_to_qubits keeps only the
// amplitudes with every ion in {Zero, One} and the phonon in Fock 0.
sim::StateVector embed_qubits(const sim::QubitState& q, std::size_t phonon_dim = 2);
sim::QubitState project_to_qubits(const sim::StateVector& state);

}  // namespace trapion::pulse
