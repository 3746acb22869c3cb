#include "trapion/pulse_compiler.hpp"

#include <cmath>
#include <numbers>

#include "trapion/errors.hpp"

namespace trapion::pulse {

namespace {

using std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

class Lowering {
public:
    explicit Lowering(std::vector<Pulse>& out) : out_(out) {}

    void v(std::size_t ion, double theta, double phi) {
        out_.push_back({PulseKind::V, ion, theta, phi});
    }

    void csf(std::size_t c, std::size_t t) {
        out_.push_back({PulseKind::U, c, pi, 0.0});
        out_.push_back({PulseKind::UAux, t, 2.0 * pi, 0.0});
        out_.push_back({PulseKind::U, c, pi, 0.0});
    }

    void cnot(std::size_t c, std::size_t t) {
        v(t, pi / 2, -pi / 2);
        csf(c, t);
        v(t, pi / 2, pi / 2);
    }

    // diag(1, e^{i angle}) up to the global phase -e^{-i angle/2}.
    void phase(std::size_t ion, double angle) {
        v(ion, pi, 0.0);
        v(ion, pi, angle / 2);
    }

    void ccz(std::size_t a, std::size_t b, std::size_t t) {
        const double q = pi / 4;
        cnot(b, t);
        phase(t, -q);
        cnot(a, t);
        phase(t, q);
        cnot(b, t);
        phase(t, -q);
        cnot(a, t);
        phase(b, q);
        phase(t, q);
        cnot(a, b);
        phase(a, q);
        phase(b, -q);
        cnot(a, b);
    }

    void ccnot(std::size_t a, std::size_t b, std::size_t t) {
        v(t, pi / 2, -pi / 2);
        ccz(a, b, t);
        v(t, pi / 2, pi / 2);
    }

private:
    std::vector<Pulse>& out_;
};

}  // namespace

std::string gate_name(const Gate& g) {
    return std::visit(overloaded{[](const gate::Not&) { return std::string("NOT"); },
                                 [](const gate::V&) { return std::string("V"); },
                                 [](const gate::Csf&) { return std::string("CSF"); },
                                 [](const gate::Cnot&) { return std::string("CNOT"); },
                                 [](const gate::Ccnot&) { return std::string("CCNOT"); }},
                      g);
}

std::vector<std::size_t> gate_ions(const Gate& g) {
    return std::visit(
        overloaded{[](const gate::Not& x) { return std::vector<std::size_t>{x.ion}; },
                   [](const gate::V& x) { return std::vector<std::size_t>{x.ion}; },
                   [](const gate::Csf& x) { return std::vector<std::size_t>{x.control, x.target}; },
                   [](const gate::Cnot& x) { return std::vector<std::size_t>{x.control, x.target}; },
                   [](const gate::Ccnot& x) {
                       return std::vector<std::size_t>{x.control_a, x.control_b, x.target};
                   }},
        g);
}

void GateCircuit::validate() const {
    if (num_ions < 1) throw InputError("num_ions must be >= 1");
    for (std::size_t k = 0; k < gates.size(); ++k) {
        const auto ions = gate_ions(gates[k]);
        for (std::size_t i = 0; i < ions.size(); ++i) {
            if (ions[i] >= num_ions) {
                throw IndexOutOfRange("gate " + std::to_string(k) + " (" + gate_name(gates[k]) +
                                      ") uses ion " + std::to_string(ions[i]) + " but num_ions is " +
                                      std::to_string(num_ions));
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (ions[i] == ions[j]) {
                    throw IndexOutOfRange("gate " + std::to_string(k) + " (" + gate_name(gates[k]) +
                                          ") repeats ion " + std::to_string(ions[i]));
                }
            }
        }
        if (const auto* v = std::get_if<gate::V>(&gates[k])) {
            if (!std::isfinite(v->theta) || !std::isfinite(v->phi)) {
                throw InputError("gate " + std::to_string(k) + " (V) has non-finite angles");
            }
        }
    }
}

void LaserParams::validate() const {
    if (!(rabi_frequency > 0.0) || !std::isfinite(rabi_frequency)) {
        throw InputError("rabi_frequency must be positive");
    }
    if (!(lamb_dicke > 0.0 && lamb_dicke < 1.0)) throw InputError("lamb_dicke must be in (0, 1)");
    if (num_ions < 1) throw InputError("num_ions must be >= 1");
}

PulseSchedule compile(const GateCircuit& circuit, std::size_t phonon_dim) {
    circuit.validate();
    PulseSchedule schedule;
    schedule.shape = RegisterShape{circuit.num_ions, phonon_dim};
    if (phonon_dim < 2) throw InputError("phonon_dim must be >= 2");
    Lowering lower(schedule.pulses);
    for (const Gate& g : circuit.gates) {
        schedule.gate_offsets.push_back(schedule.pulses.size());
        std::visit(overloaded{[&](const gate::Not& x) { lower.v(x.ion, pi, 0.0); },
                              [&](const gate::V& x) { lower.v(x.ion, x.theta, x.phi); },
                              [&](const gate::Csf& x) { lower.csf(x.control, x.target); },
                              [&](const gate::Cnot& x) { lower.cnot(x.control, x.target); },
                              [&](const gate::Ccnot& x) {
                                  lower.ccnot(x.control_a, x.control_b, x.target);
                              }},
                   g);
    }
    schedule.gate_offsets.push_back(schedule.pulses.size());
    return schedule;
}

std::size_t count_u_pulses(const PulseSchedule& schedule) {
    std::size_t n = 0;
    for (const auto& p : schedule.pulses) {
        if (p.kind != PulseKind::V) ++n;
    }
    return n;
}

double schedule_duration(const PulseSchedule& schedule, const LaserParams& laser) {
    laser.validate();
    if (laser.num_ions != schedule.shape.num_ions) {
        throw ShapeMismatch("laser num_ions does not match the schedule");
    }
    const double per_area =
        std::sqrt(static_cast<double>(laser.num_ions)) / (laser.lamb_dicke * laser.rabi_frequency);
    double t = 0.0;
    for (const auto& p : schedule.pulses) {
        if (p.kind != PulseKind::V) t += std::abs(p.theta) * per_area;
    }
    return t;
}

double v_pulse_duration(const PulseSchedule& schedule, const LaserParams& laser) {
    laser.validate();
    double t = 0.0;
    for (const auto& p : schedule.pulses) {
        if (p.kind == PulseKind::V) t += std::abs(p.theta) / laser.rabi_frequency;
    }
    return t;
}

void execute(const PulseSchedule& schedule, sim::StateVector& state) {
    if (state.shape() != schedule.shape) throw ShapeMismatch("schedule and state shapes differ");
    for (const auto& p : schedule.pulses) sim::apply_pulse(state, p);
}

void execute_gate(const PulseSchedule& schedule, std::size_t gate_index, sim::StateVector& state) {
    if (state.shape() != schedule.shape) throw ShapeMismatch("schedule and state shapes differ");
    if (gate_index >= schedule.num_gates()) throw IndexOutOfRange("gate index out of range");
    for (std::size_t i = schedule.gate_offsets[gate_index];
         i < schedule.gate_offsets[gate_index + 1]; ++i) {
        sim::apply_pulse(state, schedule.pulses[i]);
    }
}

sim::GateMatrix gate_matrix(const Gate& g) {
    return std::visit(overloaded{[](const gate::Not&) { return sim::not_matrix(); },
                                 [](const gate::V& x) { return sim::v_matrix(x.theta, x.phi); },
                                 [](const gate::Csf&) { return sim::csf_matrix(); },
                                 [](const gate::Cnot&) { return sim::cnot_matrix(); },
                                 [](const gate::Ccnot&) { return sim::ccnot_matrix(); }},
                      g);
}

void apply_gate(sim::QubitState& state, const Gate& g) {
    const auto ions = gate_ions(g);
    sim::apply_qubit_gate(state, ions, gate_matrix(g));
}

sim::QubitState run_gate_level(const GateCircuit& circuit) {
    return run_gate_level(circuit, sim::QubitState(circuit.num_ions));
}

sim::QubitState run_gate_level(const GateCircuit& circuit, sim::QubitState initial) {
    circuit.validate();
    if (initial.num_qubits() != circuit.num_ions) {
        throw ShapeMismatch("initial state qubit count does not match the circuit");
    }
    for (const Gate& g : circuit.gates) apply_gate(initial, g);
    return initial;
}

sim::StateVector embed_qubits(const sim::QubitState& q, std::size_t phonon_dim) {
    const std::size_t n = q.num_qubits();
    sim::StateVector out(RegisterShape{n, phonon_dim});
    auto dst = out.amplitudes();
    dst[0] = 0.0;
    const auto src = q.amplitudes();
    std::vector<sim::IonLevel> levels(n);
    for (std::size_t idx = 0; idx < src.size(); ++idx) {
        for (std::size_t i = 0; i < n; ++i) {
            levels[i] = (idx & q.mask(i)) ? sim::IonLevel::One : sim::IonLevel::Zero;
        }
        dst[out.shape().index(levels, 0)] = src[idx];
    }
    return out;
}

sim::QubitState project_to_qubits(const sim::StateVector& state) {
    const std::size_t n = state.shape().num_ions;
    sim::QubitState out(n);
    auto dst = out.amplitudes();
    std::vector<sim::IonLevel> levels(n);
    for (std::size_t idx = 0; idx < dst.size(); ++idx) {
        for (std::size_t i = 0; i < n; ++i) {
            levels[i] = (idx & out.mask(i)) ? sim::IonLevel::One : sim::IonLevel::Zero;
        }
        dst[idx] = state.amplitude(levels, 0);
    }
    return out;
}

}  // namespace trapion::pulse
