#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "trapion/rng.hpp"

namespace trapion::sim {

using Amplitude = std::complex<double>;

// Dense row-major square matrix acting on a few qubits.
struct GateMatrix {
    std::size_t dim = 0;
    std::vector<Amplitude> data;

    GateMatrix() = default;
    GateMatrix(std::size_t d, std::vector<Amplitude> entries);
    static GateMatrix identity(std::size_t d);

    Amplitude operator()(std::size_t row, std::size_t col) const { return data[row * dim + col]; }
    Amplitude& operator()(std::size_t row, std::size_t col) { return data[row * dim + col]; }

    GateMatrix operator*(const GateMatrix& rhs) const;
    GateMatrix adjoint() const;
    // max |(U^dagger U - I)_{ij}|
    double unitarity_error() const;
};

GateMatrix not_matrix();
GateMatrix cnot_matrix();
GateMatrix ccnot_matrix();
GateMatrix csf_matrix();
// Same rotation as the carrier pulse V(theta, phi) restricted to {|0>, |1>}.
GateMatrix v_matrix(double theta, double phi);
GateMatrix hadamard_matrix();
// diag(1, 1, 1, e^{i angle})
GateMatrix controlled_phase_matrix(double angle);

// Gate-level backend: n qubits, no aux level, no phonon.
// Basis index has qubit 0 as the most significant bit.
class QubitState {
public:
    explicit QubitState(std::size_t num_qubits);
    static QubitState basis(std::size_t num_qubits, std::size_t index);
    static QubitState from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> amplitudes() { return amplitudes_; }
    double norm() const;
    // Bit mask of qubit q inside a basis index.
    std::size_t mask(std::size_t qubit) const { return std::size_t{1} << (num_qubits_ - 1 - qubit); }

private:
    std::size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

inline constexpr double kUnitarityTolerance = 1e-10;

// targets[0] maps to the most significant bit of the matrix index.
void apply_qubit_gate(QubitState& state, std::span<const std::size_t> targets,
                      const GateMatrix& matrix);

// Samples all qubits and collapses. Returns the basis index observed.
std::size_t measure_all(QubitState& state, Rng& rng);

double fidelity_up_to_global_phase(const QubitState& a, const QubitState& b);

std::string bitstring(std::size_t index, std::size_t width);

}  // namespace trapion::sim
