#include "trapion/qubit_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "trapion/errors.hpp"

namespace trapion::sim {

namespace {

constexpr Amplitude kI{0.0, 1.0};

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

GateMatrix permutation_matrix(std::size_t dim, std::size_t a, std::size_t b) {
    GateMatrix m = GateMatrix::identity(dim);
    m(a, a) = 0.0;
    m(b, b) = 0.0;
    m(a, b) = 1.0;
    m(b, a) = 1.0;
    return m;
}

}  // namespace

GateMatrix::GateMatrix(std::size_t d, std::vector<Amplitude> entries)
    : dim(d), data(std::move(entries)) {
    if (data.size() != dim * dim) throw InputError("gate matrix entry count does not match dim");
}

GateMatrix GateMatrix::identity(std::size_t d) {
    GateMatrix m(d, std::vector<Amplitude>(d * d));
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

GateMatrix GateMatrix::operator*(const GateMatrix& rhs) const {
    if (dim != rhs.dim) throw ShapeMismatch("matrix product dimension mismatch");
    GateMatrix out(dim, std::vector<Amplitude>(dim * dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t j = 0; j < dim; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
    return out;
}

GateMatrix GateMatrix::adjoint() const {
    GateMatrix out(dim, std::vector<Amplitude>(dim * dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double GateMatrix::unitarity_error() const {
    const GateMatrix p = adjoint() * (*this);
    double err = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            err = std::max(err, std::abs(p(i, j) - (i == j ? 1.0 : 0.0)));
    return err;
}

GateMatrix not_matrix() { return permutation_matrix(2, 0, 1); }
GateMatrix cnot_matrix() { return permutation_matrix(4, 2, 3); }
GateMatrix ccnot_matrix() { return permutation_matrix(8, 6, 7); }

GateMatrix csf_matrix() {
    GateMatrix m = GateMatrix::identity(4);
    m(3, 3) = -1.0;
    return m;
}

GateMatrix v_matrix(double theta, double phi) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    // Column j is the image of |j>.
    return GateMatrix(2, {c, -kI * std::polar(1.0, -phi) * s,
                          -kI * std::polar(1.0, phi) * s, c});
}

GateMatrix hadamard_matrix() {
    const double h = std::numbers::sqrt2 / 2.0;
    return GateMatrix(2, {h, h, h, -h});
}

GateMatrix controlled_phase_matrix(double angle) {
    GateMatrix m = GateMatrix::identity(4);
    m(3, 3) = std::polar(1.0, angle);
    return m;
}

QubitState::QubitState(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > 30) throw InputError("num_qubits must be in [1, 30]");
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{});
    amplitudes_[0] = 1.0;
}

QubitState QubitState::basis(std::size_t num_qubits, std::size_t index) {
    QubitState s(num_qubits);
    if (index >= s.amplitudes_.size()) throw IndexOutOfRange("basis index out of range");
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

QubitState QubitState::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (!is_power_of_two(amplitudes.size()) || amplitudes.size() < 2) {
        throw ShapeMismatch("amplitude count must be a power of two >= 2");
    }
    QubitState s(static_cast<std::size_t>(std::countr_zero(amplitudes.size())));
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

double QubitState::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

void apply_qubit_gate(QubitState& state, std::span<const std::size_t> targets,
                      const GateMatrix& matrix) {
    const std::size_t k = targets.size();
    if (k == 0 || matrix.dim != (std::size_t{1} << k)) {
        throw BadTargets("matrix dimension does not match " + std::to_string(k) + " targets");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (targets[i] >= state.num_qubits()) {
            throw BadTargets("target " + std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) throw BadTargets("duplicate target qubits");
        }
    }
    if (matrix.unitarity_error() > kUnitarityTolerance) {
        throw NonUnitaryMatrix("gate matrix is not unitary");
    }

    std::vector<std::size_t> masks(k);
    std::size_t all = 0;
    for (std::size_t i = 0; i < k; ++i) {
        masks[i] = state.mask(targets[i]);
        all |= masks[i];
    }
    const std::size_t dim = matrix.dim;
    // offsets[j] = basis offset for local index j (targets[0] is the MSB).
    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            if (j & (std::size_t{1} << (k - 1 - i))) offsets[j] |= masks[i];
        }
    }

    auto amps = state.amplitudes();
    std::vector<Amplitude> in(dim);
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & all) continue;
        for (std::size_t j = 0; j < dim; ++j) in[j] = amps[base | offsets[j]];
        for (std::size_t r = 0; r < dim; ++r) {
            Amplitude acc{};
            for (std::size_t c = 0; c < dim; ++c) acc += matrix(r, c) * in[c];
            amps[base | offsets[r]] = acc;
        }
    }
}

std::size_t measure_all(QubitState& state, Rng& rng) {
    auto amps = state.amplitudes();
    double total = 0.0;
    for (const auto& a : amps) total += std::norm(a);
    const double r = rng.uniform() * total;
    double acc = 0.0;
    std::size_t chosen = amps.size() - 1;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        if (r < acc && std::norm(amps[i]) > 0.0) {
            chosen = i;
            break;
        }
    }
    while (std::norm(amps[chosen]) == 0.0 && chosen > 0) --chosen;
    const Amplitude phase = amps[chosen] / std::abs(amps[chosen]);
    std::fill(amps.begin(), amps.end(), Amplitude{});
    amps[chosen] = phase;
    return chosen;
}

double fidelity_up_to_global_phase(const QubitState& a, const QubitState& b) {
    if (a.num_qubits() != b.num_qubits()) throw ShapeMismatch("qubit count mismatch");
    Amplitude overlap{};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) overlap += std::conj(x[i]) * y[i];
    return std::min(1.0, std::norm(overlap));
}

std::string bitstring(std::size_t index, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if (index & (std::size_t{1} << (width - 1 - i))) s[i] = '1';
    }
    return s;
}

}  // namespace trapion::sim
