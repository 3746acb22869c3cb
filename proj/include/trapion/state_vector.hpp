#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trapion/rng.hpp"

namespace trapion::sim {

using Amplitude = std::complex<double>;

enum class IonLevel : std::uint8_t { Zero = 0, One = 1, Aux = 2 };

inline constexpr std::size_t kIonLevels = 3;
inline constexpr std::size_t kDefaultMaxEntries = std::size_t{1} << 26;
inline constexpr double kDefaultLeakageTolerance = 1e-9;

// L three-level ions sharing one truncated phonon mode.
//
// Global basis index = (ion-level word in base 3, ion 0 most significant) * d
//                      + phonon occupation number.
// Every serialized state and golden file uses this order.
struct RegisterShape {
    std::size_t num_ions = 1;
    std::size_t phonon_dim = 2;

    // Throws InputError for L < 1 or d < 2, DimensionOverflow past max_entries.
    void validate(std::size_t max_entries = kDefaultMaxEntries) const;

    std::size_t dimension() const;
    // Distance in the global index between ion m at level k and level k + 1.
    std::size_t ion_stride(std::size_t ion) const;
    std::size_t index(std::span<const IonLevel> levels, std::size_t fock) const;
    IonLevel level_of(std::size_t index, std::size_t ion) const;
    std::size_t fock_of(std::size_t index) const { return index % phonon_dim; }

    friend bool operator==(const RegisterShape&, const RegisterShape&) = default;
};

enum class PulseKind : std::uint8_t { V, U, UAux };

std::string to_string(PulseKind kind);
PulseKind pulse_kind_from_string(const std::string& name);

struct Pulse {
    PulseKind kind = PulseKind::V;
    std::size_t ion = 0;
    double theta = 0.0;
    double phi = 0.0;

    friend bool operator==(const Pulse&, const Pulse&) = default;
};

class StateVector {
public:
    // Ground state: every ion in Zero, phonon in Fock 0.
    explicit StateVector(RegisterShape shape, std::size_t max_entries = kDefaultMaxEntries);

    static StateVector basis(RegisterShape shape, std::span<const IonLevel> levels,
                             std::size_t fock = 0);
    static StateVector from_amplitudes(RegisterShape shape, std::vector<Amplitude> amplitudes);

    const RegisterShape& shape() const { return shape_; }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> amplitudes() { return amplitudes_; }
    Amplitude amplitude(std::span<const IonLevel> levels, std::size_t fock = 0) const;

    double leakage_tolerance() const { return leakage_tolerance_; }
    // Set to +infinity to run the truncated ladder without the leakage check.
    void set_leakage_tolerance(double tol) { leakage_tolerance_ = tol; }

    double norm() const;
    double population(std::size_t ion, IonLevel level) const;
    double phonon_population(std::size_t fock) const;
    double aux_population() const;

private:
    StateVector(RegisterShape shape, std::vector<Amplitude> amplitudes);

    RegisterShape shape_;
    std::vector<Amplitude> amplitudes_;
    double leakage_tolerance_ = kDefaultLeakageTolerance;
};

StateVector new_ground_state(RegisterShape shape, std::size_t max_entries = kDefaultMaxEntries);

// Carrier rotation on {|0>_m, |1>_m}:
//   |0> -> cos(theta/2)|0> - i e^{i phi} sin(theta/2)|1>
//   |1> -> cos(theta/2)|1> - i e^{-i phi} sin(theta/2)|0>
// Aux and the phonon are untouched.
void apply_v_pulse(StateVector& state, std::size_t ion, double theta, double phi);

// Red sideband |0>_m|n+1> <-> |1>_m|n>, rotation angle theta * sqrt(n + 1).
// theta is the pulse area of the n = 0 <-> 1 pair.
void apply_u_pulse(StateVector& state, std::size_t ion, double theta, double phi);

// Red sideband through the auxiliary level, |0>_m|n+1> <-> |aux>_m|n>.
void apply_uaux_pulse(StateVector& state, std::size_t ion, double theta, double phi);

void apply_pulse(StateVector& state, const Pulse& pulse);

struct Measurement {
    std::string bits;             // one char per ion, '0', '1', or '?' for Aux
    bool aux_leak = false;
    std::vector<IonLevel> levels;
};

// Projective fluorescence readout of every ion; the phonon is traced over.
// Collapses `state` in place.
Measurement measure_all(StateVector& state, Rng& rng);

// |<a|b>|^2, insensitive to a global phase.
double fidelity_up_to_global_phase(const StateVector& a, const StateVector& b);

}  // namespace trapion::sim
