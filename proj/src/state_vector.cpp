#include "trapion/state_vector.hpp"

#include <algorithm>
#include <cmath>

#include "trapion/errors.hpp"

namespace trapion::sim {

namespace {

constexpr Amplitude kI{0.0, 1.0};

void check_ion(const RegisterShape& shape, std::size_t ion) {
    if (ion >= shape.num_ions) {
        throw IndexOutOfRange("ion index " + std::to_string(ion) + " out of range for " +
                              std::to_string(shape.num_ions) + " ions");
    }
}

void check_angles(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw InputError("pulse angles must be finite");
    }
}

// In-place 2x2 rotation of the form shared by all three pulse kinds:
//   lo' = c lo - i e^{-i phi} s hi
//   hi' = c hi - i e^{+i phi} s lo
inline void rotate_pair(Amplitude& lo, Amplitude& hi, double c, double s, Amplitude phase) {
    const Amplitude a = lo;
    const Amplitude b = hi;
    lo = c * a - kI * std::conj(phase) * s * b;
    hi = c * b - kI * phase * s * a;
}

// Shared sideband ladder: couples (|lower>_m |n+1>) with (|upper>_m |n>).
void apply_sideband(StateVector& state, std::size_t ion, double theta, double phi,
                    IonLevel upper, const char* name) {
    const RegisterShape& shape = state.shape();
    check_ion(shape, ion);
    check_angles(theta, phi);
    const std::size_t d = shape.phonon_dim;
    const std::size_t stride = shape.ion_stride(ion);
    const std::size_t offset = static_cast<std::size_t>(upper) * stride;
    auto amps = state.amplitudes();

    // |upper>_m |d-1> would couple to Fock d, which is not simulated.
    if (theta != 0.0) {
        double edge = 0.0;
        for (std::size_t i = 0; i < amps.size(); i += d) {
            if (shape.level_of(i, ion) == upper) {
                edge += std::norm(amps[i + d - 1]);
            }
        }
        if (edge > state.leakage_tolerance()) {
            throw TruncationLeakage(std::string(name) + " pulse on ion " + std::to_string(ion) +
                                    " would leak population " + std::to_string(edge) +
                                    " past phonon_dim " + std::to_string(d));
        }
    }

    const Amplitude phase = std::polar(1.0, phi);
    std::vector<double> cos_n(d - 1);
    std::vector<double> sin_n(d - 1);
    for (std::size_t n = 0; n + 1 < d; ++n) {
        const double half = 0.5 * theta * std::sqrt(static_cast<double>(n + 1));
        cos_n[n] = std::cos(half);
        sin_n[n] = std::sin(half);
    }
    for (std::size_t base = 0; base < amps.size(); base += d) {
        if (shape.level_of(base, ion) != IonLevel::Zero) continue;
        for (std::size_t n = 0; n + 1 < d; ++n) {
            rotate_pair(amps[base + n + 1], amps[base + offset + n], cos_n[n], sin_n[n], phase);
        }
    }
}

}  // namespace

void RegisterShape::validate(std::size_t max_entries) const {
    if (num_ions < 1) throw InputError("num_ions must be >= 1");
    if (phonon_dim < 2) throw InputError("phonon_dim must be >= 2");
    std::size_t dim = phonon_dim;
    for (std::size_t i = 0; i < num_ions; ++i) {
        if (dim > max_entries / kIonLevels) {
            throw DimensionOverflow("3^" + std::to_string(num_ions) + " * " +
                                    std::to_string(phonon_dim) + " exceeds " +
                                    std::to_string(max_entries) + " amplitudes");
        }
        dim *= kIonLevels;
    }
    if (dim > max_entries) {
        throw DimensionOverflow("state dimension exceeds " + std::to_string(max_entries));
    }
}

std::size_t RegisterShape::dimension() const {
    return ion_stride(0) * kIonLevels;
}

std::size_t RegisterShape::ion_stride(std::size_t ion) const {
    std::size_t stride = phonon_dim;
    for (std::size_t i = ion + 1; i < num_ions; ++i) stride *= kIonLevels;
    return stride;
}

std::size_t RegisterShape::index(std::span<const IonLevel> levels, std::size_t fock) const {
    if (levels.size() != num_ions) {
        throw ShapeMismatch("expected " + std::to_string(num_ions) + " ion levels, got " +
                            std::to_string(levels.size()));
    }
    if (fock >= phonon_dim) throw IndexOutOfRange("Fock index out of range");
    std::size_t word = 0;
    for (IonLevel l : levels) word = word * kIonLevels + static_cast<std::size_t>(l);
    return word * phonon_dim + fock;
}

IonLevel RegisterShape::level_of(std::size_t index, std::size_t ion) const {
    return static_cast<IonLevel>((index / ion_stride(ion)) % kIonLevels);
}

std::string to_string(PulseKind kind) {
    switch (kind) {
        case PulseKind::V: return "V";
        case PulseKind::U: return "U";
        case PulseKind::UAux: return "UAux";
    }
    return "?";
}

PulseKind pulse_kind_from_string(const std::string& name) {
    if (name == "V") return PulseKind::V;
    if (name == "U") return PulseKind::U;
    if (name == "UAux" || name == "UAUX" || name == "Uaux") return PulseKind::UAux;
    throw InputError("unknown pulse kind '" + name + "'");
}

StateVector::StateVector(RegisterShape shape, std::size_t max_entries) : shape_(shape) {
    shape_.validate(max_entries);
    amplitudes_.assign(shape_.dimension(), Amplitude{});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(RegisterShape shape, std::vector<Amplitude> amplitudes)
    : shape_(shape), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis(RegisterShape shape, std::span<const IonLevel> levels,
                               std::size_t fock) {
    StateVector s(shape);
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[shape.index(levels, fock)] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(RegisterShape shape, std::vector<Amplitude> amplitudes) {
    shape.validate();
    if (amplitudes.size() != shape.dimension()) {
        throw ShapeMismatch("expected " + std::to_string(shape.dimension()) +
                            " amplitudes, got " + std::to_string(amplitudes.size()));
    }
    return StateVector(shape, std::move(amplitudes));
}

Amplitude StateVector::amplitude(std::span<const IonLevel> levels, std::size_t fock) const {
    return amplitudes_[shape_.index(levels, fock)];
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

double StateVector::population(std::size_t ion, IonLevel level) const {
    check_ion(shape_, ion);
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (shape_.level_of(i, ion) == level) p += std::norm(amplitudes_[i]);
    }
    return p;
}

double StateVector::phonon_population(std::size_t fock) const {
    if (fock >= shape_.phonon_dim) return 0.0;
    double p = 0.0;
    for (std::size_t i = fock; i < amplitudes_.size(); i += shape_.phonon_dim) {
        p += std::norm(amplitudes_[i]);
    }
    return p;
}

double StateVector::aux_population() const {
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        for (std::size_t ion = 0; ion < shape_.num_ions; ++ion) {
            if (shape_.level_of(i, ion) == IonLevel::Aux) {
                p += std::norm(amplitudes_[i]);
                break;
            }
        }
    }
    return p;
}

StateVector new_ground_state(RegisterShape shape, std::size_t max_entries) {
    return StateVector(shape, max_entries);
}

void apply_v_pulse(StateVector& state, std::size_t ion, double theta, double phi) {
    const RegisterShape& shape = state.shape();
    check_ion(shape, ion);
    check_angles(theta, phi);
    const std::size_t stride = shape.ion_stride(ion);
    const std::size_t block = stride * kIonLevels;
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Amplitude phase = std::polar(1.0, phi);
    auto amps = state.amplitudes();
    for (std::size_t outer = 0; outer < amps.size(); outer += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            rotate_pair(amps[outer + inner], amps[outer + stride + inner], c, s, phase);
        }
    }
}

void apply_u_pulse(StateVector& state, std::size_t ion, double theta, double phi) {
    apply_sideband(state, ion, theta, phi, IonLevel::One, "U");
}

void apply_uaux_pulse(StateVector& state, std::size_t ion, double theta, double phi) {
    apply_sideband(state, ion, theta, phi, IonLevel::Aux, "UAux");
}

void apply_pulse(StateVector& state, const Pulse& pulse) {
    switch (pulse.kind) {
        case PulseKind::V: apply_v_pulse(state, pulse.ion, pulse.theta, pulse.phi); break;
        case PulseKind::U: apply_u_pulse(state, pulse.ion, pulse.theta, pulse.phi); break;
        case PulseKind::UAux: apply_uaux_pulse(state, pulse.ion, pulse.theta, pulse.phi); break;
    }
}

Measurement measure_all(StateVector& state, Rng& rng) {
    const RegisterShape& shape = state.shape();
    auto amps = state.amplitudes();
    const std::size_t d = shape.phonon_dim;
    const std::size_t words = amps.size() / d;

    std::vector<double> word_prob(words, 0.0);
    double total = 0.0;
    for (std::size_t w = 0; w < words; ++w) {
        for (std::size_t n = 0; n < d; ++n) word_prob[w] += std::norm(amps[w * d + n]);
        total += word_prob[w];
    }

    const double r = rng.uniform() * total;
    double acc = 0.0;
    std::size_t chosen = words - 1;
    for (std::size_t w = 0; w < words; ++w) {
        acc += word_prob[w];
        if (r < acc && word_prob[w] > 0.0) {
            chosen = w;
            break;
        }
    }
    while (word_prob[chosen] == 0.0 && chosen > 0) --chosen;

    Measurement m;
    m.levels.resize(shape.num_ions);
    m.bits.resize(shape.num_ions);
    for (std::size_t ion = 0; ion < shape.num_ions; ++ion) {
        const IonLevel level = shape.level_of(chosen * d, ion);
        m.levels[ion] = level;
        switch (level) {
            case IonLevel::Zero: m.bits[ion] = '0'; break;
            case IonLevel::One: m.bits[ion] = '1'; break;
            case IonLevel::Aux:
                m.bits[ion] = '?';
                m.aux_leak = true;
                break;
        }
    }

    const double scale = 1.0 / std::sqrt(word_prob[chosen]);
    for (std::size_t w = 0; w < words; ++w) {
        for (std::size_t n = 0; n < d; ++n) {
            auto& a = amps[w * d + n];
            a = (w == chosen) ? a * scale : Amplitude{};
        }
    }
    return m;
}

double fidelity_up_to_global_phase(const StateVector& a, const StateVector& b) {
    if (a.shape() != b.shape()) throw ShapeMismatch("fidelity of states with different shapes");
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    Amplitude overlap{};
    for (std::size_t i = 0; i < x.size(); ++i) overlap += std::conj(x[i]) * y[i];
    return std::min(1.0, std::norm(overlap));
}

}  // namespace trapion::sim
