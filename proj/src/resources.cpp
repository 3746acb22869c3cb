#include "trapion/resources.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "trapion/errors.hpp"

namespace trapion::resources {

namespace {

double gnfs_exponent(double bits) {
    return std::cbrt(bits) * std::pow(std::log(bits), 2.0 / 3.0);
}

// 96 l^3 overflows 64 bits past this size.
constexpr std::uint64_t kMaxBits = 500'000;

void check_bits(std::uint64_t bits) {
    if (bits > kMaxBits) throw InputError("modulus size beyond " + std::to_string(kMaxBits) + " bits");
}

}  // namespace

double gnfs_mips_years(double bits, const GnfsModel& model) {
    if (!(bits >= 64.0)) throw InputError("GNFS model requires bits >= 64");
    return model.calibration_mips_years *
           std::exp(model.coefficient * (gnfs_exponent(bits) - gnfs_exponent(model.calibration_bits)));
}

void AttackScenario::validate() const {
    if (year < base_year) throw InputError("year precedes the base year");
    if (!(workstations > 0.0) || !(mips_per_workstation > 0.0) || !(doubling_months > 0.0)) {
        throw InputError("workstations, MIPS rating and doubling time must be positive");
    }
}

double wall_clock_years(double bits, const AttackScenario& scenario, const GnfsModel& model) {
    scenario.validate();
    const double doublings = (scenario.year - scenario.base_year) * 12.0 / scenario.doubling_months;
    const double fleet_mips =
        scenario.workstations * scenario.mips_per_workstation * std::exp2(doublings);
    return gnfs_mips_years(bits, model) / fleet_mips;
}

std::uint64_t qubits_for_bits(std::uint64_t bits) {
    check_bits(bits);
    return 5 * bits + 4;
}

std::uint64_t gates_for_bits(std::uint64_t bits) {
    check_bits(bits);
    return 25 * bits * bits * bits;
}

std::uint64_t u_pulses_for_bits(std::uint64_t bits) {
    check_bits(bits);
    return 96 * bits * bits * bits;
}

ResourceEstimate shor_resources(std::uint64_t bits, double clock_hz) {
    if (bits < 2) throw InputError("shor_resources requires bits >= 2");
    if (!(clock_hz > 0.0)) throw InputError("clock frequency must be positive");
    ResourceEstimate r;
    r.bits = bits;
    r.qubits = qubits_for_bits(bits);
    r.gates = gates_for_bits(bits);
    r.u_pulses = u_pulses_for_bits(bits);
    r.clock_hz = clock_hz;
    r.quantum_time_s = static_cast<double>(r.gates) / clock_hz;
    return r;
}

double bits_for_quantum_time(double seconds, double clock_hz) {
    if (!(seconds > 0.0) || !(clock_hz > 0.0)) throw InputError("time and clock must be positive");
    auto excess = [&](double l) { return 25.0 * l * l * l / clock_hz - seconds; };
    double lo = 0.0;
    double hi = 1.0;
    while (excess(hi) < 0.0) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::string to_string(QubitKind kind) {
    return kind == QubitKind::Metastable ? "metastable" : "raman";
}

QubitKind qubit_kind_from_string(const std::string& s) {
    if (s == "metastable") return QubitKind::Metastable;
    if (s == "raman") return QubitKind::Raman;
    throw InputError("field 'qubit_kind' must be \"metastable\" or \"raman\", got \"" + s + "\"");
}

void IonSpecies::validate() const {
    auto positive = [&](const std::optional<double>& v, const char* what) {
        if (v && !(*v > 0.0)) throw InputError(name + ": field '" + what + "' must be positive");
    };
    positive(tau0, "tau0_s");
    positive(tau_ex, "tau_ex_s");
    positive(tau1, "tau1_s");
    positive(lambda0, "lambda0_m");
    positive(lambda_ex, "lambda_ex_m");
    positive(bound_rhs_over_eta, "bound_rhs_over_eta");
    if (!(eta_default > 0.0 && eta_default <= 1.0)) {
        throw InputError(name + ": field 'eta' must be in (0, 1]");
    }
}

double metastable_time_budget(double num_ions, double tau0, double occupancy) {
    if (!(num_ions >= 1.0)) throw InputError("L must be >= 1");
    if (!(tau0 > 0.0)) throw InputError("tau0 must be positive");
    if (!(occupancy > 0.0 && occupancy <= 1.0)) throw InputError("occupancy must be in (0, 1]");
    return 4.0 * tau0 / (occupancy * num_ions);
}

double two_level_breakdown(double omega_ex, double delta) {
    if (!(delta > 0.0)) throw InputError("detuning must be positive");
    return omega_ex * omega_ex / (8.0 * delta * delta);
}

bool emission_constraint(double n, double t, double omega_ex, double delta, double tau_ex) {
    if (!(tau_ex > 0.0)) throw InputError("tau_ex must be positive");
    return n * t * two_level_breakdown(omega_ex, delta) / tau_ex < 1.0;
}

double metastable_bound(const IonSpecies& species, double eta, double delta, BoundMode mode) {
    if (!(eta > 0.0 && eta <= 1.0)) throw InputError("eta must be in (0, 1]");
    if (!(delta > 0.0)) throw InputError("detuning must be positive");
    if (mode == BoundMode::PaperCalibrated && species.bound_rhs_over_eta) {
        return eta * *species.bound_rhs_over_eta;
    }
    if (!species.tau_ex || !species.lambda0 || !species.lambda_ex) {
        throw MissingParameters(species.name +
                                " lacks tau_ex / lambda0 / lambda_ex for the metastable bound");
    }
    return eta * std::sqrt(20.0 / std::numbers::pi) *
           std::pow(*species.lambda0 / *species.lambda_ex, 1.5) * *species.tau_ex * delta;
}

double raman_bound(const IonSpecies& species, double eta, double delta) {
    if (!(eta > 0.0 && eta <= 1.0)) throw InputError("eta must be in (0, 1]");
    if (!(delta > 0.0)) throw InputError("detuning must be positive");
    if (!species.tau1) throw MissingParameters(species.name + " lacks tau1 for the Raman bound");
    return 8.0 * eta * *species.tau1 * delta;
}

double algorithm_load(QubitKind kind, double u_pulses, double num_ions) {
    return kind == QubitKind::Metastable ? u_pulses * num_ions : u_pulses * std::sqrt(num_ions);
}

double success_probability(QubitKind kind, double u_pulses, double num_ions, double bound) {
    if (!(bound > 0.0)) throw InputError("bound must be positive");
    return std::exp(-algorithm_load(kind, u_pulses, num_ions) / bound);
}

double species_bound(const IonSpecies& species, double eta, const CapacityOptions& options) {
    if (species.qubit_kind == QubitKind::Metastable) {
        return metastable_bound(species, eta, options.delta.value_or(kDefaultMetastableDetuning),
                                options.mode);
    }
    return raman_bound(species, eta, options.delta.value_or(kDefaultRamanDetuning));
}

Capacity max_factorable_bits(const IonSpecies& species, double eta, const CapacityOptions& options) {
    species.validate();
    Capacity c;
    c.species = species.name;
    c.kind = species.qubit_kind;
    c.eta = eta;
    c.bound = species_bound(species, eta, options);

    auto load_at = [&](std::uint64_t l) {
        return algorithm_load(c.kind, static_cast<double>(u_pulses_for_bits(l)),
                              static_cast<double>(qubits_for_bits(l)));
    };
    std::uint64_t l = 0;
    while (l + 1 <= kMaxBits && load_at(l + 1) <= c.bound) ++l;

    c.max_bits = l;
    c.u_pulses = u_pulses_for_bits(l);
    c.qubits = qubits_for_bits(l);
    c.load = load_at(l);
    c.success_probability = std::exp(-c.load / c.bound);
    if (c.kind == QubitKind::Metastable && species.tau0) {
        c.time_budget_s = metastable_time_budget(static_cast<double>(c.qubits), *species.tau0);
    }
    return c;
}

}  // namespace trapion::resources
