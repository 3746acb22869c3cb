#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace trapion::resources {

// ---------------------------------------------------------------------------
// Classical factoring cost
// ---------------------------------------------------------------------------

// Sub-exponential GNFS growth in the modulus size l (bits), calibrated so the
// RSA130 modulus (130 decimal digits) costs exactly 500 MIPS-years:
//   T(l) = T0 * exp(c * (l^{1/3} (ln l)^{2/3} - l0^{1/3} (ln l0)^{2/3}))
struct GnfsModel {
    double coefficient = 1.923;
    double calibration_bits = 130.0 * 3.321928094887362;  // 130 * log2(10)
    double calibration_mips_years = 500.0;
};

double gnfs_mips_years(double bits, const GnfsModel& model = {});

struct AttackScenario {
    int year = 1997;
    double workstations = 1000.0;
    double mips_per_workstation = 200.0;  // at base_year
    int base_year = 1997;
    double doubling_months = 18.0;

    void validate() const;
};

// MIPS-years divided by the fleet's Moore's-law-scaled MIPS rating.
double wall_clock_years(double bits, const AttackScenario& scenario, const GnfsModel& model = {});

// ---------------------------------------------------------------------------
// Quantum factoring resources
// ---------------------------------------------------------------------------

std::uint64_t qubits_for_bits(std::uint64_t bits);    // 5l + 4
std::uint64_t gates_for_bits(std::uint64_t bits);     // 25 l^3
std::uint64_t u_pulses_for_bits(std::uint64_t bits);  // 96 l^3

struct ResourceEstimate {
    std::uint64_t bits = 0;
    std::uint64_t qubits = 0;
    std::uint64_t gates = 0;
    std::uint64_t u_pulses = 0;
    double clock_hz = 0.0;
    double quantum_time_s = 0.0;  // gates / clock
    std::optional<double> success_probability;
};

ResourceEstimate shor_resources(std::uint64_t bits, double clock_hz);

// Modulus size (real-valued) whose 25 l^3 gate count takes `seconds` at `clock_hz`.
double bits_for_quantum_time(double seconds, double clock_hz);

inline constexpr double kSecondsPerYear = 365.25 * 24.0 * 3600.0;

// ---------------------------------------------------------------------------
// Decoherence bounds
// ---------------------------------------------------------------------------

enum class QubitKind { Metastable, Raman };

std::string to_string(QubitKind kind);
QubitKind qubit_kind_from_string(const std::string& s);

struct IonSpecies {
    std::string name;
    QubitKind qubit_kind = QubitKind::Metastable;
    std::optional<double> tau0;       // s, lifetime of |1>
    std::optional<double> tau_ex;     // s, extraneous level lifetime
    std::optional<double> tau1;       // s, Raman third-level lifetime
    std::optional<double> lambda0;    // m, qubit transition
    std::optional<double> lambda_ex;  // m, extraneous transition
    double eta_default = 0.01;
    // Per-ion nL bound divided by eta, when taken from published values.
    std::optional<double> bound_rhs_over_eta;

    void validate() const;
};

using SpeciesTable = std::map<std::string, IonSpecies>;

// Metastable ions in the order Hg+, Sr+, Ca+, Ba+, Yb+ plus Raman examples.
SpeciesTable builtin_species();
SpeciesTable species_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SpeciesTable& table);
// path, else $TRAPION_SPECIES_CONFIG, else the built-in table.
SpeciesTable load_species(const std::optional<std::string>& path = std::nullopt);
const IonSpecies& find_species(const SpeciesTable& table, const std::string& name);

// nt < 6 tau0 / L at occupancy 2/3, scaled inversely with occupancy:
// budget = 4 tau0 / (occupancy L).
double metastable_time_budget(double num_ions, double tau0, double occupancy = 2.0 / 3.0);

// P = Omega_ex^2 / (8 Delta^2)
double two_level_breakdown(double omega_ex, double delta);
// n t Omega_ex^2 / (8 Delta^2 tau_ex) < 1 (strict)
bool emission_constraint(double n, double t, double omega_ex, double delta, double tau_ex);

enum class BoundMode { PaperCalibrated, Physical };

inline constexpr double kDefaultMetastableDetuning = 1e15;  // s^-1
inline constexpr double kDefaultRamanDetuning = 6.25e12;    // s^-1

// Max nL: eta sqrt(20/pi) (lambda0/lambda_ex)^{3/2} tau_ex Delta, or
// eta * bound_rhs_over_eta in calibrated mode when the species has it.
double metastable_bound(const IonSpecies& species, double eta, double delta,
                        BoundMode mode = BoundMode::PaperCalibrated);
// Max n sqrt(L): 8 eta tau1 Delta.
double raman_bound(const IonSpecies& species, double eta, double delta);

// nL for metastable qubits, n sqrt(L) for Raman qubits.
double algorithm_load(QubitKind kind, double u_pulses, double num_ions);
// exp(-load / bound); 1/e when load == bound. Takes no laser-power input.
double success_probability(QubitKind kind, double u_pulses, double num_ions, double bound);

struct CapacityOptions {
    BoundMode mode = BoundMode::PaperCalibrated;
    std::optional<double> delta;  // defaults per qubit kind
};

struct Capacity {
    std::string species;
    QubitKind kind = QubitKind::Metastable;
    double eta = 0.0;
    double bound = 0.0;
    std::uint64_t max_bits = 0;
    std::uint64_t u_pulses = 0;
    std::uint64_t qubits = 0;
    double load = 0.0;
    double success_probability = 1.0;
    std::optional<double> time_budget_s;  // metastable with tau0 known
};

// Largest l whose load with n = 96 l^3, L = 5 l + 4 stays <= the bound.
Capacity max_factorable_bits(const IonSpecies& species, double eta,
                             const CapacityOptions& options = {});

double species_bound(const IonSpecies& species, double eta, const CapacityOptions& options = {});

}  // namespace trapion::resources
