#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trapion/qubit_state.hpp"
#include "trapion/rng.hpp"

namespace trapion::shor {

// Largest modulus run on the full state vector unless overridden.
inline constexpr std::uint64_t kDefaultSimulatedLimit = 21;
inline constexpr int kMaxAttempts = 32;
inline constexpr std::size_t kMaxSimulatedQubits = 24;

// Smallest r >= 1 with x^r = 1 (mod n), by iteration. Throws NotCoprime.
std::uint64_t classical_order(std::uint64_t x, std::uint64_t n);

// Basis permutation |a>|y> -> |a>|y XOR (x^a mod n)> over an a_bits-qubit
// argument register followed by an f_bits-qubit function register.
// perm[i] is the image of basis index i. Throws RegisterTooSmall when
// f_bits < bits(n).
std::vector<std::size_t> modexp_oracle(std::uint64_t x, std::uint64_t n, std::size_t a_bits,
                                       std::size_t f_bits);

void apply_permutation(sim::QubitState& state, std::span<const std::size_t> perm);

// DFT over `reg` (reg[0] is the most significant bit of the register value):
// |j> -> 2^{-m/2} sum_k exp(2 pi i j k / 2^m) |k>. Built from Hadamards,
// controlled phases and a final bit reversal.
void qft(sim::QubitState& state, std::span<const std::size_t> reg);
void inverse_qft(sim::QubitState& state, std::span<const std::size_t> reg);

// Continued-fraction convergent denominators of num / den, capped at `limit`.
std::vector<std::uint64_t> convergent_denominators(std::uint64_t num, std::uint64_t den,
                                                   std::uint64_t limit);

struct OrderFindingOptions {
    // Argument register width; defaults to 2l. Must be at least l + 1.
    std::optional<std::size_t> argument_bits;
};

struct OrderResult {
    std::uint64_t order = 0;  // valid when success
    bool success = false;
    std::uint64_t measured_value = 0;
    std::size_t register_size = 0;  // argument register bits
    std::size_t function_bits = 0;
};

OrderResult run_order_finding(std::uint64_t n, std::uint64_t x, Rng& rng,
                              const OrderFindingOptions& options = {});

// Nontrivial roots of y^2 = 1 (mod n) give {gcd(y-1, n), gcd(y+1, n)}.
std::optional<std::pair<std::uint64_t, std::uint64_t>> legendre_factor(std::uint64_t y,
                                                                      std::uint64_t n);

enum class Mode { Simulated, Oracle };

struct Attempt {
    std::uint64_t x = 0;
    std::optional<std::uint64_t> measured;
    std::optional<std::uint64_t> order;
    bool order_found = false;
};

struct FactorReport {
    std::uint64_t n = 0;
    std::uint64_t x = 0;
    std::optional<std::uint64_t> measured;
    std::uint64_t order = 0;
    std::pair<std::uint64_t, std::uint64_t> factors;
    std::size_t register_bits = 0;        // argument register used
    std::size_t full_register_bits = 0;  // 2l
    std::vector<Attempt> attempts;
};

struct FactorOptions {
    Mode mode = Mode::Simulated;
    std::uint64_t simulated_limit = kDefaultSimulatedLimit;
    OrderFindingOptions order_finding;
};

// Throws PrecheckFailed (even, prime, prime power, beyond the simulated
// limit) and RetriesExhausted.
FactorReport shor_factor(std::uint64_t n, Rng& rng, const FactorOptions& options = {});

// { "n", "x", "measured", "order", "factors": [p, q], "seed", "register_bits", ... }
nlohmann::json to_json(const FactorReport& report, std::uint64_t seed);

}  // namespace trapion::shor
