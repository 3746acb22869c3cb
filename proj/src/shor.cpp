#include "trapion/shor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trapion/errors.hpp"
#include "trapion/number_theory.hpp"

namespace trapion::shor {

namespace {

sim::GateMatrix swap_matrix() {
    sim::GateMatrix m = sim::GateMatrix::identity(4);
    m(1, 1) = 0.0;
    m(2, 2) = 0.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    return m;
}

void reverse_register(sim::QubitState& state, std::span<const std::size_t> reg) {
    const auto swap = swap_matrix();
    for (std::size_t i = 0; i < reg.size() / 2; ++i) {
        const std::size_t pair[2] = {reg[i], reg[reg.size() - 1 - i]};
        sim::apply_qubit_gate(state, pair, swap);
    }
}

void qft_impl(sim::QubitState& state, std::span<const std::size_t> reg, double sign) {
    const std::size_t m = reg.size();
    const auto h = sim::hadamard_matrix();
    if (sign < 0) reverse_register(state, reg);
    if (sign > 0) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t t[1] = {reg[j]};
            sim::apply_qubit_gate(state, t, h);
            for (std::size_t k = j + 1; k < m; ++k) {
                const double angle = 2.0 * std::numbers::pi / static_cast<double>(1ULL << (k - j + 1));
                const std::size_t pair[2] = {reg[k], reg[j]};
                sim::apply_qubit_gate(state, pair, sim::controlled_phase_matrix(angle));
            }
        }
    } else {
        // Same network backwards with conjugated phases.
        for (std::size_t jj = m; jj-- > 0;) {
            for (std::size_t k = m; k-- > jj + 1;) {
                const double angle = -2.0 * std::numbers::pi / static_cast<double>(1ULL << (k - jj + 1));
                const std::size_t pair[2] = {reg[k], reg[jj]};
                sim::apply_qubit_gate(state, pair, sim::controlled_phase_matrix(angle));
            }
            const std::size_t t[1] = {reg[jj]};
            sim::apply_qubit_gate(state, t, h);
        }
    }
    if (sign > 0) reverse_register(state, reg);
}

std::uint64_t minimal_exponent(std::uint64_t q, std::uint64_t x, std::uint64_t n) {
    // q is a multiple of the order; strip prime factors while x^(q/p) = 1.
    std::uint64_t rest = q;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        while (q % p == 0 && nt::modpow(x, q / p, n) == 1) q /= p;
    }
    if (rest > 1) {
        while (q % rest == 0 && nt::modpow(x, q / rest, n) == 1) q /= rest;
    }
    return q;
}

void precheck(std::uint64_t n) {
    if (n < 3) throw PrecheckFailed("N must be >= 3");
    if (n % 2 == 0) throw PrecheckFailed(std::to_string(n) + " is even");
    if (nt::is_prime_small(n)) throw PrecheckFailed(std::to_string(n) + " is prime");
    if (auto pp = nt::prime_power(n)) {
        throw PrecheckFailed(std::to_string(n) + " is a prime power (" + std::to_string(pp->first) +
                             "^" + std::to_string(pp->second) + ")");
    }
}

}  // namespace

std::uint64_t classical_order(std::uint64_t x, std::uint64_t n) {
    if (n < 2) throw InputError("classical_order requires N >= 2");
    if (nt::gcd(x % n, n) != 1) {
        throw NotCoprime(std::to_string(x) + " is not coprime to " + std::to_string(n));
    }
    const std::uint64_t base = x % n;
    std::uint64_t value = base;
    std::uint64_t r = 1;
    while (value != 1) {
        value = nt::mulmod(value, base, n);
        ++r;
    }
    return r;
}

std::vector<std::size_t> modexp_oracle(std::uint64_t x, std::uint64_t n, std::size_t a_bits,
                                       std::size_t f_bits) {
    if (n < 2) throw InputError("modulus must be >= 2");
    if (a_bits == 0) throw RegisterTooSmall("argument register needs at least one qubit");
    if (f_bits < nt::bit_length(n)) {
        throw RegisterTooSmall("function register of " + std::to_string(f_bits) +
                               " bits cannot hold values mod " + std::to_string(n));
    }
    if (a_bits + f_bits > kMaxSimulatedQubits) {
        throw RegisterTooSmall("oracle over " + std::to_string(a_bits + f_bits) +
                               " qubits exceeds the simulation limit");
    }
    const std::size_t a_count = std::size_t{1} << a_bits;
    const std::size_t f_count = std::size_t{1} << f_bits;
    std::vector<std::size_t> perm(a_count * f_count);
    std::uint64_t fa = 1 % n;  // x^a mod n, advanced incrementally
    const std::uint64_t base = x % n;
    for (std::size_t a = 0; a < a_count; ++a) {
        for (std::size_t y = 0; y < f_count; ++y) {
            perm[(a << f_bits) | y] = (a << f_bits) | (y ^ fa);
        }
        fa = nt::mulmod(fa, base, n);
    }
    return perm;
}

void apply_permutation(sim::QubitState& state, std::span<const std::size_t> perm) {
    auto amps = state.amplitudes();
    if (perm.size() != amps.size()) throw ShapeMismatch("permutation size does not match state");
    std::vector<sim::Amplitude> out(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) out[perm[i]] = amps[i];
    std::copy(out.begin(), out.end(), amps.begin());
}

void qft(sim::QubitState& state, std::span<const std::size_t> reg) { qft_impl(state, reg, +1.0); }

void inverse_qft(sim::QubitState& state, std::span<const std::size_t> reg) {
    qft_impl(state, reg, -1.0);
}

std::vector<std::uint64_t> convergent_denominators(std::uint64_t num, std::uint64_t den,
                                                   std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (den == 0) return out;
    // q_{-2} = 1, q_{-1} = 0
    std::uint64_t q_prev2 = 1, q_prev1 = 0;
    std::uint64_t a = num, b = den;
    while (b != 0) {
        const std::uint64_t term = a / b;
        const std::uint64_t q = term * q_prev1 + q_prev2;
        if (q > limit) break;
        if (out.empty() || out.back() != q) out.push_back(q);
        q_prev2 = q_prev1;
        q_prev1 = q;
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return out;
}

OrderResult run_order_finding(std::uint64_t n, std::uint64_t x, Rng& rng,
                              const OrderFindingOptions& options) {
    if (n < 3) throw InputError("order finding requires N >= 3");
    if (nt::gcd(x % n, n) != 1) {
        throw NotCoprime(std::to_string(x) + " is not coprime to " + std::to_string(n));
    }
    const std::size_t l = nt::bit_length(n);
    const std::size_t a_bits = options.argument_bits.value_or(2 * l);
    if (a_bits < l + 1) {
        throw RegisterTooSmall("argument register of " + std::to_string(a_bits) +
                               " bits is below the minimum l + 1 = " + std::to_string(l + 1));
    }
    const auto perm = modexp_oracle(x, n, a_bits, l);

    sim::QubitState state(a_bits + l);
    std::vector<std::size_t> arg(a_bits);
    for (std::size_t i = 0; i < a_bits; ++i) arg[i] = i;
    const auto h = sim::hadamard_matrix();
    for (std::size_t q : arg) {
        const std::size_t t[1] = {q};
        sim::apply_qubit_gate(state, t, h);
    }
    apply_permutation(state, perm);
    qft(state, arg);
    const std::size_t outcome = sim::measure_all(state, rng);

    OrderResult result;
    result.register_size = a_bits;
    result.function_bits = l;
    result.measured_value = outcome >> l;
    const std::uint64_t modulus = std::uint64_t{1} << a_bits;
    for (std::uint64_t q : convergent_denominators(result.measured_value, modulus, n)) {
        if (nt::modpow(x, q, n) == 1) {
            result.order = minimal_exponent(q, x % n, n);
            result.success = true;
            break;
        }
    }
    return result;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> legendre_factor(std::uint64_t y,
                                                                      std::uint64_t n) {
    if (n < 2) throw InputError("legendre_factor requires N >= 2");
    y %= n;
    if (nt::mulmod(y, y, n) != 1 % n) return std::nullopt;
    if (y == 1 || y == n - 1) return std::nullopt;
    const std::uint64_t a = nt::gcd(y - 1, n);
    const std::uint64_t b = nt::gcd(y + 1, n);
    if (a <= 1 || a >= n || b <= 1 || b >= n) return std::nullopt;
    return std::make_pair(std::min(a, b), std::max(a, b));
}

FactorReport shor_factor(std::uint64_t n, Rng& rng, const FactorOptions& options) {
    precheck(n);
    if (options.mode == Mode::Simulated && n > options.simulated_limit) {
        throw PrecheckFailed(std::to_string(n) + " exceeds the simulated-mode limit of " +
                             std::to_string(options.simulated_limit));
    }
    std::vector<std::uint64_t> coprime;
    for (std::uint64_t x = 2; x < n; ++x) {
        if (nt::gcd(x, n) == 1) coprime.push_back(x);
    }

    FactorReport report;
    report.n = n;
    report.full_register_bits = 2 * nt::bit_length(n);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Attempt a;
        a.x = coprime[rng.below(coprime.size())];
        std::uint64_t r = 0;
        if (options.mode == Mode::Simulated) {
            const auto res = run_order_finding(n, a.x, rng, options.order_finding);
            report.register_bits = res.register_size;
            a.measured = res.measured_value;
            if (!res.success) {
                report.attempts.push_back(a);
                continue;
            }
            r = res.order;
        } else {
            r = classical_order(a.x, n);
        }
        a.order = r;
        a.order_found = true;
        report.attempts.push_back(a);
        if (r % 2 != 0) continue;
        const std::uint64_t y = nt::modpow(a.x, r / 2, n);
        if (y == n - 1) continue;
        if (auto f = legendre_factor(y, n)) {
            report.x = a.x;
            report.measured = a.measured;
            report.order = r;
            report.factors = *f;
            return report;
        }
    }
    throw RetriesExhausted("no factor of " + std::to_string(n) + " after " +
                           std::to_string(kMaxAttempts) + " attempts");
}

nlohmann::json to_json(const FactorReport& report, std::uint64_t seed) {
    nlohmann::json attempts = nlohmann::json::array();
    for (const auto& a : report.attempts) {
        nlohmann::json j = {{"x", a.x}, {"order_found", a.order_found}};
        j["measured"] = a.measured ? nlohmann::json(*a.measured) : nlohmann::json(nullptr);
        j["order"] = a.order ? nlohmann::json(*a.order) : nlohmann::json(nullptr);
        attempts.push_back(j);
    }
    nlohmann::json out = {{"n", report.n},
                          {"x", report.x},
                          {"order", report.order},
                          {"factors", {report.factors.first, report.factors.second}},
                          {"seed", seed},
                          {"register_bits", report.register_bits},
                          {"full_register_bits", report.full_register_bits},
                          {"attempts", attempts}};
    out["measured"] = report.measured ? nlohmann::json(*report.measured) : nlohmann::json(nullptr);
    return out;
}

}  // namespace trapion::shor
