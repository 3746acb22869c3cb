#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "trapion/errors.hpp"
#include "trapion/number_theory.hpp"
#include "trapion/shor.hpp"

using namespace trapion;
using namespace trapion::shor;
using sim::Amplitude;

namespace {

sim::QubitState random_qubits(std::size_t n, Rng& rng) {
    std::vector<Amplitude> a(std::size_t{1} << n);
    double norm = 0;
    for (auto& x : a) {
        x = {rng.uniform() - 0.5, rng.uniform() - 0.5};
        norm += std::norm(x);
    }
    for (auto& x : a) x /= std::sqrt(norm);
    return sim::QubitState::from_amplitudes(a);
}

std::vector<std::size_t> iota(std::size_t n, std::size_t from = 0) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), from);
    return v;
}

// Exact outcome distribution of the argument register after oracle and QFT:
// P(c) = sum_f |2^-m sum_{a: x^a = f} e^{2 pi i a c / 2^m}|^2.
std::vector<double> outcome_distribution(std::uint64_t n, std::uint64_t x, std::size_t m) {
    const std::size_t q = std::size_t{1} << m;
    std::vector<std::uint64_t> f(q);
    std::uint64_t v = 1;
    for (std::size_t a = 0; a < q; ++a, v = v * x % n) f[a] = v;
    std::vector<double> p(q, 0.0);
    for (std::size_t c = 0; c < q; ++c) {
        std::vector<Amplitude> by_value(n);
        for (std::size_t a = 0; a < q; ++a) {
            by_value[f[a]] += std::polar(1.0, 2 * std::numbers::pi * double(a * c % q) / double(q));
        }
        for (const auto& s : by_value) p[c] += std::norm(s) / double(q) / double(q);
    }
    return p;
}

}  // namespace

TEST(Qft, MatchesDirectDft) {
    Rng rng(1);
    for (std::size_t m = 1; m <= 6; ++m) {
        auto s = random_qubits(m, rng);
        const std::vector<Amplitude> in(s.amplitudes().begin(), s.amplitudes().end());
        const auto reg = iota(m);
        qft(s, reg);
        const std::size_t q = in.size();
        for (std::size_t k = 0; k < q; ++k) {
            Amplitude expected = 0;
            for (std::size_t j = 0; j < q; ++j) {
                expected += in[j] * std::polar(1.0, 2 * std::numbers::pi * double(j * k % q) / double(q));
            }
            expected /= std::sqrt(double(q));
            ASSERT_LT(std::abs(s.amplitudes()[k] - expected), 1e-12) << "m=" << m << " k=" << k;
        }
        inverse_qft(s, reg);
        for (std::size_t j = 0; j < q; ++j) ASSERT_LT(std::abs(s.amplitudes()[j] - in[j]), 1e-12);
    }
}

TEST(Qft, ActsOnSubregister) {
    // QFT on qubits {1,2} of a 3-qubit product state leaves qubit 0 alone.
    Rng rng(2);
    auto s = random_qubits(2, rng);
    auto full = sim::QubitState::from_amplitudes(
        {s.amplitudes()[0], s.amplitudes()[1], s.amplitudes()[2], s.amplitudes()[3], 0, 0, 0, 0});
    const std::size_t reg[] = {1, 2};
    qft(full, reg);
    const auto only = iota(2);
    qft(s, only);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_LT(std::abs(full.amplitudes()[k] - s.amplitudes()[k]), 1e-12);
}

TEST(Oracle, IsThePermutationOfModularExponentiation) {
    const auto perm = modexp_oracle(7, 15, 4, 4);
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        const std::size_t a = i >> 4, y = i & 15;
        EXPECT_EQ(perm[i] >> 4, a);
        EXPECT_EQ(perm[i] & 15, y ^ nt::modpow(std::uint64_t{7}, a, 15));
        ASSERT_FALSE(seen[perm[i]]);
        seen[perm[i]] = true;
    }
    EXPECT_THROW(modexp_oracle(7, 15, 4, 3), RegisterTooSmall);
}

TEST(ContinuedFractions, Convergents) {
    EXPECT_EQ(convergent_denominators(192, 256, 15), (std::vector<std::uint64_t>{1, 4}));
    EXPECT_EQ(convergent_denominators(0, 256, 15), (std::vector<std::uint64_t>{1}));
    // 355/113 convergents of pi-ish fraction 3.14159
    EXPECT_EQ(convergent_denominators(314159, 100000, 120), (std::vector<std::uint64_t>{1, 7, 106, 113}));
}

TEST(OrderFinding, SuccessRateOverSeeds) {
    // N = 15 with a random coprime base per run, 200 seeds.
    std::vector<std::uint64_t> bases;
    for (std::uint64_t x = 2; x < 15; ++x) {
        if (std::gcd(x, std::uint64_t{15}) == 1) bases.push_back(x);
    }
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const std::uint64_t x = bases[rng.below(bases.size())];
        const auto r = run_order_finding(15, x, rng);
        EXPECT_EQ(r.register_size, 8u);
        if (r.success) {
            ++successes;
            EXPECT_EQ(r.order, classical_order(x, 15));
        }
    }
    EXPECT_GE(successes, 80);
}

TEST(OrderFinding, MatchesExactOutcomeDistribution) {
    // x = 7 mod 15 has r = 4: outcomes 0, 64, 128, 192 each with p = 1/4.
    const auto p = outcome_distribution(15, 7, 8);
    for (std::size_t c = 0; c < p.size(); ++c) EXPECT_NEAR(p[c], c % 64 == 0 ? 0.25 : 0.0, 1e-12);

    // x = 2 mod 21 (r = 6): empirical frequencies within 5 sigma of the oracle.
    const auto q = outcome_distribution(21, 2, 10);
    double p_success = 0;
    std::vector<bool> extracts(q.size());
    for (std::size_t c = 0; c < q.size(); ++c) {
        for (auto d : convergent_denominators(c, q.size(), 21)) {
            if (nt::modpow(std::uint64_t{2}, d, 21) == 1) {
                extracts[c] = true;
                break;
            }
        }
        if (extracts[c]) p_success += q[c];
    }
    const int runs = 300;
    int hits = 0;
    for (int seed = 0; seed < runs; ++seed) {
        Rng rng(seed);
        const auto r = run_order_finding(21, 2, rng);
        EXPECT_EQ(r.success, bool(extracts[r.measured_value]));
        if (r.success) {
            ++hits;
            EXPECT_EQ(r.order, 6u);
        }
    }
    EXPECT_NEAR(hits / double(runs), p_success, 5 * std::sqrt(p_success * (1 - p_success) / runs));
}

TEST(OrderFinding, AgreesWithClassicalOrderUpTo100) {
    // Reduced argument register (l + 1 bits) keeps the state small; any
    // reported order must still be the true order.
    for (std::uint64_t n = 3; n <= 100; ++n) {
        const std::size_t l = nt::bit_length(n);
        for (std::uint64_t x : {2u, 3u, 5u, 7u, 11u}) {
            if (x >= n || std::gcd(x, n) != 1) continue;
            Rng rng(n * 31 + x);
            OrderFindingOptions opt;
            opt.argument_bits = n <= 21 ? 2 * l : l + 1;
            for (int run = 0; run < 3; ++run) {
                const auto r = run_order_finding(n, x, rng, opt);
                if (r.success) ASSERT_EQ(r.order, classical_order(x, n)) << x << " mod " << n;
            }
        }
    }
    OrderFindingOptions tiny;
    tiny.argument_bits = 4;
    Rng rng(0);
    EXPECT_THROW(run_order_finding(15, 7, rng, tiny), RegisterTooSmall);
}

TEST(Legendre, FactorsFromSquareRootsOfUnity) {
    EXPECT_EQ(legendre_factor(4, 15), std::make_pair(std::uint64_t{3}, std::uint64_t{5}));
    EXPECT_EQ(legendre_factor(8, 21), std::make_pair(std::uint64_t{3}, std::uint64_t{7}));
    EXPECT_FALSE(legendre_factor(14, 15));
    EXPECT_FALSE(legendre_factor(1, 15));
    EXPECT_FALSE(legendre_factor(2, 15));
}

TEST(Factor, SimulatedSmallModuli) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng a(seed);
        const auto r15 = shor_factor(15, a);
        EXPECT_EQ(r15.factors, std::make_pair(std::uint64_t{3}, std::uint64_t{5}));
        EXPECT_EQ(r15.order, classical_order(r15.x, 15));
        Rng b(seed);
        const auto r21 = shor_factor(21, b);
        EXPECT_EQ(r21.factors, std::make_pair(std::uint64_t{3}, std::uint64_t{7}));
        EXPECT_EQ(r21.register_bits, 10u);
    }
    Rng x(7), y(7);
    EXPECT_EQ(to_json(shor_factor(15, x), 7).dump(), to_json(shor_factor(15, y), 7).dump());
}

TEST(Factor, OracleModeLargerModuli) {
    Rng rng(3);
    for (std::uint64_t n : {33u, 35u, 91u, 143u, 1001u, 3233u, 1022117u}) {
        const auto r = shor_factor(n, rng, {Mode::Oracle});
        EXPECT_GT(r.factors.first, 1u);
        EXPECT_EQ(n % r.factors.first, 0u);
        EXPECT_EQ(n % r.factors.second, 0u);
        EXPECT_LT(r.factors.second, n);
    }
}

TEST(Factor, Prechecks) {
    Rng rng(0);
    EXPECT_THROW(shor_factor(16, rng), PrecheckFailed);
    EXPECT_THROW(shor_factor(13, rng), PrecheckFailed);
    EXPECT_THROW(shor_factor(27, rng), PrecheckFailed);
    EXPECT_THROW(shor_factor(35, rng), PrecheckFailed);
    EXPECT_NO_THROW(shor_factor(35, rng, {Mode::Simulated, 35, {}}));
}
