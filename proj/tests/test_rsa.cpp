#include <gtest/gtest.h>

#include <numeric>

#include "trapion/errors.hpp"
#include "trapion/number_theory.hpp"
#include "trapion/rsa.hpp"
#include "trapion/shor.hpp"

using namespace trapion;
using nt::BigInt;

namespace {

std::uint64_t naive_gcd(std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t g = std::max(a, b); g > 1; --g) {
        if (a % g == 0 && b % g == 0) return g;
    }
    return std::max(a, b) == 0 ? 0 : 1;
}

std::uint64_t gcd_count_totient(std::uint64_t m) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
    return count;
}

// x^k mod n by repeated multiplication (n < 2^32).
std::uint64_t slow_pow(std::uint64_t x, std::uint64_t k, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (x % n) % n;
    return r;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(limit, 0);
    for (std::uint32_t i = 2; i < limit; ++i) {
        if (spf[i]) continue;
        for (std::uint32_t j = i; j < limit; j += i) {
            if (!spf[j]) spf[j] = i;
        }
    }
    return spf;
}

std::uint64_t square_multiply(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    b %= n;
    for (; e; e >>= 1, b = b * b % n) {
        if (e & 1) r = r * b % n;
    }
    return r;
}

// table[x] = x^k mod n for all x < n; x^k is completely multiplicative, so
// only prime bases need an exponentiation.
std::vector<std::uint32_t> power_table(std::uint64_t n, std::uint64_t k, const std::vector<std::uint32_t>& spf) {
    std::vector<std::uint32_t> t(n);
    t[0] = k == 0 ? 1 % n : 0;
    if (n > 1) t[1] = 1;
    for (std::uint64_t x = 2; x < n; ++x) {
        const std::uint32_t p = spf[x];
        t[x] = p == x ? static_cast<std::uint32_t>(square_multiply(x, k, n))
                      : static_cast<std::uint32_t>(std::uint64_t{t[p]} * t[x / p] % n);
    }
    return t;
}

}  // namespace

TEST(NumberTheory, GcdMatchesBruteForce) {
    for (std::uint64_t a = 0; a < 120; ++a) {
        for (std::uint64_t b = 0; b < 120; ++b) {
            ASSERT_EQ(nt::gcd(a, b), naive_gcd(a, b)) << a << "," << b;
            ASSERT_EQ(nt::gcd(BigInt(a), BigInt(b)), BigInt(naive_gcd(a, b)));
        }
    }
}

TEST(NumberTheory, ExtendedGcdBezout) {
    Rng rng(1);
    for (int k = 0; k < 2000; ++k) {
        const BigInt a = nt::random_bits(1 + rng.below(200), rng), b = nt::random_bits(1 + rng.below(200), rng);
        const auto r = nt::extended_gcd(a, b);
        EXPECT_EQ(a * r.x + b * r.y, r.g);
        EXPECT_EQ(r.g, nt::gcd(a, b));
    }
}

TEST(NumberTheory, ModInverse) {
    for (std::uint64_t m = 2; m < 200; ++m) {
        for (std::uint64_t e = 0; e < m; ++e) {
            if (std::gcd(e, m) == 1) {
                const BigInt d = nt::modinv(BigInt(e), BigInt(m));
                ASSERT_TRUE(d >= 0 && d < m);
                ASSERT_EQ((d * e) % m, 1 % m);
            } else {
                ASSERT_THROW(nt::modinv(BigInt(e), BigInt(m)), NoInverse);
            }
        }
    }
}

TEST(NumberTheory, ModPowExhaustiveBelow256) {
    // Every base, exponent and modulus below 2^8, against running products.
    for (std::uint64_t m = 1; m < 256; ++m) {
        for (std::uint64_t b = 0; b < 256; ++b) {
            std::uint64_t expected = 1 % m;
            for (std::uint64_t e = 0; e < 256; ++e) {
                ASSERT_EQ(nt::modpow(b, e, m), expected) << b << "^" << e << " mod " << m;
                expected = expected * b % m;
            }
        }
    }
}

TEST(NumberTheory, ModPowSampledBelow1024) {
    Rng rng(2);
    for (int k = 0; k < 20000; ++k) {
        const std::uint64_t m = 1 + rng.below(1023), b = rng.below(1024), e = rng.below(1024);
        const std::uint64_t expected = slow_pow(b, e, m);
        ASSERT_EQ(nt::modpow(b, e, m), expected);
        ASSERT_EQ(nt::modpow(BigInt(b), BigInt(e), BigInt(m)), BigInt(expected));
    }
}

TEST(NumberTheory, ModPowLargeOperands) {
    // Fermat: a^(p-1) = 1 mod p for the Mersenne prime 2^127 - 1.
    const BigInt p = (BigInt(1) << 127) - 1;
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        const BigInt a = 2 + nt::random_below(p - 3, rng);
        EXPECT_EQ(nt::modpow(a, p - 1, p), 1);
    }
    const std::uint64_t big = (std::uint64_t{1} << 61) - 1;
    EXPECT_EQ(nt::modpow(std::uint64_t{3}, big - 1, big), 1u);
}

TEST(NumberTheory, TotientMatchesGcdCount) {
    EXPECT_THROW(nt::totient(1), InputError);
    for (std::uint64_t m = 2; m < 4096; ++m) ASSERT_EQ(nt::totient(m), BigInt(gcd_count_totient(m))) << m;
    EXPECT_EQ(nt::totient(999983), 999982);
    EXPECT_THROW(nt::totient(1'000'003), TooLargeForBruteForce);
    EXPECT_EQ(nt::totient(13), 12);
    EXPECT_EQ(nt::totient(15), nt::totient_from_primes(3, 5));
    EXPECT_EQ(nt::totient_from_primes(61, 53), 3120);
}

TEST(NumberTheory, SmallExamples) {
    EXPECT_EQ(nt::modinv(BigInt(17), BigInt(3120)), 2753);
    EXPECT_EQ(nt::gcd(std::uint64_t{5}, std::uint64_t{15}), 5u);
    EXPECT_EQ(nt::modpow(std::uint64_t{7}, 4, 15), 1u);
    EXPECT_TRUE(nt::euler_check(2, 15));
    EXPECT_THROW(nt::euler_check(3, 15), NotCoprime);
}

TEST(NumberTheory, EulerTheoremRandomPairs) {
    Rng rng(4);
    int checked = 0;
    while (checked < 10000) {
        const std::uint64_t m = 2 + rng.below(5000), x = 1 + rng.below(m - 1);
        if (std::gcd(x, m) != 1) {
            EXPECT_THROW(nt::euler_check(x, m), NotCoprime);
            continue;
        }
        ASSERT_TRUE(nt::euler_check(x, m)) << x << " mod " << m;
        ASSERT_EQ(nt::modpow(x, gcd_count_totient(m), m), 1u);
        ++checked;
    }
}

TEST(NumberTheory, OrderMatchesBruteForce) {
    for (std::uint64_t n = 2; n < 256; ++n) {
        for (std::uint64_t x = 1; x < n; ++x) {
            if (std::gcd(x, n) != 1) {
                ASSERT_THROW(shor::classical_order(x, n), NotCoprime);
                continue;
            }
            std::uint64_t r = 1;
            while (slow_pow(x, r, n) != 1) ++r;
            ASSERT_EQ(shor::classical_order(x, n), r) << x << " mod " << n;
        }
    }
}

TEST(NumberTheory, PrimalityAgainstTrialDivision) {
    Rng rng(5);
    for (std::uint64_t n = 0; n < 20000; ++n) {
        ASSERT_EQ(nt::is_probable_prime(BigInt(n), rng, 8), nt::is_prime_small(n)) << n;
    }
    // Carmichael numbers and a strong pseudoprime to base 2.
    for (std::uint64_t c : {561u, 1105u, 1729u, 2465u, 2821u, 6601u, 8911u, 2047u, 3215031751u}) {
        EXPECT_FALSE(nt::is_probable_prime(BigInt(c), rng));
    }
    EXPECT_TRUE(nt::is_probable_prime((BigInt(1) << 127) - 1, rng));
}

TEST(NumberTheory, PrimePowers) {
    EXPECT_EQ(nt::prime_power(27), std::make_pair(std::uint64_t{3}, 3u));
    EXPECT_EQ(nt::prime_power(49), std::make_pair(std::uint64_t{7}, 2u));
    EXPECT_FALSE(nt::prime_power(15));
    EXPECT_FALSE(nt::prime_power(1));
}

TEST(Rsa, WorkedExample) {
    const auto kp = rsa::keygen_from_primes(61, 53, 17);
    EXPECT_EQ(kp.pub.n, 3233);
    EXPECT_EQ(kp.priv.d, 2753);
    EXPECT_EQ(rsa::encrypt(kp.pub, 65), 2790);
    EXPECT_EQ(rsa::decrypt(kp.priv, 2790), 65);
    EXPECT_THROW(rsa::encrypt(kp.pub, 3233), MessageOutOfRange);
    EXPECT_THROW(rsa::decrypt(kp.priv, -1), MessageOutOfRange);
    EXPECT_THROW(rsa::keygen_from_primes(61, 53, 3), FixedExponentNotCoprime);
    EXPECT_THROW(rsa::keygen_from_primes(61, 61, 17), InputError);
    EXPECT_THROW(rsa::keygen_from_primes(61, 55, 17), InputError);
}

TEST(Rsa, RoundTripExhaustiveBelow65536) {
    // Every modulus pq < 2^16 with distinct primes, every message.
    const auto spf = smallest_prime_factors(1 << 16);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i < (1 << 15); ++i) {
        if (spf[i] == i) primes.push_back(i);
    }
    Rng rng(6);
    std::size_t keys = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size() && primes[i] * primes[j] < (1u << 16); ++j) {
            const std::uint64_t p = primes[i], q = primes[j], n = p * q, phi = (p - 1) * (q - 1);
            std::uint64_t e = 3;
            while (std::gcd(e, phi) != 1) ++e;
            const auto kp = rsa::keygen_from_primes(p, q, e);
            ASSERT_EQ(kp.pub.n, n);
            const auto d = kp.priv.d.convert_to<std::uint64_t>();
            ASSERT_EQ(e * d % phi, 1u);

            const auto enc = power_table(n, e, spf);
            const auto dec = power_table(n, d, spf);
            for (std::uint64_t m = 0; m < n; ++m) {
                ASSERT_EQ(dec[enc[m]], m) << "m=" << m << " n=" << n;
            }
            for (std::uint64_t m : {std::uint64_t{0}, std::uint64_t{1}, n - 1, rng.below(n), rng.below(n)}) {
                const BigInt c = rsa::encrypt(kp.pub, m);
                ASSERT_EQ(c, enc[m]);
                ASSERT_EQ(rsa::decrypt(kp.priv, c), m);
            }
            ++keys;
        }
    }
    EXPECT_EQ(keys, 15604u);
}

TEST(Rsa, KeygenIsSeededAndValid) {
    Rng a(7), b(7);
    const auto k1 = rsa::keygen(128, 65537, a);
    const auto k2 = rsa::keygen(128, 65537, b);
    EXPECT_EQ(k1.pub.n, k2.pub.n);
    EXPECT_EQ(nt::bit_length(k1.pub.n) >= 127, true);
    EXPECT_EQ((k1.priv.d * k1.pub.e) % k1.priv.phi, 1);
    Rng rng(8);
    for (int k = 0; k < 20; ++k) {
        const BigInt m = nt::random_below(k1.pub.n, rng);
        EXPECT_EQ(rsa::decrypt(k1.priv, rsa::encrypt(k1.pub, m)), m);
    }
    Rng small(9);
    const auto k3 = rsa::keygen(8, 3, small);
    EXPECT_EQ(nt::gcd(k3.pub.e, k3.priv.phi), 1);
    EXPECT_THROW(rsa::keygen(4, 3, small), InputError);
}

TEST(Rsa, KeyFileRoundTrip) {
    const auto kp = rsa::keygen_from_primes(1009, 1013, 65537);
    const auto j = nlohmann::json::parse(rsa::to_json(kp).dump());
    const auto priv = rsa::private_key_from_json(j);
    const auto pub = rsa::public_key_from_json(j);
    EXPECT_EQ(priv.d, kp.priv.d);
    EXPECT_EQ(pub.n, kp.pub.n);
    auto bad = j;
    bad["n"] = "12x";
    EXPECT_THROW(rsa::public_key_from_json(bad), InputError);
    bad.erase("n");
    try {
        rsa::public_key_from_json(bad);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("'n'"), std::string::npos);
    }
}
