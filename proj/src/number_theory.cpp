#include "trapion/number_theory.hpp"

#include <bit>
#include <vector>

#include "trapion/errors.hpp"

namespace trapion::nt {

BigInt gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
    BigInt old_r = a, r = b;
    BigInt old_s = 1, s = 0;
    BigInt old_t = 0, t = 1;
    while (r != 0) {
        const BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

BigInt modinv(const BigInt& e, const BigInt& m) {
    if (m < 1) throw NoInverse("modulus must be positive");
    BigInt a = e % m;
    if (a < 0) a += m;
    const auto eg = extended_gcd(a, m);
    if (eg.g != 1) {
        throw NoInverse(e.str() + " has no inverse modulo " + m.str() + " (gcd " + eg.g.str() + ")");
    }
    BigInt d = eg.x % m;
    if (d < 0) d += m;
    return d;
}

BigInt modpow(BigInt base, BigInt exponent, const BigInt& m) {
    if (m < 1) throw InputError("modulus must be positive");
    if (exponent < 0) throw InputError("negative exponent");
    if (m == 1) return 0;
    base %= m;
    if (base < 0) base += m;
    BigInt result = 1;
    while (exponent != 0) {
        if (bit_test(exponent, 0)) result = (result * base) % m;
        base = (base * base) % m;
        exponent >>= 1;
    }
    return result;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t modpow(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    if (m == 0) throw InputError("modulus must be positive");
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

BigInt totient(std::uint64_t m) {
    if (m < 2) throw InputError("totient requires m >= 2");
    if (m > kBruteForceTotientLimit) {
        throw TooLargeForBruteForce("totient(" + std::to_string(m) +
                                    ") needs a factorization above the brute-force limit");
    }
    // Strike out every k < m sharing a prime factor with m, then count.
    std::vector<bool> shares(m, false);
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        for (std::uint64_t k = p; k < m; k += p) shares[k] = true;
    }
    if (rest > 1) {
        for (std::uint64_t k = rest; k < m; k += rest) shares[k] = true;
    }
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k < m; ++k) count += shares[k] ? 0 : 1;
    return count;
}

BigInt totient_from_primes(const BigInt& p, const BigInt& q) {
    if (p == q) throw InputError("totient_from_primes requires distinct primes");
    if (p < 2 || q < 2) throw InputError("primes must be >= 2");
    return (p - 1) * (q - 1);
}

bool euler_check(std::uint64_t x, std::uint64_t m) {
    if (gcd(x, m) != 1) {
        throw NotCoprime(std::to_string(x) + " and " + std::to_string(m) + " are not coprime");
    }
    const auto phi = totient(m).convert_to<std::uint64_t>();
    return modpow(x, phi, m) == 1 % m;
}

std::size_t bit_length(const BigInt& n) {
    if (n <= 0) return 0;
    return msb(n) + 1;
}

std::size_t bit_length(std::uint64_t n) {
    return static_cast<std::size_t>(std::bit_width(n));
}

BigInt random_bits(std::size_t bits, Rng& rng) {
    if (bits == 0) return 0;
    BigInt v = 0;
    for (std::size_t have = 0; have < bits; have += 64) {
        v <<= 64;
        v += rng();
    }
    const std::size_t excess = ((bits + 63) / 64) * 64 - bits;
    v >>= excess;
    bit_set(v, static_cast<unsigned>(bits - 1));
    return v;
}

BigInt random_below(const BigInt& bound, Rng& rng) {
    if (bound <= 0) throw InputError("random_below requires a positive bound");
    const std::size_t bits = bit_length(bound);
    for (;;) {
        BigInt v = 0;
        for (std::size_t have = 0; have < bits; have += 64) {
            v <<= 64;
            v += rng();
        }
        v >>= ((bits + 63) / 64) * 64 - bits;
        if (v < bound) return v;
    }
}

bool is_prime_small(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_probable_prime(const BigInt& n, Rng& rng, int rounds) {
    if (n < 2) return false;
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    const BigInt n_minus_1 = n - 1;
    BigInt d = n_minus_1;
    unsigned s = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    for (int round = 0; round < rounds; ++round) {
        const BigInt a = 2 + random_below(n - 3, rng);  // [2, n-2]
        BigInt x = modpow(a, d, n);
        if (x == 1 || x == n_minus_1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
    if (n < 4) return std::nullopt;
    std::uint64_t rest = n;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::nullopt;  // n itself is prime
    unsigned k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1 || k < 2) return std::nullopt;
    return std::make_pair(p, k);
}

}  // namespace trapion::nt
