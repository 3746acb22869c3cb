#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "trapion/rng.hpp"

namespace trapion::nt {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kBruteForceTotientLimit = 1'000'000;

BigInt gcd(BigInt a, BigInt b);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

struct ExtendedGcd {
    BigInt g;
    BigInt x;  // a*x + b*y = g
    BigInt y;
};
ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

// Inverse of e modulo m in [0, m). Throws NoInverse when gcd(e, m) != 1.
BigInt modinv(const BigInt& e, const BigInt& m);

// Square-and-multiply. m >= 1; result in [0, m).
BigInt modpow(BigInt base, BigInt exponent, const BigInt& m);
std::uint64_t modpow(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
// a * b mod m without overflow. m >= 1.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// Count of 1 <= k < m with gcd(k, m) = 1, by direct count. Throws
// TooLargeForBruteForce above kBruteForceTotientLimit.
BigInt totient(std::uint64_t m);
// (p - 1)(q - 1) for distinct primes p, q.
BigInt totient_from_primes(const BigInt& p, const BigInt& q);

// x^phi(m) == 1 (mod m). Throws NotCoprime when gcd(x, m) != 1.
bool euler_check(std::uint64_t x, std::uint64_t m);

// Miller-Rabin with random bases drawn from rng.
bool is_probable_prime(const BigInt& n, Rng& rng, int rounds = 64);
// Deterministic trial division; intended for small n.
bool is_prime_small(std::uint64_t n);

// Uniform integer with exactly `bits` bits (top bit set).
BigInt random_bits(std::size_t bits, Rng& rng);
// Uniform integer in [0, bound).
BigInt random_below(const BigInt& bound, Rng& rng);

// Returns (p, k) with n == p^k for prime p and k >= 2, if such exists.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

std::size_t bit_length(const BigInt& n);
std::size_t bit_length(std::uint64_t n);

}  // namespace trapion::nt
