#pragma once

#include <json.hpp>

#include "trapion/number_theory.hpp"
#include "trapion/rng.hpp"

namespace trapion::rsa {

using nt::BigInt;

struct RsaPublicKey {
    BigInt n;
    BigInt e;
};

struct RsaPrivateKey {
    BigInt p;
    BigInt q;
    BigInt n;
    BigInt phi;
    BigInt d;
    BigInt e;
    // The exponent asked for; differs from e when keygen had to move to the
    // next coprime candidate.
    BigInt requested_e;
};

struct RsaKeyPair {
    RsaPublicKey pub;
    RsaPrivateKey priv;
};

inline constexpr int kPrimalityRounds = 64;

// Two distinct probable primes of about bits/2 bits each. bits in [8, 2048].
RsaKeyPair keygen(std::size_t bits, const BigInt& e_preference, Rng& rng);

// Fixed-input mode: p and q given. Throws FixedExponentNotCoprime when
// gcd(e, phi) != 1, InputError when p, q are not distinct primes.
RsaKeyPair keygen_from_primes(const BigInt& p, const BigInt& q, const BigInt& e);

// Both throw MessageOutOfRange unless 0 <= value < n.
BigInt encrypt(const RsaPublicKey& key, const BigInt& message);
BigInt decrypt(const RsaPrivateKey& key, const BigInt& ciphertext);

// Key file: { "n", "e", "d", "p", "q" } as decimal strings; private fields optional.
nlohmann::json to_json(const RsaPublicKey& key);
nlohmann::json to_json(const RsaKeyPair& key);
RsaPublicKey public_key_from_json(const nlohmann::json& j);
RsaPrivateKey private_key_from_json(const nlohmann::json& j);

BigInt parse_decimal(const std::string& text, const std::string& field_name);

}  // namespace trapion::rsa
