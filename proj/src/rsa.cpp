#include "trapion/rsa.hpp"

#include <algorithm>
#include <cctype>

#include "trapion/errors.hpp"
#include "trapion/json_fields.hpp"

namespace trapion::rsa {

namespace {

BigInt random_prime(std::size_t bits, Rng& rng) {
    for (;;) {
        BigInt candidate = nt::random_bits(bits, rng);
        if (bits > 1) bit_set(candidate, 0);
        if (nt::is_probable_prime(candidate, rng, kPrimalityRounds)) return candidate;
    }
}

BigInt decimal_field(const nlohmann::json& j, const std::string& name) {
    return parse_decimal(detail::field<std::string>(j, name), name);
}

}  // namespace

BigInt parse_decimal(const std::string& text, const std::string& field_name) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw InputError("field '" + field_name + "' must be a non-negative decimal string");
    }
    return BigInt(text);
}

RsaKeyPair keygen_from_primes(const BigInt& p, const BigInt& q, const BigInt& e) {
    Rng check_rng(0x5eed);
    if (p == q) throw InputError("p and q must be distinct");
    if (!nt::is_probable_prime(p, check_rng) || !nt::is_probable_prime(q, check_rng)) {
        throw InputError("p and q must be prime");
    }
    const BigInt phi = nt::totient_from_primes(p, q);
    if (e < 2 || nt::gcd(e, phi) != 1) {
        throw FixedExponentNotCoprime("e = " + e.str() + " is not coprime to phi(N) = " + phi.str());
    }
    RsaKeyPair kp;
    kp.priv = {p, q, p * q, phi, nt::modinv(e, phi), e, e};
    kp.pub = {kp.priv.n, e};
    return kp;
}

RsaKeyPair keygen(std::size_t bits, const BigInt& e_preference, Rng& rng) {
    if (bits < 8 || bits > 2048) throw InputError("key size must be in [8, 2048] bits");
    if (e_preference < 2) throw InputError("encryption exponent must be >= 2");
    const std::size_t p_bits = bits / 2;
    const std::size_t q_bits = bits - p_bits;
    for (;;) {
        const BigInt p = random_prime(p_bits, rng);
        const BigInt q = random_prime(q_bits, rng);
        if (p == q) continue;
        const BigInt phi = nt::totient_from_primes(p, q);
        BigInt e = e_preference;
        while (nt::gcd(e, phi) != 1) ++e;
        RsaKeyPair kp;
        kp.priv = {p, q, p * q, phi, nt::modinv(e, phi), e, e_preference};
        kp.pub = {kp.priv.n, e};
        return kp;
    }
}

BigInt encrypt(const RsaPublicKey& key, const BigInt& message) {
    if (message < 0 || message >= key.n) throw MessageOutOfRange("message must satisfy 0 <= M < N");
    return nt::modpow(message, key.e, key.n);
}

BigInt decrypt(const RsaPrivateKey& key, const BigInt& ciphertext) {
    if (ciphertext < 0 || ciphertext >= key.n) {
        throw MessageOutOfRange("ciphertext must satisfy 0 <= C < N");
    }
    return nt::modpow(ciphertext, key.d, key.n);
}

nlohmann::json to_json(const RsaPublicKey& key) {
    return {{"n", key.n.str()}, {"e", key.e.str()}};
}

nlohmann::json to_json(const RsaKeyPair& key) {
    nlohmann::json j = to_json(key.pub);
    j["d"] = key.priv.d.str();
    j["p"] = key.priv.p.str();
    j["q"] = key.priv.q.str();
    if (key.priv.requested_e != key.priv.e) j["requested_e"] = key.priv.requested_e.str();
    return j;
}

RsaPublicKey public_key_from_json(const nlohmann::json& j) {
    RsaPublicKey k{decimal_field(j, "n"), decimal_field(j, "e")};
    if (k.n < 2) throw InputError("field 'n' must be >= 2");
    return k;
}

RsaPrivateKey private_key_from_json(const nlohmann::json& j) {
    RsaPrivateKey k;
    k.n = decimal_field(j, "n");
    k.e = decimal_field(j, "e");
    k.d = decimal_field(j, "d");
    k.requested_e = k.e;
    if (j.contains("p") && j.contains("q")) {
        k.p = decimal_field(j, "p");
        k.q = decimal_field(j, "q");
        if (k.p * k.q != k.n) throw InputError("field 'n' does not equal p * q");
        k.phi = nt::totient_from_primes(k.p, k.q);
    }
    return k;
}

}  // namespace trapion::rsa
