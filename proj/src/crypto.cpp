// dscot: NFT-registry and private-ledger simulator for IoT authentication
// Copyright 2026 The dscot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dscot/crypto.hpp"

#include <stdexcept>

#include "dscot/keccak.hpp"

namespace dscot {

namespace {

using u128 = unsigned __int128;

// group modulus: the Mersenne prime 2^127 - 1
constexpr u128 kPrime = (u128{1} << 127) - 1;
constexpr u128 kGroupOrder = kPrime - 1;  // exponent ring modulus
constexpr u128 kGenerator = 3;

u128 fold127(u128 v) {
    return (v & kPrime) + (v >> 127);
}

// (a * b) mod (2^127 - 1) via 64-bit limb products and Mersenne folding
u128 mulmod_p(u128 a, u128 b) {
    std::uint64_t a_lo = static_cast<std::uint64_t>(a), a_hi = static_cast<std::uint64_t>(a >> 64);
    std::uint64_t b_lo = static_cast<std::uint64_t>(b), b_hi = static_cast<std::uint64_t>(b >> 64);

    u128 p00 = u128{a_lo} * b_lo;
    u128 p01 = u128{a_lo} * b_hi;
    u128 p10 = u128{a_hi} * b_lo;
    u128 p11 = u128{a_hi} * b_hi;

    u128 mid = p01 + p10;  // < 2^128: both factors have a_hi, b_hi < 2^63
    u128 lo = p00 + (mid << 64);
    u128 carry = (lo < p00) ? 1 : 0;
    u128 hi = p11 + (mid >> 64) + carry;  // < 2^127

    // 2^127 ≡ 1, so hi:lo = hi*2^128 + lo ≡ 2*hi + lo
    u128 r = fold127(fold127(lo) + fold127(2 * hi));
    while (r >= kPrime) r -= kPrime;
    return r;
}

u128 powmod_p(u128 base, u128 exp) {
    u128 result = 1;
    base %= kPrime;
    while (exp > 0) {
        if (exp & 1) result = mulmod_p(result, base);
        base = mulmod_p(base, base);
        exp >>= 1;
    }
    return result;
}

// (a * b) mod m for arbitrary m < 2^127, shift-and-add
u128 mulmod_any(u128 a, u128 b, u128 m) {
    a %= m;
    u128 acc = 0;
    while (b > 0) {
        if (b & 1) {
            acc += a;
            if (acc >= m) acc -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return acc;
}

u128 load_u128_be(const std::uint8_t* data, std::size_t len) {
    u128 v = 0;
    for (std::size_t i = 0; i < len; ++i) v = (v << 8) | data[i];
    return v;
}

void store_u128_be(std::uint8_t* out, u128 v) {
    for (int i = 15; i >= 0; --i) {
        out[i] = static_cast<std::uint8_t>(v);
        v >>= 8;
    }
}

u128 scalar_from_private(const std::array<std::uint8_t, 32>& priv) {
    u128 hi = load_u128_be(priv.data(), 16);
    u128 lo = load_u128_be(priv.data() + 16, 16);
    // 2^128 ≡ 4 (mod 2^127 - 2), so hi:lo folds to 4*hi + lo
    u128 x = mulmod_any(hi % kGroupOrder, 4, kGroupOrder);
    x = (x + lo % kGroupOrder) % kGroupOrder;
    if (x == 0) x = 1;
    return x;
}

u128 challenge_scalar(u128 commitment, std::span<const std::uint8_t> message) {
    Bytes buf(16);
    store_u128_be(buf.data(), commitment);
    append_bytes(buf, message);
    Digest32 h = keccak256(buf);
    u128 e = load_u128_be(h.bytes.data(), 16) % kGroupOrder;
    return e;
}

u128 group_element_from_key(std::span<const std::uint8_t> public_key) {
    if (public_key.size() != kPublicKeySize || public_key[0] != kPublicKeyTag)
        throw std::invalid_argument("malformed public key");
    u128 y = load_u128_be(public_key.data() + 1, 16);
    if (y == 0 || y >= kPrime) throw std::invalid_argument("public key out of range");
    return y;
}

}  // namespace

KeyPair keypair_from_private(const std::array<std::uint8_t, 32>& private_key) {
    u128 x = scalar_from_private(private_key);
    u128 y = powmod_p(kGenerator, x);

    KeyPair kp;
    kp.private_key = private_key;
    kp.public_key.resize(kPublicKeySize);
    kp.public_key[0] = kPublicKeyTag;
    store_u128_be(kp.public_key.data() + 1, y);
    return kp;
}

KeyPair keypair_from_seed(std::uint64_t seed, std::string_view name) {
    Bytes buf;
    append_bytes(buf, std::span<const std::uint8_t>(
                          reinterpret_cast<const std::uint8_t*>("dscot-key/"), 10));
    append_u64_be(buf, seed);
    buf.push_back(0x00);
    append_bytes(buf, std::span<const std::uint8_t>(
                          reinterpret_cast<const std::uint8_t*>(name.data()), name.size()));
    return keypair_from_private(keccak256(buf).bytes);
}

Address derive_address(std::span<const std::uint8_t> public_key) {
    if (public_key.size() != kPublicKeySize || public_key[0] != kPublicKeyTag)
        throw std::invalid_argument("malformed public key");
    Digest32 h = keccak256(public_key.subspan(1));
    Address a;
    std::copy(h.bytes.begin() + 12, h.bytes.end(), a.bytes.begin());
    return a;
}

Bytes sign(const KeyPair& key, std::span<const std::uint8_t> message) {
    u128 x = scalar_from_private(key.private_key);

    // deterministic nonce from (private key, message)
    Bytes nonce_input(key.private_key.begin(), key.private_key.end());
    append_bytes(nonce_input, message);
    Digest32 nh = keccak256(nonce_input);
    u128 k = load_u128_be(nh.bytes.data(), 16) % kGroupOrder;
    if (k == 0) k = 1;

    u128 r = powmod_p(kGenerator, k);
    u128 e = challenge_scalar(r, message);
    u128 s = (k + mulmod_any(e, x, kGroupOrder)) % kGroupOrder;

    Bytes sig(kSignatureSize);
    store_u128_be(sig.data(), e);
    store_u128_be(sig.data() + 16, s);
    return sig;
}

bool verify(std::span<const std::uint8_t> public_key,
            std::span<const std::uint8_t> message,
            std::span<const std::uint8_t> signature) {
    if (signature.size() != kSignatureSize) return false;
    u128 y;
    try {
        y = group_element_from_key(public_key);
    } catch (const std::invalid_argument&) {
        return false;
    }
    u128 e = load_u128_be(signature.data(), 16);
    u128 s = load_u128_be(signature.data() + 16, 16);
    if (e >= kGroupOrder || s >= kGroupOrder) return false;

    // r' = g^s * y^(-e); matching challenge proves knowledge of log_g(y)
    u128 r = mulmod_p(powmod_p(kGenerator, s), powmod_p(y, kGroupOrder - e));
    return challenge_scalar(r, message) == e;
}

Bytes encode_packed(std::span<const Address> addresses, std::uint64_t timestamp) {
    if (addresses.empty()) throw std::invalid_argument("encode_packed: empty address list");
    Bytes out;
    out.reserve(addresses.size() * 20 + 32);
    for (const Address& a : addresses) append_bytes(out, a.bytes);
    append_u256_be(out, timestamp);
    return out;
}

}  // namespace dscot
