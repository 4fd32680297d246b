// Copyright (c) 2026 The idchain Authors
// Distributed under the Apache License, Version 2.0; see the accompanying
// LICENSE file or https://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <gmpxx.h>

#include <array>
#include <span>

#include "idchain/bytes.hpp"
#include "idchain/rng.hpp"

namespace idchain {

// Prime order of G1/G2/Gt (255 bits).
inline const mpz_class& scalar_modulus() {
    static const mpz_class r(
        "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001", 16);
    return r;
}

inline constexpr size_t kScalarBytes = 32;

// Exponent field element: integers modulo the group order, canonical
// encoding 32 bytes big-endian.
class Scalar {
public:
    Scalar() : v_(0) {}
    explicit Scalar(unsigned long x) : v_(x) { v_ %= scalar_modulus(); }
    static Scalar from_mpz(const mpz_class& x) {
        Scalar r;
        mpz_mod(r.v_.get_mpz_t(), x.get_mpz_t(), scalar_modulus().get_mpz_t());
        return r;
    }
    static Scalar from_u64(uint64_t x) {
        mpz_class m;
        mpz_import(m.get_mpz_t(), 1, 1, 8, 1, 0, &x);
        return from_mpz(m);
    }

    // Uniform scalar: 64 bytes reduced mod r (bias < 2^-250).
    static Scalar random(DetRng& rng) {
        uint8_t buf[64];
        rng.fill(buf);
        mpz_class m;
        mpz_import(m.get_mpz_t(), sizeof(buf), 1, 1, 1, 0, buf);
        return from_mpz(m);
    }

    static Scalar random_nonzero(DetRng& rng) {
        for (;;) {
            Scalar s = random(rng);
            if (!s.is_zero()) return s;
        }
    }

    // Uniform scalar with the given bit length bound: value < 2^bits.
    static Scalar random_bounded(DetRng& rng, unsigned bits) {
        Bytes buf = rng.bytes((bits + 7) / 8);
        unsigned excess = static_cast<unsigned>(buf.size() * 8) - bits;
        if (!buf.empty()) buf[0] &= static_cast<uint8_t>(0xff >> excess);
        mpz_class m;
        mpz_import(m.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
        return from_mpz(m);
    }

    bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
    const mpz_class& mpz() const { return v_; }
    size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }
    bool bit(size_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }
    uint64_t low_u64() const { return mpz_get_ui(v_.get_mpz_t()); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r;
        mpz_add(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        if (r.v_ >= scalar_modulus()) r.v_ -= scalar_modulus();
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar r;
        mpz_sub(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        if (mpz_sgn(r.v_.get_mpz_t()) < 0) r.v_ += scalar_modulus();
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        mpz_mul(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        mpz_mod(r.v_.get_mpz_t(), r.v_.get_mpz_t(), scalar_modulus().get_mpz_t());
        return r;
    }
    Scalar operator-() const {
        if (is_zero()) return *this;
        Scalar r;
        mpz_sub(r.v_.get_mpz_t(), scalar_modulus().get_mpz_t(), v_.get_mpz_t());
        return r;
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inverse() const {
        if (is_zero()) throw Error(ErrorCode::DecodeError, "inverse of zero scalar");
        Scalar r;
        mpz_invert(r.v_.get_mpz_t(), v_.get_mpz_t(), scalar_modulus().get_mpz_t());
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    std::array<uint8_t, kScalarBytes> encode() const {
        std::array<uint8_t, kScalarBytes> out{};
        size_t count = 0;
        mpz_export(out.data(), &count, 1, 1, 1, 0, v_.get_mpz_t());
        if (count < kScalarBytes && count > 0) {
            std::copy_backward(out.begin(), out.begin() + count, out.begin() + kScalarBytes);
            std::fill(out.begin(), out.begin() + (kScalarBytes - count), 0);
        }
        return out;
    }
    Bytes encode_bytes() const {
        auto a = encode();
        return Bytes(a.begin(), a.end());
    }
    std::string hex() const { return to_hex(encode()); }

    static Scalar decode(std::span<const uint8_t> in) {
        if (in.size() != kScalarBytes) throw Error(ErrorCode::DecodeError, "scalar must be 32 bytes");
        mpz_class x;
        mpz_import(x.get_mpz_t(), in.size(), 1, 1, 1, 0, in.data());
        if (x >= scalar_modulus()) throw Error(ErrorCode::DecodeError, "scalar out of range");
        Scalar r;
        r.v_ = std::move(x);
        return r;
    }
    static Scalar from_hex(std::string_view h) {
        Bytes b = idchain::from_hex(h);
        return decode(b);
    }

private:
    mpz_class v_;
};

// Uniform-looking scalar from arbitrary bytes (64-byte digest reduced mod r).
inline Scalar hash_to_scalar(std::span<const uint8_t> data) {
    ByteWriter w0;
    w0.str("idchain-h2s");
    w0.u8(0);
    w0.raw(data);
    Digest d0 = sha256(w0.bytes());
    ByteWriter w1;
    w1.str("idchain-h2s");
    w1.u8(1);
    w1.raw(data);
    Digest d1 = sha256(w1.bytes());
    uint8_t buf[64];
    std::copy(d0.begin(), d0.end(), buf);
    std::copy(d1.begin(), d1.end(), buf + 32);
    mpz_class m;
    mpz_import(m.get_mpz_t(), sizeof(buf), 1, 1, 1, 0, buf);
    return Scalar::from_mpz(m);
}

}  // namespace idchain
