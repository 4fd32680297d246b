// Copyright (c) 2026 The idchain Authors
// Distributed under the Apache License, Version 2.0; see the accompanying
// LICENSE file or https://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <span>

#include "idchain/bytes.hpp"

namespace idchain {

// Base field of the pairing curve: a 381-bit prime from the BLS12 family.
// The companion identities between p, r and the curve parameter are asserted
// in curve_params() at startup, so a typo here cannot survive initialization.
inline const mpz_class& fp_modulus() {
    static const mpz_class p(
        "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f624"
        "1eabfffeb153ffffb9feffffffffaaab",
        16);
    return p;
}

inline constexpr size_t kFpBytes = 48;

class Fp {
public:
    Fp() : v_(0) {}
    explicit Fp(unsigned long x) : v_(x) { v_ %= fp_modulus(); }
    static Fp from_mpz(const mpz_class& x) {
        Fp r;
        mpz_mod(r.v_.get_mpz_t(), x.get_mpz_t(), fp_modulus().get_mpz_t());
        return r;
    }

    bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
    const mpz_class& mpz() const { return v_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        Fp r;
        mpz_add(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        if (mpz_cmp(r.v_.get_mpz_t(), fp_modulus().get_mpz_t()) >= 0)
            mpz_sub(r.v_.get_mpz_t(), r.v_.get_mpz_t(), fp_modulus().get_mpz_t());
        return r;
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        Fp r;
        mpz_sub(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        if (mpz_sgn(r.v_.get_mpz_t()) < 0)
            mpz_add(r.v_.get_mpz_t(), r.v_.get_mpz_t(), fp_modulus().get_mpz_t());
        return r;
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        Fp r;
        mpz_mul(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        mpz_mod(r.v_.get_mpz_t(), r.v_.get_mpz_t(), fp_modulus().get_mpz_t());
        return r;
    }
    Fp operator-() const {
        if (is_zero()) return *this;
        Fp r;
        mpz_sub(r.v_.get_mpz_t(), fp_modulus().get_mpz_t(), v_.get_mpz_t());
        return r;
    }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }

    Fp square() const { return *this * *this; }

    Fp dbl() const {
        Fp r;
        mpz_mul_2exp(r.v_.get_mpz_t(), v_.get_mpz_t(), 1);
        if (mpz_cmp(r.v_.get_mpz_t(), fp_modulus().get_mpz_t()) >= 0)
            mpz_sub(r.v_.get_mpz_t(), r.v_.get_mpz_t(), fp_modulus().get_mpz_t());
        return r;
    }

    Fp inverse() const {
        if (is_zero()) throw Error(ErrorCode::DecodeError, "inverse of zero in Fp");
        Fp r;
        mpz_invert(r.v_.get_mpz_t(), v_.get_mpz_t(), fp_modulus().get_mpz_t());
        return r;
    }

    Fp pow(const mpz_class& e) const {
        Fp r;
        mpz_powm(r.v_.get_mpz_t(), v_.get_mpz_t(), e.get_mpz_t(), fp_modulus().get_mpz_t());
        return r;
    }

    // p = 3 mod 4, so square roots come from one exponentiation.
    std::optional<Fp> sqrt() const {
        static const mpz_class e = (fp_modulus() + 1) / 4;
        Fp r = pow(e);
        if (r.square() == *this) return r;
        return std::nullopt;
    }

    friend bool operator==(const Fp& a, const Fp& b) { return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    // Lexicographic order of the canonical residue, used to pick a canonical
    // square root when hashing to the curve.
    friend bool operator<(const Fp& a, const Fp& b) { return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) < 0; }

    std::array<uint8_t, kFpBytes> encode() const {
        std::array<uint8_t, kFpBytes> out{};
        size_t count = 0;
        mpz_export(out.data(), &count, 1, 1, 1, 0, v_.get_mpz_t());
        if (count < kFpBytes && count > 0) {
            // right-align big-endian
            std::copy_backward(out.begin(), out.begin() + count, out.begin() + kFpBytes);
            std::fill(out.begin(), out.begin() + (kFpBytes - count), 0);
        }
        return out;
    }

    static Fp decode(std::span<const uint8_t> in) {
        if (in.size() != kFpBytes) throw Error(ErrorCode::DecodeError, "Fp element must be 48 bytes");
        mpz_class x;
        mpz_import(x.get_mpz_t(), in.size(), 1, 1, 1, 0, in.data());
        if (x >= fp_modulus()) throw Error(ErrorCode::DecodeError, "Fp element out of range");
        Fp r;
        r.v_ = std::move(x);
        return r;
    }

private:
    mpz_class v_;
};

// Fp2 = Fp[u] / (u^2 + 1), elements a + b*u.
struct Fp2 {
    Fp a, b;

    Fp2() = default;
    Fp2(Fp a_, Fp b_) : a(std::move(a_)), b(std::move(b_)) {}
    static Fp2 zero() { return Fp2(); }
    static Fp2 one() { return Fp2(Fp(1), Fp()); }
    static Fp2 from_base(Fp x) { return Fp2(std::move(x), Fp()); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend Fp2 operator+(const Fp2& x, const Fp2& y) { return Fp2(x.a + y.a, x.b + y.b); }
    friend Fp2 operator-(const Fp2& x, const Fp2& y) { return Fp2(x.a - y.a, x.b - y.b); }
    Fp2 operator-() const { return Fp2(-a, -b); }

    friend Fp2 operator*(const Fp2& x, const Fp2& y) {
        // Karatsuba: (a+bu)(c+du) = (ac - bd) + ((a+b)(c+d) - ac - bd) u
        Fp ac = x.a * y.a;
        Fp bd = x.b * y.b;
        Fp cross = (x.a + x.b) * (y.a + y.b);
        return Fp2(ac - bd, cross - ac - bd);
    }

    Fp2 square() const {
        // (a+bu)^2 = (a+b)(a-b) + (2ab) u
        Fp t = a * b;
        return Fp2((a + b) * (a - b), t.dbl());
    }

    Fp2 mul_fp(const Fp& s) const { return Fp2(a * s, b * s); }

    // multiplication by the sextic non-residue xi = 1 + u
    Fp2 mul_xi() const { return Fp2(a - b, a + b); }

    Fp2 conjugate() const { return Fp2(a, -b); }

    Fp2 inverse() const {
        Fp norm = a.square() + b.square();
        Fp ninv = norm.inverse();
        return Fp2(a * ninv, -(b * ninv));
    }

    Fp2 pow(const mpz_class& e) const {
        Fp2 r = one();
        Fp2 base = *this;
        for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
            r = r.square();
            if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = r * base;
        }
        return r;
    }

    // Generic Tonelli-Shanks over Fp2 (group order p^2 - 1).
    std::optional<Fp2> sqrt() const;

    friend bool operator==(const Fp2& x, const Fp2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Fp2& x, const Fp2& y) { return !(x == y); }

    void encode_into(ByteWriter& w) const {
        auto ea = a.encode();
        auto eb = b.encode();
        w.raw(ea);
        w.raw(eb);
    }
    static Fp2 decode(ByteReader& r) {
        Fp a = Fp::decode(r.raw(kFpBytes));
        Fp b = Fp::decode(r.raw(kFpBytes));
        return Fp2(a, b);
    }
};

inline mpz_class fp2_group_order() { return fp_modulus() * fp_modulus() - 1; }

inline bool fp2_is_square(const Fp2& x) {
    if (x.is_zero()) return true;
    static const mpz_class e = fp2_group_order() / 2;
    return x.pow(e) == Fp2::one();
}

inline std::optional<Fp2> Fp2::sqrt() const {
    if (is_zero()) return Fp2::zero();
    if (!fp2_is_square(*this)) return std::nullopt;
    // Tonelli-Shanks with q = p^2 - 1 = 2^s * m, m odd.
    static const mpz_class q = fp2_group_order();
    static const auto split = [] {
        mpz_class m = q;
        unsigned s = 0;
        while (mpz_even_p(m.get_mpz_t())) {
            m >>= 1;
            ++s;
        }
        return std::pair<mpz_class, unsigned>(m, s);
    }();
    static const Fp2 nonresidue = [] {
        // deterministic scan for a quadratic non-residue
        for (unsigned long i = 1;; ++i) {
            Fp2 cand(Fp(i), Fp(1));
            if (!fp2_is_square(cand)) return cand;
        }
    }();
    const mpz_class& m = split.first;
    unsigned s = split.second;

    Fp2 z = nonresidue.pow(m);
    Fp2 x = pow((m + 1) / 2);
    Fp2 t = pow(m);
    unsigned r = s;
    while (t != Fp2::one()) {
        Fp2 tt = t;
        unsigned i = 0;
        while (tt != Fp2::one()) {
            tt = tt.square();
            ++i;
            if (i == r) return std::nullopt;
        }
        Fp2 b = z;
        for (unsigned j = 0; j + i + 1 < r; ++j) b = b.square();
        x = x * b;
        z = b.square();
        t = t * z;
        r = i;
    }
    if (x.square() != *this) return std::nullopt;
    return x;
}

// Fp6 = Fp2[v] / (v^3 - xi), elements c0 + c1*v + c2*v^2.
struct Fp6 {
    Fp2 c0, c1, c2;

    Fp6() = default;
    Fp6(Fp2 c0_, Fp2 c1_, Fp2 c2_) : c0(std::move(c0_)), c1(std::move(c1_)), c2(std::move(c2_)) {}
    static Fp6 zero() { return Fp6(); }
    static Fp6 one() { return Fp6(Fp2::one(), Fp2::zero(), Fp2::zero()); }

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

    friend Fp6 operator+(const Fp6& x, const Fp6& y) { return Fp6(x.c0 + y.c0, x.c1 + y.c1, x.c2 + y.c2); }
    friend Fp6 operator-(const Fp6& x, const Fp6& y) { return Fp6(x.c0 - y.c0, x.c1 - y.c1, x.c2 - y.c2); }
    Fp6 operator-() const { return Fp6(-c0, -c1, -c2); }

    friend Fp6 operator*(const Fp6& x, const Fp6& y) {
        Fp2 v0 = x.c0 * y.c0;
        Fp2 v1 = x.c1 * y.c1;
        Fp2 v2 = x.c2 * y.c2;
        Fp2 t0 = ((x.c1 + x.c2) * (y.c1 + y.c2) - v1 - v2).mul_xi() + v0;
        Fp2 t1 = (x.c0 + x.c1) * (y.c0 + y.c1) - v0 - v1 + v2.mul_xi();
        Fp2 t2 = (x.c0 + x.c2) * (y.c0 + y.c2) - v0 - v2 + v1;
        return Fp6(t0, t1, t2);
    }

    Fp6 square() const { return *this * *this; }

    Fp6 mul_fp2(const Fp2& s) const { return Fp6(c0 * s, c1 * s, c2 * s); }

    // multiplication by v
    Fp6 mul_v() const { return Fp6(c2.mul_xi(), c0, c1); }

    Fp6 inverse() const {
        // standard formulas for cubic extension by v^3 = xi
        Fp2 a = c0.square() - (c1 * c2).mul_xi();
        Fp2 b = c2.square().mul_xi() - c0 * c1;
        Fp2 c = c1.square() - c0 * c2;
        Fp2 t = (c2 * b + c1 * c).mul_xi() + c0 * a;
        Fp2 tinv = t.inverse();
        return Fp6(a * tinv, b * tinv, c * tinv);
    }

    friend bool operator==(const Fp6& x, const Fp6& y) { return x.c0 == y.c0 && x.c1 == y.c1 && x.c2 == y.c2; }
    friend bool operator!=(const Fp6& x, const Fp6& y) { return !(x == y); }

    void encode_into(ByteWriter& w) const {
        c0.encode_into(w);
        c1.encode_into(w);
        c2.encode_into(w);
    }
    static Fp6 decode(ByteReader& r) {
        Fp2 c0 = Fp2::decode(r);
        Fp2 c1 = Fp2::decode(r);
        Fp2 c2 = Fp2::decode(r);
        return Fp6(c0, c1, c2);
    }
};

// Fp12 = Fp6[w] / (w^2 - v), elements d0 + d1*w.
struct Fp12 {
    Fp6 d0, d1;

    Fp12() = default;
    Fp12(Fp6 d0_, Fp6 d1_) : d0(std::move(d0_)), d1(std::move(d1_)) {}
    static Fp12 zero() { return Fp12(); }
    static Fp12 one() { return Fp12(Fp6::one(), Fp6::zero()); }

    bool is_zero() const { return d0.is_zero() && d1.is_zero(); }
    bool is_one() const { return *this == one(); }

    friend Fp12 operator+(const Fp12& x, const Fp12& y) { return Fp12(x.d0 + y.d0, x.d1 + y.d1); }
    friend Fp12 operator-(const Fp12& x, const Fp12& y) { return Fp12(x.d0 - y.d0, x.d1 - y.d1); }

    friend Fp12 operator*(const Fp12& x, const Fp12& y) {
        Fp6 v0 = x.d0 * y.d0;
        Fp6 v1 = x.d1 * y.d1;
        Fp6 mid = (x.d0 + x.d1) * (y.d0 + y.d1) - v0 - v1;
        return Fp12(v0 + v1.mul_v(), mid);
    }

    Fp12 square() const {
        Fp6 v0 = d0 * d1;
        Fp6 t = (d0 + d1) * (d0 + d1.mul_v());
        return Fp12(t - v0 - v0.mul_v(), v0 + v0);
    }

    // conjugation = Frobenius by p^6 (w -> -w)
    Fp12 conjugate() const { return Fp12(d0, -d1); }

    Fp12 inverse() const {
        Fp6 t = (d0 * d0 - (d1 * d1).mul_v()).inverse();
        return Fp12(d0 * t, -(d1 * t));
    }

    Fp12 pow(const mpz_class& e) const {
        if (mpz_sgn(e.get_mpz_t()) == 0) return one();
        Fp12 r = one();
        Fp12 base = *this;
        for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
            r = r.square();
            if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = r * base;
        }
        return r;
    }

    friend bool operator==(const Fp12& x, const Fp12& y) { return x.d0 == y.d0 && x.d1 == y.d1; }
    friend bool operator!=(const Fp12& x, const Fp12& y) { return !(x == y); }

    void encode_into(ByteWriter& w) const {
        d0.encode_into(w);
        d1.encode_into(w);
    }
    static Fp12 decode(ByteReader& r) {
        Fp6 d0 = Fp6::decode(r);
        Fp6 d1 = Fp6::decode(r);
        return Fp12(d0, d1);
    }
};

}  // namespace idchain
