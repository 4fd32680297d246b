// Copyright (c) 2026 The idchain Authors
// Distributed under the Apache License, Version 2.0; see the accompanying
// LICENSE file or https://www.apache.org/licenses/LICENSE-2.0
//
// Pairing-friendly group backend. G1 is the prime-order subgroup of
// E: y^2 = x^3 + 4 over Fp (BLS12-381 parameters), G2 lives on the sextic
// twist E': y^2 = x^3 + 4(1+u) over Fp2, and Gt is the order-r subgroup of
// Fp12*. The pairing is the reduced Tate pairing: a Miller loop over the
// (untwisted) second argument followed by the final exponentiation
// f -> f^((p^12-1)/r), computed as conj(f)/f raised to (p^6+1)/r so no
// Frobenius tables are required. Group-law and bilinearity properties are
// enforced by the test suite rather than trusted constants.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idchain/fields.hpp"
#include "idchain/scalar.hpp"

namespace idchain {

namespace ec {

template <typename F>
struct FieldOps;

template <>
struct FieldOps<Fp> {
    static Fp zero() { return Fp(); }
    static Fp one() { return Fp(1); }
};

template <>
struct FieldOps<Fp2> {
    static Fp2 zero() { return Fp2::zero(); }
    static Fp2 one() { return Fp2::one(); }
};

// Jacobian projective point; Z = 0 encodes the point at infinity. The
// addition/doubling formulas below (EFD add-2007-bl / dbl-2009-l) do not
// reference the curve constant b, so one template serves both E and E'.
template <typename F>
struct Jac {
    F X, Y, Z;

    static Jac infinity() { return Jac{FieldOps<F>::zero(), FieldOps<F>::one(), FieldOps<F>::zero()}; }
    static Jac from_affine(const F& x, const F& y) { return Jac{x, y, FieldOps<F>::one()}; }

    bool is_infinity() const { return Z.is_zero(); }

    Jac dbl() const {
        if (is_infinity()) return *this;
        F A = X * X;
        F B = Y * Y;
        F C = B * B;
        F t = X + B;
        F D = t * t - A - C;
        D = D + D;
        F E = A + A + A;
        F Fv = E * E;
        F X3 = Fv - (D + D);
        F eight_c = C + C;
        eight_c = eight_c + eight_c;
        eight_c = eight_c + eight_c;
        F Y3 = E * (D - X3) - eight_c;
        F Z3 = Y * Z;
        Z3 = Z3 + Z3;
        return Jac{X3, Y3, Z3};
    }

    Jac add(const Jac& o) const {
        if (is_infinity()) return o;
        if (o.is_infinity()) return *this;
        F Z1Z1 = Z * Z;
        F Z2Z2 = o.Z * o.Z;
        F U1 = X * Z2Z2;
        F U2 = o.X * Z1Z1;
        F S1 = Y * o.Z * Z2Z2;
        F S2 = o.Y * Z * Z1Z1;
        if (U1 == U2) {
            if (S1 == S2) return dbl();
            return infinity();
        }
        F H = U2 - U1;
        F twoH = H + H;
        F I = twoH * twoH;
        F J = H * I;
        F rr = S2 - S1;
        rr = rr + rr;
        F V = U1 * I;
        F X3 = rr * rr - J - (V + V);
        F S1J = S1 * J;
        F Y3 = rr * (V - X3) - (S1J + S1J);
        F zsum = Z + o.Z;
        F Z3 = (zsum * zsum - Z1Z1 - Z2Z2) * H;
        return Jac{X3, Y3, Z3};
    }

    Jac negate() const {
        if (is_infinity()) return *this;
        return Jac{X, -Y, Z};
    }

    Jac mul_mpz(const mpz_class& k) const {
        if (mpz_sgn(k.get_mpz_t()) == 0 || is_infinity()) return infinity();
        if (mpz_sgn(k.get_mpz_t()) < 0) {
            mpz_class abs = -k;
            return mul_mpz(abs).negate();
        }
        Jac acc = infinity();
        for (long i = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; i >= 0; --i) {
            acc = acc.dbl();
            if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = acc.add(*this);
        }
        return acc;
    }

    bool equals(const Jac& o) const {
        if (is_infinity()) return o.is_infinity();
        if (o.is_infinity()) return false;
        // cross-multiplied comparison avoids normalization
        F Z1Z1 = Z * Z;
        F Z2Z2 = o.Z * o.Z;
        if (!(X * Z2Z2 == o.X * Z1Z1)) return false;
        return Y * (o.Z * Z2Z2) == o.Y * (Z * Z1Z1);
    }

    // affine coordinates; only valid when not infinity
    std::pair<F, F> affine() const {
        F zinv = Z.inverse();
        F zinv2 = zinv * zinv;
        return {X * zinv2, Y * zinv2 * zinv};
    }

    bool on_curve(const F& b) const {
        if (is_infinity()) return true;
        auto [x, y] = affine();
        return y * y == x * x * x + b;
    }
};

}  // namespace ec

struct CurveParams {
    mpz_class p;         // base-field modulus
    mpz_class r;         // subgroup order
    mpz_class h1;        // G1 cofactor
    mpz_class h2;        // twist cofactor
    mpz_class tate_exp;  // (p^6 + 1) / r
    Fp b;                // G1 curve constant
    Fp2 b2;              // twist curve constant 4*(1+u)
    Fp2 xi_inv;          // (1+u)^-1
};

namespace detail {

inline void params_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("curve parameter self-check failed: ") + what);
}

inline CurveParams build_curve_params() {
    CurveParams cp;
    cp.p = fp_modulus();
    cp.r = scalar_modulus();
    cp.b = Fp(4);
    Fp2 xi(Fp(1), Fp(1));
    cp.b2 = xi.mul_fp(Fp(4));
    cp.xi_inv = xi.inverse();

    // The curve family parameter. Everything else about the group orders is
    // derived from (p, r, z); the asserts below tie the three constants
    // together, so a transcription error in any one of them is caught here.
    const mpz_class z_abs("d201000000010000", 16);
    mpz_class t = 1 - z_abs;                 // trace of Frobenius over Fp
    mpz_class n1 = cp.p + 1 - t;             // #E(Fp)
    params_check(n1 % cp.r == 0, "r divides #E(Fp)");
    cp.h1 = n1 / cp.r;

    mpz_class zm1 = -z_abs - 1;
    mpz_class zm1_sq = zm1 * zm1;
    params_check(zm1_sq % 3 == 0, "(z-1)^2 divisible by 3");
    params_check(cp.p == (zm1_sq / 3) * cp.r - z_abs, "p = ((z-1)^2/3) r + z");

    // Trace over Fp2 and the CM decomposition 4p^2 = t2^2 + 3 f2^2.
    mpz_class t2 = t * t - 2 * cp.p;
    mpz_class disc = 4 * cp.p * cp.p - t2 * t2;
    params_check(disc % 3 == 0, "CM discriminant divisible by 3");
    mpz_class f2_sq = disc / 3;
    mpz_class f2;
    mpz_sqrt(f2.get_mpz_t(), f2_sq.get_mpz_t());
    params_check(f2 * f2 == f2_sq, "CM cofactor is a perfect square");

    // Of the six twists of E over Fp2, exactly one has order divisible by r.
    params_check((t2 + 3 * f2) % 2 == 0, "twist trace parity");
    mpz_class p2p1 = cp.p * cp.p + 1;
    std::vector<mpz_class> candidates = {
        p2p1 - t2,
        p2p1 + t2,
        p2p1 - (t2 + 3 * f2) / 2,
        p2p1 + (t2 + 3 * f2) / 2,
        p2p1 - (t2 - 3 * f2) / 2,
        p2p1 + (t2 - 3 * f2) / 2,
    };
    mpz_class twist_order = 0;
    int hits = 0;
    for (const auto& n : candidates) {
        if (n % cp.r == 0) {
            twist_order = n;
            ++hits;
        }
    }
    params_check(hits == 1, "unique r-divisible twist order");

    // Sanity: the chosen order annihilates sample points of the twist.
    int checked = 0;
    for (unsigned long ctr = 0; checked < 2 && ctr < 4096; ++ctr) {
        Fp2 x(Fp(ctr), Fp(ctr + 7));
        Fp2 rhs = x * x * x + cp.b2;
        auto y = rhs.sqrt();
        if (!y) continue;
        auto pt = ec::Jac<Fp2>::from_affine(x, *y);
        params_check(pt.mul_mpz(twist_order).is_infinity(), "twist order annihilates sample point");
        ++checked;
    }
    params_check(checked == 2, "found sample twist points");
    cp.h2 = twist_order / cp.r;

    mpz_class p6 = cp.p * cp.p;
    p6 = p6 * p6 * p6;  // p^6
    mpz_class p6p1 = p6 + 1;
    params_check(p6p1 % cp.r == 0, "r divides p^6 + 1");
    cp.tate_exp = p6p1 / cp.r;
    return cp;
}

}  // namespace detail

inline const CurveParams& curve_params() {
    static const CurveParams cp = detail::build_curve_params();
    return cp;
}

inline constexpr size_t kG1Bytes = 1 + 2 * kFpBytes;   // prefix + x + y
inline constexpr size_t kG2Bytes = 1 + 4 * kFpBytes;   // prefix + x + y over Fp2
inline constexpr size_t kGtBytes = 12 * kFpBytes;

inline Fp hash_to_fp(std::string_view domain, std::span<const uint8_t> data, uint8_t idx) {
    uint8_t buf[64];
    for (uint8_t block = 0; block < 2; ++block) {
        ByteWriter w;
        w.str(domain);
        w.u8(idx);
        w.u8(block);
        w.raw(data);
        Digest d = sha256(w.bytes());
        std::copy(d.begin(), d.end(), buf + 32 * block);
    }
    mpz_class m;
    mpz_import(m.get_mpz_t(), sizeof(buf), 1, 1, 1, 0, buf);
    return Fp::from_mpz(m);
}

class G1Element {
public:
    G1Element() : pt_(ec::Jac<Fp>::infinity()) {}

    static G1Element identity() { return G1Element(); }
    static const G1Element& generator();

    bool is_identity() const { return pt_.is_infinity(); }

    G1Element add(const G1Element& o) const { return G1Element(pt_.add(o.pt_)); }
    G1Element sub(const G1Element& o) const { return G1Element(pt_.add(o.pt_.negate())); }
    G1Element negate() const { return G1Element(pt_.negate()); }
    G1Element dbl() const { return G1Element(pt_.dbl()); }

    G1Element mul(const Scalar& k) const { return G1Element(pt_.mul_mpz(k.mpz())); }

    friend bool operator==(const G1Element& a, const G1Element& b) { return a.pt_.equals(b.pt_); }
    friend bool operator!=(const G1Element& a, const G1Element& b) { return !(a == b); }

    Bytes encode() const {
        ByteWriter w;
        if (pt_.is_infinity()) {
            w.u8(0x00);
            w.raw(Bytes(2 * kFpBytes, 0));
        } else {
            auto [x, y] = pt_.affine();
            w.u8(0x04);
            w.raw(x.encode());
            w.raw(y.encode());
        }
        return w.take();
    }
    std::string hex() const { return to_hex(encode()); }

    static G1Element decode(std::span<const uint8_t> in) {
        if (in.size() != kG1Bytes) throw Error(ErrorCode::DecodeError, "G1 element must be 97 bytes");
        if (in[0] == 0x00) {
            for (size_t i = 1; i < in.size(); ++i)
                if (in[i] != 0) throw Error(ErrorCode::DecodeError, "malformed G1 infinity");
            return identity();
        }
        if (in[0] != 0x04) throw Error(ErrorCode::DecodeError, "bad G1 prefix");
        Fp x = Fp::decode(in.subspan(1, kFpBytes));
        Fp y = Fp::decode(in.subspan(1 + kFpBytes, kFpBytes));
        if (!(y * y == x * x * x + curve_params().b))
            throw Error(ErrorCode::DecodeError, "G1 point not on curve");
        G1Element p(ec::Jac<Fp>::from_affine(x, y));
        if (!p.pt_.mul_mpz(curve_params().r).is_infinity())
            throw Error(ErrorCode::DecodeError, "G1 point not in prime-order subgroup");
        return p;
    }
    static G1Element from_hex(std::string_view h) {
        Bytes b = idchain::from_hex(h);
        return decode(b);
    }

    // affine access for the pairing
    std::pair<Fp, Fp> affine() const { return pt_.affine(); }

private:
    explicit G1Element(ec::Jac<Fp> pt) : pt_(std::move(pt)) {}
    friend G1Element hash_to_g1(std::string_view);
    ec::Jac<Fp> pt_;
};

inline G1Element hash_to_g1(std::string_view tag) {
    Bytes tag_bytes = to_bytes(tag);
    for (uint32_t ctr = 0;; ++ctr) {
        ByteWriter seed;
        seed.raw(tag_bytes);
        seed.u32(ctr);
        Fp x = hash_to_fp("idchain-h2c-g1", seed.bytes(), 0);
        Fp rhs = x * x * x + curve_params().b;
        auto y = rhs.sqrt();
        if (!y) continue;
        Fp yc = std::min(*y, -*y);
        auto pt = ec::Jac<Fp>::from_affine(x, yc).mul_mpz(curve_params().h1);
        if (!pt.is_infinity()) return G1Element(pt);
    }
}

inline const G1Element& G1Element::generator() {
    static const G1Element g = hash_to_g1("idchain/g1-generator/v1");
    return g;
}

class G2Element {
public:
    G2Element() : pt_(ec::Jac<Fp2>::infinity()) {}

    static G2Element identity() { return G2Element(); }
    static const G2Element& generator();

    bool is_identity() const { return pt_.is_infinity(); }

    G2Element add(const G2Element& o) const { return G2Element(pt_.add(o.pt_)); }
    G2Element sub(const G2Element& o) const { return G2Element(pt_.add(o.pt_.negate())); }
    G2Element negate() const { return G2Element(pt_.negate()); }

    G2Element mul(const Scalar& k) const { return G2Element(pt_.mul_mpz(k.mpz())); }

    friend bool operator==(const G2Element& a, const G2Element& b) { return a.pt_.equals(b.pt_); }
    friend bool operator!=(const G2Element& a, const G2Element& b) { return !(a == b); }

    Bytes encode() const {
        ByteWriter w;
        if (pt_.is_infinity()) {
            w.u8(0x00);
            w.raw(Bytes(4 * kFpBytes, 0));
        } else {
            auto [x, y] = pt_.affine();
            w.u8(0x04);
            x.encode_into(w);
            y.encode_into(w);
        }
        return w.take();
    }
    std::string hex() const { return to_hex(encode()); }

    static G2Element decode(std::span<const uint8_t> in) {
        if (in.size() != kG2Bytes) throw Error(ErrorCode::DecodeError, "G2 element must be 193 bytes");
        if (in[0] == 0x00) {
            for (size_t i = 1; i < in.size(); ++i)
                if (in[i] != 0) throw Error(ErrorCode::DecodeError, "malformed G2 infinity");
            return identity();
        }
        if (in[0] != 0x04) throw Error(ErrorCode::DecodeError, "bad G2 prefix");
        ByteReader r(in.subspan(1));
        Fp2 x = Fp2::decode(r);
        Fp2 y = Fp2::decode(r);
        if (!(y * y == x * x * x + curve_params().b2))
            throw Error(ErrorCode::DecodeError, "G2 point not on twist");
        G2Element p(ec::Jac<Fp2>::from_affine(x, y));
        if (!p.pt_.mul_mpz(curve_params().r).is_infinity())
            throw Error(ErrorCode::DecodeError, "G2 point not in prime-order subgroup");
        return p;
    }
    static G2Element from_hex(std::string_view h) {
        Bytes b = idchain::from_hex(h);
        return decode(b);
    }

    std::pair<Fp2, Fp2> affine() const { return pt_.affine(); }

private:
    explicit G2Element(ec::Jac<Fp2> pt) : pt_(std::move(pt)) {}
    friend G2Element hash_to_g2(std::string_view);
    ec::Jac<Fp2> pt_;
};

inline G2Element hash_to_g2(std::string_view tag) {
    Bytes tag_bytes = to_bytes(tag);
    for (uint32_t ctr = 0;; ++ctr) {
        ByteWriter seed;
        seed.raw(tag_bytes);
        seed.u32(ctr);
        Fp xa = hash_to_fp("idchain-h2c-g2", seed.bytes(), 0);
        Fp xb = hash_to_fp("idchain-h2c-g2", seed.bytes(), 1);
        Fp2 x(xa, xb);
        Fp2 rhs = x * x * x + curve_params().b2;
        auto y = rhs.sqrt();
        if (!y) continue;
        Fp2 yc = *y;
        // canonical sign: prefer the root whose last coefficient is smaller
        Fp2 yn = -yc;
        if (yn.b < yc.b || (yn.b == yc.b && yn.a < yc.a)) yc = yn;
        auto pt = ec::Jac<Fp2>::from_affine(x, yc).mul_mpz(curve_params().h2);
        if (!pt.is_infinity()) return G2Element(pt);
    }
}

inline const G2Element& G2Element::generator() {
    static const G2Element g = hash_to_g2("idchain/g2-generator/v1");
    return g;
}

class GtElement {
public:
    GtElement() : v_(Fp12::one()) {}
    explicit GtElement(Fp12 v) : v_(std::move(v)) {}

    static GtElement one() { return GtElement(); }
    bool is_one() const { return v_.is_one(); }

    GtElement mul(const GtElement& o) const { return GtElement(v_ * o.v_); }
    GtElement inverse() const { return GtElement(v_.inverse()); }
    GtElement exp(const Scalar& k) const { return GtElement(v_.pow(k.mpz())); }

    friend bool operator==(const GtElement& a, const GtElement& b) { return a.v_ == b.v_; }
    friend bool operator!=(const GtElement& a, const GtElement& b) { return !(a == b); }

    Bytes encode() const {
        ByteWriter w;
        v_.encode_into(w);
        return w.take();
    }
    std::string hex() const { return to_hex(encode()); }

    static GtElement decode(std::span<const uint8_t> in) {
        if (in.size() != kGtBytes) throw Error(ErrorCode::DecodeError, "Gt element must be 576 bytes");
        ByteReader r(in);
        Fp12 v = Fp12::decode(r);
        if (v.is_zero()) throw Error(ErrorCode::DecodeError, "Gt element is zero");
        if (!v.pow(curve_params().r).is_one())
            throw Error(ErrorCode::DecodeError, "Gt element not in order-r subgroup");
        return GtElement(v);
    }

    const Fp12& raw() const { return v_; }

private:
    Fp12 v_;
};

namespace detail {

// Untwisted affine image of a G2 point inside E(Fp12). With the tower
// Fp12 = Fp6[w]/(w^2 - v), Fp6 = Fp2[v]/(v^3 - xi), the isomorphism from the
// twist y^2 = x^3 + 4 xi is (x, y) -> (x/v, y/(v w)); both images are sparse:
// x/v sits at the v^2 slot scaled by xi^-1, y/(vw) at the v*w slot.
struct UntwistedPoint {
    Fp2 x_c2;  // coefficient of v^2 in the x-coordinate
    Fp2 y_c1;  // coefficient of v*w in the y-coordinate
};

inline UntwistedPoint untwist(const G2Element& q) {
    auto [xq, yq] = q.affine();
    return UntwistedPoint{xq * curve_params().xi_inv, yq * curve_params().xi_inv};
}

inline Fp12 untwisted_x(const UntwistedPoint& u) {
    return Fp12(Fp6(Fp2::zero(), Fp2::zero(), u.x_c2), Fp6::zero());
}
inline Fp12 untwisted_y(const UntwistedPoint& u) {
    return Fp12(Fp6::zero(), Fp6(Fp2::zero(), u.y_c1, Fp2::zero()));
}

// Value at Q of the line through R with slope lambda (all of R, lambda in Fp):
//   l(Q) = y_Q - lambda * x_Q - (y_R - lambda * x_R)
inline Fp12 line_eval(const UntwistedPoint& q, const Fp& lambda, const Fp& rx, const Fp& ry) {
    Fp c = lambda * rx - ry;
    Fp6 d0(Fp2::from_base(c), Fp2::zero(), -q.x_c2.mul_fp(lambda));
    Fp6 d1(Fp2::zero(), q.y_c1, Fp2::zero());
    return Fp12(d0, d1);
}

// Value at Q of the vertical line through x = vx.
inline Fp12 vertical_eval(const UntwistedPoint& q, const Fp& vx) {
    Fp6 d0(Fp2::from_base(-vx), Fp2::zero(), q.x_c2);
    return Fp12(d0, Fp6::zero());
}

struct MillerResult {
    Fp12 num;
    Fp12 den;
};

// Textbook Miller loop computing f_{r,P}(Q) as numerator/denominator, with
// all point arithmetic on P's side in affine Fp coordinates.
inline MillerResult miller_loop(const G1Element& p, const G2Element& q) {
    const auto& cp = curve_params();
    UntwistedPoint uq = untwist(q);
    auto [px, py] = p.affine();

    Fp rx = px, ry = py;
    Fp12 num = Fp12::one();
    Fp12 den = Fp12::one();

    long top = static_cast<long>(mpz_sizeinbase(cp.r.get_mpz_t(), 2)) - 1;
    for (long i = top - 1; i >= 0; --i) {
        // tangent at R, then R <- 2R
        Fp lambda = (rx * rx).dbl() + rx * rx;          // 3 x^2
        lambda = lambda * ry.dbl().inverse();           // / 2y
        Fp12 l = line_eval(uq, lambda, rx, ry);
        Fp x3 = lambda * lambda - rx.dbl();
        Fp y3 = lambda * (rx - x3) - ry;
        num = num.square() * l;
        den = den.square() * vertical_eval(uq, x3);
        rx = x3;
        ry = y3;

        if (mpz_tstbit(cp.r.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            if (rx == px && ry == -py) {
                // chord through R and P is the vertical line; R + P = O.
                // This happens exactly at the last iteration since r is prime.
                if (i != 0) throw std::logic_error("miller loop hit infinity early");
                num = num * vertical_eval(uq, rx);
                // v at infinity contributes 1
                rx = Fp();
                ry = Fp();
            } else {
                if (rx == px) throw std::logic_error("miller loop degenerate addition");
                Fp lambda2 = (py - ry) * (px - rx).inverse();
                Fp12 l2 = line_eval(uq, lambda2, rx, ry);
                Fp x3a = lambda2 * lambda2 - rx - px;
                Fp y3a = lambda2 * (rx - x3a) - ry;
                num = num * l2;
                den = den * vertical_eval(uq, x3a);
                rx = x3a;
                ry = y3a;
            }
        }
    }
    return MillerResult{num, den};
}

inline GtElement final_exponentiation(const Fp12& f) {
    // f^(p^6 - 1) via conjugation, then the remaining (p^6+1)/r by plain
    // square-and-multiply.
    Fp12 easy = f.conjugate() * f.inverse();
    return GtElement(easy.pow(curve_params().tate_exp));
}

}  // namespace detail

inline GtElement pairing(const G1Element& p, const G2Element& q) {
    if (p.is_identity() || q.is_identity()) return GtElement::one();
    auto mr = detail::miller_loop(p, q);
    return detail::final_exponentiation(mr.num * mr.den.inverse());
}

// Product of pairings with a single shared final exponentiation. Returns
// prod_i e(p_i, q_i).
inline GtElement pairing_product(std::span<const std::pair<G1Element, G2Element>> pairs) {
    Fp12 num = Fp12::one();
    Fp12 den = Fp12::one();
    bool any = false;
    for (const auto& [p, q] : pairs) {
        if (p.is_identity() || q.is_identity()) continue;
        auto mr = detail::miller_loop(p, q);
        num = num * mr.num;
        den = den * mr.den;
        any = true;
    }
    if (!any) return GtElement::one();
    return detail::final_exponentiation(num * den.inverse());
}

}  // namespace idchain
