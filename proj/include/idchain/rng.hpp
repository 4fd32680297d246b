// Copyright (c) 2026 The idchain Authors
// Distributed under the Apache License, Version 2.0; see the accompanying
// LICENSE file or https://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "idchain/bytes.hpp"

namespace idchain {

// Deterministic, splittable random generator. Every run of the simulator is
// a pure function of the root seed: actors derive independent streams with
// derive(), so inserting a step for one actor never perturbs another's draws.
class DetRng {
public:
    static DetRng from_seed(uint64_t seed) {
        ByteWriter w;
        w.str("idchain-rng-v1");
        w.u64(seed);
        return DetRng(sha256(w.bytes()));
    }

    static DetRng from_key(const Digest& key) { return DetRng(key); }

    DetRng derive(std::string_view label) const {
        ByteWriter w;
        w.raw(key_);
        w.u8(0x01);
        w.str(label);
        return DetRng(sha256(w.bytes()));
    }

    void fill(std::span<uint8_t> out) {
        size_t off = 0;
        while (off < out.size()) {
            ByteWriter w;
            w.raw(key_);
            w.u8(0x02);
            w.u64(counter_++);
            Digest block = sha256(w.bytes());
            size_t n = std::min(block.size(), out.size() - off);
            std::copy(block.begin(), block.begin() + n, out.begin() + off);
            off += n;
        }
    }

    Bytes bytes(size_t n) {
        Bytes out(n);
        fill(out);
        return out;
    }

    uint64_t next_u64() {
        uint8_t buf[8];
        fill(buf);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | buf[i];
        return v;
    }

    // Uniform in [0, bound) by rejection sampling.
    uint64_t uniform(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
        for (;;) {
            uint64_t v = next_u64();
            if (v < limit) return v % bound;
        }
    }

private:
    explicit DetRng(const Digest& key) : key_(key) {}

    Digest key_;
    uint64_t counter_ = 0;
};

}  // namespace idchain
