// Copyright (c) 2026 The idchain Authors
// Distributed under the Apache License, Version 2.0; see the accompanying
// LICENSE file or https://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <sodium.h>

#include "idchain/errors.hpp"

namespace idchain {

using Bytes = std::vector<uint8_t>;
using Digest = std::array<uint8_t, 32>;

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline std::string to_hex(std::span<const uint8_t> data) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(kHex[b >> 4]);
        out.push_back(kHex[b & 0x0f]);
    }
    return out;
}

inline int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

inline Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw Error(ErrorCode::DecodeError, "odd-length hex string");
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = hex_nibble(hex[2 * i]);
        int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw Error(ErrorCode::DecodeError, "invalid hex character");
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

inline Digest sha256(std::span<const uint8_t> data) {
    Digest out;
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

inline Digest sha256(const Bytes& data) { return sha256(std::span<const uint8_t>(data)); }

inline Digest sha256_str(std::string_view s) {
    return sha256(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

// Canonical length-prefixed binary encoding. Every multi-byte integer is
// big-endian; every variable-length field carries a u32 length prefix.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u32(uint32_t v) {
        for (int i = 3; i >= 0; --i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 7; i >= 0; --i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void raw(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
    void blob(std::span<const uint8_t> data) {
        u32(static_cast<uint32_t>(data.size()));
        raw(data);
    }
    void blob(const Bytes& data) { blob(std::span<const uint8_t>(data)); }
    void str(std::string_view s) {
        blob(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
    }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
        return v;
    }
    Bytes raw(size_t n) {
        need(n);
        Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
        pos_ += n;
        return out;
    }
    Bytes blob() {
        uint32_t n = u32();
        return raw(n);
    }
    std::string str() {
        Bytes b = blob();
        return std::string(b.begin(), b.end());
    }
    bool done() const { return pos_ == data_.size(); }
    size_t remaining() const { return data_.size() - pos_; }

private:
    void need(size_t n) const {
        if (pos_ + n > data_.size()) throw Error(ErrorCode::DecodeError, "truncated encoding");
    }
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

// Exact-substring scan, the workhorse of the blindness and unlinkability checks.
inline bool contains_subsequence(std::span<const uint8_t> haystack, std::span<const uint8_t> needle) {
    if (needle.empty() || needle.size() > haystack.size()) return false;
    const auto* end = haystack.data() + haystack.size() - needle.size() + 1;
    for (const auto* p = haystack.data(); p != end; ++p) {
        if (std::memcmp(p, needle.data(), needle.size()) == 0) return true;
    }
    return false;
}

}  // namespace idchain
