// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddepth {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] inline void fail(const std::string& msg) {
    throw std::runtime_error(msg);
}

#define DDEPTH_CHECK(cond, msg)            \
    do {                                   \
        if (!(cond)) ::ddepth::fail(msg);  \
    } while (0)

inline std::string shape_str(const std::vector<int>& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        out += std::to_string(s[i]);
        if (i + 1 < s.size()) out += ",";
    }
    out += ")";
    return out;
}

template <typename T>
std::string num_str(T v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

inline std::string fstr(double v) { return num_str(v, "%.9g"); }

/// Counter-free PCG32 stream. Two 64-bit words of state: trivially
/// serializable, bit-identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) {
        state_ = 0;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
    }

    uint64_t next_u64() {
        uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform double in [0,1).
    double uniform() { return next_u32() * (1.0 / 4294967296.0); }

    float uniform(float lo, float hi) {
        return lo + static_cast<float>(uniform()) * (hi - lo);
    }

    /// Inclusive range.
    int uniform_int(int lo, int hi) {
        DDEPTH_CHECK(hi >= lo, "uniform_int: empty range");
        uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    /// Standard normal via Box-Muller. Draws a fresh pair every call so the
    /// stream state has no hidden cache to serialize.
    float normal() {
        double u1 = (static_cast<double>(next_u32()) + 1.0) * (1.0 / 4294967296.0);
        double u2 = next_u32() * (1.0 / 4294967296.0);
        return static_cast<float>(std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2));
    }

    void save(uint64_t& state, uint64_t& inc) const {
        state = state_;
        inc = inc_;
    }
    void restore(uint64_t state, uint64_t inc) {
        state_ = state;
        inc_ = inc;
    }

private:
    uint64_t state_;
    uint64_t inc_;
};

/// FNV-1a, used for config hashes and sub-stream derivation.
inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = 1469598103934665603ULL) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

inline uint64_t derive_stream(uint64_t seed, uint64_t purpose) {
    uint64_t buf[2] = {seed, purpose};
    return fnv1a(buf, sizeof(buf));
}

}  // namespace ddepth
