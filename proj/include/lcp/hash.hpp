// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

namespace lcp {

/// 64-bit FNV-1a over UTF-8 bytes. Fixed algorithm so sim thresholds are
/// identical across builds and platforms.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Maps a 64-bit hash onto [0, 1).
inline double frac64(std::uint64_t h) {
    return static_cast<double>(h) / 18446744073709551616.0;  // 2^64
}

}  // namespace lcp
