/*
 * Copyright 2026 The bentkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace bentkit::bits {

using word = std::uint64_t;

inline constexpr int kWordBits = 64;

/// kHalfMask[d] marks the 64 bit positions j with bit d of j clear.
inline constexpr word kHalfMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

inline int parity(std::uint32_t x) { return std::popcount(x) & 1; }

inline int parity64(word x) { return std::popcount(x) & 1; }

/// Most significant set bit position; undefined for x == 0.
inline int msb(std::uint32_t x) { return 31 - std::countl_zero(x); }

/// Number of 64-bit words holding a 2^n-bit table.
inline std::size_t word_count(int n) {
    return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
}

/// Valid-bit mask of the (single) word of a 2^n-bit table with n < 6.
inline word tail_mask(int n) {
    return n >= 6 ? ~word{0} : ((word{1} << (std::size_t{1} << n)) - 1);
}

/// Permutes the bits of one word by j -> j ^ lo (lo < 64).
inline word xor_permute_word(word w, unsigned lo) {
    for (int d = 0; d < 6; ++d) {
        if (lo & (1u << d)) {
            const unsigned s = 1u << d;
            w = ((w & kHalfMask[d]) << s) | ((w >> s) & kHalfMask[d]);
        }
    }
    return w;
}

inline bool get_bit(const word* w, std::size_t x) {
    return (w[x >> 6] >> (x & 63)) & 1;
}

inline void set_bit(word* w, std::size_t x, bool v) {
    const word m = word{1} << (x & 63);
    if (v)
        w[x >> 6] |= m;
    else
        w[x >> 6] &= ~m;
}

inline void flip_bit(word* w, std::size_t x) { w[x >> 6] ^= word{1} << (x & 63); }

}  // namespace bentkit::bits
