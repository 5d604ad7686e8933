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

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace bentkit {

/// GF(2^m) in polynomial basis: element bit i is the coefficient of alpha^i,
/// where alpha is the root of the defining polynomial. The polynomial must be
/// primitive, which is verified at construction by checking that alpha has
/// multiplicative order 2^m - 1.
class FieldSpec {
public:
    FieldSpec(int m, std::uint64_t poly) : m_(m), poly_(poly) {
        if (m < 1 || m > 24) throw DimensionError("field degree out of range");
        if (poly >> m != 1) throw Error("defining polynomial degree != m");
        verify_primitive();
    }

    /// Default primitive polynomial for each degree.
    static FieldSpec standard(int m) {
        static constexpr std::uint64_t table[] = {
            0,      0,      0b111,       0b1011,       0b10011,       0b100101,
            0b1000011, 0b10000011, 0b100011101, 0b1000010001, 0b10000001001,
            0b100000000101, 0b1000001010011, 0b10000000011011, 0b100000000101011,
            0b1000000000000011, 0b10001000000001011,
        };
        if (m < 2 || m >= static_cast<int>(sizeof(table) / sizeof(table[0])))
            throw DimensionError("no standard polynomial for degree " + std::to_string(m));
        return FieldSpec(m, table[m]);
    }

    int m() const { return m_; }
    std::uint64_t poly() const { return poly_; }
    std::uint32_t order() const { return (std::uint32_t{1} << m_) - 1; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t acc = 0, x = a;
        while (b) {
            if (b & 1) acc ^= x;
            b >>= 1;
            x <<= 1;
            if (x >> m_ & 1) x ^= poly_;
        }
        return static_cast<std::uint32_t>(acc);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse; the zero element has none. (The inverse *map*
    /// with the 0 -> 0 convention is inverse_map() in vectorial.hpp.)
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw Error("field inverse of zero");
        return pow(a, order() - 1);
    }

    /// Absolute trace, sum of the conjugates a^(2^i); always 0 or 1.
    int trace(std::uint32_t a) const {
        std::uint32_t s = 0, x = a;
        for (int i = 0; i < m_; ++i) {
            s ^= x;
            x = mul(x, x);
        }
        return s & 1;  // the sum lies in the prime field
    }

private:
    void verify_primitive() const {
        if (m_ == 1) return;  // GF(2) itself
        std::uint32_t x = 2;  // alpha
        for (std::uint32_t k = 1; k < order(); ++k) {
            if (x == 1) throw Error("polynomial is not primitive: alpha has order " + std::to_string(k));
            x = mul(x, 2);
        }
        if (x != 1) throw Error("polynomial is not irreducible over GF(2)");
    }

    int m_;
    std::uint64_t poly_;
};

}  // namespace bentkit
