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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "subspace.hpp"

namespace bentkit {

namespace detail {

inline void check_dimension(int n) {
    if (n < 1) throw DimensionError("variable count must be at least 1");
    if (n > max_dimension())
        throw DimensionError("variable count " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(max_dimension()));
}

/// In-place binary Moebius transform of a packed 2^n-bit table. Involution;
/// maps a truth table to its ANF coefficients and back.
inline void moebius_inplace(bits::word* w, int n) {
    const std::size_t nwords = bits::word_count(n);
    for (int d = 0; d < n && d < 6; ++d)
        for (std::size_t i = 0; i < nwords; ++i)
            w[i] ^= (w[i] & bits::kHalfMask[d]) << (1u << d);
    for (int d = 6; d < n; ++d) {
        const std::size_t hi = std::size_t{1} << (d - 6);
        for (std::size_t i = 0; i < nwords; ++i)
            if (i & hi) w[i] ^= w[i ^ hi];
    }
}

}  // namespace detail

/// Truth table of f: F_2^n -> F_2, packed 64 values per word.
///
/// Index x encodes the input (x_1, ..., x_n) with x_1 as the least
/// significant bit, so the scalar product x.y is the parity of x & y.
/// Immutable once built; every operation on it is a pure function, so
/// instances can be shared freely across threads.
class BooleanFunction {
public:
    explicit BooleanFunction(int n) : n_(n) {
        detail::check_dimension(n);
        words_.assign(bits::word_count(n), 0);
    }

    template <class Fn>
    static BooleanFunction build(int n, Fn&& fn) {
        detail::check_dimension(n);
        std::vector<bits::word> w(bits::word_count(n), 0);
        for (std::size_t x = 0; x < (std::size_t{1} << n); ++x)
            if (fn(static_cast<point>(x))) bits::set_bit(w.data(), x, true);
        return BooleanFunction(n, std::move(w));
    }

    static BooleanFunction from_words(int n, std::vector<bits::word> words) {
        detail::check_dimension(n);
        if (words.size() != bits::word_count(n)) throw DimensionError("word count mismatch");
        words.back() &= bits::tail_mask(n);
        return BooleanFunction(n, std::move(words));
    }

    int n() const { return n_; }
    std::size_t size() const { return std::size_t{1} << n_; }
    const std::vector<bits::word>& words() const { return words_; }

    bool get(point x) const { return bits::get_bit(words_.data(), x); }
    bool operator()(point x) const { return get(x); }

    bool is_zero() const {
        for (bits::word w : words_)
            if (w) return false;
        return true;
    }

    bool is_ones() const {
        const bits::word full = bits::tail_mask(n_);
        for (bits::word w : words_)
            if (w != full) return false;
        return true;
    }

    bool is_constant() const { return is_zero() || is_ones(); }

    bool operator==(const BooleanFunction&) const = default;

private:
    BooleanFunction(int n, std::vector<bits::word> words) : n_(n), words_(std::move(words)) {}

    int n_;
    std::vector<bits::word> words_;
};

/// ANF coefficient table: bit u is the coefficient of the monomial
/// prod_{i in u} x_i (u read as a variable mask, x_1 = bit 0).
class AnfPolynomial {
public:
    explicit AnfPolynomial(int n) : n_(n) {
        detail::check_dimension(n);
        words_.assign(bits::word_count(n), 0);
    }

    static AnfPolynomial from_monomials(int n, std::span<const point> masks) {
        AnfPolynomial p(n);
        for (point u : masks) {
            if (u >> n != 0) throw DimensionError("monomial mask outside variable range");
            bits::set_bit(p.words_.data(), u, !bits::get_bit(p.words_.data(), u));
        }
        return p;
    }

    static AnfPolynomial from_monomials(int n, std::initializer_list<point> masks) {
        return from_monomials(n, std::span<const point>(masks.begin(), masks.size()));
    }

    int n() const { return n_; }
    std::size_t size() const { return std::size_t{1} << n_; }
    bool coefficient(point u) const { return bits::get_bit(words_.data(), u); }

    /// Set monomial masks in ascending order.
    std::vector<point> monomials() const {
        std::vector<point> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            bits::word w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                w &= w - 1;
                out.push_back(static_cast<point>((i << 6) | unsigned(b)));
            }
        }
        return out;
    }

    bool operator==(const AnfPolynomial&) const = default;

    friend AnfPolynomial to_anf(const BooleanFunction& f);
    friend BooleanFunction from_anf(const AnfPolynomial& p);

private:
    int n_;
    std::vector<bits::word> words_;
};

/// Binary Moebius transform of the truth table.
inline AnfPolynomial to_anf(const BooleanFunction& f) {
    AnfPolynomial p(f.n());
    p.words_ = f.words();
    detail::moebius_inplace(p.words_.data(), p.n_);
    return p;
}

/// Evaluates f(x) = sum over monomial masks u contained in x (the inverse
/// Moebius transform; the transform is an involution).
inline BooleanFunction from_anf(const AnfPolynomial& p) {
    std::vector<bits::word> w = p.words_;
    detail::moebius_inplace(w.data(), p.n_);
    return BooleanFunction::from_words(p.n_, std::move(w));
}

/// Signed Walsh-Hadamard spectrum; entry a is W_f(a). Values are bounded by
/// 2^n, so 64-bit integers suffice for every dimension the cap admits.
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int64_t> values;

    std::int64_t operator[](point a) const { return values[a]; }

    bool parseval_holds() const {
        unsigned __int128 sum = 0;
        for (std::int64_t v : values)
            sum += static_cast<unsigned __int128>(static_cast<__int128>(v) * v);
        return sum == (static_cast<unsigned __int128>(1) << (2 * n));
    }
};

// --- transforms -------------------------------------------------------------

/// g(x) = f(x ^ a).
inline BooleanFunction xor_shift(const BooleanFunction& f, point a) {
    if (a >> f.n() != 0) throw DimensionError("shift point outside domain");
    std::vector<bits::word> out(f.words().size());
    const unsigned lo = a & 63;
    const std::size_t hi = a >> 6;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = bits::xor_permute_word(f.words()[i ^ hi], lo);
    return BooleanFunction::from_words(f.n(), std::move(out));
}

inline int degree(const AnfPolynomial& p) {
    int deg = 0;
    for (point u : p.monomials()) deg = std::max(deg, std::popcount(u));
    return deg;
}

/// Algebraic degree; the zero function has degree 0.
inline int degree(const BooleanFunction& f) { return degree(to_anf(f)); }

template <class Int>
void fwht_inplace(Int* w, std::size_t size) {
    for (std::size_t h = 1; h < size; h <<= 1)
        for (std::size_t i = 0; i < size; i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                const Int a = w[j], b = w[j + h];
                w[j] = a + b;
                w[j + h] = a - b;
            }
}

inline WalshSpectrum wht(const BooleanFunction& f) {
    WalshSpectrum s;
    s.n = f.n();
    s.values.resize(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) s.values[x] = f.get(static_cast<point>(x)) ? -1 : 1;
    fwht_inplace(s.values.data(), s.values.size());
    return s;
}

inline BooleanFunction inverse_wht(const WalshSpectrum& s) {
    detail::check_dimension(s.n);
    if (s.values.size() != (std::size_t{1} << s.n)) throw DimensionError("spectrum length != 2^n");
    std::vector<std::int64_t> w = s.values;
    fwht_inplace(w.data(), w.size());
    const std::int64_t scale = std::int64_t{1} << s.n;
    std::vector<bits::word> out(bits::word_count(s.n), 0);
    for (std::size_t x = 0; x < w.size(); ++x) {
        if (w[x] != scale && w[x] != -scale)
            throw InvalidSpectrumError("spectrum does not invert to a Boolean function");
        if (w[x] < 0) bits::set_bit(out.data(), x, true);
    }
    return BooleanFunction::from_words(s.n, std::move(out));
}

// --- basic algebra ----------------------------------------------------------

inline BooleanFunction add(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.n() != g.n()) throw DimensionError("adding functions of different arity");
    std::vector<bits::word> out(f.words().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.words()[i] ^ g.words()[i];
    return BooleanFunction::from_words(f.n(), std::move(out));
}

inline BooleanFunction complement(const BooleanFunction& f) {
    std::vector<bits::word> out(f.words().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ~f.words()[i];
    return BooleanFunction::from_words(f.n(), std::move(out));
}

inline std::uint64_t weight(const BooleanFunction& f) {
    std::uint64_t w = 0;
    for (bits::word x : f.words()) w += std::uint64_t(std::popcount(x));
    return w;
}

// --- derivatives ------------------------------------------------------------

/// D_a f(x) = f(x + a) + f(x).
inline BooleanFunction derivative(const BooleanFunction& f, point a) {
    return add(f, xor_shift(f, a));
}

/// D_a D_b f(x) = f(x+a+b) + f(x+a) + f(x+b) + f(x); depends only on <a,b>.
inline BooleanFunction second_derivative(const BooleanFunction& f, point a, point b) {
    BooleanFunction out = add(xor_shift(f, a), f);
    out = add(out, xor_shift(f, b));
    return add(out, xor_shift(f, a ^ b));
}

/// Derivative along a subspace: D_{v_1} ... D_{v_k} f over the RREF basis.
inline BooleanFunction subspace_derivative(const BooleanFunction& f, const Subspace& v) {
    if (v.ambient() != f.n()) throw DimensionError("subspace ambient != function arity");
    BooleanFunction out = f;
    for (point b : v.basis()) out = derivative(out, b);
    return out;
}

/// All a (including 0) with D_a f constant; always a linear subspace.
inline std::vector<point> linear_structures(const BooleanFunction& f) {
    std::vector<point> out;
    for (std::size_t a = 0; a < f.size(); ++a)
        if (derivative(f, static_cast<point>(a)).is_constant()) out.push_back(static_cast<point>(a));
    return out;
}

// --- bentness ----------------------------------------------------------------

inline bool is_bent(const BooleanFunction& f) {
    if (f.n() % 2 != 0) return false;
    const WalshSpectrum s = wht(f);
    const std::int64_t flat = std::int64_t{1} << (f.n() / 2);
    for (std::int64_t v : s.values)
        if (v != flat && v != -flat) return false;
    return true;
}

/// Dual of a bent function, read off the spectrum signs:
/// W_f(u) = 2^{n/2} (-1)^{f*(u)}.
inline BooleanFunction dual(const BooleanFunction& f) {
    if (f.n() % 2 != 0) throw NotBentError("dual: function arity is odd");
    const WalshSpectrum s = wht(f);
    const std::int64_t flat = std::int64_t{1} << (f.n() / 2);
    std::vector<bits::word> out(bits::word_count(f.n()), 0);
    for (std::size_t u = 0; u < s.values.size(); ++u) {
        if (s.values[u] != flat && s.values[u] != -flat)
            throw NotBentError("dual: Walsh spectrum is not flat");
        if (s.values[u] < 0) bits::set_bit(out.data(), u, true);
    }
    return BooleanFunction::from_words(f.n(), std::move(out));
}

// --- indicators and restrictions ----------------------------------------------

/// 1 on W, 0 elsewhere; W = {0} gives the delta function at zero.
inline BooleanFunction subspace_indicator(int n, const Subspace& w) {
    if (w.ambient() != n) throw DimensionError("indicator: ambient mismatch");
    std::vector<bits::word> out(bits::word_count(n), 0);
    for (point x : w.points()) bits::set_bit(out.data(), x, true);
    return BooleanFunction::from_words(n, std::move(out));
}

inline BooleanFunction subspace_indicator(const Subspace& w) {
    return subspace_indicator(w.ambient(), w);
}

inline BooleanFunction delta0(int n) { return subspace_indicator(n, Subspace(n)); }

/// Restriction of f to the coset c + V as a dim(V)-variable function:
/// g(z) = f(c' + sum z_i v_i) over V's RREF basis rows in order, where c' is
/// c reduced to the least element of its coset. The Walsh value multiset of
/// the result does not depend on the basis choice.
inline BooleanFunction restrict_to_coset(const BooleanFunction& f, const Subspace& v, point c) {
    if (v.ambient() != f.n()) throw DimensionError("restrict: ambient mismatch");
    const int k = v.dim();
    if (k == 0) throw DimensionError("restrict: zero-dimensional subspace");
    const point rep = v.reduce(c);
    std::vector<bits::word> out(bits::word_count(k), 0);
    // Gray-code walk: gray(i) and gray(i-1) differ exactly in bit ctz(i).
    point x = rep;
    if (f.get(x)) bits::set_bit(out.data(), 0, true);
    for (std::size_t i = 1; i < (std::size_t{1} << k); ++i) {
        x ^= v.basis()[std::countr_zero(i)];
        const std::size_t z = i ^ (i >> 1);
        if (f.get(x)) bits::set_bit(out.data(), z, true);
    }
    return BooleanFunction::from_words(k, std::move(out));
}

}  // namespace bentkit
