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
#include <optional>
#include <utility>
#include <vector>

#include "boolean_function.hpp"
#include "gf2m.hpp"
#include "subspace.hpp"

namespace bentkit {

/// Vectorial Boolean function F: F_2^m -> F_2^t stored as a value table.
/// Inputs and outputs use the same bit convention as BooleanFunction
/// (coordinate 1 is the least significant bit).
class VectorialFunction {
public:
    VectorialFunction(int m, int t, std::vector<std::uint32_t> table)
        : m_(m), t_(t), table_(std::move(table)) {
        detail::check_dimension(m);
        detail::check_dimension(t);
        if (table_.size() != (std::size_t{1} << m)) throw DimensionError("value table length != 2^m");
        for (std::uint32_t v : table_)
            if (v >> t_ != 0) throw DimensionError("table entry outside output range");
    }

    template <class Fn>
    static VectorialFunction build(int m, int t, Fn&& fn) {
        std::vector<std::uint32_t> tab(std::size_t{1} << m);
        for (std::size_t x = 0; x < tab.size(); ++x) tab[x] = fn(static_cast<point>(x));
        return VectorialFunction(m, t, std::move(tab));
    }

    static VectorialFunction identity(int m) {
        return build(m, m, [](point x) { return x; });
    }

    int m() const { return m_; }
    int t() const { return t_; }
    std::size_t size() const { return table_.size(); }
    const std::vector<std::uint32_t>& table() const { return table_; }
    std::uint32_t operator()(point x) const { return table_[x]; }

    bool operator==(const VectorialFunction&) const = default;

private:
    int m_;
    int t_;
    std::vector<std::uint32_t> table_;
};

// --- field-defined maps -------------------------------------------------------

/// x -> x^d over GF(2^m); a permutation iff gcd(d, 2^m - 1) = 1.
inline VectorialFunction monomial_map(const FieldSpec& spec, std::uint64_t d) {
    return VectorialFunction::build(spec.m(), spec.m(),
                                    [&](point x) { return spec.pow(x, d); });
}

/// x -> x^{-1} with the 0 -> 0 convention.
inline VectorialFunction inverse_map(const FieldSpec& spec) {
    return VectorialFunction::build(spec.m(), spec.m(), [&](point x) {
        return x == 0 ? 0u : spec.inv(x);
    });
}

/// Tr(x^d) as a Boolean function on m variables.
inline BooleanFunction trace_monomial(const FieldSpec& spec, std::uint64_t d) {
    return BooleanFunction::build(spec.m(), [&](point x) { return spec.trace(spec.pow(x, d)) != 0; });
}

// --- coordinates and components -----------------------------------------------

inline BooleanFunction coordinate(const VectorialFunction& f, int i) {
    if (i < 0 || i >= f.t()) throw DimensionError("coordinate index out of range");
    return BooleanFunction::build(f.m(), [&](point x) { return (f(x) >> i) & 1; });
}

/// Component b.F(x); b must be nonzero.
inline BooleanFunction component(const VectorialFunction& f, point b) {
    if (b == 0) throw DimensionError("component selector must be nonzero");
    if (b >> f.t() != 0) throw DimensionError("component selector outside output range");
    return BooleanFunction::build(f.m(), [&](point x) { return bits::parity(f(x) & b) != 0; });
}

inline VectorialFunction from_coordinate_anfs(const std::vector<AnfPolynomial>& anfs) {
    if (anfs.empty()) throw DimensionError("no coordinate polynomials");
    const int m = anfs[0].n();
    const int t = static_cast<int>(anfs.size());
    std::vector<BooleanFunction> coords;
    coords.reserve(anfs.size());
    for (const AnfPolynomial& p : anfs) {
        if (p.n() != m) throw DimensionError("coordinate polynomials differ in arity");
        coords.push_back(from_anf(p));
    }
    return VectorialFunction::build(m, t, [&](point x) {
        std::uint32_t v = 0;
        for (int i = 0; i < t; ++i) v |= std::uint32_t(coords[i].get(x)) << i;
        return v;
    });
}

inline std::vector<AnfPolynomial> coordinate_anfs(const VectorialFunction& f) {
    std::vector<AnfPolynomial> out;
    out.reserve(f.t());
    for (int i = 0; i < f.t(); ++i) out.push_back(to_anf(coordinate(f, i)));
    return out;
}

// --- pointwise algebra ----------------------------------------------------------

inline VectorialFunction vadd(const VectorialFunction& f, const VectorialFunction& g) {
    if (f.m() != g.m() || f.t() != g.t()) throw DimensionError("adding maps of different shape");
    return VectorialFunction::build(f.m(), f.t(), [&](point x) { return f(x) ^ g(x); });
}

/// D_a F(x) = F(x + a) + F(x).
inline VectorialFunction vderivative(const VectorialFunction& f, point a) {
    if (a >> f.m() != 0) throw DimensionError("derivative direction outside domain");
    return VectorialFunction::build(f.m(), f.t(), [&](point x) { return f(x) ^ f(x ^ a); });
}

inline VectorialFunction vsecond_derivative(const VectorialFunction& f, point a, point b) {
    if ((a | b) >> f.m() != 0) throw DimensionError("derivative direction outside domain");
    return VectorialFunction::build(f.m(), f.t(), [&](point x) {
        return f(x) ^ f(x ^ a) ^ f(x ^ b) ^ f(x ^ a ^ b);
    });
}

inline bool vsecond_derivative_is_zero(const VectorialFunction& f, point a, point b) {
    const auto& tab = f.table();
    for (std::size_t x = 0; x < tab.size(); ++x)
        if (tab[x] ^ tab[x ^ a] ^ tab[x ^ b] ^ tab[x ^ a ^ b]) return false;
    return true;
}

inline bool is_constant(const VectorialFunction& f) {
    for (std::uint32_t v : f.table())
        if (v != f.table()[0]) return false;
    return true;
}

inline bool is_zero_map(const VectorialFunction& f) {
    for (std::uint32_t v : f.table())
        if (v != 0) return false;
    return true;
}

inline int degree(const VectorialFunction& f) {
    int deg = 0;
    for (int i = 0; i < f.t(); ++i) deg = std::max(deg, degree(coordinate(f, i)));
    return deg;
}

// --- permutation predicates --------------------------------------------------------

inline bool is_permutation(const VectorialFunction& f) {
    if (f.m() != f.t()) return false;
    std::vector<bool> seen(f.size(), false);
    for (std::uint32_t v : f.table()) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline VectorialFunction inverse_perm(const VectorialFunction& f) {
    if (!is_permutation(f)) throw NotAPermutationError("inverse of a non-bijective map");
    std::vector<std::uint32_t> inv(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) inv[f(static_cast<point>(x))] = static_cast<std::uint32_t>(x);
    return VectorialFunction(f.m(), f.t(), std::move(inv));
}

/// Almost perfect nonlinear: every derivative in a nonzero direction is 2-to-1.
inline bool is_apn(const VectorialFunction& f) {
    if (f.m() != f.t()) throw DimensionError("APN test needs m = t");
    std::vector<std::uint8_t> count(f.size());
    for (std::size_t a = 1; a < f.size(); ++a) {
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t x = 0; x < f.size(); ++x) {
            const std::uint32_t b = f(static_cast<point>(x)) ^ f(static_cast<point>(x ^ a));
            if (++count[b] > 2) return false;
        }
    }
    return true;
}

/// Looks for a component b.F with a linear structure: some nonzero (b, a)
/// with b.D_a F constant. Returns the first such pair in ascending (a, b)
/// order, or nullopt. For each direction a this reduces to a rank question:
/// the offsets D_a F(y) + D_a F(0) span a space whose orthogonal complement
/// holds every valid b.
inline std::optional<std::pair<point, point>> has_component_linear_structure(
    const VectorialFunction& f) {
    for (std::size_t a = 1; a < f.size(); ++a) {
        Subspace offsets(f.t());
        const std::uint32_t base = f(0) ^ f(static_cast<point>(a));
        for (std::size_t y = 0; y < f.size() && offsets.dim() < f.t(); ++y)
            offsets.insert(base ^ f(static_cast<point>(y)) ^ f(static_cast<point>(y ^ a)));
        const Subspace genuine = offsets.orthogonal_complement();
        if (genuine.dim() > 0)  // first basis row is the least nonzero b
            return std::make_pair(genuine.basis()[0], static_cast<point>(a));
    }
    return std::nullopt;
}

/// True when some nonzero direction has a constant (vector-valued) derivative.
inline std::optional<point> vectorial_linear_structure(const VectorialFunction& f) {
    for (std::size_t a = 1; a < f.size(); ++a)
        if (is_constant(vderivative(f, static_cast<point>(a)))) return static_cast<point>(a);
    return std::nullopt;
}

}  // namespace bentkit
