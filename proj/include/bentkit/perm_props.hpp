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

#include "detail/flat_search.hpp"
#include "subspace.hpp"
#include "vectorial.hpp"

namespace bentkit {

// Property P1 of a map F: no second derivative over a 2-dimensional
// direction subspace vanishes identically. Property P2: for every subspace S
// with identically vanishing second derivatives, the span of the first
// derivatives along S exceeds dim(S) (equivalently there is no complementary
// subspace V with v.D_aF = 0 throughout).

struct P1Result {
    bool verdict = false;
    std::optional<std::pair<point, point>> witness;  // violating pair, canonical

    explicit operator bool() const { return verdict; }
};

inline P1Result has_p1(const VectorialFunction& f) {
    if (f.m() != f.t()) throw DimensionError("P1 is defined for maps with m = t");
    const point size = point{1} << f.m();
    for (point u = 1; u < size; ++u)
        for (point v = u + 1; v < size; ++v)
            if ((u ^ v) > v && vsecond_derivative_is_zero(f, u, v))
                return {false, std::make_pair(u, v)};
    return {true, std::nullopt};
}

namespace detail {

inline FlatRelation vanishing_relation(const VectorialFunction& f, int threads = 0) {
    return FlatRelation::build(
        f.m(), [&](point u, point v) { return vsecond_derivative_is_zero(f, u, v); }, threads);
}

/// Span of {D_a F(y) : a in S, y}, accumulated until the dimension exceeds
/// cap (cap = t for the full span). Over a vanishing S the derivative is
/// additive in the direction, so basis directions already span everything.
inline Subspace derivative_span(const VectorialFunction& f, const Subspace& s, int cap) {
    Subspace span(f.t());
    for (point a : s.basis()) {
        for (std::size_t y = 0; y < f.size(); ++y) {
            span.insert(f(static_cast<point>(y)) ^ f(static_cast<point>(y) ^ a));
            if (span.dim() > cap) return span;
        }
    }
    return span;
}

inline void check_vanishing(const VectorialFunction& f, const Subspace& s) {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!vsecond_derivative_is_zero(f, b[i], b[j]))
                throw SubspaceNotVanishingError("second derivatives do not vanish on S");
}

}  // namespace detail

/// All subspaces S with 1 <= dim(S) <= max_dim and identically vanishing
/// (vector-valued) second derivatives, ordered by dimension then basis.
/// Every 1-dimensional subspace qualifies trivially.
inline std::vector<Subspace> vanishing_subspaces(const VectorialFunction& f, int max_dim,
                                                 int threads = 0) {
    const int m = f.m();
    max_dim = std::min(max_dim, m);
    std::vector<Subspace> out;
    if (max_dim < 1) return out;
    for (point c = 1; c < (point{1} << m); ++c) out.push_back(Subspace::from_vectors(m, {c}));
    if (max_dim >= 2) {
        const detail::FlatRelation rel = detail::vanishing_relation(f, threads);
        detail::enumerate_flat_chains(rel, 0, [&](const std::vector<point>& basis) {
            if (basis.size() >= 2) out.push_back(Subspace::from_vectors(m, basis));
            return max_dim;
        });
        std::sort(out.begin(), out.end());
    }
    return out;
}

/// dim span{D_a F(y) : a in S, y in F_2^m}; S must be vanishing for F.
inline int v_s_dimension(const VectorialFunction& f, const Subspace& s) {
    if (s.ambient() != f.m()) throw DimensionError("subspace ambient != input dimension");
    detail::check_vanishing(f, s);
    return detail::derivative_span(f, s, f.t()).dim();
}

/// Outcome of the P2 check. On failure the pair (failing_s, failing_v) is a
/// witness with dim(S) + dim(V) = m and v.D_aF identically zero for every
/// v in V and a in S, re-verifiable from the two subspaces alone.
struct P2Witness {
    bool verdict = false;
    std::optional<Subspace> failing_s;
    std::optional<Subspace> failing_v;
    std::vector<int> checked_dims;
    int failing_span_dim = -1;  // dim V_S(f) at the failing S

    explicit operator bool() const { return verdict; }
};

/// Checks P2 for an arbitrary vectorial map (the secondary construction
/// applies it to sums of permutations, which need not be bijective). Only
/// dimensions up to m - deg(F) + 1 can carry a vanishing subspace, so the
/// scan is capped there; subspaces are visited in (dimension, basis) order
/// and the first failure wins.
inline P2Witness has_p2(const VectorialFunction& f, int threads = 0) {
    const int m = f.m();
    P2Witness result;
    const int deg = degree(f);
    const int max_dim = std::min(m - 1, m - deg + 1);
    for (int d = 1; d <= max_dim; ++d) result.checked_dims.push_back(d);

    std::optional<detail::FlatRelation> rel;
    for (int d = 1; d <= max_dim; ++d) {
        std::vector<Subspace> layer;
        if (d == 1) {
            for (point c = 1; c < (point{1} << m); ++c)
                layer.push_back(Subspace::from_vectors(m, {c}));
        } else {
            if (!rel) rel.emplace(detail::vanishing_relation(f, threads));
            detail::enumerate_flat_chains(*rel, d, [&](const std::vector<point>& basis) {
                if (static_cast<int>(basis.size()) == d)
                    layer.push_back(Subspace::from_vectors(m, basis));
                return d;
            });
        }
        for (const Subspace& s : layer) {
            if (detail::derivative_span(f, s, d).dim() > d) continue;
            const Subspace span = detail::derivative_span(f, s, f.t());
            const Subspace complement = span.orthogonal_complement();
            const std::vector<point> rows(complement.basis().begin(),
                                          complement.basis().begin() + (m - d));
            result.verdict = false;
            result.failing_s = s;
            result.failing_v = Subspace::from_vectors(m, rows);
            result.failing_span_dim = span.dim();
            return result;
        }
    }
    result.verdict = true;
    return result;
}

/// The switch permutation on m+1 bits: the added top input bit selects
/// between the two maps and is passed through as the top output bit.
/// Equivalently pi(y, b) = (s1(y) + b (s1 + s2)(y), b).
inline VectorialFunction switch_extension(const VectorialFunction& s1,
                                          const VectorialFunction& s2) {
    if (s1.m() != s2.m() || s1.t() != s2.t() || s1.m() != s1.t())
        throw DimensionError("extension needs two maps on the same space");
    const int m = s1.m();
    const point half = point{1} << m;
    return VectorialFunction::build(m + 1, m + 1, [&](point x) {
        const point y = x & (half - 1);
        return ((x & half) ? s2(y) : s1(y)) | (x & half);
    });
}

/// Extension preserving P1: requires D_V s1 != D_V s2 for every
/// 2-dimensional V. Throws PreconditionError carrying the violating V.
inline VectorialFunction extend_p1(const VectorialFunction& s1, const VectorialFunction& s2) {
    if (!is_permutation(s1) || !is_permutation(s2))
        throw NotAPermutationError("extension inputs must be permutations");
    const point size = point{1} << s1.m();
    const auto& t1 = s1.table();
    const auto& t2 = s2.table();
    for (point u = 1; u < size; ++u)
        for (point v = u + 1; v < size; ++v) {
            if ((u ^ v) <= v) continue;
            bool differ = false;
            for (point x = 0; x < size && !differ; ++x)
                differ = ((t1[x] ^ t1[x ^ u] ^ t1[x ^ v] ^ t1[x ^ u ^ v]) !=
                          (t2[x] ^ t2[x ^ u] ^ t2[x ^ v] ^ t2[x ^ u ^ v]));
            if (!differ)
                throw PreconditionError(
                    "second derivatives of the two permutations agree on a 2-dimensional subspace",
                    {u, v});
        }
    return switch_extension(s1, s2);
}

/// Extension preserving P2: requires has_p2(s1 + s2), which need not be a
/// permutation. Throws PreconditionError carrying the failing S.
inline VectorialFunction extend_p2(const VectorialFunction& s1, const VectorialFunction& s2) {
    if (!is_permutation(s1) || !is_permutation(s2))
        throw NotAPermutationError("extension inputs must be permutations");
    const P2Witness w = has_p2(vadd(s1, s2));
    if (!w.verdict)
        throw PreconditionError("the sum of the two permutations fails P2",
                                w.failing_s ? w.failing_s->basis() : std::vector<point>{});
    return switch_extension(s1, s2);
}

}  // namespace bentkit
