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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boolean_function.hpp"
#include "detail/flat_search.hpp"
#include "parallel.hpp"
#include "subspace.hpp"

namespace bentkit {

namespace detail {

/// Second derivative of f over <u, v> is the zero function (strict) or a
/// constant function (relaxed). Word-at-a-time with early exit, no
/// allocation; the workhorse behind every pair census.
inline bool pair_is_flat(const BooleanFunction& f, point u, point v, bool relaxed) {
    const auto& w = f.words();
    const std::size_t hu = u >> 6, hv = v >> 6, huv = (u ^ v) >> 6;
    const unsigned lu = u & 63, lv = v & 63, luv = (u ^ v) & 63;
    const bits::word expect_ones = bits::tail_mask(f.n());
    bits::word expected = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const bits::word d = w[i] ^ bits::xor_permute_word(w[i ^ hu], lu) ^
                             bits::xor_permute_word(w[i ^ hv], lv) ^
                             bits::xor_permute_word(w[i ^ huv], luv);
        if (i == 0 && relaxed && d == expect_ones)
            expected = expect_ones;
        if (d != expected) return false;
    }
    return true;
}

inline FlatRelation flat_relation(const BooleanFunction& f, bool relaxed, int threads = 0) {
    return FlatRelation::build(
        f.n(), [&](point u, point v) { return pair_is_flat(f, u, v, relaxed); }, threads);
}

}  // namespace detail

/// All 2-dimensional subspaces <a, b> whose second derivative vanishes
/// (relaxed: is constant), each in canonical form, in ascending order.
inline std::vector<Subspace> flat_pairs(const BooleanFunction& f, bool relaxed = false) {
    std::vector<Subspace> out;
    for_each_2dim_rep(f.n(), [&](point u, point v) {
        if (detail::pair_is_flat(f, u, v, relaxed))
            out.push_back(Subspace::from_vectors(f.n(), {u, v}));
    });
    return out;
}

inline bool has_flat_pair(const BooleanFunction& f, bool relaxed = false) {
    const point size = point{1} << f.n();
    for (point u = 1; u < size; ++u)
        for (point v = u + 1; v < size; ++v)
            if ((u ^ v) > v && detail::pair_is_flat(f, u, v, relaxed)) return true;
    return false;
}

/// All r-dimensional subspaces on which every second derivative of f
/// vanishes (relaxed: is constant), canonical and lexicographically ordered.
inline std::vector<Subspace> enumerate_msubspaces(const BooleanFunction& f, int r,
                                                  bool relaxed = false, int threads = 0) {
    if (r < 1 || r > f.n()) throw DimensionError("subspace dimension out of range");
    std::vector<Subspace> out;
    if (r == 1) {
        for (point c = 1; c < (point{1} << f.n()); ++c)
            out.push_back(Subspace::from_vectors(f.n(), {c}));
        return out;
    }
    const detail::FlatRelation rel = detail::flat_relation(f, relaxed, threads);
    detail::enumerate_flat_chains(rel, r, [&](const std::vector<point>& basis) {
        if (static_cast<int>(basis.size()) == r)
            out.push_back(Subspace::from_vectors(f.n(), basis));
        return r;
    });
    return out;
}

namespace detail {

/// For a degree-2 function the second derivative over <a,b> is the constant
/// B(a,b) of an alternating bilinear form, so the vanishing subspaces are
/// exactly its totally isotropic subspaces and the largest one has dimension
/// n - rank(B)/2.
inline int quadratic_index(const BooleanFunction& f) {
    const int n = f.n();
    std::vector<point> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const point a = point{1} << i, b = point{1} << j;
            if (f.get(0) ^ f.get(a) ^ f.get(b) ^ f.get(a ^ b)) rows[i] |= point{1} << j;
        }
    const int rank =
        Subspace::from_vectors(n, std::span<const point>(rows.data(), rows.size())).dim();
    return n - rank / 2;
}

struct IndexScan {
    int best = 1;
    std::optional<Subspace> witness;
    std::map<int, std::uint64_t> counts;
};

inline IndexScan scan_index(const BooleanFunction& f, bool relaxed, int threads) {
    IndexScan scan;
    scan.counts[1] = (std::uint64_t{1} << f.n()) - 1;
    scan.witness = Subspace::from_vectors(f.n(), {1});
    const FlatRelation rel = flat_relation(f, relaxed, threads);
    enumerate_flat_chains(rel, 0, [&](const std::vector<point>& basis) {
        const int d = static_cast<int>(basis.size());
        if (d >= 2) ++scan.counts[d];
        if (d > scan.best) {
            scan.best = d;
            scan.witness = Subspace::from_vectors(f.n(), basis);
        }
        return f.n();
    });
    return scan;
}

}  // namespace detail

/// Maximal dimension of a subspace with identically vanishing second
/// derivatives. Affine functions short-circuit to n (every pair vanishes)
/// and quadratic ones to the rank formula of their derivative form.
inline int linearity_index(const BooleanFunction& f, int threads = 0) {
    const int deg = degree(f);
    if (deg <= 1) return f.n();
    if (deg == 2) return detail::quadratic_index(f);
    return detail::scan_index(f, false, threads).best;
}

/// Relaxed analogue (constant second derivatives allowed). For degree <= 2
/// every second derivative is constant, so the index is n outright.
inline int relaxed_linearity_index(const BooleanFunction& f, int threads = 0) {
    if (degree(f) <= 2) return f.n();
    return detail::scan_index(f, true, threads).best;
}

/// Dillon's criterion: a bent function on 2m variables lies in the completed
/// Maiorana-McFarland class iff some m-dimensional subspace has identically
/// vanishing second derivatives. Returns such a subspace or nullopt.
inline std::optional<Subspace> is_in_mm_sharp(const BooleanFunction& f, int threads = 0) {
    if (!is_bent(f)) throw NotBentError("membership test needs a bent function");
    const int m = f.n() / 2;
    if (m == 1) return Subspace::from_vectors(f.n(), {1});
    std::optional<Subspace> found;
    const detail::FlatRelation rel = detail::flat_relation(f, false, threads);
    detail::enumerate_flat_chains(rel, m, [&](const std::vector<point>& basis) {
        if (static_cast<int>(basis.size()) == m) {
            found = Subspace::from_vectors(f.n(), basis);
            return -1;
        }
        return m;
    });
    return found;
}

/// Lowest possible linearity index: no 2-dimensional subspace with vanishing
/// second derivatives at all.
inline bool is_l_optimal(const BooleanFunction& f) {
    if (!is_bent(f)) throw NotBentError("l-optimality is defined for bent functions");
    return !has_flat_pair(f, false);
}

/// Summary of the subspace structure of one function.
struct MsubspaceReport {
    std::string function_id;
    int n = 0;
    int index = 0;
    int relaxed_index = 0;
    std::map<int, std::uint64_t> counts;  // strict |MS_r| per dimension
    bool counts_complete = true;          // false when a degree shortcut fired
    std::optional<Subspace> witness;
    std::optional<Subspace> relaxed_witness;
};

inline MsubspaceReport msubspace_report(const BooleanFunction& f, int threads = 0) {
    MsubspaceReport rep;
    rep.n = f.n();
    const int deg = degree(f);
    if (deg <= 1) {
        rep.index = f.n();
        rep.relaxed_index = f.n();
        rep.counts_complete = false;
        rep.witness = rep.relaxed_witness = Subspace::full(f.n());
        return rep;
    }
    if (deg == 2 && f.n() >= 12) {
        // a quadratic's vanishing subspaces are the isotropic spaces of its
        // derivative form; above this size their sheer number makes the
        // exhaustive per-dimension tally pointless, so only the index is
        // reported (by the rank formula)
        rep.index = detail::quadratic_index(f);
        rep.relaxed_index = f.n();
        rep.counts_complete = false;
        rep.relaxed_witness = Subspace::full(f.n());
        return rep;
    }
    const detail::IndexScan strict = detail::scan_index(f, false, threads);
    rep.index = strict.best;
    rep.counts = strict.counts;
    rep.witness = strict.witness;
    if (deg == 2) {
        rep.relaxed_index = f.n();
        rep.relaxed_witness = Subspace::full(f.n());
    } else {
        const detail::IndexScan relaxed = detail::scan_index(f, true, threads);
        rep.relaxed_index = relaxed.best;
        rep.relaxed_witness = relaxed.witness;
    }
    return rep;
}

}  // namespace bentkit
