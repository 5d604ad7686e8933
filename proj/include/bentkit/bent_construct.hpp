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

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "boolean_function.hpp"
#include "msubspace.hpp"
#include "parallel.hpp"
#include "subspace.hpp"
#include "vectorial.hpp"

namespace bentkit {

// --- basic builders -----------------------------------------------------------

/// Maiorana-McFarland bent function x . pi(y) + h(y) on 2m variables;
/// x occupies the low m bits of the truth-table index, y the high m bits.
inline BooleanFunction mm_bent(const VectorialFunction& pi, const BooleanFunction& h) {
    if (!is_permutation(pi)) throw NotAPermutationError("the inner map must be a permutation");
    if (h.n() != pi.m()) throw DimensionError("h must live on the permutation's space");
    const int m = pi.m();
    const point xmask = (point{1} << m) - 1;
    return BooleanFunction::build(2 * m, [&](point z) {
        const point x = z & xmask, y = z >> m;
        return (bits::parity(x & pi(y)) ^ int(h.get(y))) != 0;
    });
}

inline BooleanFunction mm_bent(const VectorialFunction& pi) {
    return mm_bent(pi, BooleanFunction(pi.m()));
}

/// x . pi(y) + delta_0(x): bent for every permutation pi.
inline BooleanFunction d0_bent(const VectorialFunction& pi) {
    if (!is_permutation(pi)) throw NotAPermutationError("the inner map must be a permutation");
    const int m = pi.m();
    const point xmask = (point{1} << m) - 1;
    return BooleanFunction::build(2 * m, [&](point z) {
        const point x = z & xmask, y = z >> m;
        return (bits::parity(x & pi(y)) ^ int(x == 0)) != 0;
    });
}

// --- concatenation -----------------------------------------------------------------

/// f on n+2 variables with f(x,0,0)=f1, f(x,0,1)=f2, f(x,1,0)=f3,
/// f(x,1,1)=f4; the first new variable sits at bit n, the second at bit n+1.
inline BooleanFunction concat4(const BooleanFunction& f1, const BooleanFunction& f2,
                               const BooleanFunction& f3, const BooleanFunction& f4) {
    const int n = f1.n();
    if (f2.n() != n || f3.n() != n || f4.n() != n)
        throw DimensionError("concatenation pieces differ in arity");
    const std::array<const BooleanFunction*, 4> parts{&f1, &f3, &f2, &f4};  // block order y2:y1
    const point xmask = (point{1} << n) - 1;
    return BooleanFunction::build(n + 2, [&](point z) {
        return parts[z >> n]->get(z & xmask);
    });
}

/// The four duals xor to the all-ones function iff the concatenation of four
/// bent pieces is bent.
inline bool dual_bent_condition(const BooleanFunction& f1, const BooleanFunction& f2,
                                const BooleanFunction& f3, const BooleanFunction& f4) {
    const std::array<const BooleanFunction*, 4> parts{&f1, &f2, &f3, &f4};
    BooleanFunction acc(f1.n());
    for (int i = 0; i < 4; ++i) {
        if (!is_bent(*parts[i]))
            throw NotBentError("piece " + std::to_string(i + 1) + " of the quadruple is not bent");
        acc = add(acc, dual(*parts[i]));
    }
    return acc.is_ones();
}

// --- swapping-style constructions -----------------------------------------------------

namespace detail {

inline Subspace canonical_half(int n) {
    Subspace s(n);
    for (int i = 0; i < n / 2; ++i) s.insert(point{1} << i);
    return s;
}

inline void require_unique_canonical_half(const BooleanFunction& f1) {
    const int n = f1.n();
    if (n % 2 != 0) throw DimensionError("base function must have an even number of variables");
    if (!is_bent(f1)) throw NotBentError("base function is not bent");
    const std::vector<Subspace> tops = enumerate_msubspaces(f1, n / 2);
    if (tops.size() != 1 || tops[0] != canonical_half(n))
        throw PreconditionError(
            "base function must have exactly one top-dimensional vanishing subspace, the "
            "canonical one",
            tops.empty() ? std::vector<point>{} : tops[0].basis());
}

}  // namespace detail

/// f1 with variables rearranged: result(z) has f1's j-th input equal to
/// z_{perm[j]} (0-based).
inline BooleanFunction permute_variables(const BooleanFunction& f1, const std::vector<int>& perm) {
    const int n = f1.n();
    if (static_cast<int>(perm.size()) != n) throw DimensionError("index permutation size != n");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw DimensionError("not a permutation of the variables");
        seen[p] = true;
    }
    return BooleanFunction::build(n, [&](point z) {
        point w = 0;
        for (int j = 0; j < n; ++j) w |= point((z >> perm[j]) & 1) << j;
        return f1.get(w);
    });
}

/// Concatenation f1 || f1 || f3 || (f3 + 1) with f3 = f1 after a variable
/// permutation that moves at least one of the first m = n/2 positions across
/// the half. The base function must be bent with the canonical half-space as
/// its only top-dimensional vanishing subspace; the output is then bent and
/// has no such subspace at all.
inline BooleanFunction swap_construct_coordperm(const BooleanFunction& f1,
                                                const std::vector<int>& perm) {
    detail::require_unique_canonical_half(f1);
    const int n = f1.n(), m = n / 2;
    bool crosses = false;
    for (int j = 0; j < m && !crosses; ++j) crosses = perm.at(j) >= m;
    if (!crosses)
        throw PreconditionError("the index permutation fixes the first half of the variables");
    const BooleanFunction f3 = permute_variables(f1, perm);
    return concat4(f1, f1, f3, complement(f3));
}

/// Same construction through an invertible linear substitution L:
/// f3 = f1 o L, which must move the base function's unique top-dimensional
/// vanishing subspace somewhere else.
inline BooleanFunction swap_construct_linear(const BooleanFunction& f1, const BitMatrix& l) {
    detail::require_unique_canonical_half(f1);
    const int n = f1.n(), m = n / 2;
    if (l.dim() != n) throw DimensionError("matrix dimension != function arity");
    if (!l.invertible()) throw PreconditionError("substitution matrix is singular");
    const BooleanFunction f3 = BooleanFunction::build(n, [&](point z) { return f1.get(l.apply(z)); });
    const std::vector<Subspace> tops = enumerate_msubspaces(f3, m);
    if (tops.size() != 1)
        throw PreconditionError("substituted function lost top-subspace uniqueness",
                                tops.empty() ? std::vector<point>{} : tops[0].basis());
    if (tops[0] == detail::canonical_half(n))
        throw PreconditionError("substitution fixes the canonical subspace", tops[0].basis());
    return concat4(f1, f1, f3, complement(f3));
}

/// Concatenation f1 || f1 || f3 || (f3 + 1) of a completed
/// Maiorana-McFarland bent f1 with a bent f3 whose vanishing subspaces all
/// have dimension below n/2 - 1; bent and outside the completed class.
inline BooleanFunction mixing_concat(const BooleanFunction& f1, const BooleanFunction& f3,
                                     int threads = 0) {
    if (f1.n() != f3.n()) throw DimensionError("mixing pieces differ in arity");
    if (!is_bent(f1)) throw NotBentError("f1 is not bent");
    if (!is_bent(f3)) throw NotBentError("f3 is not bent");
    if (!is_in_mm_sharp(f1, threads))
        throw PreconditionError("f1 is not in the completed Maiorana-McFarland class");
    const int ind3 = linearity_index(f3, threads);
    if (ind3 >= f1.n() / 2 - 1)
        throw PreconditionError("f3 has a vanishing subspace of dimension " + std::to_string(ind3) +
                                ", which is not below n/2 - 1");
    return concat4(f1, f1, f3, complement(f3));
}

// --- decomposition ------------------------------------------------------------------

enum class DecompositionClass { Bent, SemiBent, FiveValued, Irregular };

inline const char* to_string(DecompositionClass c) {
    switch (c) {
        case DecompositionClass::Bent: return "bent";
        case DecompositionClass::SemiBent: return "semi_bent";
        case DecompositionClass::FiveValued: return "five_valued";
        default: return "irregular";
    }
}

namespace detail {

/// Coset representatives p, q with (a.p, b.p) = (1,0) and (a.q, b.q) = (0,1).
inline std::pair<point, point> coset_selectors(int n, point a, point b) {
    point p = 0, q = 0;
    for (point x = 1; x < (point{1} << n) && (p == 0 || q == 0); ++x) {
        const int la = bits::parity(a & x), lb = bits::parity(b & x);
        if (p == 0 && la == 1 && lb == 0) p = x;
        if (q == 0 && la == 0 && lb == 1) q = x;
    }
    return {p, q};
}

template <class Int>
DecompositionClass classify_spectra(const std::array<std::vector<Int>, 4>& spectra, int k) {
    const Int lo = Int{1} << (k / 2);
    const Int hi = lo * 2;
    bool all_bent = (k % 2 == 0), all_semi = all_bent, all_five = all_bent;
    for (const auto& s : spectra)
        for (Int v : s) {
            const Int av = v < 0 ? -v : v;
            all_bent = all_bent && av == lo;
            all_semi = all_semi && (av == 0 || av == hi);
            all_five = all_five && (av == 0 || av == lo || av == hi);
        }
    if (all_bent) return DecompositionClass::Bent;
    if (all_semi) {
        bool disjoint = true;
        for (std::size_t z = 0; z < spectra[0].size() && disjoint; ++z) {
            int nz = 0;
            for (const auto& s : spectra) nz += s[z] != 0;
            disjoint = nz <= 1;
        }
        if (disjoint) return DecompositionClass::SemiBent;
    }
    return all_five ? DecompositionClass::FiveValued : DecompositionClass::Irregular;
}

}  // namespace detail

struct Decomposition {
    std::vector<BooleanFunction> parts;  // restrictions to the cosets labelled 00, 01, 10, 11
    DecompositionClass cls = DecompositionClass::Irregular;
    std::array<std::vector<std::int64_t>, 4> value_sets;  // sorted distinct Walsh values
};

/// Splits f over the cosets of V = <a,b> orthogonal: part i is the
/// restriction whose coset has scalar products (a.x, b.x) equal to the two
/// bits of i, matching the concat4 layout, so decomposing a concatenation at
/// the two top unit directions returns the original quadruple.
inline Decomposition decompose4(const BooleanFunction& f, point a, point b) {
    const int n = f.n();
    if ((a | b) >> n != 0) throw DimensionError("directions outside the domain");
    if (a == 0 || b == 0 || a == b) throw DependentDirectionsError("directions must be independent");
    const Subspace v = Subspace::from_vectors(n, {a, b}).orthogonal_complement();
    const auto [p, q] = detail::coset_selectors(n, a, b);
    Decomposition out;
    const std::array<point, 4> reps{0, q, p, static_cast<point>(p ^ q)};
    std::array<std::vector<std::int64_t>, 4> spectra;
    for (int i = 0; i < 4; ++i) {
        out.parts.push_back(restrict_to_coset(f, v, reps[i]));
        spectra[i] = wht(out.parts.back()).values;
        std::vector<std::int64_t> vals = spectra[i];
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        out.value_sets[i] = std::move(vals);
    }
    out.cls = detail::classify_spectra(spectra, n - 2);
    return out;
}

// --- census ---------------------------------------------------------------------------

/// Tallies of all (2^n - 1)(2^n - 2)/6 decompositions of one bent function:
/// the class of each 4-decomposition and the degree of each second
/// derivative, keyed by the canonical 2-dimensional direction subspaces.
struct CensusReport {
    int n = 0;
    std::uint64_t total = 0;
    std::map<int, std::uint64_t> degree_multiset;
    std::uint64_t bent_count = 0;
    std::uint64_t semibent_count = 0;
    std::uint64_t five_valued_count = 0;
    std::uint64_t irregular_count = 0;

    bool five_valued_only() const {
        return bent_count == 0 && semibent_count == 0 && irregular_count == 0 &&
               five_valued_count == total;
    }

    std::uint64_t class_total() const {
        return bent_count + semibent_count + five_valued_count + irregular_count;
    }
};

namespace detail {

struct CensusScratch {
    explicit CensusScratch(int n)
        : deriv(bits::word_count(n)), k(n - 2) {
        for (auto& s : spectra) s.resize(std::size_t{1} << k);
    }
    std::vector<bits::word> deriv;
    std::array<std::vector<std::int32_t>, 4> spectra;
    int k;
};

inline int second_derivative_degree(const BooleanFunction& f, point u, point v,
                                    std::vector<bits::word>& scratch) {
    const auto& w = f.words();
    const std::size_t hu = u >> 6, hv = v >> 6, huv = (u ^ v) >> 6;
    const unsigned lu = u & 63, lv = v & 63, luv = (u ^ v) & 63;
    for (std::size_t i = 0; i < w.size(); ++i)
        scratch[i] = w[i] ^ bits::xor_permute_word(w[i ^ hu], lu) ^
                     bits::xor_permute_word(w[i ^ hv], lv) ^
                     bits::xor_permute_word(w[i ^ huv], luv);
    moebius_inplace(scratch.data(), f.n());
    int deg = 0;
    for (std::size_t i = 0; i < scratch.size(); ++i) {
        bits::word x = scratch[i];
        while (x) {
            const int b = std::countr_zero(x);
            x &= x - 1;
            deg = std::max(deg, std::popcount(i) + std::popcount(unsigned(b)));
        }
    }
    return deg;
}

inline DecompositionClass classify_fast(const BooleanFunction& f, point u, point v,
                                        CensusScratch& scratch) {
    const int n = f.n();
    const Subspace vsp = Subspace::from_vectors(n, {u, v}).orthogonal_complement();
    const auto [p, q] = coset_selectors(n, u, v);
    const std::array<point, 4> reps{0, q, p, static_cast<point>(p ^ q)};
    const std::size_t size = std::size_t{1} << scratch.k;
    for (int i = 0; i < 4; ++i) {
        auto& s = scratch.spectra[i];
        point x = reps[i];
        s[0] = f.get(x) ? -1 : 1;
        for (std::size_t t = 1; t < size; ++t) {
            x ^= vsp.basis()[std::countr_zero(t)];
            s[t ^ (t >> 1)] = f.get(x) ? -1 : 1;
        }
        fwht_inplace(s.data(), size);
    }
    return classify_spectra(scratch.spectra, scratch.k);
}

}  // namespace detail

inline CensusReport decomposition_census(const BooleanFunction& f, int threads = 0) {
    if (!is_bent(f)) throw NotBentError("census is defined for bent functions");
    const int n = f.n();
    CensusReport total_report;
    total_report.n = n;
    total_report.total = count_2dim_subspaces(n);
    const point size = point{1} << n;
    std::mutex merge;
    parallel_blocks(size - 1, 16, threads, [&](int, std::uint64_t ub, std::uint64_t ue) {
        detail::CensusScratch scratch(n);
        CensusReport local;
        for (point u = static_cast<point>(ub) + 1; u <= static_cast<point>(ue); ++u)
            for (point v = u + 1; v < size; ++v) {
                if ((u ^ v) <= v) continue;
                ++local.degree_multiset[detail::second_derivative_degree(f, u, v, scratch.deriv)];
                switch (detail::classify_fast(f, u, v, scratch)) {
                    case DecompositionClass::Bent: ++local.bent_count; break;
                    case DecompositionClass::SemiBent: ++local.semibent_count; break;
                    case DecompositionClass::FiveValued: ++local.five_valued_count; break;
                    default: ++local.irregular_count; break;
                }
            }
        const std::scoped_lock lock(merge);
        for (auto [deg, cnt] : local.degree_multiset) total_report.degree_multiset[deg] += cnt;
        total_report.bent_count += local.bent_count;
        total_report.semibent_count += local.semibent_count;
        total_report.five_valued_count += local.five_valued_count;
        total_report.irregular_count += local.irregular_count;
    });
    return total_report;
}

// --- second derivative of a concatenation, in closed form ---------------------------------

/// Expands D_a D_b of the concatenation f1||f2||f3||f4 without building the
/// concatenation: with a = (a', a1, a2), b = (b', b1, b2) the result on each
/// (y1, y2) quadrant is an xor of shifted derivatives of the pieces and
/// their partial sums. Must agree with the direct second derivative.
inline BooleanFunction concat_second_derivative(const BooleanFunction& f1,
                                                const BooleanFunction& f2,
                                                const BooleanFunction& f3,
                                                const BooleanFunction& f4, point a, point b) {
    const int n = f1.n();
    if (f2.n() != n || f3.n() != n || f4.n() != n)
        throw DimensionError("concatenation pieces differ in arity");
    if ((a | b) >> (n + 2) != 0) throw DimensionError("directions outside the domain");
    const point xmask = (point{1} << n) - 1;
    const point ap = a & xmask, bp = b & xmask;
    const int a1 = a >> n & 1, a2 = a >> (n + 1) & 1;
    const int b1 = b >> n & 1, b2 = b >> (n + 1) & 1;

    const BooleanFunction f13 = add(f1, f3);
    const BooleanFunction f12 = add(f1, f2);
    const BooleanFunction f1234 = add(f12, add(f3, f4));

    const BooleanFunction t1 = second_derivative(f1, ap, bp);
    const BooleanFunction t13 = second_derivative(f13, ap, bp);
    const BooleanFunction t12 = second_derivative(f12, ap, bp);
    const BooleanFunction t1234 = second_derivative(f1234, ap, bp);

    BooleanFunction fixed(n);  // the part independent of y1, y2
    if (a1) fixed = add(fixed, xor_shift(derivative(f13, bp), ap));
    if (b1) fixed = add(fixed, xor_shift(derivative(f13, ap), bp));
    if (a2) fixed = add(fixed, xor_shift(derivative(f12, bp), ap));
    if (b2) fixed = add(fixed, xor_shift(derivative(f12, ap), bp));
    if (a1 & b2) fixed = add(fixed, xor_shift(f1234, ap ^ bp));
    if (b1 & a2) fixed = add(fixed, xor_shift(f1234, ap ^ bp));

    const BooleanFunction ua = xor_shift(derivative(f1234, bp), ap);
    const BooleanFunction ub = xor_shift(derivative(f1234, ap), bp);

    std::vector<BooleanFunction> quadrant;
    for (int y2 = 0; y2 < 2; ++y2)
        for (int y1 = 0; y1 < 2; ++y1) {
            BooleanFunction g = add(t1, fixed);
            if (y1) g = add(g, t13);
            if (y2) g = add(g, t12);
            if (y1 & y2) g = add(g, t1234);
            if ((a1 & y2) ^ (a2 & y1) ^ (a1 & a2)) g = add(g, ua);
            if ((b1 & y2) ^ (b2 & y1) ^ (b1 & b2)) g = add(g, ub);
            quadrant.push_back(g);
        }
    return BooleanFunction::build(n + 2, [&](point z) { return quadrant[z >> n].get(z & xmask); });
}

}  // namespace bentkit
