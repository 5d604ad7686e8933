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
#include <bit>
#include <cstdint>
#include <mutex>
#include <vector>

#include "../bits.hpp"
#include "../errors.hpp"
#include "../parallel.hpp"
#include "../subspace.hpp"

namespace bentkit::detail {

/// Dense bit set over the points of F_2^n.
class PointSet {
public:
    explicit PointSet(int n) : n_(n), words_(bits::word_count(n), 0) {}

    int n() const { return n_; }

    void set(point x) { bits::set_bit(words_.data(), x, true); }
    bool get(point x) const { return bits::get_bit(words_.data(), x); }

    void fill_all_nonzero() {
        const bits::word full = bits::tail_mask(n_);
        for (bits::word& w : words_) w = full;
        words_[0] &= ~bits::word{1};
    }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (bits::word w : words_) c += std::uint64_t(std::popcount(w));
        return c;
    }

    /// dst = src & this & {x : x > c and bit p of x is clear}.
    void refine_into(const PointSet& src, point c, int p, PointSet& dst) const {
        const std::size_t cw = c >> 6;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            bits::word w = i < cw ? 0 : src.words_[i] & words_[i];
            if (i == cw) w &= ~((bits::word{2} << (c & 63)) - 1);
            if (p < 6)
                w &= bits::kHalfMask[p];
            else if (i >> (p - 6) & 1)
                w = 0;
            dst.words_[i] = w;
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            bits::word w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                w &= w - 1;
                fn(static_cast<point>((i << 6) | unsigned(b)));
            }
        }
    }

private:
    int n_;
    std::vector<bits::word> words_;
};

/// Symmetric relation "span{a, b} is a flat pair" over independent nonzero
/// points, one bit row per point. Built once per function and then shared
/// read-only by the search.
class FlatRelation {
public:
    explicit FlatRelation(int n) : n_(n), rows_(std::size_t{1} << n, PointSet(n)) {
        if (n > 14) throw DimensionError("subspace enumeration supports at most 14 variables");
    }

    int n() const { return n_; }
    const PointSet& row(point a) const { return rows_[a]; }
    bool flat(point a, point b) const { return rows_[a].get(b); }

    /// pred(u, v) is evaluated once per 2-dimensional subspace, on its
    /// canonical pair u < v < u^v; a positive answer marks all ordered pairs
    /// of the three nonzero elements.
    template <class Pred>
    static FlatRelation build(int n, Pred&& pred, int threads = 0) {
        FlatRelation rel(n);
        const point size = point{1} << n;
        std::mutex merge;
        parallel_blocks(size - 1, 64, threads, [&](int, std::uint64_t ub, std::uint64_t ue) {
            std::vector<std::array<point, 2>> hits;
            for (point u = static_cast<point>(ub) + 1; u <= static_cast<point>(ue); ++u)
                for (point v = u + 1; v < size; ++v)
                    if ((u ^ v) > v && pred(u, v)) hits.push_back({u, v});
            const std::scoped_lock lock(merge);
            for (auto [u, v] : hits) rel.mark(u, v);
        });
        return rel;
    }

    void mark(point u, point v) {
        const point w = u ^ v;
        rows_[u].set(v);
        rows_[v].set(u);
        rows_[u].set(w);
        rows_[w].set(u);
        rows_[v].set(w);
        rows_[w].set(v);
    }

private:
    int n_;
    std::vector<PointSet> rows_;
};

/// Depth-first enumeration of the subspaces all of whose basis pairs are
/// flat.
///
/// A pairwise-flat generating set spans a fully flat subspace (the second
/// derivative over <a, b+c> expands into the ones over <a,b>, <a,c>, <b,c>),
/// so candidates only need checking against chosen basis vectors. Each
/// subspace is reached exactly once, on its unique RREF basis: chains are
/// ascending and every new vector is zero at the earlier pivots, which makes
/// the chain the lexicographically least basis of its span.
///
/// visit(basis) runs at every node of depth >= 1 and returns the depth limit
/// for that node's subtree: returning basis.size() prunes the branch and a
/// negative value aborts the whole search. With target > 0, branches whose
/// candidate set is too small to ever reach dimension target are cut.
template <class Visit>
void enumerate_flat_chains(const FlatRelation& rel, int target, Visit&& visit) {
    const int n = rel.n();
    std::vector<PointSet> cand_stack;
    std::vector<std::vector<point>> todo_stack(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) cand_stack.emplace_back(n);
    cand_stack[0].fill_all_nonzero();
    std::vector<point> basis;
    bool aborted = false;

    auto dfs = [&](auto&& self, int depth) -> void {
        std::vector<point>& todo = todo_stack[depth];
        todo.clear();
        cand_stack[depth].for_each([&](point c) { todo.push_back(c); });
        for (point c : todo) {
            basis.push_back(c);
            const int limit = visit(static_cast<const std::vector<point>&>(basis));
            if (limit < 0) aborted = true;
            const int size_now = static_cast<int>(basis.size());
            if (!aborted && size_now < limit) {
                rel.row(c).refine_into(cand_stack[depth], c, bits::msb(c), cand_stack[depth + 1]);
                const bool reachable =
                    target <= 0 ||
                    cand_stack[depth + 1].count() >= (std::uint64_t{1} << (target - size_now)) - 1;
                if (reachable) self(self, depth + 1);
            }
            basis.pop_back();
            if (aborted) return;
        }
    };
    dfs(dfs, 0);
}

}  // namespace bentkit::detail
