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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace bentkit {

using point = std::uint32_t;

/// Linear subspace of F_2^n in reduced row echelon form.
///
/// Rows are basis vectors whose pivot is the most significant set bit; every
/// pivot column is zero in all other rows and rows are stored in ascending
/// order. The RREF basis is unique per subspace, so structural equality is
/// subspace equality. It is also the lexicographically smallest basis: row k
/// is the minimum of V minus the span of the earlier rows.
class Subspace {
public:
    explicit Subspace(int ambient) : n_(ambient) {
        if (ambient < 0 || ambient > 32) throw DimensionError("subspace ambient dimension out of range");
    }

    static Subspace from_vectors(int ambient, std::span<const point> vecs) {
        Subspace s(ambient);
        for (point v : vecs) s.insert(v);
        return s;
    }

    static Subspace from_vectors(int ambient, std::initializer_list<point> vecs) {
        return from_vectors(ambient, std::span<const point>(vecs.begin(), vecs.size()));
    }

    /// The full space F_2^n.
    static Subspace full(int ambient) {
        Subspace s(ambient);
        for (int i = 0; i < ambient; ++i) s.rows_.push_back(point{1} << i);
        return s;
    }

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<point>& basis() const { return rows_; }

    /// Clears the pivot bits of x; the result is the lexicographically least
    /// element of x's coset (0 iff x is in the subspace).
    point reduce(point x) const {
        for (point r : rows_)
            if (x >> bits::msb(r) & 1) x ^= r;
        return x;
    }

    bool contains(point x) const { return reduce(x) == 0; }

    /// Adds v to the span; returns false if v was already in it.
    bool insert(point v) {
        if (v >> n_ != 0) throw DimensionError("vector outside ambient space");
        v = reduce(v);
        if (v == 0) return false;
        const int p = bits::msb(v);
        for (point& r : rows_)
            if (r >> p & 1) r ^= v;
        rows_.insert(std::upper_bound(rows_.begin(), rows_.end(), v), v);
        return true;
    }

    Subspace extended(point v) const {
        Subspace s = *this;
        s.insert(v);
        return s;
    }

    /// All 2^dim elements, in subset-mask order of the basis rows.
    std::vector<point> points() const {
        std::vector<point> pts(std::size_t{1} << rows_.size(), 0);
        for (std::size_t m = 1; m < pts.size(); ++m) {
            const int b = std::countr_zero(m);
            pts[m] = pts[m & (m - 1)] ^ rows_[b];
        }
        return pts;
    }

    /// {x : x . v = 0 for all v in the subspace}, in canonical form.
    Subspace orthogonal_complement() const {
        std::uint32_t pivots = 0;
        for (point r : rows_) pivots |= point{1} << bits::msb(r);
        Subspace out(n_);
        for (int q = 0; q < n_; ++q) {
            if (pivots >> q & 1) continue;
            point k = point{1} << q;
            for (point r : rows_)
                if (r >> q & 1) k |= point{1} << bits::msb(r);
            out.insert(k);
        }
        return out;
    }

    bool operator==(const Subspace&) const = default;

    /// Lexicographic order on (dim, basis rows); a deterministic total order.
    bool operator<(const Subspace& other) const {
        if (rows_.size() != other.rows_.size()) return rows_.size() < other.rows_.size();
        return rows_ < other.rows_;
    }

    std::string to_string() const {
        std::string s = "<";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(rows_[i]);
        }
        return s + ">";
    }

private:
    int n_;
    std::vector<point> rows_;
};

/// Visits one ordered representative (u, v) per 2-dimensional subspace of
/// F_2^n: the pair with u < v < u^v, which is exactly the subspace's RREF
/// basis. The number of calls is (2^n - 1)(2^n - 2)/6.
template <class Fn>
void for_each_2dim_rep(int n, Fn&& fn) {
    const point size = point{1} << n;
    for (point u = 1; u < size; ++u)
        for (point v = u + 1; v < size; ++v)
            if ((u ^ v) > v) fn(u, v);
}

inline std::uint64_t count_2dim_subspaces(int n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    return (size - 1) * (size - 2) / 6;
}

/// Invertible linear map on F_2^n given by output-coordinate masks:
/// bit i of apply(x) is the parity of rows[i] & x.
class BitMatrix {
public:
    BitMatrix(int n, std::vector<point> rows) : n_(n), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != n_) throw DimensionError("matrix row count != dimension");
    }

    static BitMatrix identity(int n) {
        std::vector<point> rows(n);
        for (int i = 0; i < n; ++i) rows[i] = point{1} << i;
        return BitMatrix(n, std::move(rows));
    }

    int dim() const { return n_; }
    const std::vector<point>& rows() const { return rows_; }

    point apply(point x) const {
        point y = 0;
        for (int i = 0; i < n_; ++i) y |= point(bits::parity(rows_[i] & x)) << i;
        return y;
    }

    bool invertible() const {
        return Subspace::from_vectors(n_, rows_).dim() == n_;
    }

private:
    int n_;
    std::vector<point> rows_;
};

}  // namespace bentkit
