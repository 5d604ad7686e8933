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

#include <doctest.h>

#include <set>

#include "bentkit/bentkit.hpp"
#include "test_util.hpp"

using namespace bentkit;
using testutil::rng;

TEST_CASE("rref canonical form is unique per subspace") {
    std::uniform_int_distribution<point> pt(1, 255);
    for (int i = 0; i < 50; ++i) {
        Subspace s(8);
        for (int k = 0; k < 4; ++k) s.insert(pt(rng()));
        // re-span from shuffled random combinations of the points
        std::vector<point> pts = s.points();
        std::shuffle(pts.begin(), pts.end(), rng());
        const Subspace t =
            Subspace::from_vectors(8, std::span<const point>(pts.data(), pts.size()));
        CHECK(s == t);
        for (std::size_t j = 1; j < s.basis().size(); ++j)
            CHECK(s.basis()[j - 1] < s.basis()[j]);
    }
}

TEST_CASE("reduce yields the least coset element") {
    const Subspace s = Subspace::from_vectors(6, {3, 12});
    for (point x = 0; x < 64; ++x) {
        const point r = s.reduce(x);
        for (point p : s.points()) CHECK(r <= (x ^ p));
        CHECK(s.contains(static_cast<point>(r ^ x)));
    }
}

TEST_CASE("points enumerates the whole span") {
    const Subspace s = Subspace::from_vectors(5, {5, 9, 17});
    const std::vector<point> pts = s.points();
    CHECK(pts.size() == 8);
    CHECK(std::set<point>(pts.begin(), pts.end()).size() == 8);
    for (point p : pts) CHECK(s.contains(p));
}

TEST_CASE("orthogonal complement") {
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<point> pt(1, 127);
        Subspace s(7);
        for (int k = 0; k < 3; ++k) s.insert(pt(rng()));
        const Subspace c = s.orthogonal_complement();
        CHECK(c.dim() == 7 - s.dim());
        for (point x : c.points())
            for (point y : s.basis()) CHECK(bits::parity(x & y) == 0);
        CHECK(c.orthogonal_complement() == s);
    }
}

TEST_CASE("canonical 2-dimensional representatives") {
    for (int n : {3, 4, 5}) {
        std::set<Subspace> seen;
        std::uint64_t count = 0;
        for_each_2dim_rep(n, [&](point u, point v) {
            ++count;
            const Subspace s = Subspace::from_vectors(n, {u, v});
            CHECK(s.dim() == 2);
            CHECK(s.basis() == std::vector<point>{u, v});  // the pair is already canonical
            seen.insert(s);
        });
        CHECK(count == count_2dim_subspaces(n));
        CHECK(seen.size() == count);
        CHECK(seen.size() == testutil::all_subspaces(n, 2).size());
    }
}

TEST_CASE("bit matrices") {
    const BitMatrix id = BitMatrix::identity(6);
    CHECK(id.invertible());
    CHECK(id.apply(37) == 37);
    const BitMatrix singular(3, {1, 2, 3});
    CHECK_FALSE(singular.invertible());
    for (int i = 0; i < 10; ++i) {
        const BitMatrix m = testutil::random_invertible(6);
        std::set<point> image;
        for (point x = 0; x < 64; ++x) image.insert(m.apply(x));
        CHECK(image.size() == 64);
    }
}
