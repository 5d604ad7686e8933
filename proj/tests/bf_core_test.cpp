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

#include "bentkit/bentkit.hpp"
#include "test_util.hpp"

using namespace bentkit;
using testutil::rng;

TEST_CASE("moebius transform matches the subset-sum oracle and round-trips") {
    SUBCASE("zero function") {
        const AnfPolynomial p = to_anf(BooleanFunction(3));
        CHECK(p.monomials().empty());
        CHECK(degree(p) == 0);
    }
    SUBCASE("single quadratic monomial") {
        const BooleanFunction f = BooleanFunction::build(2, [](point x) { return x == 3; });
        CHECK(to_anf(f) == AnfPolynomial::from_monomials(2, {3}));
    }
    SUBCASE("oracle agreement, exhaustive n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            const std::size_t functions = std::size_t{1} << (std::size_t{1} << n);
            for (std::size_t code = 0; code < functions; ++code) {
                const BooleanFunction f =
                    BooleanFunction::build(n, [&](point x) { return code >> x & 1; });
                const AnfPolynomial p = to_anf(f);
                CHECK(p == testutil::naive_anf(f));
                CHECK(from_anf(p) == f);
            }
        }
    }
    SUBCASE("oracle agreement, random n = 6") {
        for (int i = 0; i < 10; ++i) {
            const BooleanFunction f = testutil::random_function(6);
            CHECK(to_anf(f) == testutil::naive_anf(f));
        }
    }
    SUBCASE("round trip, random n <= 12") {
        for (int n : {5, 8, 10, 12}) {
            const BooleanFunction f = testutil::random_function(n);
            CHECK(from_anf(to_anf(f)) == f);
        }
    }
}

TEST_CASE("degree") {
    CHECK(degree(BooleanFunction(4)) == 0);
    const BooleanFunction cubic = BooleanFunction::build(3, [](point x) { return x == 7; });
    CHECK(degree(cubic) == 3);
    const BooleanFunction ones = complement(BooleanFunction(5));
    CHECK(degree(ones) == 0);
    CHECK(weight(ones) == 32);
}

TEST_CASE("walsh transform") {
    SUBCASE("flat function") {
        const WalshSpectrum s = wht(BooleanFunction(2));
        CHECK(s[0] == 4);
        CHECK(s[1] == 0);
        CHECK(s[2] == 0);
        CHECK(s[3] == 0);
    }
    SUBCASE("two-variable product has one negative value") {
        const BooleanFunction f = BooleanFunction::build(2, [](point x) { return x == 3; });
        const WalshSpectrum s = wht(f);
        CHECK(s[0] == 2);
        CHECK(s[1] == 2);
        CHECK(s[2] == 2);
        CHECK(s[3] == -2);
    }
    SUBCASE("oracle agreement and parseval") {
        for (int n : {3, 5, 8}) {
            const BooleanFunction f = testutil::random_function(n);
            const WalshSpectrum s = wht(f);
            CHECK(s.values == testutil::naive_wht(f));
            CHECK(s.parseval_holds());
            CHECK(inverse_wht(s) == f);
        }
    }
    SUBCASE("values are even and bounded for two or more variables") {
        for (int n : {2, 4, 7}) {
            const WalshSpectrum s = wht(testutil::random_function(n));
            for (std::int64_t v : s.values) {
                CHECK(v % 2 == 0);
                CHECK(std::abs(v) <= (std::int64_t{1} << n));
            }
        }
    }
    SUBCASE("spectra that are not Boolean are rejected") {
        WalshSpectrum s = wht(testutil::random_function(4));
        s.values[3] += 2;
        CHECK_THROWS_AS(inverse_wht(s), InvalidSpectrumError);
    }
    SUBCASE("bent spectra are flat") {
        const BooleanFunction f = mm_bent(VectorialFunction::identity(2));
        for (std::int64_t v : wht(f).values) CHECK(std::abs(v) == 4);
    }
}

TEST_CASE("bentness and duals") {
    const BooleanFunction prod4 = mm_bent(VectorialFunction::identity(2));
    CHECK(is_bent(prod4));
    CHECK_FALSE(is_bent(BooleanFunction(4)));
    CHECK_FALSE(is_bent(testutil::random_function(5)));  // odd arity

    SUBCASE("inner product is self-dual") {
        CHECK(dual(prod4) == prod4);
        const BooleanFunction prod6 = mm_bent(VectorialFunction::identity(3));
        CHECK(dual(prod6) == prod6);
    }
    SUBCASE("dual is an involution on random bent functions") {
        for (int i = 0; i < 5; ++i) {
            const BooleanFunction f = testutil::random_bent(6);
            REQUIRE(is_bent(f));
            CHECK(dual(dual(f)) == f);
        }
    }
    SUBCASE("non-bent input is rejected") {
        CHECK_THROWS_AS(dual(BooleanFunction(4)), NotBentError);
    }
    SUBCASE("bent weight") {
        for (int i = 0; i < 5; ++i) {
            const BooleanFunction f = testutil::random_bent(6);
            const std::uint64_t w = weight(f);
            CHECK((w == 32 - 4 || w == 32 + 4));
        }
    }
}

TEST_CASE("derivatives") {
    const BooleanFunction f = testutil::random_function(6);
    CHECK(derivative(f, 0).is_zero());
    CHECK(second_derivative(f, 5, 5).is_zero());
    CHECK(second_derivative(f, 9, 0).is_zero());

    SUBCASE("second derivative depends only on the spanned plane") {
        for (int i = 0; i < 20; ++i) {
            std::uniform_int_distribution<point> pt(1, 63);
            const point a = pt(rng()), b = pt(rng());
            if (a == b) continue;
            CHECK(second_derivative(f, a, b) == second_derivative(f, static_cast<point>(a ^ b), b));
            CHECK(second_derivative(f, a, b) == second_derivative(f, b, a));
        }
    }
    SUBCASE("iterated definition") {
        CHECK(second_derivative(f, 13, 22) == derivative(derivative(f, 13), 22));
    }
    SUBCASE("delta function: second derivative is the plane indicator") {
        for (int m : {4, 5, 6}) {
            const BooleanFunction d0 = delta0(m);
            const BooleanFunction dd = second_derivative(d0, 1, 2);
            CHECK(dd == subspace_indicator(m, Subspace::from_vectors(m, {1, 2})));
            CHECK(degree(dd) == m - 2);
        }
    }
}

TEST_CASE("linear structures") {
    CHECK(linear_structures(BooleanFunction(3)).size() == 8);
    const BooleanFunction prod = BooleanFunction::build(2, [](point x) { return x == 3; });
    CHECK(linear_structures(prod) == std::vector<point>{0});

    SUBCASE("the structure set is a subspace") {
        for (int i = 0; i < 5; ++i) {
            const BooleanFunction f = testutil::random_function(5);
            const std::vector<point> ls = linear_structures(f);
            const Subspace span =
                Subspace::from_vectors(5, std::span<const point>(ls.data(), ls.size()));
            CHECK(ls.size() == (std::size_t{1} << span.dim()));
        }
    }
}

TEST_CASE("subspace indicators and the derivative lemma") {
    SUBCASE("delta and full space") {
        const BooleanFunction d0 = delta0(3);
        CHECK(weight(d0) == 1);
        CHECK(d0.get(0));
        CHECK(subspace_indicator(Subspace::full(3)).is_ones());
    }
    SUBCASE("derivative of an indicator along a subspace") {
        // D_V 1_W is the indicator of the direct sum when V meets W trivially
        // and vanishes otherwise; checked for random pairs up to n = 8.
        for (int n : {4, 6, 8}) {
            for (int i = 0; i < 40; ++i) {
                std::uniform_int_distribution<point> pt(1, (point{1} << n) - 1);
                std::uniform_int_distribution<int> dims(1, n / 2);
                Subspace v(n), w(n);
                for (int d = dims(rng()); d > 0; --d) v.insert(pt(rng()));
                for (int d = dims(rng()); d > 0; --d) w.insert(pt(rng()));
                const BooleanFunction dv = subspace_derivative(subspace_indicator(n, w), v);
                bool trivial_meet = true;
                for (point x : v.points()) trivial_meet = trivial_meet && (x == 0 || !w.contains(x));
                if (trivial_meet) {
                    Subspace direct = w;
                    for (point r : v.basis()) direct.insert(r);
                    CHECK(dv == subspace_indicator(n, direct));
                } else {
                    CHECK(dv.is_zero());
                }
            }
        }
    }
}

TEST_CASE("restriction to cosets") {
    const BooleanFunction f = testutil::random_function(6);
    SUBCASE("restriction to the full space is the function itself") {
        CHECK(restrict_to_coset(f, Subspace::full(6), 0) == f);
    }
    SUBCASE("restriction of an indicator to its own subspace") {
        const Subspace v = Subspace::from_vectors(6, {3, 12, 48});
        CHECK(restrict_to_coset(subspace_indicator(6, v), v, 0).is_ones());
    }
    SUBCASE("ambient mismatch is rejected") {
        CHECK_THROWS_AS(restrict_to_coset(f, Subspace::full(5), 0), DimensionError);
    }
    SUBCASE("any representative of the same coset gives the identical output") {
        const Subspace v = Subspace::from_vectors(6, {7, 24});
        const point c = 45;
        for (point p : v.points())
            CHECK(restrict_to_coset(f, v, static_cast<point>(c ^ p)) ==
                  restrict_to_coset(f, v, c));
    }
    SUBCASE("walsh value multiset does not depend on the basis presentation") {
        const Subspace v = Subspace::from_vectors(6, {5, 9, 17});
        const BooleanFunction g = restrict_to_coset(f, v, 42);
        std::vector<std::int64_t> ref = wht(g).values;
        std::sort(ref.begin(), ref.end());
        // same coset, alternative spanning set: evaluate directly
        const std::vector<point> alt = {static_cast<point>(5 ^ 9), 9, static_cast<point>(17 ^ 5)};
        const point rep = v.reduce(42);
        const BooleanFunction h = BooleanFunction::build(3, [&](point z) {
            point x = rep;
            for (int i = 0; i < 3; ++i)
                if (z >> i & 1) x ^= alt[i];
            return f.get(x);
        });
        std::vector<std::int64_t> got = wht(h).values;
        std::sort(got.begin(), got.end());
        CHECK(got == ref);
    }
}

TEST_CASE("pointwise algebra") {
    const BooleanFunction f = testutil::random_function(5);
    CHECK(add(f, f).is_zero());
    CHECK(add(f, complement(f)).is_ones());
    CHECK_THROWS_AS(add(f, BooleanFunction(4)), DimensionError);
    CHECK(weight(delta0(6)) == 1);
}

TEST_CASE("dimension cap is enforced") {
    CHECK_THROWS_AS(BooleanFunction(25), DimensionError);
    CHECK_THROWS_AS(BooleanFunction(0), DimensionError);
    set_max_dimension(10);
    CHECK_THROWS_AS(BooleanFunction(11), DimensionError);
    set_max_dimension(24);
    CHECK_NOTHROW(BooleanFunction(11));
}
