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
using fixtures::quad_perm5_a;
using fixtures::quad_perm5_b;
using fixtures::quad_perm5_c;

TEST_CASE("coordinates and components") {
    const VectorialFunction id = VectorialFunction::identity(4);
    SUBCASE("components of the identity are the linear functions") {
        for (point b = 1; b < 16; ++b) {
            const BooleanFunction c = component(id, b);
            for (point x = 0; x < 16; ++x) CHECK(int(c.get(x)) == bits::parity(b & x));
        }
        CHECK_THROWS_AS(component(id, 0), DimensionError);
    }
    SUBCASE("basis components reproduce the coordinates") {
        const VectorialFunction f = testutil::random_permutation(4);
        for (int i = 0; i < 4; ++i) CHECK(component(f, point{1} << i) == coordinate(f, i));
    }
}

TEST_CASE("fixture coordinate polynomials") {
    REQUIRE(is_permutation(quad_perm5_a()));
    REQUIRE(is_permutation(quad_perm5_b()));
    REQUIRE(is_permutation(quad_perm5_c()));
    SUBCASE("second coordinate of fixture a") {
        CHECK(to_anf(coordinate(quad_perm5_a(), 1)) == AnfPolynomial::from_monomials(5, {2, 3, 5}));
    }
    SUBCASE("anf round trip through from_coordinate_anfs") {
        const VectorialFunction f = quad_perm5_b();
        CHECK(from_coordinate_anfs(coordinate_anfs(f)) == f);
    }
    SUBCASE("the a+b sum is not a permutation: nine preimages of zero") {
        const VectorialFunction sum = vadd(quad_perm5_a(), quad_perm5_b());
        CHECK_FALSE(is_permutation(sum));
        int preimages = 0;
        for (point x = 0; x < 32; ++x) preimages += sum(x) == 0;
        CHECK(preimages == 9);
    }
}

TEST_CASE("vectorial derivatives") {
    const VectorialFunction f = testutil::random_permutation(5);
    CHECK(is_zero_map(vderivative(f, 0)));
    SUBCASE("printed derivative of the a+c sum") {
        const VectorialFunction sum = vadd(quad_perm5_a(), quad_perm5_c());
        const VectorialFunction d = vderivative(sum, 12);
        for (point y = 0; y < 32; ++y) CHECK(d(y) == ((y >> 1 & 1u) << 3));
    }
    SUBCASE("affine maps have vanishing second derivatives") {
        const BitMatrix a = testutil::random_invertible(5);
        const VectorialFunction aff =
            VectorialFunction::build(5, 5, [&](point x) { return a.apply(x) ^ 19u; });
        for (point u = 1; u < 32; ++u)
            for (point v = u + 1; v < 32; ++v)
                CHECK(is_zero_map(vsecond_derivative(aff, u, v)));
    }
}

TEST_CASE("permutation predicates") {
    CHECK(is_permutation(VectorialFunction::identity(3)));
    CHECK(inverse_perm(VectorialFunction::identity(3)) == VectorialFunction::identity(3));
    CHECK_THROWS_AS(inverse_perm(vadd(quad_perm5_a(), quad_perm5_b())), NotAPermutationError);
    SUBCASE("inverse_perm is an involution") {
        const VectorialFunction f = testutil::random_permutation(6);
        CHECK(inverse_perm(inverse_perm(f)) == f);
    }
}

TEST_CASE("apn") {
    CHECK(is_apn(inverse_map(FieldSpec::standard(3))));
    CHECK(is_apn(inverse_map(FieldSpec::standard(5))));
    CHECK(is_apn(inverse_map(FieldSpec::standard(7))));
    CHECK_FALSE(is_apn(inverse_map(FieldSpec::standard(4))));
    CHECK_FALSE(is_apn(inverse_map(FieldSpec::standard(6))));
    SUBCASE("affine permutations are never apn") {
        for (int m : {3, 4}) {
            const BitMatrix a = testutil::random_invertible(m);
            const VectorialFunction aff =
                VectorialFunction::build(m, m, [&](point x) { return a.apply(x); });
            CHECK_FALSE(is_apn(aff));
        }
    }
    SUBCASE("the inverse of a monomial apn permutation is apn, all exponents up to m = 7") {
        for (int m = 3; m <= 7; ++m) {
            const FieldSpec fs = FieldSpec::standard(m);
            int found = 0;
            for (std::uint64_t d = 1; d < (std::uint64_t{1} << m) - 1; ++d) {
                const VectorialFunction g = monomial_map(fs, d);
                if (!is_permutation(g) || !is_apn(g)) continue;
                ++found;
                CHECK(is_apn(inverse_perm(g)));
            }
            if (m % 2 == 1) CHECK(found > 0);
        }
    }
}

TEST_CASE("component linear structures") {
    SUBCASE("quadratic permutations always have one") {
        CHECK(has_component_linear_structure(monomial_map(FieldSpec::standard(5), 3)).has_value());
        CHECK(has_component_linear_structure(quad_perm5_a()).has_value());
    }
    SUBCASE("the 5-bit inverse map has none") {
        CHECK_FALSE(has_component_linear_structure(inverse_map(FieldSpec::standard(5))).has_value());
    }
    SUBCASE("the identity has one for every direction") {
        const auto w = has_component_linear_structure(VectorialFunction::identity(4));
        REQUIRE(w.has_value());
        CHECK(is_constant(
            VectorialFunction::build(4, 1, [&](point y) {
                const VectorialFunction d = vderivative(VectorialFunction::identity(4), w->second);
                return std::uint32_t(bits::parity(w->first & d(y)));
            })));
    }
    SUBCASE("witnesses verify") {
        for (int i = 0; i < 5; ++i) {
            const VectorialFunction f = testutil::random_permutation(4);
            const auto w = has_component_linear_structure(f);
            if (!w) continue;
            const VectorialFunction d = vderivative(f, w->second);
            const BooleanFunction comp =
                BooleanFunction::build(4, [&](point y) { return bits::parity(w->first & d(y)) != 0; });
            CHECK(comp.is_constant());
        }
    }
}

TEST_CASE("trace monomial functions") {
    const BooleanFunction f = trace_monomial(FieldSpec::standard(8), 15);
    CHECK(f.n() == 8);
    CHECK(is_bent(f));
}
