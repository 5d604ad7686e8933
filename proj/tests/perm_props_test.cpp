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

namespace {

/// Corpus of maps with P1 for the implication properties.
std::vector<VectorialFunction> p1_corpus() {
    std::vector<VectorialFunction> out;
    for (int m : {3, 5, 7}) out.push_back(monomial_map(FieldSpec::standard(m), 3));
    for (int m : {4, 6}) out.push_back(inverse_map(FieldSpec::standard(m)));
    out.push_back(extend_p1(inverse_map(FieldSpec::standard(4)), VectorialFunction::identity(4)));
    return out;
}

}  // namespace

TEST_CASE("p1 verdicts") {
    SUBCASE("apn permutations have p1") {
        for (int m : {3, 5}) CHECK(has_p1(inverse_map(FieldSpec::standard(m))).verdict);
    }
    SUBCASE("the inverse map keeps p1 on even extensions") {
        CHECK(has_p1(inverse_map(FieldSpec::standard(4))).verdict);
        CHECK(has_p1(inverse_map(FieldSpec::standard(6))).verdict);
    }
    SUBCASE("affine permutations fail with a verifiable witness") {
        const BitMatrix a = testutil::random_invertible(4);
        const VectorialFunction aff =
            VectorialFunction::build(4, 4, [&](point x) { return a.apply(x); });
        const P1Result r = has_p1(aff);
        CHECK_FALSE(r.verdict);
        REQUIRE(r.witness.has_value());
        CHECK(is_zero_map(vsecond_derivative(aff, r.witness->first, r.witness->second)));
    }
}

TEST_CASE("vanishing subspaces") {
    SUBCASE("p1 maps vanish only on lines") {
        const VectorialFunction f = inverse_map(FieldSpec::standard(4));
        const std::vector<Subspace> subs = vanishing_subspaces(f, 4);
        CHECK(subs.size() == 15);  // the 2^m - 1 one-dimensional subspaces
        for (const Subspace& s : subs) CHECK(s.dim() == 1);
    }
    SUBCASE("the a+c sum vanishes on the printed line") {
        const VectorialFunction sum = vadd(quad_perm5_a(), quad_perm5_c());
        const std::vector<Subspace> subs = vanishing_subspaces(sum, 4);
        const Subspace printed = Subspace::from_vectors(5, {12});
        CHECK(std::find(subs.begin(), subs.end(), printed) != subs.end());
        bool has_bigger = false;
        for (const Subspace& s : subs) has_bigger = has_bigger || s.dim() >= 2;
        CHECK(has_bigger);  // quadratic maps vanish beyond dimension 1
    }
    SUBCASE("agrees with the definition-verbatim oracle at m = 4") {
        for (int i = 0; i < 5; ++i) {
            const VectorialFunction f = testutil::random_permutation(4);
            const std::vector<Subspace> got = vanishing_subspaces(f, 3);
            std::vector<Subspace> want;
            for (int r = 1; r <= 3; ++r)
                for (const Subspace& s : testutil::all_subspaces(4, r))
                    if (testutil::vanishes_by_definition(f, s)) want.push_back(s);
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }
}

TEST_CASE("derivative span dimension") {
    SUBCASE("printed witness line has a one-dimensional span") {
        const VectorialFunction sum = vadd(quad_perm5_a(), quad_perm5_c());
        CHECK(v_s_dimension(sum, Subspace::from_vectors(5, {12})) == 1);
        CHECK(v_s_dimension(sum, Subspace::from_vectors(5, {16})) == 1);
    }
    SUBCASE("maps without linear structures span at least two dimensions on lines") {
        const VectorialFunction inv = inverse_map(FieldSpec::standard(5));
        for (point a = 1; a < 32; ++a)
            CHECK(v_s_dimension(inv, Subspace::from_vectors(5, {a})) >= 2);
    }
    SUBCASE("rejects non-vanishing subspaces") {
        const VectorialFunction inv = inverse_map(FieldSpec::standard(4));
        CHECK_THROWS_AS(v_s_dimension(inv, Subspace::from_vectors(4, {1, 2})),
                        SubspaceNotVanishingError);
    }
}

TEST_CASE("p2 verdicts") {
    SUBCASE("fixture sums") {
        CHECK(has_p2(vadd(quad_perm5_a(), quad_perm5_b())).verdict);
        const P2Witness w = has_p2(vadd(quad_perm5_a(), quad_perm5_c()));
        REQUIRE_FALSE(w.verdict);
        CHECK(*w.failing_s == Subspace::from_vectors(5, {12}));
        CHECK(*w.failing_v == Subspace::from_vectors(5, {1, 2, 4, 16}));
        CHECK(w.failing_s->dim() + w.failing_v->dim() == 5);
    }
    SUBCASE("witnesses re-verify from the report alone") {
        const VectorialFunction sum = vadd(quad_perm5_a(), quad_perm5_c());
        const P2Witness w = has_p2(sum);
        REQUIRE_FALSE(w.verdict);
        for (point v : w.failing_v->points())
            for (point a : w.failing_s->points())
                for (point y = 0; y < 32; ++y)
                    CHECK(bits::parity(v & (sum(y) ^ sum(y ^ a))) == 0);
    }
    SUBCASE("affine and constant maps fail immediately") {
        CHECK_FALSE(has_p2(VectorialFunction::identity(5)).verdict);
        CHECK_FALSE(has_p2(VectorialFunction(4, 4, std::vector<std::uint32_t>(16, 7))).verdict);
        CHECK_FALSE(has_p2(VectorialFunction(4, 4, std::vector<std::uint32_t>(16, 0))).verdict);
    }
    SUBCASE("p1 implies p2 over the corpus") {
        for (const VectorialFunction& f : p1_corpus()) {
            REQUIRE(has_p1(f).verdict);
            CHECK(has_p2(f).verdict);
        }
    }
    SUBCASE("p2 implies no vectorial linear structures") {
        std::vector<VectorialFunction> with_p2 = p1_corpus();
        with_p2.push_back(extend_p2(quad_perm5_a(), quad_perm5_b()));
        with_p2.push_back(switch_extension(quad_perm5_a(), quad_perm5_c()));
        for (const VectorialFunction& f : with_p2) {
            if (!has_p2(f).verdict) continue;
            CHECK_FALSE(vectorial_linear_structure(f).has_value());
        }
    }
    SUBCASE("degree-capped checker agrees with the all-dimensions oracle at m = 4") {
        std::vector<VectorialFunction> corpus;
        for (int i = 0; i < 6; ++i) corpus.push_back(testutil::random_permutation(4));
        corpus.push_back(inverse_map(FieldSpec::standard(4)));
        corpus.push_back(VectorialFunction::identity(4));
        corpus.push_back(vadd(testutil::random_permutation(4), testutil::random_permutation(4)));
        // arbitrary maps reach degree m, which bijections cannot
        std::uniform_int_distribution<std::uint32_t> val(0, 15);
        for (int i = 0; i < 4; ++i)
            corpus.push_back(
                VectorialFunction::build(4, 4, [&](point) { return val(testutil::rng()); }));
        for (const VectorialFunction& f : corpus) {
            CAPTURE(degree(f));
            CHECK(has_p2(f).verdict == testutil::p2_by_definition(f));
        }
    }
    SUBCASE("degree-capped checker agrees with the oracle on the 5-bit fixtures") {
        for (const VectorialFunction* f :
             {&quad_perm5_a(), &quad_perm5_b(), &quad_perm5_c()}) {
            CHECK(has_p2(*f).verdict == testutil::p2_by_definition(*f));
        }
        const VectorialFunction sum_ab = vadd(quad_perm5_a(), quad_perm5_b());
        const VectorialFunction sum_ac = vadd(quad_perm5_a(), quad_perm5_c());
        CHECK(has_p2(sum_ab).verdict == testutil::p2_by_definition(sum_ab));
        CHECK(has_p2(sum_ac).verdict == testutil::p2_by_definition(sum_ac));
    }
}

TEST_CASE("p2 is equivalent to uniqueness of the canonical top subspace") {
    // for a permutation pi, x.pi(y) has exactly one top-dimensional
    // vanishing subspace (the canonical one) iff pi satisfies P2
    auto check_equivalence = [](const VectorialFunction& pi) {
        const int m = pi.m();
        const BooleanFunction f = mm_bent(pi);
        Subspace canonical(2 * m);
        for (int i = 0; i < m; ++i) canonical.insert(point{1} << i);
        const std::vector<Subspace> tops = enumerate_msubspaces(f, m);
        const bool unique_canonical = tops.size() == 1 && tops[0] == canonical;
        CAPTURE(m);
        CHECK(has_p2(pi).verdict == unique_canonical);
    };
    for (int i = 0; i < 6; ++i) check_equivalence(testutil::random_permutation(4));
    check_equivalence(inverse_map(FieldSpec::standard(4)));
    check_equivalence(VectorialFunction::identity(4));
    check_equivalence(quad_perm5_a());
    check_equivalence(quad_perm5_b());
    check_equivalence(quad_perm5_c());
    check_equivalence(inverse_map(FieldSpec::standard(5)));
}

TEST_CASE("extensions") {
    SUBCASE("equal inputs violate the p1 precondition") {
        const VectorialFunction s = testutil::random_permutation(4);
        CHECK_THROWS_AS(extend_p1(s, s), PreconditionError);
    }
    SUBCASE("outputs are always permutations") {
        for (int i = 0; i < 5; ++i) {
            const VectorialFunction s1 = testutil::random_permutation(3);
            const VectorialFunction s2 = testutil::random_permutation(3);
            CHECK(is_permutation(switch_extension(s1, s2)));
        }
    }
    SUBCASE("p1 extension from an apn base") {
        const VectorialFunction pi =
            extend_p1(inverse_map(FieldSpec::standard(4)), VectorialFunction::identity(4));
        CHECK(pi.m() == 5);
        CHECK(has_p1(pi).verdict);
    }
    SUBCASE("p2 extension of the fixture pair") {
        const VectorialFunction pi = extend_p2(quad_perm5_a(), quad_perm5_b());
        CHECK(is_permutation(pi));
        CHECK(has_p2(pi).verdict);
    }
    SUBCASE("p2 extension rejects the a+c pair, yet the direct build has p2") {
        CHECK_THROWS_AS(extend_p2(quad_perm5_a(), quad_perm5_c()), PreconditionError);
        CHECK(has_p2(switch_extension(quad_perm5_a(), quad_perm5_c())).verdict);
    }
    SUBCASE("translated copies: the sum is a derivative, evaluated without a claim") {
        const VectorialFunction s1 = quad_perm5_a();
        const VectorialFunction s2 =
            VectorialFunction::build(5, 5, [&](point y) { return s1(y ^ 5); });
        const VectorialFunction sum = vadd(s1, s2);
        CHECK(sum == vderivative(s1, 5));
        const P2Witness w = has_p2(sum);  // exercises the non-permutation path
        CHECK((w.verdict || w.failing_s.has_value()));
    }
    SUBCASE("non-permutations are rejected") {
        CHECK_THROWS_AS(extend_p1(vadd(quad_perm5_a(), quad_perm5_b()), quad_perm5_a()),
                        NotAPermutationError);
    }
}
