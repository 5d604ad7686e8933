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

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bent_construct.hpp"
#include "fixtures.hpp"
#include "gf2m.hpp"
#include "io.hpp"
#include "msubspace.hpp"
#include "perm_props.hpp"

// The built-in verification suite: deterministic known-answer checks pinning
// the library against published worked examples. Each check reports
// pass/fail with a short detail string; the CLI `verify-paper` command and
// the acceptance tests both run these rows.

namespace bentkit::verification {

struct CheckResult {
    bool pass = false;
    std::string detail;
};

struct Check {
    std::string name;
    std::string summary;
    std::function<CheckResult(int /*threads*/)> run;
};

namespace detail {

class Assertions {
public:
    template <class T, class U>
    void equal(const T& got, const U& want, const std::string& label) {
        if (!(got == static_cast<T>(want))) {
            std::ostringstream os;
            os << label << ": got " << got << ", want " << want;
            fail(os.str());
        }
    }

    void require(bool ok, const std::string& label) {
        if (!ok) fail(label);
    }

    void fail(const std::string& why) {
        pass_ = false;
        if (!detail_.empty()) detail_ += "; ";
        detail_ += why;
    }

    CheckResult result(const std::string& ok_detail) const {
        return {pass_, pass_ ? ok_detail : detail_};
    }

private:
    bool pass_ = true;
    std::string detail_;
};

inline BooleanFunction d0_dual_form(const VectorialFunction& rho) {
    const int m = rho.m();
    const point xmask = (point{1} << m) - 1;
    return BooleanFunction::build(2 * m, [&](point z) {
        const point x = z & xmask, y = z >> m;
        return (bits::parity(y & rho(x)) ^ int(y == 0)) != 0;
    });
}

}  // namespace detail

inline std::vector<Check> checks() {
    using fixtures::apn_perm3;
    using fixtures::quad_perm5_a;
    using fixtures::quad_perm5_b;
    using fixtures::quad_perm5_c;
    std::vector<Check> list;

    list.push_back({"p2-fixtures", "the three 5-bit fixtures are quadratic permutations", [](int) {
        detail::Assertions a;
        for (const VectorialFunction* s : {&quad_perm5_a(), &quad_perm5_b(), &quad_perm5_c()}) {
            a.require(is_permutation(*s), "fixture is a permutation");
            a.equal(degree(*s), 2, "fixture degree");
        }
        const VectorialFunction sum = vadd(quad_perm5_a(), quad_perm5_b());
        int preimages = 0;
        for (point x = 0; x < 32; ++x) preimages += sum(x) == 0;
        a.equal(preimages, 9, "preimages of 0 under the a+b sum");
        return a.result("three quadratic permutations; a+b maps 9 inputs to 0");
    }});

    list.push_back({"p2-sum-ab", "sum of fixtures a and b satisfies P2", [](int threads) {
        detail::Assertions a;
        a.require(has_p2(vadd(quad_perm5_a(), quad_perm5_b()), threads).verdict, "P2 of the sum");
        return a.result("P2 holds for the non-bijective sum");
    }});

    list.push_back({"p2-sum-ac-witness", "sum of fixtures a and c fails P2 at S=<12>", [](int threads) {
        detail::Assertions a;
        const VectorialFunction sum = vadd(quad_perm5_a(), quad_perm5_c());
        const P2Witness w = has_p2(sum, threads);
        a.require(!w.verdict, "P2 must fail");
        if (w.failing_s) {
            a.require(*w.failing_s == Subspace::from_vectors(5, {12}), "failing S is <(0,0,1,1,0)>");
            a.equal(w.failing_span_dim, 1, "derivative span dimension");
        }
        if (w.failing_v)
            a.require(*w.failing_v == Subspace::from_vectors(5, {1, 2, 4, 16}),
                      "failing V is <e1,e2,e3,e5>");
        const VectorialFunction d = vderivative(sum, 12);
        const VectorialFunction want =
            VectorialFunction::build(5, 5, [](point y) { return (y >> 1 & 1) << 3; });
        a.require(d == want, "derivative along (0,0,1,1,0) is (0,0,0,y2,0)");
        return a.result("fails P2 with S=<12>, V=<1,2,4,16>, D_S = (0,0,0,y2,0)");
    }});

    list.push_back({"p2-extension-ab", "switch extension of (a, b) is a 6-bit P2 permutation",
                    [](int threads) {
        detail::Assertions a;
        const VectorialFunction pi = extend_p2(quad_perm5_a(), quad_perm5_b());
        a.require(is_permutation(pi), "extension is a permutation");
        a.equal(pi.m(), 6, "extension dimension");
        a.require(has_p2(pi, threads).verdict, "P2 of the extension");
        return a.result("permutation of F_2^6 with P2");
    }});

    list.push_back({"p2-extension-ac", "direct extension of (a, c) has P2 though the sum does not",
                    [](int threads) {
        detail::Assertions a;
        bool threw = false;
        try {
            extend_p2(quad_perm5_a(), quad_perm5_c());
        } catch (const PreconditionError&) {
            threw = true;
        }
        a.require(threw, "extend_p2 must reject the (a, c) pair");
        const VectorialFunction pi = switch_extension(quad_perm5_a(), quad_perm5_c());
        a.require(is_permutation(pi), "direct extension is a permutation");
        a.require(has_p2(pi, threads).verdict, "P2 of the direct extension");
        return a.result("sufficient condition fails, the extension still has P2");
    }});

    list.push_back({"swap-base", "3-bit base fixture: APN permutation with P1, unique top subspace",
                    [](int) {
        detail::Assertions a;
        a.require(is_permutation(apn_perm3()), "fixture is a permutation");
        a.require(is_apn(apn_perm3()), "fixture is APN");
        a.require(has_p1(apn_perm3()).verdict, "fixture has P1");
        const BooleanFunction f1 = mm_bent(apn_perm3());
        a.require(is_bent(f1), "x.pi(y) is bent");
        const std::vector<Subspace> tops = enumerate_msubspaces(f1, 3);
        a.equal(tops.size(), std::size_t{1}, "top subspace count");
        if (!tops.empty())
            a.require(tops[0] == Subspace::from_vectors(6, {1, 2, 4}), "top subspace is canonical");
        return a.result("APN, P1, unique canonical 3-dimensional subspace");
    }});

    list.push_back({"swap-anf", "8-variable substitution construction matches the printed polynomial",
                    [](int) {
        detail::Assertions a;
        const BooleanFunction f1 = mm_bent(apn_perm3());
        const BooleanFunction f = swap_construct_linear(f1, fixtures::swap_matrix6());
        a.require(is_bent(f), "output is bent");
        a.equal(format_anf(f, "z"), std::string(fixtures::kSwapRegressionAnf8), "output polynomial");
        return a.result("polynomial reproduced bit-exactly");
    }});

    list.push_back({"swap-outside", "8-variable construction output has no 4-dimensional flat subspace",
                    [](int threads) {
        detail::Assertions a;
        const BooleanFunction f =
            swap_construct_linear(mm_bent(apn_perm3()), fixtures::swap_matrix6());
        a.require(!is_in_mm_sharp(f, threads).has_value(), "no top-dimensional subspace");
        return a.result("outside the completed Maiorana-McFarland class");
    }});

    list.push_back({"census-optimal-d0", "10-variable field-inverse construction: exact census",
                    [](int threads) {
        detail::Assertions a;
        const BooleanFunction f = d0_bent(inverse_map(FieldSpec::standard(5)));
        a.require(is_bent(f), "bent");
        const CensusReport census = decomposition_census(f, threads);
        a.equal(census.total, std::uint64_t{174251}, "total 2-dimensional subspaces");
        a.equal(census.degree_multiset.count(3) ? census.degree_multiset.at(3) : 0,
                std::uint64_t{174220}, "degree-3 second derivatives");
        a.equal(census.degree_multiset.count(2) ? census.degree_multiset.at(2) : 0,
                std::uint64_t{31}, "degree-2 second derivatives");
        a.equal(census.degree_multiset.size(), std::size_t{2}, "degree values");
        a.require(census.five_valued_only(), "all decompositions five-valued");
        a.equal(relaxed_linearity_index(f, threads), 1, "relaxed index");
        a.require(is_l_optimal(f), "lowest possible linearity index");
        return a.result("degrees {3:174220, 2:31}; all 174251 decompositions five-valued; index 1");
    }});

    list.push_back({"remark-monomial-inverse", "power-21 map on 5 bits inverts to the cube map",
                    [](int) {
        detail::Assertions a;
        const FieldSpec fs = FieldSpec::standard(5);
        a.require(inverse_perm(monomial_map(fs, 21)) == monomial_map(fs, 3), "inverse exponent");
        return a.result("x^21 and x^3 are mutually inverse on GF(2^5)");
    }});

    list.push_back({"remark-dual-formula", "dual of the power-21 construction has the closed form",
                    [](int) {
        detail::Assertions a;
        const FieldSpec fs = FieldSpec::standard(5);
        const VectorialFunction pi = monomial_map(fs, 21);
        const BooleanFunction f = d0_bent(pi);
        a.require(dual(f) == detail::d0_dual_form(inverse_perm(pi)),
                  "dual equals y . pi^{-1}(x) + delta_0(y) bit-exactly");
        return a.result("dual formula reproduced bit-exactly");
    }});

    list.push_back({"remark-dual-decompositions",
                    "power-21 construction: dual fails relaxed optimality, census is mixed",
                    [](int threads) {
        detail::Assertions a;
        const FieldSpec fs = FieldSpec::standard(5);
        const BooleanFunction f = d0_bent(monomial_map(fs, 21));
        const BooleanFunction fd = dual(f);
        a.equal(relaxed_linearity_index(fd, threads), 2, "relaxed index of the dual");
        a.equal(linearity_index(fd, threads), 1, "strict index of the dual");
        const CensusReport census = decomposition_census(f, threads);
        a.require(!census.five_valued_only(), "census must contain a non-five-valued class");
        a.require(census.bent_count + census.semibent_count > 0, "bent or semi-bent decompositions");
        a.equal(census.bent_count + census.semibent_count + census.five_valued_count +
                    census.irregular_count,
                census.total, "class counts sum to the total");
        return a.result("relaxed index 2 (strict index 1); census has " +
                        std::to_string(census.bent_count) + " bent decompositions");
    }});

    list.push_back({"trace-ps-optimal", "Tr(x^15) on GF(2^8): optimal index, five-valued only",
                    [](int threads) {
        detail::Assertions a;
        const BooleanFunction f = trace_monomial(FieldSpec::standard(8), 15);
        a.require(is_bent(f), "bent");
        a.require(is_l_optimal(f), "no 2-dimensional flat subspace");
        const CensusReport census = decomposition_census(f, threads);
        a.require(census.five_valued_only(), "all decompositions five-valued");
        return a.result("bent, optimal index, all 10795 decompositions five-valued");
    }});

    list.push_back({"dual-d0-closed-form", "the D_0 dual identity over the permutation corpus",
                    [](int) {
        detail::Assertions a;
        for (int m : {3, 4, 5}) {
            const FieldSpec fs = FieldSpec::standard(m);
            for (const VectorialFunction& pi :
                 {inverse_map(fs), monomial_map(fs, 3), VectorialFunction::identity(m)}) {
                if (!is_permutation(pi)) continue;
                a.require(dual(d0_bent(pi)) == detail::d0_dual_form(inverse_perm(pi)),
                          "dual identity at m=" + std::to_string(m));
            }
        }
        return a.result("dual identity holds over the corpus (m = 3, 4, 5)");
    }});

    list.push_back({"p1-even-inverse", "field inverse has P1 on 4 and 6 bits as well", [](int) {
        detail::Assertions a;
        a.require(has_p1(inverse_map(FieldSpec::standard(4))).verdict, "P1 at m=4");
        a.require(has_p1(inverse_map(FieldSpec::standard(6))).verdict, "P1 at m=6");
        a.require(!is_apn(inverse_map(FieldSpec::standard(4))), "not APN at m=4");
        return a.result("P1 holds for the inverse map on even extensions");
    }});

    list.push_back({"p1-apn-corpus", "APN cube maps have P1 and P2; component structures as expected",
                    [](int threads) {
        detail::Assertions a;
        for (int m : {3, 5, 7}) {
            const VectorialFunction g = monomial_map(FieldSpec::standard(m), 3);
            a.require(is_apn(g), "cube map APN at m=" + std::to_string(m));
            a.require(has_p1(g).verdict, "P1 at m=" + std::to_string(m));
            a.require(has_p2(g, threads).verdict, "P2 at m=" + std::to_string(m));
        }
        a.require(has_component_linear_structure(monomial_map(FieldSpec::standard(5), 3)).has_value(),
                  "quadratic components admit linear structures");
        a.require(!has_component_linear_structure(inverse_map(FieldSpec::standard(5))).has_value(),
                  "inverse-map components admit none at m=5");
        return a.result("cube maps APN with P1 and P2; component structures as expected");
    }});

    list.push_back({"subspace-count-bound", "quadratic bound attained: 15 flat planes of x.y on 4 bits",
                    [](int) {
        detail::Assertions a;
        const BooleanFunction f = mm_bent(VectorialFunction::identity(2));
        a.equal(enumerate_msubspaces(f, 2).size(), std::size_t{15}, "2-dimensional count");
        a.equal(flat_pairs(f).size(), std::size_t{15}, "flat pair count");
        return a.result("exactly 15 = (2+1)(4+1) flat planes");
    }});

    list.push_back({"anf-fixture-coordinates", "fixture coordinate polynomials parse to the right masks",
                    [](int) {
        detail::Assertions a;
        const AnfPolynomial c2 = to_anf(coordinate(quad_perm5_a(), 1));
        a.require(c2 == AnfPolynomial::from_monomials(5, {2, 3, 5}),
                  "second coordinate is y2 + y1y2 + y1y3");
        return a.result("coordinate masks {2, 3, 5} as printed");
    }});

    list.push_back({"inv3-identification", "3-bit fixture is the field inverse up to linear equivalence",
                    [](int) {
        detail::Assertions a;
        const VectorialFunction inv = inverse_map(FieldSpec(3, 0b1011));
        a.require(!(inv == apn_perm3()), "not bit-identical in the polynomial basis");
        bool involution = true;
        for (point x = 0; x < 8 && involution; ++x)
            involution = apn_perm3()(apn_perm3()(x)) == x;
        a.require(!involution, "fixture is not an involution, so no shared-basis reading exists");
        const BitMatrix b(3, {1, 6, 2});
        const VectorialFunction composed =
            VectorialFunction::build(3, 3, [&](point x) { return inv(b.apply(x)); });
        a.require(composed == apn_perm3(), "fixture equals inverse composed with the input map B");
        return a.result("equals x^{-1} o B for B = rows {1,6,2} over x^3+x+1");
    }});

    return list;
}

/// Runs the checks whose names contain the filter substring (all when empty).
/// Returns the failures.
template <class Sink>
std::vector<std::string> run_checks(const std::string& filter, int threads, Sink&& sink) {
    std::vector<std::string> failures;
    for (const Check& check : checks()) {
        if (!filter.empty() && check.name.find(filter) == std::string::npos) continue;
        CheckResult result;
        try {
            result = check.run(threads);
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        sink(check, result);
        if (!result.pass) failures.push_back(check.name);
    }
    return failures;
}

}  // namespace bentkit::verification
