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

#include <string_view>

#include "io.hpp"
#include "subspace.hpp"
#include "vectorial.hpp"

// Reference objects used by the built-in verification suite and the CLI
// `fixture:` specs: three quadratic permutations of F_2^5 that exercise the
// P2 checker and the switch extension, and a 3-bit APN permutation (an
// affine-equivalent presentation of the field inverse) that seeds the
// 8-variable construction regression.

namespace bentkit::fixtures {

inline constexpr std::string_view kQuadPerm5A =
    "y1\n"
    "y2 + y1*y2 + y1*y3\n"
    "y3 + y1*y3 + y1*y5\n"
    "y1*y2 + y4 + y1*y4\n"
    "y2*y3 + y1*y4 + y5 + y1*y5\n";

inline constexpr std::string_view kQuadPerm5B =
    "y1*y2 + y1*y5 + y2*y5\n"
    "y1 + y2 + y2*y5\n"
    "y3 + y1*y4\n"
    "y1*y3 + y4 + y1*y4\n"
    "y1 + y1*y3 + y3*y4 + y5 + y2*y5\n";

inline constexpr std::string_view kQuadPerm5C =
    "y1\n"
    "y2 + y1*y2 + y1*y4\n"
    "y1*y2 + y3 + y1*y3\n"
    "y2*y3 + y4 + y1*y4 + y1*y5\n"
    "y1*y3 + y2*y4 + y5 + y1*y5\n";

inline constexpr std::string_view kApnPerm3 =
    "y1 + y2 + y3 + y2*y3\n"
    "y2 + y1*y2 + y1*y3\n"
    "y1*y2 + y3\n";

/// Expected ANF of the 8-variable swap regression output (in z1..z8).
inline constexpr std::string_view kSwapRegressionAnf8 =
    "z1*z4 + z1*z5 + z2*z5 + z2*z4*z5 + z3*z4*z5 + z1*z6 + z3*z6 + z2*z4*z6 + z1*z5*z6 + "
    "z1*z3*z7 + z1*z4*z7 + z2*z3*z5*z7 + z2*z4*z5*z7 + z3*z6*z7 + z2*z3*z6*z7 + z4*z6*z7 + "
    "z2*z4*z6*z7 + z7*z8";

inline const VectorialFunction& quad_perm5_a() {
    static const VectorialFunction f = parse_coordinate_anfs(kQuadPerm5A);
    return f;
}

inline const VectorialFunction& quad_perm5_b() {
    static const VectorialFunction f = parse_coordinate_anfs(kQuadPerm5B);
    return f;
}

inline const VectorialFunction& quad_perm5_c() {
    static const VectorialFunction f = parse_coordinate_anfs(kQuadPerm5C);
    return f;
}

inline const VectorialFunction& apn_perm3() {
    static const VectorialFunction f = parse_coordinate_anfs(kApnPerm3);
    return f;
}

/// The substitution used by the 8-variable regression:
/// (z1,...,z6) -> (z1, z2, z4, z3, z5, z6) read into the base function.
inline const BitMatrix& swap_matrix6() {
    static const BitMatrix l(6, {1, 2, 8, 4, 16, 32});
    return l;
}

}  // namespace bentkit::fixtures
