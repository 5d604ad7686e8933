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

#include <atomic>

namespace bentkit {

/// Hard cap on the number of variables accepted by the function types.
/// Everything in this library allocates 2^n-sized tables, so constructors
/// reject dimensions above the cap instead of silently thrashing.
/// Overridable at runtime (the CLI honours the BENT_MAX_N environment
/// variable).
inline std::atomic<int>& max_dimension_slot() {
    static std::atomic<int> cap{24};
    return cap;
}

inline int max_dimension() { return max_dimension_slot().load(); }

inline void set_max_dimension(int n) { max_dimension_slot().store(n); }

}  // namespace bentkit
