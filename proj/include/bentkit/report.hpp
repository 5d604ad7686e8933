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

#include <string>

#include <json.hpp>

#include "bent_construct.hpp"
#include "msubspace.hpp"
#include "perm_props.hpp"
#include "subspace.hpp"

namespace bentkit {

// Reports are emitted as insertion-ordered JSON so that identical inputs
// produce byte-identical documents (the timing field is exempt from that
// contract).
using json = nlohmann::ordered_json;

inline json to_json(const Subspace& s) {
    json j;
    j["dim"] = s.dim();
    j["basis"] = s.basis();
    return j;
}

inline json to_json(const MsubspaceReport& r) {
    json j;
    j["function_id"] = r.function_id;
    j["n"] = r.n;
    j["linearity_index"] = r.index;
    j["relaxed_linearity_index"] = r.relaxed_index;
    json counts = json::object();
    for (auto [dim, cnt] : r.counts) counts[std::to_string(dim)] = cnt;
    j["counts"] = counts;
    j["counts_complete"] = r.counts_complete;
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (r.relaxed_witness) j["relaxed_witness"] = to_json(*r.relaxed_witness);
    return j;
}

inline json to_json(const P2Witness& w) {
    json j;
    j["verdict"] = w.verdict;
    j["checked_dims"] = w.checked_dims;
    if (!w.verdict) {
        j["failing_s"] = to_json(*w.failing_s);
        j["failing_v"] = to_json(*w.failing_v);
        j["derivative_span_dim"] = w.failing_span_dim;
    }
    return j;
}

inline json to_json(const CensusReport& r) {
    json j;
    j["n"] = r.n;
    j["total_subspaces"] = r.total;
    json degs = json::object();
    for (auto [deg, cnt] : r.degree_multiset) degs[std::to_string(deg)] = cnt;
    j["second_derivative_degrees"] = degs;
    json classes = json::object();
    classes["bent"] = r.bent_count;
    classes["semi_bent"] = r.semibent_count;
    classes["five_valued"] = r.five_valued_count;
    classes["irregular"] = r.irregular_count;
    j["classes"] = classes;
    j["five_valued_only"] = r.five_valued_only();
    return j;
}

/// Envelope for CLI output: command echo, input digests, payload, timing.
inline json report_document(const std::string& command, const json& inputs, const json& result,
                            double timing_ms) {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["timing_ms"] = timing_ms;
    return j;
}

}  // namespace bentkit
