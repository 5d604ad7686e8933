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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bentkit/bentkit.hpp"
#include "bentkit/report.hpp"
#include "bentkit/verification.hpp"

namespace {

using namespace bentkit;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

/// Permutation/map specs: inv:m, mono:d:m, fixture:<name>, file:<path> or a
/// bare path. Files may hold either a value table (header `m=`) or
/// coordinate polynomials in y1..ym.
VectorialFunction load_map(const std::string& spec) {
    if (spec.rfind("inv:", 0) == 0) return inverse_map(FieldSpec::standard(std::stoi(spec.substr(4))));
    if (spec.rfind("mono:", 0) == 0) {
        const std::size_t second = spec.find(':', 5);
        if (second == std::string::npos) throw Error("expected mono:<d>:<m>");
        const std::uint64_t d = std::stoull(spec.substr(5, second - 5));
        const int m = std::stoi(spec.substr(second + 1));
        return monomial_map(FieldSpec::standard(m), d);
    }
    if (spec.rfind("fixture:", 0) == 0) {
        const std::string name = spec.substr(8);
        if (name == "quad5a") return fixtures::quad_perm5_a();
        if (name == "quad5b") return fixtures::quad_perm5_b();
        if (name == "quad5c") return fixtures::quad_perm5_c();
        if (name == "apn3") return fixtures::apn_perm3();
        throw Error("unknown fixture '" + name + "' (quad5a, quad5b, quad5c, apn3)");
    }
    const std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
    const std::string text = read_file(path);
    if (text.rfind("m=", 0) == 0) return parse_vectorial(text);
    return parse_coordinate_anfs(text);
}

BooleanFunction load_function(const std::string& path) {
    return parse_truth_table(read_file(path));
}

/// Census inputs additionally accept d0:<mapspec> and mm:<mapspec>.
BooleanFunction load_function_or_construction(const std::string& spec) {
    if (spec.rfind("d0:", 0) == 0) return d0_bent(load_map(spec.substr(3)));
    if (spec.rfind("mm:", 0) == 0) return mm_bent(load_map(spec.substr(3)));
    return load_function(spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec);
}

BitMatrix parse_matrix_file(const std::string& text) {
    std::vector<point> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        point row = 0;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '1')
                row |= point{1} << i;
            else if (line[i] != '0')
                throw Error("matrix rows must be strings of 0/1");
        }
        rows.push_back(row);
    }
    const int n = static_cast<int>(rows.size());
    return BitMatrix(n, std::move(rows));
}

struct Output {
    bool as_json = false;

    void emit(const json& doc, const std::string& text) const {
        if (as_json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text;
    }
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json analyze_function(const BooleanFunction& f, int threads, std::string* text) {
    json payload;
    std::ostringstream out;
    payload["n"] = f.n();
    payload["degree"] = degree(f);
    payload["weight"] = weight(f);
    const bool bent = is_bent(f);
    payload["bent"] = bent;
    out << "n: " << f.n() << "\ndegree: " << degree(f) << "\nweight: " << weight(f)
        << "\nbent: " << (bent ? "yes" : "no") << "\n";
    if (f.n() <= 16) payload["anf"] = format_anf(f);
    MsubspaceReport rep = msubspace_report(f, threads);
    rep.function_id = digest(f);
    payload["subspaces"] = to_json(rep);
    out << "linearity index: " << rep.index << "\nrelaxed linearity index: " << rep.relaxed_index
        << "\n";
    if (bent) {
        payload["dual_anf"] = format_anf(dual(f));
        const std::optional<Subspace> witness = is_in_mm_sharp(f, threads);
        payload["completed_mm"] = witness.has_value();
        if (witness) payload["completed_mm_witness"] = to_json(*witness);
        out << "completed Maiorana-McFarland: " << (witness ? "yes, witness " + witness->to_string()
                                                            : "no")
            << "\n";
    }
    *text = out.str();
    return payload;
}

json check_map(const VectorialFunction& f, int threads, std::string* text) {
    json payload;
    std::ostringstream out;
    payload["m"] = f.m();
    payload["t"] = f.t();
    payload["degree"] = degree(f);
    const bool perm = is_permutation(f);
    payload["permutation"] = perm;
    out << "m: " << f.m() << "  t: " << f.t() << "\ndegree: " << degree(f)
        << "\npermutation: " << (perm ? "yes" : "no") << "\n";
    if (f.m() == f.t()) {
        const bool apn = is_apn(f);
        payload["apn"] = apn;
        out << "apn: " << (apn ? "yes" : "no") << "\n";
        const P1Result p1 = has_p1(f);
        payload["p1"] = p1.verdict;
        out << "p1: " << (p1.verdict ? "yes" : "no");
        if (p1.witness) {
            payload["p1_witness"] = {p1.witness->first, p1.witness->second};
            out << "  (vanishing pair " << p1.witness->first << ", " << p1.witness->second << ")";
        }
        out << "\n";
    }
    const P2Witness p2 = has_p2(f, threads);
    payload["p2"] = to_json(p2);
    out << "p2: " << (p2.verdict ? "yes" : "no");
    if (!p2.verdict)
        out << "  (S = " << p2.failing_s->to_string() << ", V = " << p2.failing_v->to_string()
            << ")";
    out << "\n";
    const auto structure = has_component_linear_structure(f);
    payload["component_linear_structure"] = structure.has_value();
    if (structure) {
        payload["component_linear_structure_witness"] = {structure->first, structure->second};
        out << "component linear structure: component " << structure->first << ", direction "
            << structure->second << "\n";
    } else {
        out << "component linear structure: none\n";
    }
    *text = out.str();
    return payload;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bentkit: construction and exhaustive analysis of bent functions"};
    app.require_subcommand(1);

    if (const char* cap = std::getenv("BENT_MAX_N")) {
        try {
            bentkit::set_max_dimension(std::stoi(cap));
        } catch (...) {
            std::cerr << "warning: ignoring unparsable BENT_MAX_N\n";
        }
    }

    int threads = 0;
    Output output;
    app.add_option("--threads", threads, "worker threads (default: all cores)")->capture_default_str();
    app.add_flag("--json", output.as_json, "emit a JSON report document");

    std::string anf_text, tt_path;
    int anf_n = 0;
    CLI::App* analyze = app.add_subcommand("analyze", "degree, bentness, dual and subspace structure");
    analyze->add_option("--anf", anf_text, "function as ANF text over x1..xn");
    analyze->add_option("--file", tt_path, "truth table file");
    analyze->add_option("--n", anf_n, "variable count override for --anf");

    std::string perm_spec;
    CLI::App* check = app.add_subcommand("check-perm", "permutation, APN, P1 and P2 verdicts");
    check->add_option("spec", perm_spec, "inv:m | mono:d:m | fixture:<name> | <file>")->required();

    std::string kind, c_perm, c_h, c_out, c_f1, c_f2, c_f3, c_f4, c_linear, c_indices;
    CLI::App* construct = app.add_subcommand("construct", "build a function and write its truth table");
    construct->add_option("kind", kind, "mm | d0 | concat | swap | mixing")->required();
    construct->add_option("--perm", c_perm, "inner permutation spec (mm, d0, swap)");
    construct->add_option("--h-anf", c_h, "ANF of h over y1..ym (mm)");
    construct->add_option("--f1", c_f1, "truth table file");
    construct->add_option("--f2", c_f2, "truth table file");
    construct->add_option("--f3", c_f3, "truth table file");
    construct->add_option("--f4", c_f4, "truth table file");
    construct->add_option("--linear", c_linear, "substitution matrix file (swap)");
    construct->add_option("--indices", c_indices, "variable permutation, comma-separated 1-based (swap)");
    construct->add_option("--out", c_out, "output truth table file")->required();

    std::string census_spec;
    bool census_degrees = false, census_classes = false;
    CLI::App* census = app.add_subcommand("census", "classify every 4-decomposition");
    census->add_option("input", census_spec, "truth table file | d0:<permspec> | mm:<permspec>")
        ->required();
    census->add_flag("--degrees", census_degrees, "print the second-derivative degree multiset");
    census->add_flag("--classes", census_classes, "print the decomposition class counts");

    std::string filter;
    CLI::App* verify = app.add_subcommand("verify-paper", "run the built-in verification suite");
    verify->add_option("--filter", filter, "run only checks whose name contains this substring");

    for (CLI::App* sub : {analyze, check, construct, census, verify}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    const auto t0 = Clock::now();

    try {
        if (*analyze) {
            if (anf_text.empty() == tt_path.empty())
                throw Error("analyze needs exactly one of --anf or --file");
            const BooleanFunction f = anf_text.empty()
                                          ? load_function(tt_path)
                                          : function_from_anf_text(anf_text, 'x', anf_n);
            std::string text;
            const json payload = analyze_function(f, threads, &text);
            json inputs;
            inputs["function"] = digest(f);
            output.emit(report_document("analyze", inputs, payload, ms_since(t0)), text);
        } else if (*check) {
            const VectorialFunction f = load_map(perm_spec);
            std::string text;
            const json payload = check_map(f, threads, &text);
            json inputs;
            inputs["map"] = digest(f);
            inputs["spec"] = perm_spec;
            output.emit(report_document("check-perm", inputs, payload, ms_since(t0)), text);
        } else if (*construct) {
            json inputs;
            std::optional<BooleanFunction> f;
            std::ostringstream text;
            json payload;
            if (kind == "mm" || kind == "d0") {
                if (c_perm.empty()) throw Error(kind + " needs --perm");
                const VectorialFunction pi = load_map(c_perm);
                inputs["perm"] = digest(pi);
                if (kind == "d0") {
                    f = d0_bent(pi);
                } else {
                    const BooleanFunction h = c_h.empty()
                                                  ? BooleanFunction(pi.m())
                                                  : function_from_anf_text(c_h, 'y', pi.m());
                    f = mm_bent(pi, h);
                }
            } else if (kind == "concat") {
                const BooleanFunction f1 = load_function(c_f1), f2 = load_function(c_f2),
                                      f3 = load_function(c_f3), f4 = load_function(c_f4);
                inputs["f1"] = digest(f1);
                inputs["f2"] = digest(f2);
                inputs["f3"] = digest(f3);
                inputs["f4"] = digest(f4);
                f = concat4(f1, f2, f3, f4);
                try {
                    const bool dualcond = dual_bent_condition(f1, f2, f3, f4);
                    payload["dual_bent_condition"] = dualcond;
                    if (!dualcond) text << "dual bent condition fails: output is not bent\n";
                } catch (const NotBentError& e) {
                    payload["dual_bent_condition"] = nullptr;
                    text << "dual bent condition not applicable: " << e.what() << "\n";
                }
            } else if (kind == "swap") {
                const BooleanFunction f1 = c_f1.empty() ? mm_bent(load_map(c_perm))
                                                        : load_function(c_f1);
                inputs["f1"] = digest(f1);
                if (!c_linear.empty()) {
                    f = swap_construct_linear(f1, parse_matrix_file(read_file(c_linear)));
                } else if (!c_indices.empty()) {
                    std::vector<int> perm;
                    std::istringstream in(c_indices);
                    std::string tok;
                    while (std::getline(in, tok, ',')) perm.push_back(std::stoi(tok) - 1);
                    f = swap_construct_coordperm(f1, perm);
                } else {
                    throw Error("swap needs --linear or --indices");
                }
            } else if (kind == "mixing") {
                const BooleanFunction f1 = load_function(c_f1), f3 = load_function(c_f3);
                inputs["f1"] = digest(f1);
                inputs["f3"] = digest(f3);
                f = mixing_concat(f1, f3, threads);
            } else {
                throw Error("unknown construction kind '" + kind + "'");
            }
            write_file(c_out, format_truth_table(*f));
            payload["n"] = f->n();
            payload["bent"] = is_bent(*f);
            payload["out"] = c_out;
            payload["function_id"] = digest(*f);
            if (f->n() <= 16) payload["anf"] = format_anf(*f);
            text << "wrote " << c_out << " (n=" << f->n() << ", "
                 << (is_bent(*f) ? "bent" : "not bent") << ")\n";
            output.emit(report_document("construct " + kind, inputs, payload, ms_since(t0)),
                        text.str());
        } else if (*census) {
            const BooleanFunction f = load_function_or_construction(census_spec);
            const CensusReport rep = decomposition_census(f, threads);
            json inputs;
            inputs["function"] = digest(f);
            inputs["spec"] = census_spec;
            std::ostringstream text;
            text << "n: " << rep.n << "\ntotal 2-dimensional subspaces: " << rep.total << "\n";
            if (census_degrees || !census_classes) {
                text << "second-derivative degrees:";
                for (auto [d, c] : rep.degree_multiset) text << "  " << d << ":" << c;
                text << "\n";
            }
            if (census_classes || !census_degrees) {
                text << "classes: bent=" << rep.bent_count << " semi_bent=" << rep.semibent_count
                     << " five_valued=" << rep.five_valued_count
                     << " irregular=" << rep.irregular_count << "\n"
                     << "five-valued only: " << (rep.five_valued_only() ? "yes" : "no") << "\n";
            }
            output.emit(report_document("census", inputs, to_json(rep), ms_since(t0)), text.str());
        } else if (*verify) {
            json rows = json::array();
            const std::vector<std::string> failures = verification::run_checks(
                filter, threads, [&](const verification::Check& c, const verification::CheckResult& r) {
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << c.name << ": "
                              << (r.pass ? c.summary : r.detail) << "\n";
                    json row;
                    row["name"] = c.name;
                    row["pass"] = r.pass;
                    row["detail"] = r.detail;
                    rows.push_back(row);
                });
            if (rows.empty()) {
                std::cerr << "no checks match filter '" << filter << "'\n";
                return 2;
            }
            std::cout << (failures.empty() ? "all checks passed" : "FAILURES:") << "\n";
            for (const std::string& name : failures) std::cout << "  " << name << "\n";
            if (output.as_json) {
                json inputs;
                inputs["filter"] = filter;
                std::cout << report_document("verify-paper", inputs, rows, ms_since(t0)).dump(2)
                          << "\n";
            }
            return failures.empty() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
