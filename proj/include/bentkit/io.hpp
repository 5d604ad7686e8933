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

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "boolean_function.hpp"
#include "errors.hpp"
#include "vectorial.hpp"

namespace bentkit {

// --- ANF text ------------------------------------------------------------------
//
// `+`-separated monomials over variables <prefix>1..<prefix>n, `*` between
// variables, `1` for the constant term and `0` for the zero polynomial:
//     x1*x2 + x3
// Emitted with monomials in ascending mask order.

inline std::string format_anf(const AnfPolynomial& p, std::string_view prefix = "x") {
    const std::vector<point> terms = p.monomials();
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        point u = terms[i];
        if (u == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (int v = 0; v < p.n(); ++v)
            if (u >> v & 1) {
                if (!first) out += "*";
                out += prefix;
                out += std::to_string(v + 1);
                first = false;
            }
    }
    return out;
}

inline std::string format_anf(const BooleanFunction& f, std::string_view prefix = "x") {
    return format_anf(to_anf(f), prefix);
}

namespace detail {

struct AnfScanner {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t line_start = 0;

    std::size_t column() const { return pos - line_start + 1; }

    [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, line, column()); }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool done() const { return pos >= text.size(); }

    char peek() const { return text[pos]; }
};

}  // namespace detail

/// Parses ANF text. Variables are <prefix>1..<prefix>n; when n = 0 the arity
/// is inferred from the highest variable index (at least 1).
inline AnfPolynomial parse_anf(std::string_view text, char prefix = 'x', int n = 0) {
    detail::AnfScanner sc{text};
    std::vector<point> masks;
    int max_var = 0;
    bool expect_term = true;
    while (true) {
        sc.skip_ws();
        if (sc.done()) break;
        if (!expect_term) {
            if (sc.peek() != '+') sc.fail("expected '+' between monomials");
            ++sc.pos;
            expect_term = true;
            continue;
        }
        if (sc.peek() == '0' || sc.peek() == '1') {
            const char c = sc.peek();
            ++sc.pos;
            if (c == '1') masks.push_back(0);
            expect_term = false;
            continue;
        }
        point mask = 0;
        while (true) {
            sc.skip_ws();
            if (sc.done() || sc.peek() != prefix)
                sc.fail(std::string("expected variable '") + prefix + "<index>'");
            ++sc.pos;
            std::size_t start = sc.pos;
            while (!sc.done() && std::isdigit(static_cast<unsigned char>(sc.peek()))) ++sc.pos;
            if (sc.pos == start) sc.fail("missing variable index");
            const int idx = std::stoi(std::string(sc.text.substr(start, sc.pos - start)));
            if (idx < 1 || idx > 32) sc.fail("variable index out of range");
            max_var = std::max(max_var, idx);
            mask |= point{1} << (idx - 1);
            sc.skip_ws();
            if (!sc.done() && sc.peek() == '*') {
                ++sc.pos;
                continue;
            }
            break;
        }
        masks.push_back(mask);
        expect_term = false;
    }
    if (expect_term) detail::AnfScanner{text, text.size()}.fail("expected a monomial");
    const int arity = n > 0 ? n : std::max(max_var, 1);
    if (max_var > arity) throw ParseError("variable index exceeds declared arity", 1, 1);
    return AnfPolynomial::from_monomials(arity, std::span<const point>(masks.data(), masks.size()));
}

inline BooleanFunction function_from_anf_text(std::string_view text, char prefix = 'x', int n = 0) {
    return from_anf(parse_anf(text, prefix, n));
}

// --- truth table files -------------------------------------------------------------
//
// Line `n=<k>` followed by 2^k bits as a hex string on the next line. Hex
// digit j covers truth-table indices 4j..4j+3; the least significant bit of
// the digit is the lowest index.

inline std::string format_truth_table(const BooleanFunction& f) {
    std::string out = "n=" + std::to_string(f.n()) + "\n";
    static const char* digits = "0123456789abcdef";
    const std::size_t nibbles = f.size() < 4 ? 1 : f.size() / 4;
    for (std::size_t j = 0; j < nibbles; ++j) {
        unsigned nib = 0;
        for (unsigned b = 0; b < 4 && 4 * j + b < f.size(); ++b)
            nib |= unsigned(f.get(static_cast<point>(4 * j + b))) << b;
        out += digits[nib];
    }
    out += "\n";
    return out;
}

inline BooleanFunction parse_truth_table(std::string_view text) {
    std::size_t eol = text.find('\n');
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view header = text.substr(0, eol);
    if (header.substr(0, 2) != "n=") throw ParseError("expected header 'n=<k>'", 1, 1);
    int n = 0;
    try {
        n = std::stoi(std::string(header.substr(2)));
    } catch (...) {
        throw ParseError("bad dimension in header", 1, 3);
    }
    detail::check_dimension(n);
    std::vector<bits::word> words(bits::word_count(n), 0);
    const std::size_t nbits = std::size_t{1} << n;
    const std::size_t nibbles = nbits < 4 ? 1 : nbits / 4;
    std::size_t j = 0, line = 2, col = 1;
    for (std::size_t pos = eol + 1; pos < text.size(); ++pos, ++col) {
        const char c = text[pos];
        if (c == '\n') {
            ++line;
            col = 0;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') continue;
        const int d = std::isdigit(static_cast<unsigned char>(c))   ? c - '0'
                      : (c >= 'a' && c <= 'f')                      ? c - 'a' + 10
                      : (c >= 'A' && c <= 'F')                      ? c - 'A' + 10
                                                                    : -1;
        if (d < 0) throw ParseError("invalid hex digit", line, col);
        if (j >= nibbles) throw ParseError("more digits than 2^n bits", line, col);
        for (unsigned b = 0; b < 4 && 4 * j + b < nbits; ++b)
            if (d >> b & 1) bits::set_bit(words.data(), 4 * j + b, true);
        ++j;
    }
    if (j != nibbles) throw ParseError("fewer digits than 2^n bits", line, col);
    return BooleanFunction::from_words(n, std::move(words));
}

// --- vectorial function files ----------------------------------------------------------
//
// Line `m=<k> t=<k>` followed by 2^m hex values on one line.

inline std::string format_vectorial(const VectorialFunction& f) {
    std::ostringstream out;
    out << "m=" << f.m() << " t=" << f.t() << "\n" << std::hex;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (x) out << ' ';
        out << f(static_cast<point>(x));
    }
    out << "\n";
    return out.str();
}

inline VectorialFunction parse_vectorial(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string mtok, ttok;
    in >> mtok >> ttok;
    if (mtok.substr(0, 2) != "m=" || ttok.substr(0, 2) != "t=")
        throw ParseError("expected header 'm=<k> t=<k>'", 1, 1);
    int m = 0, t = 0;
    try {
        m = std::stoi(mtok.substr(2));
        t = std::stoi(ttok.substr(2));
    } catch (...) {
        throw ParseError("bad dimensions in header", 1, 1);
    }
    detail::check_dimension(m);
    detail::check_dimension(t);
    std::vector<std::uint32_t> table;
    table.reserve(std::size_t{1} << m);
    in >> std::hex;
    std::uint32_t v = 0;
    while (in >> v) table.push_back(v);
    if (table.size() != (std::size_t{1} << m))
        throw ParseError("expected " + std::to_string(std::size_t{1} << m) + " values, got " +
                             std::to_string(table.size()),
                         2, 1);
    return VectorialFunction(m, t, std::move(table));
}

/// Coordinate-ANF text: one line per coordinate, variables y1..ym.
inline VectorialFunction parse_coordinate_anfs(std::string_view text, int m = 0) {
    std::vector<AnfPolynomial> anfs;
    std::size_t start = 0, lineno = 1;
    int arity = m;
    while (start <= text.size()) {
        std::size_t eol = text.find('\n', start);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(start, eol - start);
        std::size_t nonblank = line.find_first_not_of(" \t\r");
        if (nonblank != std::string_view::npos) {
            try {
                anfs.push_back(parse_anf(line, 'y', m));
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), lineno, e.column);
            }
            arity = std::max(arity, anfs.back().n());
        }
        if (eol == text.size()) break;
        start = eol + 1;
        ++lineno;
    }
    if (anfs.empty()) throw ParseError("no coordinate polynomials", 1, 1);
    for (AnfPolynomial& p : anfs)
        if (p.n() != arity) p = AnfPolynomial::from_monomials(arity, p.monomials());
    return from_coordinate_anfs(anfs);
}

inline std::string format_coordinate_anfs(const VectorialFunction& f) {
    std::string out;
    for (const AnfPolynomial& p : coordinate_anfs(f)) out += format_anf(p, "y") + "\n";
    return out;
}

// --- digests ------------------------------------------------------------------------------

/// FNV-1a 64 of a byte string, as 16 lowercase hex characters; used to echo
/// input identities in reports.
inline std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 15];
        h >>= 4;
    }
    return out;
}

inline std::string digest(const BooleanFunction& f) { return fnv1a_digest(format_truth_table(f)); }

inline std::string digest(const VectorialFunction& f) { return fnv1a_digest(format_vectorial(f)); }

}  // namespace bentkit
