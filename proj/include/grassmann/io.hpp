#pragma once

// Family files:
//
//   # comment lines start with '#', blank lines are ignored
//   q n k m
//   <m blocks of k lines, each n space-separated element encodings>
//
// Every block must be a k x n matrix already in RREF; blocks are distinct.

#include "grassmann/error.hpp"
#include "grassmann/gfq.hpp"
#include "grassmann/subspaces.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace grassmann {

struct FamilyFile {
    Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    SubspaceFamily family;
};

inline void write_family(std::ostream& os, const Field& field, std::size_t n, std::size_t k,
                         const SubspaceFamily& family, const std::vector<std::string>& trailing_comments = {}) {
    os << "# " << field->describe() << '\n';
    os << field->q() << ' ' << n << ' ' << k << ' ' << family.size() << '\n';
    for (const auto& u : family) {
        if (u.n() != n || u.dim() != k) throw DimensionMismatch("family member has the wrong shape");
        os << '\n' << u.basis();
    }
    for (const auto& c : trailing_comments) os << "# " << c << '\n';
}

inline std::string family_to_string(const Field& field, std::size_t n, std::size_t k, const SubspaceFamily& family) {
    std::ostringstream os;
    write_family(os, field, n, k, family);
    return os.str();
}

namespace detail {

inline bool next_content_line(std::istream& is, std::string& line, std::size_t& lineno) {
    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

inline std::vector<long> parse_ints(const std::string& line, std::size_t lineno) {
    std::istringstream ss(line);
    std::vector<long> out;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            const long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
        }
    }
    return out;
}

} // namespace detail

inline FamilyFile read_family(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    if (!detail::next_content_line(is, line, lineno)) throw ParseError("family file has no header");
    const auto header = detail::parse_ints(line, lineno);
    if (header.size() != 4) throw ParseError("line " + std::to_string(lineno) + ": header must be 'q n k m'");
    const long q = header[0], n = header[1], k = header[2], m = header[3];
    if (n < 1 || k < 1 || k > n || m < 0) throw ParseError("header values out of range");

    FamilyFile out;
    out.field = field_new(static_cast<int>(q));
    out.n = static_cast<std::size_t>(n);
    out.k = static_cast<std::size_t>(k);
    out.family.reserve(static_cast<std::size_t>(m));
    for (long b = 0; b < m; ++b) {
        std::vector<std::uint8_t> data;
        data.reserve(static_cast<std::size_t>(k * n));
        for (long r = 0; r < k; ++r) {
            if (!detail::next_content_line(is, line, lineno)) {
                throw ParseError("family file ends inside block " + std::to_string(b + 1));
            }
            const auto row = detail::parse_ints(line, lineno);
            if (static_cast<long>(row.size()) != n) {
                throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries");
            }
            for (long v : row) {
                if (v < 0 || v >= q) throw ParseError("line " + std::to_string(lineno) + ": entry outside GF(q)");
                data.push_back(static_cast<std::uint8_t>(v));
            }
        }
        MatGFq basis(out.field, static_cast<std::size_t>(k), static_cast<std::size_t>(n), std::move(data));
        if (!is_rref(basis)) throw ParseError("block " + std::to_string(b + 1) + " is not a full-rank RREF basis");
        out.family.push_back(Subspace::from_rref(std::move(basis)));
    }
    if (detail::next_content_line(is, line, lineno)) {
        throw ParseError("line " + std::to_string(lineno) + ": trailing data after " + std::to_string(m) + " blocks");
    }
    if (has_duplicates(out.family)) throw ParseError("family file contains a repeated block");
    return out;
}

/// Compact single-token form: rows joined by '/', entries by ','.
inline std::string subspace_token(const Subspace& s) {
    std::string out;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) out += '/';
        for (std::size_t c = 0; c < s.n(); ++c) {
            if (c) out += ',';
            out += std::to_string(static_cast<int>(s.basis().at(r, c)));
        }
    }
    return out;
}

} // namespace grassmann
