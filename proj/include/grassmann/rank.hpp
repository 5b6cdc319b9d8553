#pragma once

// Rational rank of point/subspace incidence matrices, the full-rank
// certificate for resolving sets, and the closed form of M^T M for the
// complete family of k-subspaces.

#include "grassmann/error.hpp"
#include "grassmann/numeric.hpp"
#include "grassmann/subspaces.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace grassmann {

/// Rows are incidence vectors of a family, columns the projective points.
struct IncidenceMatrix {
    std::size_t m = 0;
    std::size_t N = 0;
    std::vector<IncidenceVector> rows;
    SubspaceFamily provenance;

    std::uint8_t at(std::size_t r, std::size_t c) const { return rows[r].bits[c]; }
};

inline IncidenceMatrix incidence_matrix(const SubspaceFamily& family, const PointIndex& idx) {
    IncidenceMatrix M;
    M.m = family.size();
    M.N = idx.size();
    M.rows.reserve(family.size());
    for (const auto& u : family) M.rows.push_back(incidence_vector(u, idx));
    M.provenance = family;
    return M;
}

/// "m N" header then one line of space-separated 0/1 entries per row.
inline void write_pbm(std::ostream& os, const IncidenceMatrix& M) {
    os << M.m << ' ' << M.N << '\n';
    for (const auto& row : M.rows) {
        for (std::size_t c = 0; c < M.N; ++c) {
            if (c) os << ' ';
            os << static_cast<int>(row.bits[c]);
        }
        os << '\n';
    }
}

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    BigInt& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

inline IntMatrix to_int_matrix(const IncidenceMatrix& M) {
    IntMatrix out(M.m, M.N);
    for (std::size_t r = 0; r < M.m; ++r)
        for (std::size_t c = 0; c < M.N; ++c) out(r, c) = M.at(r, c);
    return out;
}

/// Rank over Q by fraction-free (Bareiss) elimination. Every intermediate
/// entry is a minor of the input, so each division below is exact.
inline std::size_t bareiss_rank(IntMatrix m) {
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m(sel, c) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
        const BigInt pivot = m(r, c);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            const BigInt lead = m(i, c);
            for (std::size_t j = c + 1; j < m.cols; ++j) {
                BigInt v = pivot * m(i, j);
                if (lead != 0) v -= lead * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

inline constexpr std::uint64_t kRankPrime = (std::uint64_t{1} << 61) - 1;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t reduce_mod(const BigInt& v, std::uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

} // namespace detail

/// Rank over GF(p), p = 2^61 - 1. Never exceeds the rational rank.
inline std::size_t modular_rank(const IntMatrix& m, std::uint64_t p = kRankPrime) {
    std::vector<std::uint64_t> a(m.a.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = detail::reduce_mod(m.a[i], p);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && a[sel * m.cols + c] == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(a[sel * m.cols + j], a[r * m.cols + j]);
        const std::uint64_t inv = detail::powmod(a[r * m.cols + c], p - 2, p);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            const std::uint64_t f = detail::mulmod(a[i * m.cols + c], inv, p);
            if (f == 0) continue;
            for (std::size_t j = c; j < m.cols; ++j) {
                const std::uint64_t sub = detail::mulmod(f, a[r * m.cols + j], p);
                auto& x = a[i * m.cols + j];
                x = x >= sub ? x - sub : x + p - sub;
            }
        }
        ++r;
    }
    return r;
}

enum class RankMethod { modular_fast_path, bareiss };

struct RankResult {
    std::size_t rank = 0;
    RankMethod method = RankMethod::bareiss;
};

/// Rational rank. A modular rank equal to min(rows, cols) is already the
/// rational rank (it is a lower bound that cannot be exceeded); any other
/// outcome falls through to Bareiss.
inline RankResult exact_rank_detailed(const IntMatrix& m, bool allow_fast_path = true) {
    if (allow_fast_path) {
        const auto r = modular_rank(m);
        if (r == std::min(m.rows, m.cols)) return {r, RankMethod::modular_fast_path};
    }
    return {bareiss_rank(m), RankMethod::bareiss};
}

inline std::size_t exact_rank(const IncidenceMatrix& M, bool allow_fast_path = true) {
    return exact_rank_detailed(to_int_matrix(M), allow_fast_path).rank;
}

/// Incremental rank over Q. Stored rows are integer vectors in echelon form
/// keyed by pivot column, each divided by its content.
class IncrementalRank {
public:
    explicit IncrementalRank(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    /// Adds v when it is independent of the rows so far; returns whether it was.
    template <class Range>
    bool add(const Range& v) {
        std::vector<BigInt> w(v.begin(), v.end());
        if (w.size() != cols_) throw DimensionMismatch("IncrementalRank: row length mismatch");
        for (const auto& [pc, row] : rows_) {
            if (w[pc] == 0) continue;
            const BigInt a = row[pc];
            const BigInt b = w[pc];
            for (std::size_t j = 0; j < cols_; ++j) w[j] = a * w[j] - b * row[j];
            normalize(w);
        }
        std::size_t pc = 0;
        while (pc < cols_ && w[pc] == 0) ++pc;
        if (pc == cols_) return false;
        rows_.emplace(pc, std::move(w));
        return true;
    }

private:
    static void normalize(std::vector<BigInt>& w) {
        BigInt g = 0;
        for (const auto& x : w)
            if (x != 0) g = boost::multiprecision::gcd(g, x);
        if (g > 1)
            for (auto& x : w) x /= g;
    }

    std::size_t cols_;
    std::map<std::size_t, std::vector<BigInt>> rows_;
};

// ---------------------------------------------------------------------------

struct GramClosedForm {
    BigInt diag;    // k-subspaces through one point: [n-1 k-1]_q
    BigInt offdiag; // k-subspaces through two points: [n-2 k-2]_q
};

inline GramClosedForm gram_closed_form(int q, std::size_t n, std::size_t k) {
    if (k < 2 || k > n) throw InvalidArgs("gram_closed_form needs 2 <= k <= n");
    const auto ln = static_cast<long>(n);
    const auto lk = static_cast<long>(k);
    return {gaussian_binomial(ln - 1, lk - 1, q), gaussian_binomial(ln - 2, lk - 2, q)};
}

struct GramCheck {
    std::size_t N = 0;
    BigInt diag;
    BigInt offdiag;
    bool entries_match = false;
    /// det(a J + b I) = b^{N-1} (b + N a) with a = offdiag, b = diag - offdiag.
    BigInt determinant;

    bool ok() const { return entries_match && determinant != 0; }
};

/// Builds the full incidence matrix of k-subspaces, forms M^T M exactly and
/// compares it entrywise with offdiag*J + (diag - offdiag)*I.
inline GramCheck verify_gram_detailed(const Field& field, std::size_t n, std::size_t k,
                                      std::uint64_t budget = enumeration_budget()) {
    const auto closed = gram_closed_form(field->q(), n, k);
    const PointIndex idx(field, n, budget);
    const auto family = enumerate_k_subspaces(field, n, k, budget);
    const std::size_t N = idx.size();

    std::vector<std::uint64_t> gram(N * N, 0);
    std::vector<std::size_t> ones;
    for (const auto& u : family) {
        const auto iv = incidence_vector(u, idx);
        ones.clear();
        for (std::size_t i = 0; i < N; ++i)
            if (iv.bits[i]) ones.push_back(i);
        for (auto i : ones)
            for (auto j : ones) ++gram[i * N + j];
    }

    GramCheck check;
    check.N = N;
    check.diag = closed.diag;
    check.offdiag = closed.offdiag;
    check.entries_match = true;
    for (std::size_t i = 0; i < N && check.entries_match; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            const BigInt& want = i == j ? closed.diag : closed.offdiag;
            if (BigInt(gram[i * N + j]) != want) {
                check.entries_match = false;
                break;
            }
        }
    }
    const BigInt a = closed.offdiag;
    const BigInt b = closed.diag - closed.offdiag;
    check.determinant = boost::multiprecision::pow(b, static_cast<unsigned>(N - 1)) * (b + BigInt(N) * a);
    return check;
}

inline bool verify_gram(const Field& field, std::size_t n, std::size_t k, std::uint64_t budget = enumeration_budget()) {
    return verify_gram_detailed(field, n, k, budget).ok();
}

// ---------------------------------------------------------------------------

enum class RankVerdict { certified, inconclusive };

struct RankCertificate {
    RankVerdict verdict = RankVerdict::inconclusive;
    std::size_t rank = 0;
    std::size_t N = 0;
};

/// Full rank [n 1]_q of the family's incidence matrix proves the family
/// resolving. Anything less proves nothing either way.
inline RankCertificate certify_resolving_by_rank(const SubspaceFamily& family,
                                                 std::uint64_t budget = enumeration_budget()) {
    if (family.empty()) throw InvalidArgs("certify_resolving_by_rank: empty family");
    const auto& first = family.front();
    for (const auto& u : family) require_same_space(first, u);
    const PointIndex idx(first.field(), first.n(), budget);
    RankCertificate cert;
    cert.N = idx.size();
    cert.rank = exact_rank(incidence_matrix(family, idx));
    cert.verdict = cert.rank == cert.N ? RankVerdict::certified : RankVerdict::inconclusive;
    return cert;
}

} // namespace grassmann
