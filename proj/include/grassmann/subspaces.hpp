#pragma once

// Subspaces of V(n,q) in canonical RREF form, their exhaustive enumeration,
// Gaussian binomial coefficients, and incidence with projective points.

#include "grassmann/error.hpp"
#include "grassmann/gfq.hpp"
#include "grassmann/linalg.hpp"
#include "grassmann/numeric.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace grassmann {

/// A subspace of V(n,q), held as its unique RREF basis. Two subspaces are
/// equal exactly when their canonical bases are byte-equal.
class Subspace {
public:
    /// Canonicalizes any spanning set. `dim` of the result is its rank.
    static Subspace span(const MatGFq& generators) { return Subspace(rref(generators).matrix); }

    /// Adopts a matrix the caller guarantees is already in RREF with full row rank.
    static Subspace from_rref(MatGFq basis) { return Subspace(std::move(basis)); }

    static Subspace whole(Field field, std::size_t n) { return Subspace(MatGFq::identity(std::move(field), n)); }
    static Subspace zero(Field field, std::size_t n) { return Subspace(MatGFq(std::move(field), 0, n)); }

    const Field& field() const noexcept { return basis_.field(); }
    const FieldCtx& ctx() const noexcept { return basis_.ctx(); }
    std::size_t n() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const MatGFq& basis() const noexcept { return basis_; }
    const std::vector<std::uint16_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const std::uint8_t> v) const {
        if (v.size() != n()) throw DimensionMismatch("vector length differs from ambient dimension");
        return in_rowspace_rref(basis_, v);
    }

    bool contains(const Subspace& other) const {
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis().row(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.n() <=> b.n(); c != 0) return c;
        return a.basis_ <=> b.basis_;
    }

private:
    explicit Subspace(MatGFq basis) : basis_(std::move(basis)) {
        pivots_.reserve(basis_.rows());
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            const auto row = basis_.row(r);
            std::size_t c = 0;
            while (c < row.size() && row[c] == 0) ++c;
            if (c == row.size()) throw InvalidArgs("basis has a zero row");
            pivots_.push_back(static_cast<std::uint16_t>(c));
        }
    }

    MatGFq basis_;
    std::vector<std::uint16_t> pivots_;
};

/// Ordered, duplicate-free list of subspaces.
using SubspaceFamily = std::vector<Subspace>;

/// Sorts canonically and drops repeats.
inline SubspaceFamily canonical_family(SubspaceFamily family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

inline bool has_duplicates(const SubspaceFamily& family) {
    SubspaceFamily copy = family;
    std::sort(copy.begin(), copy.end());
    return std::adjacent_find(copy.begin(), copy.end()) != copy.end();
}

inline void require_same_space(const Subspace& a, const Subspace& b) {
    if (!same_field(a.field(), b.field())) throw ContextMismatch("subspaces over different fields");
    if (a.n() != b.n()) throw DimensionMismatch("subspaces of different ambient spaces");
}

/// dim(a ∩ b): b's rows are reduced against a's pivots and the rank of the
/// residue is the part of b outside a.
inline std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
    require_same_space(a, b);
    const auto& f = a.ctx();
    const std::size_t n = a.n();
    const std::size_t bd = b.dim();
    thread_local std::vector<std::uint8_t> buf;
    buf.assign(b.basis().data().begin(), b.basis().data().end());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        const auto arow = a.basis().row(r);
        const std::size_t pc = a.pivots()[r];
        for (std::size_t i = 0; i < bd; ++i) {
            std::uint8_t* row = buf.data() + i * n;
            const std::uint8_t factor = row[pc];
            if (factor == 0) continue;
            const std::uint8_t nf = f.neg_raw(factor);
            for (std::size_t j = pc; j < n; ++j) row[j] = f.add_raw(row[j], f.mul_raw(nf, arow[j]));
        }
    }
    return bd - detail::echelon_rank(f, buf.data(), bd, n);
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_same_space(a, b);
    return Subspace::from_rref(sum_space(a.basis(), b.basis()));
}

inline std::ostream& operator<<(std::ostream& os, const Subspace& s) { return os << s.basis(); }

// ---------------------------------------------------------------------------

/// [n k]_q = prod_{i<k} (q^n - q^i) / (q^k - q^i), exact.
inline BigInt gaussian_binomial(long n, long k, long q) {
    if (n < 0 || k < 0 || k > n) {
        throw InvalidArgs("gaussian_binomial needs 0 <= k <= n (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
    if (q < 2) throw InvalidArgs("gaussian_binomial needs q >= 2");
    BigInt num = 1, den = 1;
    const BigInt qn = big_pow(q, static_cast<unsigned>(n));
    const BigInt qk = big_pow(q, static_cast<unsigned>(k));
    BigInt qi = 1;
    for (long i = 0; i < k; ++i) {
        num *= qn - qi;
        den *= qk - qi;
        qi *= q;
    }
    return num / den;
}

/// Coefficients (constant first) of (x^n - 1)/(x - 1) by synthetic division.
/// The number of projective points [n 1]_q is this polynomial evaluated at q.
inline std::vector<long> point_count_polynomial(long n) {
    if (n < 1) throw InvalidArgs("point_count_polynomial needs n >= 1");
    // x^n - 1 with coefficients from the top: 1, 0, ..., 0, -1.
    std::vector<long> top(n + 1, 0);
    top[0] = 1;
    top[n] = -1;
    std::vector<long> quotient(n);
    long carry = 0;
    for (long i = 0; i < n; ++i) {
        carry = top[i] + carry;
        quotient[i] = carry;
    }
    if (top[n] + carry != 0) throw Error("x - 1 does not divide x^n - 1"); // remainder must vanish
    std::reverse(quotient.begin(), quotient.end());
    return quotient;
}

inline std::uint64_t checked_count(const BigInt& count, std::uint64_t budget, const std::string& what) {
    if (count > budget) {
        throw BudgetExceeded(what + " would produce " + count.str() + " items, above the budget of " +
                             std::to_string(budget));
    }
    return static_cast<std::uint64_t>(count);
}

namespace detail {

inline void fill_rref(const Field& field, std::size_t n, std::size_t k, const std::vector<std::size_t>& pivots,
                      std::vector<std::uint8_t>& data, std::size_t pos,
                      const std::vector<std::size_t>& free_slots, std::vector<Subspace>& out) {
    if (pos == free_slots.size()) {
        out.push_back(Subspace::from_rref(MatGFq(field, k, n, data)));
        return;
    }
    for (int v = 0; v < field->q(); ++v) {
        data[free_slots[pos]] = static_cast<std::uint8_t>(v);
        fill_rref(field, n, k, pivots, data, pos + 1, free_slots, out);
    }
    data[free_slots[pos]] = 0;
}

} // namespace detail

/// Every k-subspace of V(n,q) exactly once, generated directly as RREF
/// matrices per pivot pattern, returned in lexicographic order of the
/// canonical basis entries.
inline std::vector<Subspace> enumerate_k_subspaces(const Field& field, std::size_t n, std::size_t k,
                                                   std::uint64_t budget = enumeration_budget()) {
    if (k > n) throw InvalidArgs("enumerate_k_subspaces needs k <= n");
    const auto count = checked_count(gaussian_binomial(static_cast<long>(n), static_cast<long>(k), field->q()),
                                     budget, "enumerating " + std::to_string(k) + "-subspaces");
    std::vector<Subspace> out;
    out.reserve(count);

    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        std::vector<std::uint8_t> data(k * n, 0);
        std::vector<std::size_t> free_slots;
        for (std::size_t r = 0; r < k; ++r) {
            data[r * n + pivots[r]] = 1;
            for (std::size_t c = pivots[r] + 1; c < n; ++c) {
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_slots.push_back(r * n + c);
            }
        }
        detail::fill_rref(field, n, k, pivots, data, 0, free_slots, out);

        // next k-combination of {0..n-1}
        std::size_t i = k;
        while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All k-subspaces contained in w, in canonical order.
inline std::vector<Subspace> subspaces_of(const Subspace& w, std::size_t k,
                                          std::uint64_t budget = enumeration_budget()) {
    const auto coeffs = enumerate_k_subspaces(w.field(), w.dim(), k, budget);
    const auto& f = w.ctx();
    const std::size_t n = w.n();
    std::vector<Subspace> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        std::vector<std::uint8_t> data(k * n, 0);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t i = 0; i < w.dim(); ++i) {
                const std::uint8_t a = c.basis().at(r, i);
                if (a == 0) continue;
                const auto wrow = w.basis().row(i);
                for (std::size_t j = 0; j < n; ++j) data[r * n + j] = f.add_raw(data[r * n + j], f.mul_raw(a, wrow[j]));
            }
        }
        out.push_back(Subspace::span(MatGFq(w.field(), k, n, std::move(data))));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

/// The projective points L_1..L_N of V(n,q), each kept as its normalized
/// representative (first nonzero coordinate 1), sorted by the big-endian
/// base-q integer encoding of that vector.
class PointIndex {
public:
    PointIndex(Field field, std::size_t n, std::uint64_t budget = enumeration_budget())
        : field_(std::move(field)), n_(n) {
        if (n_ < 1) throw InvalidArgs("PointIndex needs n >= 1");
        const auto q = static_cast<std::uint64_t>(field_->q());
        const auto count = checked_count(gaussian_binomial(static_cast<long>(n), 1, field_->q()), budget,
                                         "indexing projective points");
        encodings_.reserve(count);
        // Normalized vectors with leading 1 at position i occupy the encoding
        // range [q^{n-1-i}, 2 q^{n-1-i}); walking i downward keeps them sorted.
        for (std::size_t i = n_; i-- > 0;) {
            const std::uint64_t lo = ipow(q, static_cast<unsigned>(n_ - 1 - i));
            for (std::uint64_t e = lo; e < 2 * lo; ++e) encodings_.push_back(e);
        }
    }

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return encodings_.size(); }
    const std::vector<std::uint64_t>& encodings() const noexcept { return encodings_; }

    std::vector<std::uint8_t> point(std::size_t i) const {
        std::vector<std::uint8_t> v(n_);
        auto e = encodings_.at(i);
        const auto q = static_cast<std::uint64_t>(field_->q());
        for (std::size_t j = n_; j-- > 0;) {
            v[j] = static_cast<std::uint8_t>(e % q);
            e /= q;
        }
        return v;
    }

    std::uint64_t encode(std::span<const std::uint8_t> v) const {
        std::uint64_t e = 0;
        for (auto x : v) e = e * static_cast<std::uint64_t>(field_->q()) + x;
        return e;
    }

    /// Index of a normalized representative, if it is one.
    std::optional<std::size_t> index_of(std::span<const std::uint8_t> v) const {
        if (v.size() != n_) return std::nullopt;
        const auto e = encode(v);
        const auto it = std::lower_bound(encodings_.begin(), encodings_.end(), e);
        if (it == encodings_.end() || *it != e) return std::nullopt;
        return static_cast<std::size_t>(it - encodings_.begin());
    }

private:
    Field field_;
    std::size_t n_;
    std::vector<std::uint64_t> encodings_;
};

struct IncidenceVector {
    std::vector<std::uint8_t> bits;

    std::size_t popcount() const { return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1)); }
    friend bool operator==(const IncidenceVector&, const IncidenceVector&) = default;
};

/// Bit i is set iff L_i lies in u. Points of u are listed directly: combinations
/// of the RREF rows whose first nonzero coefficient is 1 are exactly the
/// normalized vectors of u.
inline IncidenceVector incidence_vector(const Subspace& u, const PointIndex& idx) {
    if (!same_field(u.field(), idx.field())) throw ContextMismatch("subspace and point index over different fields");
    if (u.n() != idx.n()) throw ContextMismatch("subspace and point index of different ambient dimension");
    const auto& f = u.ctx();
    const std::size_t n = u.n();
    const std::size_t d = u.dim();
    const int q = f.q();
    IncidenceVector iv{std::vector<std::uint8_t>(idx.size(), 0)};
    std::vector<std::uint8_t> coef(d), vec(n);
    auto advance = [&](std::size_t lead) {
        for (std::size_t r = d; r-- > lead + 1;) {
            if (++coef[r] < q) return true;
            coef[r] = 0;
        }
        return false;
    };
    for (std::size_t lead = 0; lead < d; ++lead) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[lead] = 1;
        do {
            std::fill(vec.begin(), vec.end(), 0);
            for (std::size_t r = lead; r < d; ++r) {
                if (coef[r] == 0) continue;
                const auto row = u.basis().row(r);
                for (std::size_t j = 0; j < n; ++j) vec[j] = f.add_raw(vec[j], f.mul_raw(coef[r], row[j]));
            }
            const auto i = idx.index_of(vec);
            if (!i) throw Error("incidence_vector: combination is not normalized");
            iv.bits[*i] = 1;
        } while (advance(lead));
    }
    return iv;
}

} // namespace grassmann
