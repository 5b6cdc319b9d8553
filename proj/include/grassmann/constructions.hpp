#pragma once

// Explicit resolving sets for G_q(n,k):
//   - all k-subspaces of the members of a (k+1)-spread, when (k+1) | n;
//   - the same over a {k+1, t}-partition, the t-dimensional parts widened
//     by a fixed (k-t+1)-subspace Z, when n = r(k+1) + t;
//   - greedy selection of k-subspaces whose incidence vectors raise the
//     rational rank until it reaches [n 1]_q.

#include "grassmann/error.hpp"
#include "grassmann/gfq.hpp"
#include "grassmann/numeric.hpp"
#include "grassmann/rank.hpp"
#include "grassmann/subspaces.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace grassmann {

/// A set of t-subspaces partitioning the nonzero vectors of V(n,q).
struct Spread {
    Field field;
    std::size_t n = 0;
    std::size_t t = 0;
    SubspaceFamily members;
};

/// Spread of the first s coordinates together with t-subspaces covering the
/// vectors outside them, and the subspace Z used to widen the latter.
struct MixedPartition {
    Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t s = 0;
    std::size_t t = 0;
    SubspaceFamily spread_part; // (k+1)-subspaces inside V(s,q), embedded in V(n,q)
    SubspaceFamily tail_part;   // q^s subspaces of dimension t
    Subspace z;                 // (k-t+1)-subspace of the first spread member
};

namespace detail {

inline void require_grassmann_shape(std::size_t n, std::size_t k) {
    if (k < 2 || 2 * k > n) {
        throw InvalidArgs("construction needs 2 <= k <= n/2 (got n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                          ")");
    }
}

/// Pads a subspace of V(s,q) with zero coordinates on the right.
inline Subspace embed(const Subspace& w, std::size_t n) {
    std::vector<std::uint8_t> data(w.dim() * n, 0);
    for (std::size_t r = 0; r < w.dim(); ++r) {
        const auto row = w.basis().row(r);
        std::copy(row.begin(), row.end(), data.begin() + static_cast<std::ptrdiff_t>(r * n));
    }
    return Subspace::from_rref(MatGFq(w.field(), w.dim(), n, std::move(data)));
}

} // namespace detail

/// Field-reduction spread. V(n,q) is read as GF(q^t)^{n/t}, coordinate block j
/// holding the GF(q)-coefficients of the j-th GF(q^t) entry. Each point <v> of
/// PG(n/t - 1, q^t) becomes the GF(q)-span of y^i v for i < t.
inline Spread build_spread(const Field& field, std::size_t n, std::size_t t,
                           std::uint64_t budget = enumeration_budget()) {
    if (t == 0 || n == 0 || n % t != 0) {
        throw NotDivisor("spread needs t to divide n (got n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    }
    const BigInt count = (big_pow(field->q(), static_cast<unsigned>(n)) - 1) /
                         (big_pow(field->q(), static_cast<unsigned>(t)) - 1);
    checked_count(count, budget, "building a spread");

    const ExtensionField ext(field, static_cast<int>(t));
    const std::size_t m = n / t;
    const std::uint64_t Q = ext.order();

    Spread spread{field, n, t, {}};
    spread.members.reserve(static_cast<std::size_t>(count));
    std::vector<std::uint64_t> v(m);
    std::vector<std::uint8_t> data(t * n);
    auto advance = [&](std::size_t lead) {
        for (std::size_t j = m; j-- > lead + 1;) {
            if (++v[j] < Q) return true;
            v[j] = 0;
        }
        return false;
    };
    for (std::size_t lead = 0; lead < m; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        do {
            for (std::size_t i = 0; i < t; ++i) {
                const auto yi = ext.power_basis(static_cast<int>(i));
                for (std::size_t j = 0; j < m; ++j) {
                    const auto c = ext.coords(ext.mul(yi, v[j]));
                    std::copy(c.begin(), c.end(), data.begin() + static_cast<std::ptrdiff_t>(i * n + j * t));
                }
            }
            spread.members.push_back(Subspace::span(MatGFq(field, t, n, data)));
        } while (advance(lead));
    }
    std::sort(spread.members.begin(), spread.members.end());
    return spread;
}

/// Each nonzero vector of V(n,q) lies in exactly one member.
inline bool partitions_nonzero_vectors(const SubspaceFamily& family, const Field& field, std::size_t n,
                                       std::uint64_t budget = enumeration_budget()) {
    const auto q = static_cast<std::uint64_t>(field->q());
    const auto total = checked_count(big_pow(q, static_cast<unsigned>(n)), budget, "covering check");
    std::vector<std::uint32_t> hits(total, 0);
    const auto& f = *field;
    std::vector<std::uint8_t> vec(n);
    for (const auto& w : family) {
        if (w.n() != n || !same_field(w.field(), field)) throw DimensionMismatch("member outside V(n,q)");
        const std::size_t d = w.dim();
        std::vector<std::uint8_t> coef(d, 0);
        const std::uint64_t combos = ipow(q, static_cast<unsigned>(d));
        for (std::uint64_t c = 1; c < combos; ++c) {
            auto x = c;
            for (std::size_t r = 0; r < d; ++r) {
                coef[r] = static_cast<std::uint8_t>(x % q);
                x /= q;
            }
            std::fill(vec.begin(), vec.end(), 0);
            for (std::size_t r = 0; r < d; ++r) {
                if (!coef[r]) continue;
                const auto row = w.basis().row(r);
                for (std::size_t j = 0; j < n; ++j) vec[j] = f.add_raw(vec[j], f.mul_raw(coef[r], row[j]));
            }
            std::uint64_t e = 0;
            for (auto xj : vec) e = e * q + xj;
            ++hits[e];
        }
    }
    if (hits[0] != 0) return false;
    for (std::uint64_t e = 1; e < total; ++e)
        if (hits[e] != 1) return false;
    return true;
}

inline bool pairwise_trivial(const SubspaceFamily& family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (intersection_dim(family[i], family[j]) != 0) return false;
    return true;
}

/// All k-subspaces of the members of a (k+1)-spread; exactly [n 1]_q of them.
inline SubspaceFamily resolving_from_spread(const Field& field, std::size_t n, std::size_t k,
                                            std::uint64_t budget = enumeration_budget()) {
    detail::require_grassmann_shape(n, k);
    if (n % (k + 1) != 0) {
        throw NotDivisor("spread construction needs (k+1) | n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         ")");
    }
    const auto spread = build_spread(field, n, k + 1, budget);
    SubspaceFamily family;
    for (const auto& w : spread.members) {
        auto part = subspaces_of(w, k, budget);
        family.insert(family.end(), part.begin(), part.end());
    }
    family = canonical_family(std::move(family));
    if (BigInt(family.size()) != gaussian_binomial(static_cast<long>(n), 1, field->q())) {
        throw Error("spread construction produced an unexpected number of subspaces");
    }
    return family;
}

/// n = s + t with s = r(k+1), r >= 1, 0 < t < k+1. The first s coordinates
/// carry GF(q^s) and the last t carry GF(q^t); the tail part is the graphs
/// X_a = {(a ι(μ), μ)} of the power-basis injection ι: y^i -> x^i.
inline MixedPartition build_mixed_partition(const Field& field, std::size_t n, std::size_t k,
                                            std::uint64_t budget = enumeration_budget()) {
    if (k < 1) throw InvalidShape("mixed partition needs k >= 1");
    const std::size_t r = n / (k + 1);
    const std::size_t t = n % (k + 1);
    if (t == 0) throw InvalidShape("(k+1) divides n; use the spread construction");
    if (r == 0) throw InvalidShape("mixed partition needs n >= k+1");
    const std::size_t s = r * (k + 1);
    checked_count(big_pow(field->q(), static_cast<unsigned>(s)), budget, "building the tail partition");

    MixedPartition part{field, n, k, s, t, {}, {}, Subspace::zero(field, n)};
    for (const auto& w : build_spread(field, s, k + 1, budget).members) part.spread_part.push_back(detail::embed(w, n));

    const ExtensionField big(field, static_cast<int>(s));
    std::vector<std::uint8_t> data(t * n);
    for (std::uint64_t a = 0; a < big.order(); ++a) {
        std::fill(data.begin(), data.end(), 0);
        for (std::size_t i = 0; i < t; ++i) {
            const auto c = big.coords(big.mul(a, big.power_basis(static_cast<int>(i))));
            std::copy(c.begin(), c.end(), data.begin() + static_cast<std::ptrdiff_t>(i * n));
            data[i * n + s + i] = 1;
        }
        part.tail_part.push_back(Subspace::span(MatGFq(field, t, n, data)));
    }
    std::sort(part.tail_part.begin(), part.tail_part.end());

    const auto& w1 = part.spread_part.front();
    const std::size_t zdim = k - t + 1;
    std::vector<std::uint8_t> zdata(w1.basis().data().begin(),
                                    w1.basis().data().begin() + static_cast<std::ptrdiff_t>(zdim * n));
    part.z = Subspace::from_rref(MatGFq(field, zdim, n, std::move(zdata)));
    return part;
}

struct PartitionConstruction {
    SubspaceFamily family;
    std::size_t raw_count = 0;           // before removing repeats
    std::size_t distinct_extensions = 0; // distinct X_j ⊕ Z
};

inline PartitionConstruction resolving_from_partition_detailed(const Field& field, std::size_t n, std::size_t k,
                                                               std::uint64_t budget = enumeration_budget()) {
    detail::require_grassmann_shape(n, k);
    const auto part = build_mixed_partition(field, n, k, budget);
    PartitionConstruction out;
    SubspaceFamily family;
    for (const auto& w : part.spread_part) {
        auto subs = subspaces_of(w, k, budget);
        family.insert(family.end(), subs.begin(), subs.end());
    }
    const auto per_block = static_cast<std::size_t>(gaussian_binomial(static_cast<long>(k) + 1, static_cast<long>(k), field->q()));
    out.raw_count = (part.spread_part.size() + part.tail_part.size()) * per_block;

    SubspaceFamily extensions;
    extensions.reserve(part.tail_part.size());
    for (const auto& x : part.tail_part) extensions.push_back(subspace_sum(x, part.z));
    extensions = canonical_family(std::move(extensions));
    out.distinct_extensions = extensions.size();
    for (const auto& e : extensions) {
        if (e.dim() != k + 1) throw Error("X_j + Z is not (k+1)-dimensional");
        auto subs = subspaces_of(e, k, budget);
        family.insert(family.end(), subs.begin(), subs.end());
    }
    out.family = canonical_family(std::move(family));
    return out;
}

inline SubspaceFamily resolving_from_partition(const Field& field, std::size_t n, std::size_t k,
                                               std::uint64_t budget = enumeration_budget()) {
    return resolving_from_partition_detailed(field, n, k, budget).family;
}

/// Scans k-subspaces in canonical order, keeping those whose incidence
/// vector raises the rational rank, until the rank reaches [n 1]_q.
inline SubspaceFamily resolving_greedy_rank(const Field& field, std::size_t n, std::size_t k,
                                            std::uint64_t budget = enumeration_budget()) {
    detail::require_grassmann_shape(n, k);
    const PointIndex idx(field, n, budget);
    const auto all = enumerate_k_subspaces(field, n, k, budget);
    IncrementalRank rank(idx.size());
    SubspaceFamily family;
    for (const auto& u : all) {
        if (rank.add(incidence_vector(u, idx).bits)) family.push_back(u);
        if (rank.rank() == idx.size()) break;
    }
    if (rank.rank() != idx.size()) throw Error("greedy rank construction did not reach full rank");
    return family;
}

} // namespace grassmann
