#pragma once

// Closed-form bounds on the metric dimension of G_q(n,k): the diameter-based
// lower bound log_k [n k]_q, the two Babai upper bounds, and the point count
// [n 1]_q attained by the constructions.

#include "grassmann/constructions.hpp"
#include "grassmann/error.hpp"
#include "grassmann/numeric.hpp"
#include "grassmann/subspaces.hpp"

#include <map>
#include <optional>
#include <string>

namespace grassmann {

enum class LogBase { e, two, ten };

inline const char* to_string(LogBase b) {
    switch (b) {
        case LogBase::e: return "e";
        case LogBase::two: return "2";
        case LogBase::ten: return "10";
    }
    return "e";
}

inline LogBase parse_log_base(const std::string& s) {
    if (s == "e") return LogBase::e;
    if (s == "2") return LogBase::two;
    if (s == "10") return LogBase::ten;
    throw InvalidArgs("log base must be one of e, 2, 10 (got '" + s + "')");
}

inline BigFloat log_in_base(const BigFloat& x, LogBase base) {
    using boost::multiprecision::log;
    switch (base) {
        case LogBase::two: return log(x) / log(BigFloat(2));
        case LogBase::ten: return log(x) / log(BigFloat(10));
        case LogBase::e: break;
    }
    return log(x);
}

inline BigInt vertex_count(int q, std::size_t n, std::size_t k) {
    return gaussian_binomial(static_cast<long>(n), static_cast<long>(k), q);
}

/// log_k [n k]_q. This is an approximate lower bound, not a theorem about every instance.
inline BigFloat lower_bound(int q, std::size_t n, std::size_t k) {
    if (k < 2) throw InvalidArgs("lower_bound needs k >= 2");
    using boost::multiprecision::log;
    return log(BigFloat(vertex_count(q, n, k))) / log(BigFloat(k));
}

/// 4 sqrt(V) log V with V = [n k]_q.
inline BigFloat babai_general(int q, std::size_t n, std::size_t k, LogBase base = LogBase::e) {
    const BigFloat v(vertex_count(q, n, k));
    return 4 * boost::multiprecision::sqrt(v) * log_in_base(v, base);
}

struct BabaiStrong {
    BigFloat bound;
    BigInt M;
    std::size_t argmax_j = 0;
};

/// q^{j^2} [n-k j]_q [k j]_q, the j-th term of the maximisation.
inline BigInt babai_term(int q, std::size_t n, std::size_t k, std::size_t j) {
    return big_pow(q, static_cast<unsigned>(j * j)) *
           gaussian_binomial(static_cast<long>(n - k), static_cast<long>(j), q) *
           gaussian_binomial(static_cast<long>(k), static_cast<long>(j), q);
}

/// 2k V/(V - M) log V with M = max_{0<=j<=k} q^{j^2} [n-k j]_q [k j]_q.
inline BabaiStrong babai_strong(int q, std::size_t n, std::size_t k, LogBase base = LogBase::e) {
    if (2 * k > n) throw InvalidArgs("babai_strong needs k <= n - k");
    BabaiStrong out;
    out.M = -1;
    for (std::size_t j = 0; j <= k; ++j) {
        const auto term = babai_term(q, n, k, j);
        if (term > out.M) {
            out.M = term;
            out.argmax_j = j;
        }
    }
    const BigInt v = vertex_count(q, n, k);
    if (out.M >= v) throw DegenerateBound("babai_strong: M >= [n k]_q, bound is undefined");
    const BigFloat vf(v);
    out.bound = 2 * BigFloat(k) * vf / (vf - BigFloat(out.M)) * log_in_base(vf, base);
    return out;
}

struct BoundsReport {
    int q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    LogBase log_base = LogBase::e;
    BigInt num_vertices;
    BigFloat lower_log;
    BigFloat babai_general;
    std::optional<BigFloat> babai_strong; // absent when degenerate
    BigInt babai_M;
    std::size_t babai_argmax_j = 0;
    BigInt paper_bound; // [n 1]_q
    std::map<std::string, std::size_t> construction_sizes;

    bool paper_beats_babai_general() const { return BigFloat(paper_bound) < babai_general; }
    bool babai_strong_beats_paper() const { return babai_strong && *babai_strong < BigFloat(paper_bound); }
};

struct CompareOptions {
    LogBase log_base = LogBase::e;
    bool constructions = true;
    /// Constructions are only run when [n k]_q is at most this.
    std::uint64_t construction_limit = 20000;
};

inline BoundsReport compare(int q, std::size_t n, std::size_t k, const CompareOptions& opt = {}) {
    if (k < 2 || 2 * k > n) throw InvalidArgs("bounds need 2 <= k <= n/2");
    BoundsReport r;
    r.q = q;
    r.n = n;
    r.k = k;
    r.log_base = opt.log_base;
    r.num_vertices = vertex_count(q, n, k);
    r.lower_log = lower_bound(q, n, k);
    r.babai_general = babai_general(q, n, k, opt.log_base);
    try {
        auto s = babai_strong(q, n, k, opt.log_base);
        r.babai_strong = s.bound;
        r.babai_M = s.M;
        r.babai_argmax_j = s.argmax_j;
    } catch (const DegenerateBound&) {
        r.babai_strong.reset();
    }
    r.paper_bound = gaussian_binomial(static_cast<long>(n), 1, q);

    if (opt.constructions && r.num_vertices <= opt.construction_limit) {
        Field field;
        try {
            field = field_new(q);
        } catch (const InvalidArgs&) {
            return r; // the formulas make sense for any q, the constructions need a field
        }
        if (n % (k + 1) == 0) {
            r.construction_sizes["spread"] = resolving_from_spread(field, n, k).size();
        } else {
            r.construction_sizes["partition"] = resolving_from_partition(field, n, k).size();
        }
        r.construction_sizes["greedy"] = resolving_greedy_rank(field, n, k).size();
    }
    return r;
}

} // namespace grassmann
