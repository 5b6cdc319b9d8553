#pragma once

// Table-driven arithmetic for small prime-power fields GF(p^e), plus
// polynomial-quotient extensions GF(q^t) over such a field.
//
// Element encoding: a_0 + a_1 x + ... + a_{e-1} x^{e-1} is stored as the
// base-p integer sum a_i p^i (constant term least significant).

#include "grassmann/error.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace grassmann {

struct FieldElement {
    std::uint8_t value = 0;

    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElement a) {
    return os << static_cast<int>(a.value);
}

class FieldCtx;

/// Shared read-only handle; contexts are immutable once built.
using Field = std::shared_ptr<const FieldCtx>;

Field field_new(int q, int max_q = 16);

namespace poly {

/// Coefficient vectors over a field, constant term first, no trailing zeros
/// (the zero polynomial is the empty vector).
using Poly = std::vector<std::uint8_t>;

void trim(Poly& f);
Poly mod(const FieldCtx& f, Poly a, const Poly& m);
Poly mul_mod(const FieldCtx& f, const Poly& a, const Poly& b, const Poly& m);
bool is_irreducible(const FieldCtx& f, const Poly& m);
Poly smallest_monic_irreducible(const FieldCtx& f, int degree);

} // namespace poly

class FieldCtx {
public:
    int p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    int q() const noexcept { return q_; }

    /// Modulus over GF(p), constant term first. For prime fields this is the
    /// convention polynomial x (coefficients {0, 1}).
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }

    FieldElement element(int value) const {
        if (value < 0 || value >= q_) {
            throw InvalidArgs("element " + std::to_string(value) + " outside GF(" +
                              std::to_string(q_) + ")");
        }
        return {static_cast<std::uint8_t>(value)};
    }

    FieldElement add(FieldElement a, FieldElement b) const { return {add_raw(check(a), check(b))}; }
    FieldElement sub(FieldElement a, FieldElement b) const { return {sub_raw(check(a), check(b))}; }
    FieldElement mul(FieldElement a, FieldElement b) const { return {mul_raw(check(a), check(b))}; }
    FieldElement neg(FieldElement a) const { return {neg_raw(check(a))}; }
    FieldElement inv(FieldElement a) const {
        if (check(a) == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
        return {inv_[a.value]};
    }

    // Unchecked table lookups for hot loops; arguments must be valid encodings.
    std::uint8_t add_raw(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * q_ + b]; }
    std::uint8_t sub_raw(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * q_ + neg_[b]]; }
    std::uint8_t mul_raw(std::uint8_t a, std::uint8_t b) const noexcept { return mul_[a * q_ + b]; }
    std::uint8_t neg_raw(std::uint8_t a) const noexcept { return neg_[a]; }
    std::uint8_t inv_raw(std::uint8_t a) const noexcept { return inv_[a]; }

    /// Polynomial coefficients (over GF(p)) of an element, length e.
    std::vector<int> coefficients(FieldElement a) const {
        std::vector<int> c(e_);
        int v = check(a);
        for (int i = 0; i < e_; ++i) {
            c[i] = v % p_;
            v /= p_;
        }
        return c;
    }

    FieldElement from_coefficients(std::span<const int> c) const {
        if (static_cast<int>(c.size()) != e_) throw InvalidArgs("coefficient vector has wrong length");
        int v = 0;
        for (int i = e_ - 1; i >= 0; --i) {
            if (c[i] < 0 || c[i] >= p_) throw InvalidArgs("coefficient outside GF(p)");
            v = v * p_ + c[i];
        }
        return {static_cast<std::uint8_t>(v)};
    }

    /// "GF(q)" followed by the modulus coefficients.
    std::string describe() const {
        std::string s = "GF(" + std::to_string(q_) + ") modulus";
        for (int c : modulus_) s += " " + std::to_string(c);
        return s;
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

private:
    FieldCtx() = default;

    std::uint8_t check(FieldElement a) const {
        if (a.value >= q_) throw InvalidArgs("element outside GF(" + std::to_string(q_) + ")");
        return a.value;
    }

    static std::shared_ptr<FieldCtx> prime_field(int p);

    int p_ = 0;
    int e_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;

    friend Field field_new(int q, int max_q);
};

inline bool same_field(const Field& a, const Field& b) {
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// polynomials

namespace poly {

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of a modulo a monic m.
inline Poly mod(const FieldCtx& f, Poly a, const Poly& m) {
    trim(a);
    const auto dm = m.size() - 1;
    while (a.size() >= m.size()) {
        const std::uint8_t lead = a.back();
        const auto shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = f.sub_raw(a[shift + i], f.mul_raw(lead, m[i]));
        }
        trim(a);
    }
    return a;
}

inline Poly mul_mod(const FieldCtx& f, const Poly& a, const Poly& b, const Poly& m) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = f.add_raw(r[i + j], f.mul_raw(a[i], b[j]));
        }
    }
    return mod(f, std::move(r), m);
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-q digits of index.
inline Poly monic_from_index(int q, int degree, std::uint64_t index) {
    Poly g(degree + 1);
    for (int i = 0; i < degree; ++i) {
        g[i] = static_cast<std::uint8_t>(index % q);
        index /= q;
    }
    g[degree] = 1;
    return g;
}

/// Trial division by every monic polynomial of degree 1..deg(m)/2.
inline bool is_irreducible(const FieldCtx& f, const Poly& m) {
    const int d = static_cast<int>(m.size()) - 1;
    if (d < 1) return false;
    for (int dg = 1; dg <= d / 2; ++dg) {
        std::uint64_t count = 1;
        for (int i = 0; i < dg; ++i) count *= f.q();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (mod(f, m, monic_from_index(f.q(), dg, idx)).empty()) return false;
        }
    }
    return true;
}

/// Smallest monic irreducible of the given degree, ordering candidates by
/// their lower coefficients read as a base-q integer (constant term least
/// significant).
inline Poly smallest_monic_irreducible(const FieldCtx& f, int degree) {
    if (degree < 1) throw InvalidArgs("irreducible polynomial degree must be >= 1");
    std::uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= f.q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto g = monic_from_index(f.q(), degree, idx);
        if (is_irreducible(f, g)) return g;
    }
    throw Error("no irreducible polynomial found"); // unreachable for a field
}

} // namespace poly

// ---------------------------------------------------------------------------
// field construction

inline std::shared_ptr<FieldCtx> FieldCtx::prime_field(int p) {
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = 1;
    ctx->q_ = p;
    ctx->modulus_ = {0, 1};
    ctx->add_.resize(p * p);
    ctx->mul_.resize(p * p);
    ctx->neg_.resize(p);
    ctx->inv_.assign(p, 0);
    for (int a = 0; a < p; ++a) {
        ctx->neg_[a] = static_cast<std::uint8_t>((p - a) % p);
        for (int b = 0; b < p; ++b) {
            ctx->add_[a * p + b] = static_cast<std::uint8_t>((a + b) % p);
            ctx->mul_[a * p + b] = static_cast<std::uint8_t>((a * b) % p);
            if ((a * b) % p == 1) ctx->inv_[a] = static_cast<std::uint8_t>(b);
        }
    }
    return ctx;
}

inline Field field_new(int q, int max_q) {
    if (max_q > 256) max_q = 256; // encodings are bytes
    if (q < 2) throw NotPrimePower("field order " + std::to_string(q) + " is not a prime power");
    int p = 0;
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int e = 0;
    for (int r = q; r > 1; r /= p) {
        if (r % p != 0) throw NotPrimePower("field order " + std::to_string(q) + " is not a prime power");
        ++e;
    }
    if (q > max_q) {
        throw TooLarge("field order " + std::to_string(q) + " exceeds ceiling " + std::to_string(max_q));
    }

    auto base = FieldCtx::prime_field(p);
    if (e == 1) return base;

    const auto m = poly::smallest_monic_irreducible(*base, e);
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->q_ = q;
    ctx->modulus_.assign(m.begin(), m.end());
    ctx->add_.resize(q * q);
    ctx->mul_.resize(q * q);
    ctx->neg_.resize(q);
    ctx->inv_.assign(q, 0);

    auto to_poly = [&](int v) {
        poly::Poly c(e);
        for (int i = 0; i < e; ++i) {
            c[i] = static_cast<std::uint8_t>(v % p);
            v /= p;
        }
        return c;
    };
    auto from_poly = [&](poly::Poly c) {
        c.resize(e, 0);
        int v = 0;
        for (int i = e - 1; i >= 0; --i) v = v * p + c[i];
        return static_cast<std::uint8_t>(v);
    };

    for (int a = 0; a < q; ++a) {
        const auto pa = to_poly(a);
        poly::Poly na(e);
        for (int i = 0; i < e; ++i) na[i] = base->neg_raw(pa[i]);
        ctx->neg_[a] = from_poly(na);
        for (int b = 0; b < q; ++b) {
            const auto pb = to_poly(b);
            poly::Poly s(e);
            for (int i = 0; i < e; ++i) s[i] = base->add_raw(pa[i], pb[i]);
            ctx->add_[a * q + b] = from_poly(s);
            ctx->mul_[a * q + b] = from_poly(poly::mul_mod(*base, pa, pb, m));
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (ctx->mul_[a * q + b] == 1) {
                ctx->inv_[a] = static_cast<std::uint8_t>(b);
                break;
            }
        }
    }
    return ctx;
}

// ---------------------------------------------------------------------------

/// GF(q^t) realised as GF(q)[y]/(m(y)) for the smallest monic irreducible m of
/// degree t over the base field. Elements are encoded as base-q integers of
/// their coefficient vectors, so y^i encodes as q^i.
class ExtensionField {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

    ExtensionField(Field base, int degree) : base_(std::move(base)), degree_(degree) {
        if (!base_) throw InvalidArgs("extension over a null field");
        if (degree_ < 1) throw InvalidArgs("extension degree must be >= 1");
        order_ = 1;
        for (int i = 0; i < degree_; ++i) {
            order_ *= static_cast<std::uint64_t>(base_->q());
            if (order_ > kMaxOrder) throw TooLarge("extension field order too large");
        }
        modulus_ = poly::smallest_monic_irreducible(*base_, degree_);
    }

    const Field& base() const noexcept { return base_; }
    int degree() const noexcept { return degree_; }
    std::uint64_t order() const noexcept { return order_; }
    const poly::Poly& modulus() const noexcept { return modulus_; }

    /// Encoding of y^i for 0 <= i < degree.
    std::uint64_t power_basis(int i) const {
        std::uint64_t v = 1;
        for (int j = 0; j < i; ++j) v *= static_cast<std::uint64_t>(base_->q());
        return v;
    }

    std::vector<std::uint8_t> coords(std::uint64_t a) const {
        std::vector<std::uint8_t> c(degree_);
        const auto q = static_cast<std::uint64_t>(base_->q());
        for (int i = 0; i < degree_; ++i) {
            c[i] = static_cast<std::uint8_t>(a % q);
            a /= q;
        }
        return c;
    }

    std::uint64_t from_coords(std::span<const std::uint8_t> c) const {
        const auto q = static_cast<std::uint64_t>(base_->q());
        std::uint64_t v = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * q + c[i];
        return v;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        auto ca = coords(a);
        const auto cb = coords(b);
        for (int i = 0; i < degree_; ++i) ca[i] = base_->add_raw(ca[i], cb[i]);
        return from_coords(ca);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        auto ca = coords(a);
        auto cb = coords(b);
        poly::trim(ca);
        poly::trim(cb);
        auto r = poly::mul_mod(*base_, ca, cb, modulus_);
        r.resize(degree_, 0);
        return from_coords(r);
    }

private:
    Field base_;
    int degree_;
    std::uint64_t order_ = 0;
    poly::Poly modulus_;
};

} // namespace grassmann
