#pragma once

// Dense exact linear algebra over GF(q): Gauss-Jordan reduction to the unique
// reduced row echelon form, and the row-space operations built on it.

#include "grassmann/error.hpp"
#include "grassmann/gfq.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace grassmann {

class MatGFq {
public:
    MatGFq(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
        if (!field_) throw InvalidArgs("matrix over a null field");
    }

    MatGFq(Field field, std::size_t rows, std::size_t cols, std::vector<std::uint8_t> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (!field_) throw InvalidArgs("matrix over a null field");
        if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data size does not match shape");
        for (auto v : data_) {
            if (v >= field_->q()) throw InvalidArgs("matrix entry outside the field");
        }
    }

    static MatGFq from_rows(Field field, std::initializer_list<std::initializer_list<int>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.begin()->size() : 0;
        std::vector<std::uint8_t> data;
        data.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) throw DimensionMismatch("ragged rows");
            for (int v : row) data.push_back(field->element(v).value);
        }
        return MatGFq(std::move(field), r, c, std::move(data));
    }

    static MatGFq identity(Field field, std::size_t n) {
        MatGFq m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
        return m;
    }

    const Field& field() const noexcept { return field_; }
    const FieldCtx& ctx() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, FieldElement v) { data_[r * cols_ + c] = field_->element(v.value).value; }

    std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    const std::vector<std::uint8_t>& data() const noexcept { return data_; }

    void append_row(std::span<const std::uint8_t> v) {
        if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    friend bool operator==(const MatGFq& a, const MatGFq& b) {
        return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Lexicographic on (rows, cols, row-major entries); contexts are not compared.
    friend std::strong_ordering operator<=>(const MatGFq& a, const MatGFq& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> data_;
};

inline std::ostream& operator<<(std::ostream& os, const MatGFq& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << static_cast<int>(m.at(r, c));
        }
        os << '\n';
    }
    return os;
}

namespace detail {

/// In-place Gauss-Jordan on a row-major buffer. Nonzero rows end up on top in
/// reduced echelon form; returns the rank. Pivot columns go to `pivots` when
/// given.
inline std::size_t gauss_jordan(const FieldCtx& f, std::uint8_t* a, std::size_t rows, std::size_t cols,
                                std::vector<std::size_t>* pivots = nullptr) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rank;
        while (sel < rows && a[sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        std::uint8_t* prow = a + rank * cols;
        if (sel != rank) {
            std::uint8_t* srow = a + sel * cols;
            for (std::size_t j = 0; j < cols; ++j) std::swap(prow[j], srow[j]);
        }
        const std::uint8_t piv_inv = f.inv_raw(prow[c]);
        if (piv_inv != 1) {
            for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul_raw(prow[j], piv_inv);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            std::uint8_t* r = a + i * cols;
            const std::uint8_t factor = r[c];
            if (factor == 0) continue;
            const std::uint8_t nf = f.neg_raw(factor);
            for (std::size_t j = c; j < cols; ++j) r[j] = f.add_raw(r[j], f.mul_raw(nf, prow[j]));
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

/// Forward elimination only (row echelon, not reduced); returns the rank.
inline std::size_t echelon_rank(const FieldCtx& f, std::uint8_t* a, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rank;
        while (sel < rows && a[sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        std::uint8_t* prow = a + rank * cols;
        if (sel != rank) {
            std::uint8_t* srow = a + sel * cols;
            for (std::size_t j = c; j < cols; ++j) std::swap(prow[j], srow[j]);
        }
        const std::uint8_t piv_inv = f.inv_raw(prow[c]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint8_t* r = a + i * cols;
            if (r[c] == 0) continue;
            const std::uint8_t nf = f.neg_raw(f.mul_raw(r[c], piv_inv));
            for (std::size_t j = c; j < cols; ++j) r[j] = f.add_raw(r[j], f.mul_raw(nf, prow[j]));
        }
        ++rank;
    }
    return rank;
}

inline void require_compatible(const MatGFq& a, const MatGFq& b) {
    if (!same_field(a.field(), b.field())) throw ContextMismatch("matrices over different fields");
    if (a.cols() != b.cols()) throw DimensionMismatch("matrices have different column counts");
}

} // namespace detail

struct RrefResult {
    MatGFq matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form with zero rows dropped.
inline RrefResult rref(const MatGFq& m) {
    auto data = m.data();
    std::vector<std::size_t> pivots;
    const auto r = detail::gauss_jordan(m.ctx(), data.data(), m.rows(), m.cols(), &pivots);
    data.resize(r * m.cols());
    return {MatGFq(m.field(), r, m.cols(), std::move(data)), r, std::move(pivots)};
}

inline std::size_t rank(const MatGFq& m) {
    auto data = m.data();
    return detail::echelon_rank(m.ctx(), data.data(), m.rows(), m.cols());
}

inline bool is_rref(const MatGFq& m) {
    const auto r = rref(m);
    return r.rank == m.rows() && r.matrix == m;
}

inline MatGFq transpose(const MatGFq& m) {
    std::vector<std::uint8_t> data(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) data[c * m.rows() + r] = m.at(r, c);
    return MatGFq(m.field(), m.cols(), m.rows(), std::move(data));
}

inline MatGFq vstack(const MatGFq& a, const MatGFq& b) {
    detail::require_compatible(a, b);
    auto data = a.data();
    data.insert(data.end(), b.data().begin(), b.data().end());
    return MatGFq(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

/// dim(rowspace(a) ∩ rowspace(b)) = rank(a) + rank(b) - rank([a; b]).
inline std::size_t intersect_dim(const MatGFq& a, const MatGFq& b) {
    detail::require_compatible(a, b);
    return rank(a) + rank(b) - rank(vstack(a, b));
}

/// rowspace(a) + rowspace(b), in RREF.
inline MatGFq sum_space(const MatGFq& a, const MatGFq& b) {
    return rref(vstack(a, b)).matrix;
}

/// True when v lies in the row space of a matrix already in RREF.
inline bool in_rowspace_rref(const MatGFq& basis, std::span<const std::uint8_t> v) {
    const auto& f = basis.ctx();
    std::vector<std::uint8_t> w(v.begin(), v.end());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        const auto row = basis.row(r);
        std::size_t pc = 0;
        while (row[pc] == 0) ++pc;
        const std::uint8_t factor = w[pc];
        if (factor == 0) continue;
        const std::uint8_t nf = f.neg_raw(factor);
        for (std::size_t j = pc; j < w.size(); ++j) w[j] = f.add_raw(w[j], f.mul_raw(nf, row[j]));
    }
    for (auto x : w)
        if (x) return false;
    return true;
}

/// Rows completing `independent` to a basis of rowspace(ambient). Ambient
/// rows are tried in order and kept first-fit whenever they raise the rank;
/// since they span the ambient space this always terminates at full rank.
inline MatGFq extend_basis(const MatGFq& independent, const MatGFq& ambient) {
    detail::require_compatible(independent, ambient);
    if (rank(independent) != independent.rows()) throw InvalidArgs("extend_basis: rows are not independent");
    const auto amb = rref(ambient);
    for (std::size_t r = 0; r < independent.rows(); ++r) {
        if (!in_rowspace_rref(amb.matrix, independent.row(r))) {
            throw NotSubspace("extend_basis: independent set is not inside the ambient space");
        }
    }

    MatGFq current = rref(independent).matrix;
    MatGFq extension(ambient.field(), 0, ambient.cols());
    for (std::size_t r = 0; r < ambient.rows() && current.rows() < amb.rank; ++r) {
        const auto v = ambient.row(r);
        if (in_rowspace_rref(current, v)) continue;
        extension.append_row(v);
        MatGFq next = current;
        next.append_row(v);
        current = rref(next).matrix;
    }
    return extension;
}

} // namespace grassmann
