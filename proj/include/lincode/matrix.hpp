#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "lincode/gf.hpp"

namespace lincode {

/// A vector over GF(q), stored as reduced residues. The field is carried by
/// whatever matrix or code the vector belongs to.
using Vec = std::vector<std::uint32_t>;

/// Number of nonzero coordinates.
std::size_t weight(const Vec& v);

/// Dense row-major matrix over a prime field. Zero-dimension matrices are
/// legal: a k x 0 matrix has rank 0, a 0 x n matrix has rank 0 and nullspace
/// all of GF(q)^n.
class FieldMatrix {
public:
    FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

    static FieldMatrix from_rows(PrimeField field,
                                 std::initializer_list<std::initializer_list<std::uint32_t>> rows);
    static FieldMatrix from_rows(PrimeField field, const std::vector<Vec>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    PrimeField field() const noexcept { return field_; }

    std::uint32_t at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint32_t v) {
        data_[r * cols_ + c] = v % field_.order();
    }

    std::span<const std::uint32_t> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vec row_vec(std::size_t r) const {
        return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    const std::vector<std::uint32_t>& data() const noexcept { return data_; }

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.field_ == b.field_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    PrimeField field_;
    std::vector<std::uint32_t> data_;
};

struct EchelonResult {
    FieldMatrix echelon;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols; // strictly increasing
};

/// Gaussian elimination to row echelon form. Pivots normalized to 1,
/// entries below pivots zero. First nonzero entry in the current column is
/// chosen as pivot; arithmetic is exact, so no pivoting heuristics.
EchelonResult row_echelon(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);

/// Basis of {x : m x = 0}, size cols - rank. Internally completes the
/// echelon form to reduced echelon and reads off one basis vector per free
/// column.
std::vector<Vec> nullspace_basis(const FieldMatrix& m);

/// Remove the given columns (0-based, strictly increasing), order of the
/// remaining columns preserved.
FieldMatrix delete_columns(const FieldMatrix& m, std::span<const std::size_t> idxs);

FieldMatrix transpose(const FieldMatrix& m);

/// x * m for a row vector x of length rows(m).
Vec vec_mat(const Vec& x, const FieldMatrix& m);

/// m * x for a column vector x of length cols(m).
Vec mat_vec(const FieldMatrix& m, const Vec& x);

namespace detail {

/// In-place echelon reduction of a rows x cols row-major buffer.
/// Returns the rank; pivot_cols, when non-null, receives the pivot columns.
std::size_t echelon_in_place(std::uint32_t* data, std::size_t rows,
                             std::size_t cols, const PrimeField& f,
                             std::vector<std::size_t>* pivot_cols = nullptr);

/// Nullspace basis from an already-echelonized buffer with known pivots.
std::vector<Vec> nullspace_from_echelon(std::uint32_t* data, std::size_t rows,
                                        std::size_t cols, const PrimeField& f,
                                        const std::vector<std::size_t>& pivot_cols);

} // namespace detail

} // namespace lincode
