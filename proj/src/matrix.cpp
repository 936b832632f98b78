#include "lincode/matrix.hpp"

#include <algorithm>

namespace lincode {

std::size_t weight(const Vec& v) {
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; }));
}

FieldMatrix FieldMatrix::from_rows(
    PrimeField field,
    std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    std::vector<Vec> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(field, v);
}

FieldMatrix FieldMatrix::from_rows(PrimeField field, const std::vector<Vec>& rows) {
    std::size_t n = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != n) throw shape_error("ragged rows");
    FieldMatrix m(field, rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    return m;
}

namespace detail {

std::size_t echelon_in_place(std::uint32_t* a, std::size_t rows,
                             std::size_t cols, const PrimeField& f,
                             std::vector<std::size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            std::swap_ranges(a + pivot * cols, a + (pivot + 1) * cols,
                             a + rank * cols);
        // Normalize the pivot row to a leading 1.
        std::uint32_t p = a[rank * cols + col];
        if (p != 1) {
            std::uint32_t pinv = f.inv(p);
            for (std::size_t j = col; j < cols; ++j)
                a[rank * cols + j] = f.mul(a[rank * cols + j], pinv);
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint32_t factor = a[r * cols + col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                a[r * cols + j] =
                    f.sub(a[r * cols + j], f.mul(factor, a[rank * cols + j]));
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

std::vector<Vec> nullspace_from_echelon(std::uint32_t* a, std::size_t rows,
                                        std::size_t cols, const PrimeField& f,
                                        const std::vector<std::size_t>& pivot_cols) {
    std::size_t rank = pivot_cols.size();
    (void)rows;
    // Back-substitute to reduced echelon: clear entries above each pivot.
    for (std::size_t i = rank; i-- > 0;) {
        std::size_t pc = pivot_cols[i];
        for (std::size_t r = 0; r < i; ++r) {
            std::uint32_t factor = a[r * cols + pc];
            if (factor == 0) continue;
            for (std::size_t j = pc; j < cols; ++j)
                a[r * cols + j] =
                    f.sub(a[r * cols + j], f.mul(factor, a[i * cols + j]));
        }
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : pivot_cols) is_pivot[pc] = true;

    std::vector<Vec> basis;
    basis.reserve(cols - rank);
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec x(cols, 0);
        x[free_col] = 1;
        for (std::size_t i = 0; i < rank; ++i)
            x[pivot_cols[i]] = f.neg(a[i * cols + free_col]);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace detail

EchelonResult row_echelon(const FieldMatrix& m) {
    std::vector<std::size_t> pivots;
    std::vector<std::uint32_t> buf = m.data();
    std::size_t r = detail::echelon_in_place(buf.data(), m.rows(), m.cols(),
                                             m.field(), &pivots);
    FieldMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.set(i, j, buf[i * m.cols() + j]);
    return {std::move(out), r, std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) {
    std::vector<std::uint32_t> buf = m.data();
    return detail::echelon_in_place(buf.data(), m.rows(), m.cols(), m.field());
}

std::vector<Vec> nullspace_basis(const FieldMatrix& m) {
    std::vector<std::uint32_t> buf = m.data();
    std::vector<std::size_t> pivots;
    detail::echelon_in_place(buf.data(), m.rows(), m.cols(), m.field(), &pivots);
    return detail::nullspace_from_echelon(buf.data(), m.rows(), m.cols(),
                                          m.field(), pivots);
}

FieldMatrix delete_columns(const FieldMatrix& m, std::span<const std::size_t> idxs) {
    for (std::size_t i = 0; i < idxs.size(); ++i) {
        if (idxs[i] >= m.cols()) throw shape_error("column index out of range");
        if (i > 0 && idxs[i] <= idxs[i - 1])
            throw shape_error("column indices must be strictly increasing");
    }
    FieldMatrix out(m.field(), m.rows(), m.cols() - idxs.size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t next = 0, oc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (next < idxs.size() && idxs[next] == c) {
                ++next;
                continue;
            }
            out.set(r, oc++, m.at(r, c));
        }
    }
    return out;
}

FieldMatrix transpose(const FieldMatrix& m) {
    FieldMatrix out(m.field(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(c, r, m.at(r, c));
    return out;
}

Vec vec_mat(const Vec& x, const FieldMatrix& m) {
    if (x.size() != m.rows()) throw shape_error("vec_mat: length mismatch");
    const PrimeField f = m.field();
    Vec out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (x[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[c] = f.add(out[c], f.mul(x[r], m.at(r, c)));
    }
    return out;
}

Vec mat_vec(const FieldMatrix& m, const Vec& x) {
    if (x.size() != m.cols()) throw shape_error("mat_vec: length mismatch");
    const PrimeField f = m.field();
    Vec out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            acc += static_cast<std::uint64_t>(m.at(r, c)) * x[c];
        out[r] = f.reduce(acc);
    }
    return out;
}

} // namespace lincode
