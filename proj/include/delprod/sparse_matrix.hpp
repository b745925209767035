#ifndef DELPROD_SPARSE_MATRIX_HPP
#define DELPROD_SPARSE_MATRIX_HPP

#include "delprod/integer.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace delprod {

/// One stored entry of a sparse row or column.
struct SparseEntry
{
    std::size_t index;
    Integer value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by index, no zero values.
using SparseVector = std::vector<SparseEntry>;

/// target := target + factor * source, keeping the result sorted and zero-free.
void add_scaled(SparseVector& target, const Integer& factor, const SparseVector& source);

struct Triplet
{
    std::size_t row;
    std::size_t col;
    Integer value;
};

/**
 * Row-major sparse matrix over the integers.
 *
 * Every row is a SparseVector; explicit zeros are never stored, so structural
 * equality is value equality.
 */
class SparseIntMatrix
{
  public:
    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols);

    static SparseIntMatrix identity(std::size_t n);
    /// Duplicate coordinates are summed.
    static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols, std::span<const Triplet> entries);
    static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& dense);
    static SparseIntMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
    /// Builds a rows x columns.size() matrix whose j-th column is columns[j].
    static SparseIntMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);
    static SparseIntMatrix from_column_vectors(std::size_t rows, const std::vector<IntVector>& columns);

    std::size_t rows() const noexcept { return row_count_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept;
    bool is_zero() const noexcept { return nonzeros() == 0; }

    Integer at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Integer& value);
    void add_to(std::size_t r, std::size_t c, const Integer& value);

    const SparseVector& row(std::size_t r) const { return rows_[r]; }
    SparseVector column(std::size_t c) const;
    IntVector dense_column(std::size_t c) const;

    SparseIntMatrix transpose() const;
    SparseIntMatrix operator*(const SparseIntMatrix& rhs) const;
    IntVector operator*(const IntVector& x) const;
    SparseIntMatrix operator+(const SparseIntMatrix& rhs) const;
    SparseIntMatrix operator-() const;
    SparseIntMatrix scaled(const Integer& factor) const;

    /// Entry-wise reduction into [0, m).
    SparseIntMatrix reduced_mod(const Integer& m) const;
    SparseIntMatrix submatrix(std::span<const std::size_t> row_indices, std::span<const std::size_t> col_indices) const;
    SparseIntMatrix select_columns(std::span<const std::size_t> col_indices) const;
    SparseIntMatrix select_rows(std::span<const std::size_t> row_indices) const;
    /// [this | rhs]
    SparseIntMatrix hconcat(const SparseIntMatrix& rhs) const;
    /// [this ; rhs]
    SparseIntMatrix vconcat(const SparseIntMatrix& rhs) const;

    std::vector<std::vector<Integer>> to_dense() const;

    friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b)
    {
        return a.row_count_ == b.row_count_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

  private:
    std::size_t row_count_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> rows_;
};

/// Block-diagonal sum of matrices.
SparseIntMatrix block_diagonal(std::span<const SparseIntMatrix> blocks);

} // namespace delprod

#endif
