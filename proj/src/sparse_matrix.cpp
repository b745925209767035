#include "delprod/sparse_matrix.hpp"

#include "delprod/errors.hpp"

#include <algorithm>

namespace delprod {

void add_scaled(SparseVector& target, const Integer& factor, const SparseVector& source)
{
    if (factor == 0 || source.empty())
        return;
    SparseVector out;
    out.reserve(target.size() + source.size());
    auto t = target.begin();
    auto s = source.begin();
    while (t != target.end() || s != source.end())
    {
        if (s == source.end() || (t != target.end() && t->index < s->index))
        {
            out.push_back(std::move(*t));
            ++t;
        }
        else if (t == target.end() || s->index < t->index)
        {
            out.push_back({s->index, factor * s->value});
            ++s;
        }
        else
        {
            Integer v = t->value + factor * s->value;
            if (v != 0)
                out.push_back({t->index, std::move(v)});
            ++t;
            ++s;
        }
    }
    target = std::move(out);
}

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols) : row_count_(rows), cols_(cols), rows_(rows) {}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n)
{
    SparseIntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.rows_[i].push_back({i, 1});
    return m;
}

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::span<const Triplet> entries)
{
    std::vector<const Triplet*> order;
    order.reserve(entries.size());
    for (const auto& e : entries)
    {
        if (e.row >= rows || e.col >= cols)
            throw Error("sparse matrix triplet out of range");
        order.push_back(&e);
    }
    std::stable_sort(order.begin(), order.end(), [](const Triplet* a, const Triplet* b) {
        return a->row != b->row ? a->row < b->row : a->col < b->col;
    });
    SparseIntMatrix m(rows, cols);
    for (const Triplet* e : order)
    {
        auto& r = m.rows_[e->row];
        if (!r.empty() && r.back().index == e->col)
            r.back().value += e->value;
        else
            r.push_back({e->col, e->value});
    }
    for (auto& r : m.rows_)
        std::erase_if(r, [](const SparseEntry& x) { return x.value == 0; });
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense)
{
    const std::size_t cols = dense.empty() ? 0 : dense.front().size();
    SparseIntMatrix m(dense.size(), cols);
    for (std::size_t i = 0; i < dense.size(); ++i)
    {
        if (dense[i].size() != cols)
            throw Error("ragged dense matrix");
        for (std::size_t j = 0; j < cols; ++j)
            if (dense[i][j] != 0)
                m.rows_[i].push_back({j, dense[i][j]});
    }
    return m;
}

SparseIntMatrix SparseIntMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows)
{
    SparseIntMatrix m;
    m.row_count_ = rows.size();
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    for (const auto& r : m.rows_)
        for (const auto& e : r)
            if (e.index >= cols || e.value == 0)
                throw Error("invalid sparse row");
    return m;
}

SparseIntMatrix SparseIntMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns)
{
    SparseIntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& e : columns[j])
        {
            if (e.index >= rows)
                throw Error("sparse column entry out of range");
            m.rows_[e.index].push_back({j, e.value});
        }
    return m;
}

SparseIntMatrix SparseIntMatrix::from_column_vectors(std::size_t rows, const std::vector<IntVector>& columns)
{
    SparseIntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
    {
        if (columns[j].size() != rows)
            throw Error("column vector has wrong length");
        for (std::size_t i = 0; i < rows; ++i)
            if (columns[j][i] != 0)
                m.rows_[i].push_back({j, columns[j][i]});
    }
    return m;
}

std::size_t SparseIntMatrix::nonzeros() const noexcept
{
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r.size();
    return n;
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const SparseEntry& e, std::size_t i) { return e.index < i; });
    return it != row.end() && it->index == c ? it->value : Integer(0);
}

void SparseIntMatrix::set(std::size_t r, std::size_t c, const Integer& value)
{
    if (r >= row_count_ || c >= cols_)
        throw Error("sparse matrix index out of range");
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const SparseEntry& e, std::size_t i) { return e.index < i; });
    if (it != row.end() && it->index == c)
    {
        if (value == 0)
            row.erase(it);
        else
            it->value = value;
    }
    else if (value != 0)
        row.insert(it, {c, value});
}

void SparseIntMatrix::add_to(std::size_t r, std::size_t c, const Integer& value)
{
    set(r, c, at(r, c) + value);
}

SparseVector SparseIntMatrix::column(std::size_t c) const
{
    SparseVector out;
    for (std::size_t i = 0; i < row_count_; ++i)
    {
        Integer v = at(i, c);
        if (v != 0)
            out.push_back({i, std::move(v)});
    }
    return out;
}

IntVector SparseIntMatrix::dense_column(std::size_t c) const
{
    IntVector out(row_count_);
    for (std::size_t i = 0; i < row_count_; ++i)
        out[i] = at(i, c);
    return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const
{
    SparseIntMatrix t(cols_, row_count_);
    for (std::size_t i = 0; i < row_count_; ++i)
        for (const auto& e : rows_[i])
            t.rows_[e.index].push_back({i, e.value});
    return t;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& rhs) const
{
    if (cols_ != rhs.row_count_)
        throw Error("matrix product shape mismatch");
    SparseIntMatrix out(row_count_, rhs.cols_);
    for (std::size_t i = 0; i < row_count_; ++i)
    {
        SparseVector acc;
        for (const auto& e : rows_[i])
            add_scaled(acc, e.value, rhs.rows_[e.index]);
        out.rows_[i] = std::move(acc);
    }
    return out;
}

IntVector SparseIntMatrix::operator*(const IntVector& x) const
{
    if (x.size() != cols_)
        throw Error("matrix-vector shape mismatch");
    IntVector y(row_count_);
    for (std::size_t i = 0; i < row_count_; ++i)
        for (const auto& e : rows_[i])
            y[i] += e.value * x[e.index];
    return y;
}

SparseIntMatrix SparseIntMatrix::operator+(const SparseIntMatrix& rhs) const
{
    if (row_count_ != rhs.row_count_ || cols_ != rhs.cols_)
        throw Error("matrix sum shape mismatch");
    SparseIntMatrix out = *this;
    for (std::size_t i = 0; i < row_count_; ++i)
        add_scaled(out.rows_[i], 1, rhs.rows_[i]);
    return out;
}

SparseIntMatrix SparseIntMatrix::operator-() const { return scaled(-1); }

SparseIntMatrix SparseIntMatrix::scaled(const Integer& factor) const
{
    SparseIntMatrix out(row_count_, cols_);
    if (factor == 0)
        return out;
    for (std::size_t i = 0; i < row_count_; ++i)
    {
        out.rows_[i] = rows_[i];
        for (auto& e : out.rows_[i])
            e.value *= factor;
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::reduced_mod(const Integer& m) const
{
    SparseIntMatrix out(row_count_, cols_);
    for (std::size_t i = 0; i < row_count_; ++i)
        for (const auto& e : rows_[i])
        {
            Integer v = reduce_mod(e.value, m);
            if (v != 0)
                out.rows_[i].push_back({e.index, std::move(v)});
        }
    return out;
}

SparseIntMatrix SparseIntMatrix::submatrix(std::span<const std::size_t> row_indices,
                                           std::span<const std::size_t> col_indices) const
{
    std::vector<std::size_t> col_map(cols_, static_cast<std::size_t>(-1));
    for (std::size_t j = 0; j < col_indices.size(); ++j)
        col_map.at(col_indices[j]) = j;
    SparseIntMatrix out(row_indices.size(), col_indices.size());
    for (std::size_t i = 0; i < row_indices.size(); ++i)
    {
        auto& row = out.rows_[i];
        for (const auto& e : rows_.at(row_indices[i]))
            if (col_map[e.index] != static_cast<std::size_t>(-1))
                row.push_back({col_map[e.index], e.value});
        std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::select_columns(std::span<const std::size_t> col_indices) const
{
    std::vector<std::size_t> all(row_count_);
    for (std::size_t i = 0; i < row_count_; ++i)
        all[i] = i;
    return submatrix(all, col_indices);
}

SparseIntMatrix SparseIntMatrix::select_rows(std::span<const std::size_t> row_indices) const
{
    SparseIntMatrix out(row_indices.size(), cols_);
    for (std::size_t i = 0; i < row_indices.size(); ++i)
        out.rows_[i] = rows_.at(row_indices[i]);
    return out;
}

SparseIntMatrix SparseIntMatrix::hconcat(const SparseIntMatrix& rhs) const
{
    if (row_count_ != rhs.row_count_)
        throw Error("hconcat row mismatch");
    SparseIntMatrix out(row_count_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < row_count_; ++i)
    {
        out.rows_[i] = rows_[i];
        for (const auto& e : rhs.rows_[i])
            out.rows_[i].push_back({e.index + cols_, e.value});
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::vconcat(const SparseIntMatrix& rhs) const
{
    if (cols_ != rhs.cols_)
        throw Error("vconcat column mismatch");
    SparseIntMatrix out(row_count_ + rhs.row_count_, cols_);
    for (std::size_t i = 0; i < row_count_; ++i)
        out.rows_[i] = rows_[i];
    for (std::size_t i = 0; i < rhs.row_count_; ++i)
        out.rows_[row_count_ + i] = rhs.rows_[i];
    return out;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const
{
    std::vector<std::vector<Integer>> d(row_count_, std::vector<Integer>(cols_));
    for (std::size_t i = 0; i < row_count_; ++i)
        for (const auto& e : rows_[i])
            d[i][e.index] = e.value;
    return d;
}

SparseIntMatrix block_diagonal(std::span<const SparseIntMatrix> blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks)
    {
        rows += b.rows();
        cols += b.cols();
    }
    std::vector<Triplet> t;
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks)
    {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (const auto& e : b.row(i))
                t.push_back({r0 + i, c0 + e.index, e.value});
        r0 += b.rows();
        c0 += b.cols();
    }
    return SparseIntMatrix::from_triplets(rows, cols, t);
}

} // namespace delprod
